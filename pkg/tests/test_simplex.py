from __future__ import annotations

from fractions import Fraction

import pytest

from cyclic_lrc.simplex import INFEASIBLE, OPTIMAL, UNBOUNDED, RationalLP, solve


def test_textbook_lp():
    # max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> 36 at (2, 6)
    lp = RationalLP([3, 5])
    lp.add([1, 0], "<=", 4)
    lp.add([0, 2], "<=", 12)
    lp.add([3, 2], "<=", 18)
    res = solve(lp)
    assert res.status == OPTIMAL
    assert res.value == 36 and res.x == [2, 6]


def test_equality_and_lower_bound_rows():
    # max x + y, x + y = 5/2, x >= 1 -> 5/2 exactly
    lp = RationalLP([1, 1])
    lp.add([1, 1], "=", Fraction(5, 2))
    lp.add([1, 0], ">=", 1)
    res = solve(lp)
    assert res.status == OPTIMAL and res.value == Fraction(5, 2)
    assert res.x[0] >= 1


def test_duals_certify_the_optimum():
    lp = RationalLP([2, 3])
    lp.add([1, 1], "<=", 4)
    lp.add([1, 3], "<=", 6)
    res = solve(lp)
    # strong duality: b.y equals the optimum
    assert sum(y * rhs for y, (_, _, rhs) in zip(res.duals, lp.rows)) == res.value


def test_infeasible():
    lp = RationalLP([1])
    lp.add([1], "<=", 1)
    lp.add([1], ">=", 2)
    assert solve(lp).status == INFEASIBLE


def test_unbounded():
    lp = RationalLP([1, 1])
    lp.add([1, -1], "<=", 1)
    assert solve(lp).status == UNBOUNDED


def test_degenerate_cycling_example():
    # Beale's example cycles under the largest-coefficient rule; Bland's rule terminates
    lp = RationalLP([Fraction(3, 4), -150, Fraction(1, 50), -6])
    lp.add([Fraction(1, 4), -60, Fraction(-1, 25), 9], "<=", 0)
    lp.add([Fraction(1, 2), -90, Fraction(-1, 50), 3], "<=", 0)
    lp.add([0, 0, 1, 0], "<=", 1)
    res = solve(lp)
    assert res.status == OPTIMAL and res.value == Fraction(1, 20)


def test_bad_rows_rejected():
    lp = RationalLP([1, 2])
    with pytest.raises(ValueError):
        lp.add([1], "<=", 1)
    with pytest.raises(ValueError):
        lp.add([1, 1], "<", 1)
