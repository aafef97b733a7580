from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import linprog

import _props
from cyclic_lrc import bounds
from cyclic_lrc.bounds import BoundError


@given(st.integers(1, 14), st.sampled_from([2, 3, 4]), st.data())
def test_krawtchouk_orthogonality(n, q, data):
    k = data.draw(st.integers(0, n))
    l = data.draw(st.integers(0, n))
    s = sum(math.comb(n, i) * (q - 1) ** i * bounds.krawtchouk(q, n, k, i) * bounds.krawtchouk(q, n, l, i)
            for i in range(n + 1))
    assert s == (q**n * math.comb(n, k) * (q - 1) ** k if k == l else 0)


def test_krawtchouk_generating_function():
    # sum_k K_k(i) z^k = (1 + (q-1) z)^(n-i) (1 - z)^i, checked at z = 2
    n, q = 9, 3
    for i in range(n + 1):
        assert sum(bounds.krawtchouk(q, n, k, i) * 2**k for k in range(n + 1)) == (1 + 2 * (q - 1)) ** (n - i) * (-1) ** i


def test_singleton_like():
    assert bounds.singleton_like(12, 6, 3) == 6
    assert bounds.singleton_like_k(15, 6, 2) == 7
    with pytest.raises(BoundError):
        bounds.singleton_like(5, 6, 1)


@pytest.mark.parametrize("n,d,q,k", [(7, 3, 2, 4), (15, 3, 2, 11), (23, 7, 2, 12), (8, 4, 2, 4), (13, 3, 3, 10),
                                     (10, 10, 2, 1), (5, 1, 2, 5)])
def test_k_upper_known_values(n, d, q, k):
    # each of these is attained by a known code (Hamming, Golay, extended Hamming, repetition)
    assert bounds.k_upper(n, d, q) == k


@pytest.mark.parametrize("args,k,ties", [((45, 4, 8, 2), 36, [3, 4]), ((35, 3, 3, 2), 25, [6, 7, 8]),
                                         ((45, 3, 7, 2), 37, None), ((21, 4, 5, 2), 14, None)])
def test_shortening_bound(args, k, ties):
    rep = bounds.shortening_bound(*args)
    assert rep.k_bound == k
    if ties is not None:
        assert rep.witness["minimizers"] == ties and rep.witness["t"] == ties[0]


def test_shortening_bound_needs_room():
    with pytest.raises(BoundError):
        bounds.shortening_bound(7, 7, 3, 2)


@pytest.mark.parametrize("args,k", [((21, 4, 5, 2), 15), ((35, 3, 3, 2), 29), ((45, 3, 7, 2), 39)])
def test_lp_bound_published_values(args, k):
    assert bounds.lp_bound(*args).k_bound == k


def test_lp_log_size():
    rep = bounds.lp_bound(45, 4, 8, 2)
    assert abs(rep.log2_size - 38.48) <= 0.01
    assert rep.k_bound == 38


def test_lp_equality_range_variants_agree():
    for args in [(21, 4, 5, 2), (35, 3, 3, 2)]:
        a = bounds.lp_bound(*args)
        b = bounds.lp_bound(*args, zero_through=args[2] + 1)
        assert a.k_bound == b.k_bound


@pytest.mark.parametrize("args", [(21, 4, 5, 2), (15, 3, 3, 2), (20, 5, 4, 3), (35, 3, 3, 2)])
def test_lp_matches_float_solver(args):
    lp, idx = bounds.lp_program(*args)
    A_eq, b_eq, A_ub, b_ub = [], [], [], []
    for coeffs, sense, rhs in lp.rows:
        row = [float(c) for c in coeffs]
        if sense == "=":
            A_eq.append(row), b_eq.append(float(rhs))
        else:  # ">=" rows become "<=" for linprog
            A_ub.append([-c for c in row]), b_ub.append(-float(rhs))
    res = linprog(-np.ones(len(idx)), A_ub=A_ub or None, b_ub=b_ub or None, A_eq=A_eq or None,
                  b_eq=b_eq or None, bounds=[(0, None)] * len(idx), method="highs")
    exact = bounds.lp_bound(*args)
    assert res.status == 0
    assert abs((1 - res.fun) - float(exact.size)) <= 1e-6 * float(exact.size)


def test_lp_deterministic_under_permutation():
    _props.lp_permutation_invariant(21, 4, 5, 2, trials=3, seed=5)
    _props.lp_permutation_invariant(15, 3, 3, 2, trials=5, seed=6)


def test_lp_bad_order_rejected():
    with pytest.raises(BoundError):
        bounds.lp_program(10, 3, 2, 2, order=[3, 4])


def test_lp_bound_holds_for_real_codes():
    # a code with distance d and dual distance r+1 has at most the LP size
    from cyclic_lrc import oracle
    from cyclic_lrc.cyclic_code import CyclicCode

    for n, reps in [(21, [0, 1, 7]), (15, [1]), (15, [0, 1]), (21, [1, 3])]:
        code = CyclicCode.from_representatives(n, 2, reps)
        d = oracle.min_distance(code)
        r = oracle.exact_locality(code).r
        rep = bounds.lp_bound(n, d, r, 2)
        assert 2**code.k <= rep.size


def test_all_bounds_json():
    reps = bounds.all_bounds(21, 4, 5, 2)
    names = [r.name for r in reps]
    assert names == ["singleton_like", "shortening", "lp"]
    for r in reps:
        d = r.to_dict()
        assert d["k_bound"] is not None
    assert Fraction(reps[2].to_dict()["size"]) == reps[2].size
