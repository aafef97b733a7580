from __future__ import annotations

import pytest

from cyclic_lrc.search import Constraints, SearchLimit, search


def test_example_code_found_under_locality_constraint():
    res = search(21, 2, Constraints(r_max=5), limit=None)
    hit = [c for c in res if c.representatives == (0, 1, 7)]
    assert hit and hit[0].k == 12 and hit[0].r == 5 and hit[0].r_exact
    assert all(c.r <= 5 for c in res)


def test_trivial_code_first_without_constraints():
    res = search(7, 2)
    assert res[0].representatives == () and res[0].k == 7


def test_ranking_is_deterministic_and_ordered():
    a = search(15, 2, limit=None)
    b = search(15, 2, limit=None)
    assert [c.to_dict() for c in a] == [c.to_dict() for c in b]
    keys = [c.rank_key(15) for c in a]
    assert keys == sorted(keys)


def test_two_disjoint_recovery_sets():
    res = search(63, 2, Constraints(disjoint_min=2), limit=None)
    assert any(c.representatives == (0, 7, 9, 21, 27) for c in res)
    assert all(c.disjoint >= 2 for c in res)


def test_limits_and_domain():
    with pytest.raises(SearchLimit):
        search(105, 2, max_subsets=16)
    with pytest.raises(ValueError):
        search(21, 5)
    with pytest.raises(ValueError):
        search(107, 2)
