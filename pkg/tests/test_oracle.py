from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import _props
from cyclic_lrc import oracle
from cyclic_lrc.cyclic_code import CyclicCode, LinearCodeMatrix
from cyclic_lrc.finite_field import field_of_order


@st.composite
def small_codes(draw):
    F = field_of_order(draw(st.sampled_from([2, 3, 4, 5])))
    n = draw(st.integers(2, 9))
    k = draw(st.integers(1, min(n, 5 if F.q == 2 else 3)))
    data = draw(st.lists(st.integers(0, F.q - 1), min_size=k * n, max_size=k * n))
    return F, np.array(data, dtype=np.int64).reshape(k, n)


@settings(max_examples=80)
@given(small_codes())
def test_kernel_matches_naive_enumeration(args):
    F, M = args
    G, _ = oracle.generator_of((M, F))
    if G.shape[0] == 0:
        return
    assert _props.enumerated_distribution(G, F) == oracle.naive_weight_distribution(G, F)


@pytest.mark.parametrize("n,q,reps", [(21, 2, [0, 1, 7]), (15, 4, [1]), (13, 3, [1]), (35, 2, [1, 15])])
def test_thread_count_does_not_change_results(n, q, reps):
    code = CyclicCode.from_representatives(n, q, reps)
    H, F = oracle.dual_generator_of(code)
    one = oracle.enumerate_code(H, F, track=True, threads=1)
    many = oracle.enumerate_code(H, F, track=True, threads=3)
    assert one.histogram == many.histogram
    assert one.best == many.best and one.best_count == many.best_count and one.cover == many.cover


def test_repetition_and_parity_codes():
    F = field_of_order(2)
    rep = np.ones((1, 9), dtype=np.int64)
    assert oracle.weight_distribution((rep, F)) == {0: 1, 9: 1}
    par = CyclicCode.from_representatives(9, 2, [0])
    assert oracle.min_distance(par) == 2
    assert oracle.dual_distance(par) == 9
    assert oracle.exact_locality(par).r == 8


def test_macwilliams_on_every_short_binary_cyclic_code():
    for n in (7, 9, 15):
        for code in _props.all_cyclic_codes(n):
            _props.macwilliams_cross_check(code)


def test_macwilliams_rejects_non_distributions():
    with pytest.raises(ValueError):
        oracle.macwilliams({0: 1, 2: 2}, 3, 2)  # three words: no linear code has this size


def test_either_side_agrees():
    code = CyclicCode.from_representatives(21, 2, [0, 1, 7])
    direct = oracle.weight_distribution(code)
    via_dual = oracle.macwilliams(oracle.weight_distribution(code.dual()), 21, 2)
    assert direct == via_dual
    assert oracle.min_distance(code) == min(w for w in direct if w)


def test_ceiling_is_enforced():
    code = CyclicCode.from_representatives(45, 2, [1])
    with pytest.raises(oracle.EnumerationCeiling):
        oracle.min_distance(code, max_enum=2**10)
    with pytest.raises(oracle.EnumerationCeiling):
        oracle.recovery_inventory(code, 45, cap=4)


def test_exact_locality_example():
    code = CyclicCode.from_representatives(21, 2, [0, 1, 7])
    res = oracle.exact_locality(code)
    assert res.r == 5 and res.d_dual == 6
    assert set(res.per_coordinate) == {5}


def test_recovery_inventory_sets_are_dual_supports():
    code = CyclicCode.from_representatives(35, 2, [1, 15])
    inv = oracle.recovery_inventory(code, 4)
    sets0 = inv.sets_for(0)
    assert len(sets0) == 4 and all(len(s) == 3 for s in sets0)
    for s in sets0:
        w = np.zeros(35, dtype=np.int64)
        w[list(s) + [0]] = 1
        assert code.dual().contains(w)


def test_disjoint_families_found():
    from cyclic_lrc.reproduce import disjoint_sets_code

    fams = oracle.disjoint_families(disjoint_sets_code(), 0, weight_ceiling=9)
    assert any(len(f) >= 2 for f in fams)


def test_oracle_report_roundtrips_to_json():
    import json

    rep = oracle.oracle_report(CyclicCode.from_representatives(15, 2, [1]))
    doc = json.loads(json.dumps(rep.to_dict()))
    assert doc["d_min"] == 3 and doc["k"] == 11


def test_stochastic_search_hits_are_genuine():
    code = CyclicCode.from_representatives(21, 2, [0, 1, 7])
    H, F = oracle.dual_generator_of(code)
    w = oracle.stochastic_low_weight(H, F, 6, iterations=200, seed=0)
    assert w is not None and np.count_nonzero(w) <= 6
    assert code.dual().contains(w)


def test_parity_check_matrix_input():
    code = CyclicCode.from_representatives(15, 2, [1])
    H = code.parity_check_matrix()
    assert oracle.weight_distribution(LinearCodeMatrix(H.matrix, H.field, "parity-check")) == \
        oracle.weight_distribution(code)
