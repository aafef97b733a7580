from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import _props
from cyclic_lrc import oracle
from cyclic_lrc.cyclic_code import CodeError, LinearCodeMatrix
from cyclic_lrc.lrc_rs import (
    RsLrcCode,
    OptimalCyclicParams,
    cyclic_lrc_polynomial_form,
    lagrange_at,
    run_defining_set,
    local_repair,
    message_exponents,
    optimal_distance,
    rs_lrc_encode,
    optimal_cyclic_code,
)


def test_optimal_distance_formula():
    assert optimal_distance(12, 6, 3) == 12 - 6 - 2 + 2
    assert optimal_distance(15, 4, 2) == 15 - 4 - 2 + 2


def test_message_exponents_skip_multiples_of_group_size():
    assert message_exponents(12, 6, 3) == [0, 1, 2, 4, 5, 6]
    with pytest.raises(CodeError):
        message_exponents(12, 5, 3)


@pytest.mark.parametrize("q,n,k,r", [(13, 12, 2, 2), (13, 12, 6, 3), (16, 15, 4, 2), (16, 15, 8, 4), (16, 15, 4, 4)])
def test_rs_lrc_equals_optimal_cyclic_code(q, n, k, r):
    rs = RsLrcCode(q, n, k, r)
    cyc = optimal_cyclic_code(OptimalCyclicParams(n, k, r, q))
    assert LinearCodeMatrix(rs.generator_matrix(), rs.field).same_code(cyc.generator_matrix())
    assert oracle.min_distance(cyc) == optimal_distance(n, k, r)


def test_points_partitioned_into_cosets():
    rs = RsLrcCode(13, 12, 6, 3)
    F = rs.field
    for group in rs.partition():
        # x^(r+1) is constant on each local group
        assert len({F.pow(int(rs.points[t]), 4) for t in group}) == 1
    assert sorted(t for g in rs.partition() for t in g) == list(range(12))


def test_non_cyclic_evaluation_code():
    rs = RsLrcCode(13, 9, 4, 2)  # n does not divide q - 1
    assert not rs.cyclic
    rng = np.random.default_rng(2)
    for _ in range(20):
        c = rs_lrc_encode(rs, rng.integers(0, 13, size=4))
        for pos in range(9):
            e = c.copy()
            e[pos] = 0
            assert local_repair(rs, e, pos) == c[pos]


@settings(max_examples=30)
@given(st.integers(0, 2**32 - 1))
def test_repair_round_trip_small(seed):
    assert _props.repair_round_trip(16, 15, 4, 2, 3, seed) == 45


def test_repair_round_trip_thousand_words():
    assert _props.repair_round_trip(13, 12, 6, 3, 1000, seed=1) == 12000


def test_second_erasure_in_group_is_an_error():
    rs = RsLrcCode(13, 12, 6, 3)
    c = rs_lrc_encode(rs, [1, 2, 3, 4, 5, 6])
    group = rs.local_group(0)
    with pytest.raises(CodeError):
        local_repair(rs, c, 0, erased=[group[1]])
    cyc = optimal_cyclic_code(OptimalCyclicParams(12, 6, 3, 13))
    with pytest.raises(CodeError):
        local_repair(cyc, c, 0, erased=[3])
    with pytest.raises(CodeError):
        local_repair(cyc, c, 0)


def test_lagrange_interpolation_recovers_polynomial():
    from cyclic_lrc.finite_field import field_of_order
    from cyclic_lrc.poly import DensePoly

    F = field_of_order(16)
    f = DensePoly(F, (3, 7, 1))
    xs = [1, 2, 5]
    ys = [f(x) for x in xs]
    assert all(lagrange_at(F, xs, ys, x) == f(x) for x in range(16))


def test_run_form_zeros_match_class_plus_run():
    for q, n, r, k in [(13, 12, 3, 6), (16, 15, 2, 4), (16, 15, 4, 8)]:
        run, extra = run_defining_set(n, k, r)
        p = OptimalCyclicParams(n, k, r, q)
        assert run | extra == p.locality_set() | p.distance_set()


def test_optimal_params_validation():
    with pytest.raises(CodeError):
        optimal_cyclic_code(OptimalCyclicParams(15, 5, 4, 16))  # r does not divide k
    with pytest.raises(CodeError):
        optimal_cyclic_code(OptimalCyclicParams(14, 4, 1, 16))  # n does not divide q - 1
    with pytest.raises(CodeError):
        optimal_cyclic_code(OptimalCyclicParams(15, 4, 2, 16, b=3))  # stride not coprime to n


def test_polynomial_form_evaluates_to_the_codeword():
    n, k, r, q = 12, 6, 3, 13
    a = list(range(1, k + 1))
    rs = RsLrcCode(q, n, k, r)
    f = cyclic_lrc_polynomial_form(n, k, r, a, q)
    c = np.array([f(int(P)) for P in rs.points], dtype=np.int64)
    assert np.array_equal(c, rs_lrc_encode(rs, a))
    assert optimal_cyclic_code(OptimalCyclicParams(n, k, r, q)).contains(c)
