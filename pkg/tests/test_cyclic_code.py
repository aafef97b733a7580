from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import _props
from cyclic_lrc import oracle
from cyclic_lrc.cyclic_code import (
    CodeError,
    CyclicCode,
    bch_bound,
    complete_defining_set,
    dual_defining_set,
    embed_matrix,
    subfield_subcode,
    trace_code,
)
from cyclic_lrc.finite_field import cyclotomic_cosets, field_of_order
from cyclic_lrc.linalg import matmul, rank


def test_hamming_code():
    code = CyclicCode.from_representatives(7, 2, [1])
    assert code.k == 4
    assert oracle.min_distance(code) == 3
    assert bch_bound(code).bound == 3
    assert oracle.weight_distribution(code) == {0: 1, 3: 7, 4: 7, 7: 1}


def test_defining_set_closure_and_validation():
    assert complete_defining_set(21, 2, [1]) == frozenset({1, 2, 4, 8, 11, 16})
    with pytest.raises(CodeError):
        CyclicCode(7, field_of_order(2), frozenset({1}))
    with pytest.raises(CodeError):
        complete_defining_set(14, 2, [1])
    with pytest.raises(CodeError):
        complete_defining_set(7, 2, [9])


def test_dual_zeros():
    code = CyclicCode.from_representatives(45, 2, [0, 3, 5, 9])
    assert code.dual().representatives() == [1, 3, 7, 15]
    assert dual_defining_set(code.dual()) == code.zeros


@pytest.mark.parametrize("n,q", [(7, 2), (15, 2), (21, 2), (13, 3), (15, 4), (12, 13)])
def test_generator_and_parity_check_are_orthogonal(n, q):
    for code in _props.all_cyclic_codes(n, q):
        G = code.generator_matrix().matrix
        H = code.parity_check_matrix().matrix
        assert G.shape[0] == code.k and H.shape[0] == n - code.k
        if G.size and H.size:
            assert not np.any(matmul(G, H.T, code.field))
            # C and its dual may intersect, so only each side is checked for full rank
            assert rank(G, code.field) == code.k and rank(H, code.field) == n - code.k


@pytest.mark.parametrize("n,q,reps", [(21, 2, [0, 1, 7]), (15, 4, [1, 2]), (13, 3, [1]), (15, 2, [1, 3, 5])])
def test_codewords_vanish_at_the_zeros(n, q, reps):
    code = CyclicCode.from_representatives(n, q, reps)
    L, a = code.locator, code.alpha
    emb = embed_matrix(code.generator_matrix(), L).matrix
    for z in code.zeros:
        pts = [L.pow(a, z * t) for t in range(n)]
        for row in emb:
            acc = 0
            for c, x in zip(row.tolist(), pts):
                acc = L.add(acc, L.mul(c, x))
            assert acc == 0
    # the locator-field basis spans the same code
    assert embed_matrix(code.generator_matrix(), L).same_code(code.locator_generator_rows())


def test_cyclic_shift_stays_in_code():
    code = CyclicCode.from_representatives(21, 2, [0, 1, 7])
    for row in code.generator_matrix().matrix:
        assert code.contains(np.roll(row, 5))
    bad = np.zeros(21, dtype=np.int64)
    bad[0] = 1
    assert not code.contains(bad)


@settings(max_examples=40)
@given(st.sampled_from([(15, 2), (21, 2), (13, 3), (15, 4), (17, 2)]), st.data())
def test_bch_bound_never_exceeds_true_distance(nq, data):
    n, q = nq
    reps = [c[0] for c in cyclotomic_cosets(n, q)]
    chosen = data.draw(st.lists(st.sampled_from(reps), unique=True))
    code = CyclicCode.from_representatives(n, q, chosen)
    if code.k == 0:
        return
    cert = bch_bound(code)
    assert set(cert.exponents(n)) <= code.zeros
    assert cert.bound <= oracle.min_distance(code)


def test_bch_strided_run():
    # zeros {0,3,6,9,12,...}: a stride-2 run beats the stride-1 one for this code
    code = CyclicCode.from_representatives(15, 2, [1, 3])
    cert = bch_bound(code)
    assert cert.bound == 5 and oracle.min_distance(code) == 5


@pytest.mark.parametrize("n,q,sub,reps", [(15, 4, 2, [1]), (15, 16, 2, [1, 3]), (21, 4, 2, [1, 3]), (13, 9, 3, [1])])
def test_trace_code_is_dual_of_subfield_subcode_of_dual(n, q, sub, reps):
    """Delsarte: tr(C) = (C^perp restricted to the subfield)^perp."""
    code = CyclicCode.from_representatives(n, q, reps)
    T = trace_code(code, sub)
    dual_sub = subfield_subcode(code.dual(), sub)
    # tr(C) and the restricted dual are orthogonal and their dimensions add to n
    H = dual_sub.generator_matrix().matrix
    if T.rows and H.size:
        assert not np.any(matmul(T.matrix, H.T, T.field))
    assert T.rank() + dual_sub.k == n


def test_subfield_subcode_contains_only_subfield_words():
    code = CyclicCode.from_representatives(15, 4, [1])
    sub = subfield_subcode(code, 2)
    assert sub.zeros == complete_defining_set(15, 2, code.zeros)
    F4 = code.field
    emb = embed_matrix(sub.generator_matrix(), F4).matrix
    for row in emb:
        assert code.contains(row)
    with pytest.raises(CodeError):
        subfield_subcode(code, 3)


def test_zero_and_full_codes():
    F = field_of_order(2)
    zero = CyclicCode(7, F, frozenset(range(7)))
    full = CyclicCode(7, F, frozenset())
    assert zero.generator_matrix().rows == 0 and zero.parity_check_matrix().rows == 7
    assert full.parity_check_matrix().rows == 0 and full.generator_matrix().rows == 7
    assert bch_bound(zero).bound == 8
