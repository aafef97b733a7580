from __future__ import annotations

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from cyclic_lrc.finite_field import (
    FieldError,
    build_field,
    cyclotomic_coset,
    cyclotomic_cosets,
    embedding,
    field_of_order,
    first_irreducible,
    is_irreducible,
    multiplicative_order,
    nth_root_of_unity,
    restriction,
    trace,
    trace_table,
    trace_v,
    _pmod,
    _pmul,
)

ORDERS = [2, 3, 4, 5, 7, 8, 9, 13, 16, 25, 27, 32, 64, 81, 256]


def slow_mul(F, a, b):
    """Schoolbook product of the coefficient vectors reduced by the modulus."""
    prod = _pmod(_pmul(F.coeffs(a), F.coeffs(b), F.p), list(F.modulus), F.p)
    return F.from_coeffs(prod)


@st.composite
def field_and_elements(draw, count=3):
    F = field_of_order(draw(st.sampled_from(ORDERS)))
    return (F, *[draw(st.integers(0, F.q - 1)) for _ in range(count)])


@given(field_and_elements())
def test_ring_axioms(args):
    F, a, b, c = args
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.sub(F.add(a, b), b) == a


@given(field_and_elements())
def test_tables_match_schoolbook_product(args):
    F, a, b, _ = args
    assert F.mul(a, b) == slow_mul(F, a, b)


@given(field_and_elements(count=1))
def test_inverse_and_frobenius(args):
    F, a = args
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.pow(a, F.q - 1) == 1
    assert F.pow(a, F.q) == a
    assert F.frobenius(a, F.m) == a


@given(field_and_elements(count=2))
def test_vector_ops_agree_with_scalar(args):
    F, a, b = args
    xs = F.elements()
    assert F.mul_v(xs, a).tolist() == [F.mul(int(x), a) for x in xs]
    assert F.add_v(xs, b).tolist() == [F.add(int(x), b) for x in xs]
    assert F.sub_v(xs, b).tolist() == [F.sub(int(x), b) for x in xs]


@pytest.mark.parametrize("q", ORDERS)
def test_generator_is_primitive(q):
    F = field_of_order(q)
    assert len({F.pow(F.generator, e) for e in range(q - 1)}) == q - 1
    assert F.element_order(F.generator) == q - 1


@pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (2, 4), (2, 6), (3, 2), (3, 4), (5, 2), (7, 2)])
def test_irreducibility_against_sympy(p, m):
    x = sympy.symbols("x")
    for code in range(p**m):
        coeffs = [(code // p**i) % p for i in range(m)] + [1]
        expr = sum(c * x**i for i, c in enumerate(coeffs))
        expected = sympy.Poly(expr, x, modulus=p).is_irreducible
        assert is_irreducible(coeffs, p) == expected, coeffs
    first = first_irreducible(p, m)
    assert is_irreducible(first, p)


def test_known_default_moduli():
    assert build_field(2, 4).modulus == (1, 1, 0, 0, 1)  # x^4 + x + 1
    assert build_field(2, 3).modulus == (1, 1, 0, 1)


def test_bad_fields_raise():
    with pytest.raises(FieldError):
        build_field(6)
    with pytest.raises(FieldError):
        build_field(2, 2, modulus=(1, 0, 1))  # x^2 + 1 = (x+1)^2
    with pytest.raises(FieldError):
        nth_root_of_unity(field_of_order(16), 7)


@pytest.mark.parametrize("q,n", [(16, 15), (16, 5), (13, 12), (13, 4), (64, 21), (81, 80)])
def test_root_of_unity_order(q, n):
    F = field_of_order(q)
    assert F.element_order(nth_root_of_unity(F, n)) == n


def test_multiplicative_order():
    assert multiplicative_order(2, 45) == 12
    assert multiplicative_order(2, 21) == 6
    assert multiplicative_order(3, 80) == 4
    assert multiplicative_order(2, 105) == 12


def test_cyclotomic_cosets_partition():
    cosets = cyclotomic_cosets(21, 2)
    assert sorted(x for c in cosets for x in c) == list(range(21))
    assert [c[0] for c in cosets] == [0, 1, 3, 5, 7, 9]
    assert sorted(cyclotomic_coset(1, 21, 2)) == [1, 2, 4, 8, 11, 16]
    # orbit count by brute force: distinct orbit sets
    orbits = {frozenset(i * 3**e % 80 for e in range(4)) for i in range(80)}
    assert len(cyclotomic_cosets(80, 3)) == len(orbits)


@pytest.mark.parametrize("small,big", [(2, 16), (4, 16), (4, 64), (8, 64), (3, 81), (9, 81), (16, 256)])
def test_embedding_is_a_field_homomorphism(small, big):
    S, B = field_of_order(small), field_of_order(big)
    emb = embedding(S, B)
    for a in range(S.q):
        for b in range(S.q):
            assert emb[S.add(a, b)] == B.add(int(emb[a]), int(emb[b]))
            assert emb[S.mul(a, b)] == B.mul(int(emb[a]), int(emb[b]))
    assert len(set(emb.tolist())) == S.q
    back = restriction(S, B)
    assert all(back[int(emb[a])] == a for a in range(S.q))


@pytest.mark.parametrize("q,d", [(16, 1), (16, 2), (64, 2), (64, 3), (81, 1), (81, 2)])
def test_trace_lands_in_subfield_and_is_linear(q, d):
    F = field_of_order(q)
    T = trace_table(F, d)
    sub = set(F.subfield_elements(d).tolist())
    assert set(T.tolist()) == sub  # onto the subfield
    xs = F.elements()
    for c in sorted(sub)[:4]:
        assert np.array_equal(trace_v(F, d, F.mul_v(xs, c)), F.mul_v(T, c))
    # every subfield value has the same number of preimages
    counts = np.bincount(T, minlength=F.q)[sorted(sub)]
    assert len(set(counts.tolist())) == 1
    assert trace(F, d, 1) == (F.m // d) % F.p
