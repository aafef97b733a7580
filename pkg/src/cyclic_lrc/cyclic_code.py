"""Cyclic codes described by their defining sets of zeros.

A code of length ``n`` over GF(q) is identified with the set ``Z`` of
exponents ``i`` such that ``alpha^i`` is a zero of every codeword polynomial,
where ``alpha`` is a fixed primitive ``n``-th root of unity in the locator
field GF(q^m), ``m = ord_n(q)``.  A codeword ``c`` corresponds to
``c(x) = sum_t c_t x^t``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd
from typing import Iterable

import numpy as np

from . import linalg
from .finite_field import (
    FieldError,
    FieldTable,
    build_field,
    cyclotomic_coset,
    cyclotomic_cosets,
    embedding,
    field_of_order,
    multiplicative_order,
    nth_root_of_unity,
    restriction,
    trace_v,
)
from .poly import DensePoly, generator_polynomial


class CodeError(ValueError):
    pass


def complete_defining_set(n: int, q: int, representatives: Iterable[int]) -> frozenset[int]:
    """Union of the q-cyclotomic cosets mod n of the representatives."""
    if gcd(n, q) != 1:
        raise CodeError(f"gcd(n={n}, q={q}) != 1")
    out: set[int] = set()
    for r in representatives:
        r = int(r)
        if r < 0 or r >= n:
            raise CodeError(f"representative {r} outside 0..{n - 1}")
        out.update(cyclotomic_coset(r, n, q))
    return frozenset(out)


def coset_representatives(n: int, q: int, zeros: Iterable[int]) -> list[int]:
    zs = set(zeros)
    return [c[0] for c in cyclotomic_cosets(n, q) if c[0] in zs]


@lru_cache(maxsize=None)
def locator_field(symbol: FieldTable, n: int) -> tuple[FieldTable, int]:
    """Smallest extension of ``symbol`` holding the n-th roots of unity, and alpha."""
    m = multiplicative_order(symbol.q, n)
    big = symbol if m == 1 else build_field(symbol.p, symbol.m * m)
    return big, nth_root_of_unity(big, n)


@dataclass(frozen=True)
class LinearCodeMatrix:
    """A matrix over ``field`` tagged as a generator or parity-check matrix."""

    matrix: np.ndarray
    field: FieldTable
    role: str = "generator"

    @property
    def rows(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def n(self) -> int:
        return int(self.matrix.shape[1])

    def rank(self) -> int:
        return linalg.rank(self.matrix, self.field) if self.rows else 0

    def rref(self) -> np.ndarray:
        if not self.rows:
            return self.matrix.copy()
        return linalg.rref(self.matrix, self.field)[0]

    def same_code(self, other: "LinearCodeMatrix") -> bool:
        return linalg.same_row_space(self.matrix, other.matrix, self.field)


@dataclass(frozen=True)
class CyclicCode:
    """Cyclic code of length ``n`` over ``field`` with complete defining set ``zeros``.

    ``locator``/``alpha`` may be supplied to pin the root of unity used to
    name the zeros (subfield subcodes inherit their parent's).
    """

    n: int
    field: FieldTable
    zeros: frozenset[int]
    label: str = ""
    locator_override: tuple[FieldTable, int] | None = None

    def __post_init__(self):
        q = self.field.q
        if self.n < 1:
            raise CodeError("length must be positive")
        if gcd(self.n, q) != 1:
            raise CodeError(f"gcd(n={self.n}, q={q}) != 1")
        z = frozenset(int(i) for i in self.zeros)
        if any(i < 0 or i >= self.n for i in z):
            raise CodeError("defining set entries must lie in 0..n-1")
        if any((i * q) % self.n not in z for i in z):
            raise CodeError("defining set is not closed under multiplication by q")
        object.__setattr__(self, "zeros", z)

    @classmethod
    def from_representatives(cls, n: int, q: int | FieldTable, reps: Iterable[int], label: str = "") -> "CyclicCode":
        F = q if isinstance(q, FieldTable) else field_of_order(q)
        return cls(n, F, complete_defining_set(n, F.q, reps), label)

    # -- basic parameters ------------------------------------------------
    @property
    def q(self) -> int:
        return self.field.q

    @property
    def k(self) -> int:
        return self.n - len(self.zeros)

    @property
    def dimension(self) -> int:
        return self.k

    @cached_property
    def _locator(self) -> tuple[FieldTable, int]:
        if self.locator_override is not None:
            return self.locator_override
        return locator_field(self.field, self.n)

    @property
    def locator(self) -> FieldTable:
        return self._locator[0]

    @property
    def alpha(self) -> int:
        return self._locator[1]

    @property
    def locator_degree(self) -> int:
        """m with locator = GF(q^m)."""
        return self.locator.m // self.field.m

    def representatives(self) -> list[int]:
        return coset_representatives(self.n, self.q, self.zeros)

    # -- polynomials and matrices ------------------------------------------
    @cached_property
    def generator_poly(self) -> DensePoly:
        return generator_polynomial(self)

    @cached_property
    def check_poly(self) -> DensePoly:
        h, rem = DensePoly.x_n_minus_1(self.field, self.n).divmod(self.generator_poly)
        if not rem.is_zero():  # pragma: no cover
            raise CodeError("generator polynomial does not divide x^n - 1")
        return h

    @cached_property
    def _generator_matrix(self) -> np.ndarray:
        if self.k == 0:
            return np.zeros((0, self.n), dtype=np.int64)
        g = self.generator_poly.vector(self.n)
        G = np.zeros((self.k, self.n), dtype=np.int64)
        for i in range(self.k):
            G[i] = np.roll(g, i)
        return G

    def generator_matrix(self) -> LinearCodeMatrix:
        return LinearCodeMatrix(self._generator_matrix.copy(), self.field, "generator")

    def parity_check_matrix(self) -> LinearCodeMatrix:
        """Shifts of the reciprocal check polynomial; spans the dual code."""
        if self.k == 0:  # zero code: the dual is everything
            return LinearCodeMatrix(np.eye(self.n, dtype=np.int64), self.field, "parity-check")
        if self.k == self.n:
            return LinearCodeMatrix(np.zeros((0, self.n), dtype=np.int64), self.field, "parity-check")
        hr = self.check_poly.reciprocal(self.k).vector(self.n)
        H = np.zeros((self.n - self.k, self.n), dtype=np.int64)
        for i in range(self.n - self.k):
            H[i] = np.roll(hr, i)
        return LinearCodeMatrix(H, self.field, "parity-check")

    def locator_generator_rows(self) -> LinearCodeMatrix:
        """Rows (alpha^{jt})_t, -j not in Z: a basis of the code over the locator field."""
        L, a = self.locator, self.alpha
        js = [j for j in range(self.n) if (-j) % self.n not in self.zeros]
        M = np.zeros((len(js), self.n), dtype=np.int64)
        for r, j in enumerate(js):
            step = L.pow(a, j)
            x = 1
            for t in range(self.n):
                M[r, t] = x
                x = L.mul(x, step)
        return LinearCodeMatrix(M, L, "generator")

    def syndrome_zero(self, word) -> bool:
        """True iff ``word`` (over the symbol field) is a codeword."""
        w = np.asarray(word, dtype=np.int64)
        H = self.parity_check_matrix().matrix
        if H.size == 0:
            return True
        return not np.any(linalg.matmul(H, w[:, None], self.field))

    def contains(self, word) -> bool:
        return self.syndrome_zero(word)

    def dual(self) -> "CyclicCode":
        return CyclicCode(self.n, self.field, dual_defining_set(self), f"dual({self.label})" if self.label else "",
                          self._locator)

    def describe(self) -> str:
        return f"[{self.n},{self.k}] cyclic code over GF({self.q}), zeros reps {self.representatives()}"


def dual_defining_set(code: CyclicCode) -> frozenset[int]:
    """{(n - i) mod n : i not in Z}."""
    n = code.n
    return frozenset((n - i) % n for i in range(n) if i not in code.zeros)


@dataclass(frozen=True)
class BCHCertificate:
    bound: int
    start: int
    stride: int
    length: int

    def exponents(self, n: int) -> list[int]:
        return [(self.start + s * self.stride) % n for s in range(self.length)]


def _longest_run(n: int, zeros: frozenset[int], b: int) -> tuple[int, int]:
    """Longest cyclic run j, j+b, ... inside zeros; returns (length, j)."""
    if len(zeros) == n:
        return n, 0
    orbit = [(s * b) % n for s in range(n)]
    member = [x in zeros for x in orbit]
    # start scanning right after a non-member so runs never wrap mid-scan
    first_out = member.index(False)
    best_len, best_j = 0, 0
    run, run_start = 0, None
    for step in range(1, n + 1):
        pos = (first_out + step) % n
        if member[pos]:
            if run == 0:
                run_start = orbit[pos]
            run += 1
            if run > best_len or (run == best_len and run_start < best_j):
                best_len, best_j = run, run_start
        else:
            run = 0
    return best_len, best_j


def bch_bound(code: CyclicCode, strides: Iterable[int] | None = None) -> BCHCertificate:
    """BCH lower bound 1 + L over strides b coprime to n.

    Ties prefer the smaller stride, then the smaller start exponent.  For the
    zero code (Z = everything) the bound is n + 1, i.e. vacuous.
    """
    n = code.n
    if strides is None:
        strides = [b for b in range(1, max(n, 2)) if gcd(b, n) == 1]
    best = None
    for b in strides:
        if gcd(b, n) != 1:
            raise CodeError(f"stride {b} is not coprime to n={n}")
        length, j = _longest_run(n, code.zeros, b % n if n > 1 else 0)
        cand = BCHCertificate(length + 1, j, b, length)
        if best is None or cand.length > best.length:
            best = cand
    assert best is not None
    return best


def _check_subfield(code: CyclicCode, target: FieldTable) -> None:
    if target.p != code.field.p or code.field.m % target.m:
        raise CodeError(f"GF({target.q}) is not a subfield of GF({code.q})")


def subfield_subcode(code: CyclicCode, target: FieldTable | int) -> CyclicCode:
    """Codewords of ``code`` with every coordinate in ``target``."""
    T = target if isinstance(target, FieldTable) else field_of_order(target)
    _check_subfield(code, T)
    closure = complete_defining_set(code.n, T.q, code.zeros)
    # the locator of the parent also contains GF(T) and the n-th roots of unity
    return CyclicCode(code.n, T, closure, f"{code.label}|GF({T.q})" if code.label else "",
                      (code.locator, code.alpha))


def trace_code(code: CyclicCode, target: FieldTable | int) -> LinearCodeMatrix:
    """Generator matrix (in RREF) of tr(code) over ``target``."""
    T = target if isinstance(target, FieldTable) else field_of_order(target)
    _check_subfield(code, T)
    F = code.field
    G = code.generator_matrix().matrix
    back = restriction(T, F)
    rows = []
    basis = [F.p**i for i in range(F.m)]
    for g in G:
        for gamma in basis:
            t = trace_v(F, T.m, F.mul_v(gamma, g))
            rows.append([back[int(v)] for v in t])
    if not rows:
        return LinearCodeMatrix(np.zeros((0, code.n), dtype=np.int64), T, "generator")
    R = linalg.rref(np.array(rows, dtype=np.int64), T)[0]
    return LinearCodeMatrix(R, T, "generator")


def embed_matrix(M: LinearCodeMatrix, big: FieldTable) -> LinearCodeMatrix:
    emb = embedding(M.field, big)
    return LinearCodeMatrix(emb[M.matrix], big, M.role)


__all__ = [
    "BCHCertificate",
    "CodeError",
    "CyclicCode",
    "FieldError",
    "LinearCodeMatrix",
    "bch_bound",
    "complete_defining_set",
    "coset_representatives",
    "dual_defining_set",
    "embed_matrix",
    "locator_field",
    "subfield_subcode",
    "trace_code",
]
