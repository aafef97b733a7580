"""Irreducible cyclic codes in trace form.

For an s-th root of unity ``beta`` in GF(q^m) the words
``(tr(gamma), tr(gamma beta), ..., tr(gamma beta^(s-1)))``, gamma in GF(q^m),
form a cyclic code over GF(q).  If ``beta`` has order ``t < s`` the code is
the (s/t)-fold repetition of the length-t code.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

import numpy as np

from .finite_field import (
    FieldError,
    FieldTable,
    build_field,
    field_of_order,
    multiplicative_order,
    nth_root_of_unity,
    restriction,
    trace_table,
    trace_v,
)

ENUM_CEILING = 2**22
_CHUNK = 1 << 16


@dataclass(frozen=True)
class IrreducibleSpec:
    """Trace code of ``beta = zeta_s^power`` over GF(q).

    ``ext`` is the degree over GF(q) of the field the multipliers gamma range
    over; it defaults to ``m = ord_s(q)`` and may be any multiple of the
    degree of the field generated by ``beta``.  ``host`` is the degree of the
    field in which all arithmetic happens (default: lcm of m and ext); fixing
    it pins ``beta`` so codes with different ``ext`` can be compared.
    """

    q: int
    s: int
    power: int = 1
    ext: int | None = None
    host: int | None = None

    def __post_init__(self):
        if self.s < 1:
            raise ValueError("length must be positive")
        if gcd(self.s, self.q) != 1:
            raise FieldError(f"gcd(s={self.s}, q={self.q}) != 1")

    @property
    def m(self) -> int:
        return multiplicative_order(self.q, self.s)

    @property
    def t(self) -> int:
        """Multiplicative order of beta."""
        return self.s // gcd(self.s, self.power % self.s)

    @property
    def core_degree(self) -> int:
        """ord_t(q): degree of the smallest field holding beta."""
        return multiplicative_order(self.q, self.t)

    @property
    def degree(self) -> int:
        d = self.m if self.ext is None else self.ext
        if d % self.core_degree:
            raise FieldError(f"GF(q^{d}) does not contain a root of order {self.t}")
        return d

    @property
    def N(self) -> int:
        return (self.q**self.m - 1) // self.t

    @cached_property
    def symbol_field(self) -> FieldTable:
        return field_of_order(self.q)

    @cached_property
    def big(self) -> FieldTable:
        """Field holding the s-th roots of unity (degree lcm-compatible with ``ext``)."""
        F = self.symbol_field
        d = self.degree
        deg = self.m * d // gcd(self.m, d)
        if self.host is not None:
            if self.host % deg:
                raise FieldError(f"host degree {self.host} is not a multiple of {deg}")
            deg = self.host
        return build_field(F.p, F.m * deg)

    @cached_property
    def beta(self) -> int:
        zeta = nth_root_of_unity(self.big, self.s)
        return self.big.pow(zeta, self.power)


def _gamma_range(spec: IrreducibleSpec) -> np.ndarray:
    """Elements of the degree-``spec.degree`` subfield of ``spec.big`` (over GF(q))."""
    F = spec.symbol_field
    return spec.big.subfield_elements(F.m * spec.degree)


def _words(spec: IrreducibleSpec, gammas: np.ndarray) -> np.ndarray:
    big, F = spec.big, spec.symbol_field
    bp = np.array([big.pow(spec.beta, j) for j in range(spec.s)], dtype=np.int64)
    prod = big.mul_v(gammas[:, None], bp[None, :])
    # relative trace from the gamma field down to GF(q)
    T = _relative_trace_table(big, F.m, F.m * spec.degree)
    vals = T[prod]
    back = np.zeros(big.q, dtype=np.int64)
    for big_val, small_val in restriction(F, big).items():
        back[big_val] = small_val
    return back[vals]


def _relative_trace_table(big: FieldTable, sub: int, ext: int) -> np.ndarray:
    if ext == big.m:
        return trace_table(big, sub)
    # products gamma*beta^j all lie in the degree-ext subfield, the only
    # entries ever looked up
    out = np.zeros(big.q, dtype=np.int64)
    elems = big.subfield_elements(ext)
    out[elems] = trace_v(big, sub, elems, ext)
    return out


def irreducible_code(spec: IrreducibleSpec) -> np.ndarray:
    """All distinct codewords (rows, sorted lexicographically) over GF(q)."""
    count = spec.q**spec.degree
    if count > ENUM_CEILING:
        raise FieldError(f"enumeration of {count} multipliers exceeds the ceiling {ENUM_CEILING}")
    gammas = _gamma_range(spec)
    chunks = [_words(spec, gammas[i:i + _CHUNK]) for i in range(0, len(gammas), _CHUNK)]
    W = np.vstack(chunks)
    return np.unique(W, axis=0)


def irreducible_weight_distribution(spec: IrreducibleSpec) -> dict[int, int]:
    """Weight histogram of the distinct codewords."""
    W = irreducible_code(spec)
    w = np.count_nonzero(W, axis=1)
    vals, counts = np.unique(w, return_counts=True)
    return {int(a): int(b) for a, b in zip(vals, counts)}


@dataclass(frozen=True)
class WeightPrediction:
    kind: str  # "constant", "two-weight" or "none"
    weights: dict[int, int]
    core_length: int
    repetition: int
    N: int
    gcd_value: int

    @property
    def predicted(self) -> bool:
        return self.kind != "none"


def predicted_weights(spec: IrreducibleSpec) -> WeightPrediction:
    """Nonzero weights predicted by the constant-weight and two-weight criteria.

    The prediction is made for the core code of length t (the order of beta)
    over GF(q^{ord_t(q)}), then scaled by the repetition factor s/t.
    """
    q, t = spec.q, spec.t
    rep = spec.s // t
    m = spec.core_degree
    N = (q**m - 1) // t
    g = gcd((q**m - 1) // (q - 1), N)
    none = WeightPrediction("none", {}, t, rep, N, g)
    if g == 1:
        num = (q - 1) * q ** (m - 1)
        if num % N:
            return none
        return WeightPrediction("constant", {rep * num // N: q**m - 1}, t, rep, N, g)
    if g == 2 and m % 2 == 0:
        h = q ** (m // 2)
        out = {}
        for sign in (1, -1):
            num = (q - 1) * (q**m + sign * h)
            if num % (N * q):
                return none
            out[rep * num // (N * q)] = (q**m - 1) // 2
        return WeightPrediction("two-weight", dict(sorted(out.items())), t, rep, N, g)
    return none


def averaging_distance_bound(q: int, s: int, m: int) -> Fraction:
    """s (1 - (q^(m-1) - 1)/(q^m - 1)): some nonzero word is at most this heavy."""
    if m < 1 or s < 1:
        raise ValueError("need s, m >= 1")
    return s * (1 - Fraction(q ** (m - 1) - 1, q**m - 1))


__all__ = [
    "IrreducibleSpec",
    "WeightPrediction",
    "averaging_distance_bound",
    "irreducible_code",
    "irreducible_weight_distribution",
    "predicted_weights",
]
