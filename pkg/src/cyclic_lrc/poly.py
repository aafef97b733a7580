"""Dense polynomials over a :class:`FieldTable`."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .finite_field import FieldError, FieldTable, cyclotomic_coset, embedding, restriction


@dataclass(frozen=True)
class DensePoly:
    """Coefficients lowest degree first; the zero polynomial has no coefficients."""

    field: FieldTable
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_roots(cls, field: FieldTable, roots: Iterable[int]) -> "DensePoly":
        """prod (x - root) over ``field``."""
        out = cls(field, (1,))
        for r in roots:
            out = out * cls(field, (field.neg(r), 1))
        return out

    @classmethod
    def monomial(cls, field: FieldTable, degree: int, coef: int = 1) -> "DensePoly":
        return cls(field, (0,) * degree + (coef,))

    @classmethod
    def x_n_minus_1(cls, field: FieldTable, n: int) -> "DensePoly":
        return cls(field, (field.neg(1),) + (0,) * (n - 1) + (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _check(self, other: "DensePoly") -> None:
        if other.field is not self.field:
            raise FieldError("polynomials over different fields")

    def __add__(self, other: "DensePoly") -> "DensePoly":
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return DensePoly(F, tuple(F.add(x, y) for x, y in zip(a, b)))

    def __neg__(self) -> "DensePoly":
        return DensePoly(self.field, tuple(self.field.neg(c) for c in self.coeffs))

    def __sub__(self, other: "DensePoly") -> "DensePoly":
        return self + (-other)

    def __mul__(self, other: "DensePoly") -> "DensePoly":
        self._check(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return DensePoly(F, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = F.add(out[i + j], F.mul(a, b))
        return DensePoly(F, tuple(out))

    def scale(self, c: int) -> "DensePoly":
        return DensePoly(self.field, tuple(self.field.mul(c, x) for x in self.coeffs))

    def monic(self) -> "DensePoly":
        if self.is_zero():
            raise ZeroDivisionError("zero polynomial has no leading coefficient")
        return self.scale(self.field.inv(self.coeffs[-1]))

    def divmod(self, other: "DensePoly") -> tuple["DensePoly", "DensePoly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        F = self.field
        rem = list(self.coeffs)
        d = other.degree
        inv_lead = F.inv(other.coeffs[-1])
        quot = [0] * max(len(rem) - d, 0)
        while len(rem) - 1 >= d and rem:
            c = F.mul(rem[-1], inv_lead)
            shift = len(rem) - 1 - d
            quot[shift] = c
            for i, b in enumerate(other.coeffs):
                rem[shift + i] = F.sub(rem[shift + i], F.mul(c, b))
            while rem and rem[-1] == 0:
                rem.pop()
        return DensePoly(F, tuple(quot)), DensePoly(F, tuple(rem))

    def __mod__(self, other: "DensePoly") -> "DensePoly":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "DensePoly") -> "DensePoly":
        return self.divmod(other)[0]

    def reciprocal(self, degree: int | None = None) -> "DensePoly":
        """x^degree * f(1/x); ``degree`` defaults to deg f."""
        d = self.degree if degree is None else degree
        c = self.coeffs + (0,) * (d + 1 - len(self.coeffs))
        return DensePoly(self.field, tuple(reversed(c[: d + 1])))

    def mulmod_xn(self, other: "DensePoly", n: int) -> "DensePoly":
        """Product in F[x]/(x^n - 1)."""
        prod = (self * other).coeffs
        out = [0] * n
        F = self.field
        for i, c in enumerate(prod):
            if c:
                out[i % n] = F.add(out[i % n], c)
        return DensePoly(F, tuple(out))

    def vector(self, n: int) -> np.ndarray:
        if len(self.coeffs) > n:
            raise ValueError(f"degree {self.degree} does not fit length {n}")
        v = np.zeros(n, dtype=np.int64)
        v[: len(self.coeffs)] = self.coeffs
        return v

    def map_into(self, big: FieldTable) -> "DensePoly":
        emb = embedding(self.field, big)
        return DensePoly(big, tuple(int(emb[c]) for c in self.coeffs))

    def __call__(self, x: int) -> int:
        return evaluate(self, x)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mon = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                coef = "" if (c == 1 and i) else str(c)
                terms.append(f"{coef}{mon}" if coef and mon else (coef or mon))
        return " + ".join(reversed(terms))


def evaluate(f: DensePoly, x: int, field: FieldTable | None = None) -> int:
    """Horner evaluation.  ``field`` may be an extension of ``f.field``."""
    F = f.field if field is None else field
    coeffs = f.coeffs
    if F is not f.field:
        emb = embedding(f.field, F)
        coeffs = tuple(int(emb[c]) for c in coeffs)
    acc = 0
    for c in reversed(coeffs):
        acc = F.add(F.mul(acc, x), c)
    return acc


def minimal_polynomial(beta: int, big: FieldTable, base: FieldTable) -> DensePoly:
    """Minimal polynomial over ``base`` of a nonzero ``beta`` in ``big``."""
    if int(beta) == 0:
        raise FieldError("minimal polynomial of zero is not taken here")
    if big.p != base.p or big.m % base.m:
        raise FieldError(f"{base!r} is not a subfield of {big!r}")
    conj = [int(beta)]
    y = big.pow(beta, base.q)
    while y != conj[0]:
        conj.append(y)
        y = big.pow(y, base.q)
    prod = DensePoly.from_roots(big, conj)
    back = restriction(base, big)
    try:
        return DensePoly(base, tuple(back[c] for c in prod.coeffs))
    except KeyError:  # pragma: no cover
        raise FieldError("minimal polynomial has coefficients outside the base field")


def generator_polynomial(code) -> DensePoly:
    """prod of the distinct minimal polynomials of alpha^i, i in the defining set.

    ``code`` is a :class:`~cyclic_lrc.cyclic_code.CyclicCode` (or anything with
    ``n``, ``field``, ``locator``, ``alpha`` and ``zeros``).
    """
    n, q = code.n, code.field.q
    zeros = set(code.zeros)
    for i in zeros:
        if (i * q) % n not in zeros:
            raise ValueError("defining set is not closed under multiplication by q")
    g = DensePoly(code.field, (1,))
    done: set[int] = set()
    for i in sorted(zeros):
        if i in done:
            continue
        coset = cyclotomic_coset(i, n, q)
        done.update(coset)
        beta = code.locator.pow(code.alpha, i)
        g = g * minimal_polynomial(beta, code.locator, code.field)
    return g
