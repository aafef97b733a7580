"""Optimal LRC codes built from polynomials that are constant on cosets.

Two descriptions of the same family are provided:

* evaluation form: messages are polynomials ``sum a_ij x^{r+1 j} x^i`` evaluated
  on a union of cosets of the order-(r+1) subgroup H of GF(q)*;
* zero-set form: the cyclic code whose defining set is ``L | D`` with ``L`` a
  residue class mod r+1 (locality) and ``D`` a strided run (distance).
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from math import ceil, gcd

import numpy as np

from .cyclic_code import CodeError, CyclicCode
from .finite_field import FieldTable, field_of_order, nth_root_of_unity
from .poly import DensePoly


def _check_lrc_params(n: int, k: int, r: int) -> None:
    if not (1 <= r <= k <= n):
        raise CodeError(f"need 1 <= r <= k <= n, got n={n}, k={k}, r={r}")
    if k % r:
        raise CodeError(f"r={r} must divide k={k}")
    if n % (r + 1):
        raise CodeError(f"r+1={r + 1} must divide n={n}")
    if k // r > n // (r + 1):
        raise CodeError(f"k/r={k // r} exceeds the number of local groups n/(r+1)={n // (r + 1)}")


def optimal_distance(n: int, k: int, r: int) -> int:
    """Largest distance allowed by d <= n - k - ceil(k/r) + 2."""
    if not (1 <= r <= k <= n):
        raise ValueError(f"need 1 <= r <= k <= n, got n={n}, k={k}, r={r}")
    return n - k - ceil(k / r) + 2


def message_exponents(n: int, k: int, r: int) -> list[int]:
    """Exponents i + j(r+1), i < r, j < k/r, in message order (i fastest)."""
    _check_lrc_params(n, k, r)
    mu = k // r
    return [i + j * (r + 1) for j in range(mu) for i in range(r)]


@dataclass(frozen=True)
class RsLrcCode:
    """Evaluation code of ``f_a = sum a_ij p(x)^j x^i`` with ``p(x) = x^(r+1)``.

    Points are ordered ``P[i + j*nu] = c_i h^j`` with ``h`` of order r+1 and
    ``c_i`` coset representatives, so the local group of position ``t`` is
    ``{t mod nu + j*nu}``.  When ``n | q-1`` this is ``P[t] = alpha^t``.
    """

    q: int
    n: int
    k: int
    r: int
    field: FieldTable = dc_field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _check_lrc_params(self.n, self.k, self.r)
        F = field_of_order(self.q)
        if self.n > self.q - 1 or (self.q - 1) % (self.r + 1):
            raise CodeError(f"need n <= q-1 and (r+1) | q-1 (n={self.n}, r={self.r}, q={self.q})")
        object.__setattr__(self, "field", F)

    @property
    def nu(self) -> int:
        return self.n // (self.r + 1)

    @property
    def mu(self) -> int:
        return self.k // self.r

    @property
    def cyclic(self) -> bool:
        return (self.q - 1) % self.n == 0

    @cached_property
    def points(self) -> np.ndarray:
        F = self.field
        h = nth_root_of_unity(F, self.r + 1)
        base = nth_root_of_unity(F, self.n) if self.cyclic else F.generator
        reps = [F.pow(base, i) for i in range(self.nu)]
        pts = np.zeros(self.n, dtype=np.int64)
        for j in range(self.r + 1):
            hj = F.pow(h, j)
            for i, c in enumerate(reps):
                pts[i + j * self.nu] = F.mul(c, hj)
        return pts

    def local_group(self, t: int) -> list[int]:
        """Positions sharing a coset of H with position t (t included)."""
        return [t % self.nu + j * self.nu for j in range(self.r + 1)]

    def partition(self) -> list[list[int]]:
        return [self.local_group(i) for i in range(self.nu)]

    def good_poly(self) -> DensePoly:
        return DensePoly.monomial(self.field, self.r + 1)

    def message_poly(self, a) -> DensePoly:
        a = [int(x) for x in a]
        if len(a) != self.k:
            raise CodeError(f"message has {len(a)} symbols, expected {self.k}")
        coeffs = [0] * ((self.mu - 1) * (self.r + 1) + self.r)
        for e, v in zip(message_exponents(self.n, self.k, self.r), a):
            coeffs[e] = v
        return DensePoly(self.field, tuple(coeffs))

    @cached_property
    def _gen(self) -> np.ndarray:
        F = self.field
        exps = message_exponents(self.n, self.k, self.r)
        G = np.zeros((self.k, self.n), dtype=np.int64)
        for row, e in enumerate(exps):
            G[row] = F.pow_v(self.points, e)
        return G

    def generator_matrix(self) -> np.ndarray:
        """Row ``i + j*r`` is the evaluation of ``x^(i + j(r+1))``."""
        return self._gen.copy()


def rs_lrc_encode(code: RsLrcCode, a) -> np.ndarray:
    """Evaluate the message polynomial of ``a`` at the code's points."""
    f = code.message_poly(a)
    F = code.field
    out = np.zeros(code.n, dtype=np.int64)
    for t, P in enumerate(code.points.tolist()):
        out[t] = f(P)
    return out


def cyclic_lrc_polynomial_form(n: int, k: int, r: int, a, field: FieldTable | int) -> DensePoly:
    """Polynomial ``sum a_i x^i`` over exponents ``i < mu(r+1)-1`` with ``i != r mod r+1``.

    Coefficients are consumed in increasing exponent order, which matches the
    row-major message order of :func:`rs_lrc_encode`.
    """
    F = field if isinstance(field, FieldTable) else field_of_order(field)
    exps = message_exponents(n, k, r)
    a = [int(x) for x in a]
    if len(a) != k:
        raise CodeError(f"message has {len(a)} symbols, expected {k}")
    coeffs = [0] * (max(exps) + 1)
    for e, v in zip(exps, a):
        coeffs[e] = v
    return DensePoly(F, tuple(coeffs))


@dataclass(frozen=True)
class OptimalCyclicParams:
    n: int
    k: int
    r: int
    q: int
    l: int = 1
    b: int = 1
    j: int | None = None  # defaults to the smallest exponent of L, i.e. l

    @property
    def mu(self) -> int:
        return self.k // self.r

    @property
    def nu(self) -> int:
        return self.n // (self.r + 1)

    def validate(self) -> None:
        _check_lrc_params(self.n, self.k, self.r)
        if (self.q - 1) % self.n:
            raise CodeError(f"n={self.n} must divide q-1={self.q - 1}")
        if not 0 <= self.l <= self.r:
            raise CodeError(f"l={self.l} outside 0..r")
        if self.b < 1 or gcd(self.b, self.n) != 1:
            raise CodeError(f"stride b={self.b} must be positive and coprime to n={self.n}")
        if self.j is not None and self.j % (self.r + 1) != self.l:
            raise CodeError(f"start exponent j={self.j} is not in L (residue {self.l} mod {self.r + 1})")

    def locality_set(self) -> frozenset[int]:
        return frozenset(i for i in range(self.n) if i % (self.r + 1) == self.l)

    def distance_set(self) -> frozenset[int]:
        j = self.l if self.j is None else self.j
        length = self.n - self.mu * (self.r + 1) + 1
        return frozenset((j + s * self.b) % self.n for s in range(length))


def optimal_cyclic_code(params: OptimalCyclicParams) -> CyclicCode:
    """Cyclic code with zeros ``L | D``; raises if the union has the wrong size."""
    params.validate()
    L, D = params.locality_set(), params.distance_set()
    Z = L | D
    if len(Z) != params.n - params.k:
        raise CodeError(
            f"|L u D| = {len(Z)} but n-k = {params.n - params.k} "
            f"(|L|={len(L)}, |D|={len(D)}, overlap={len(L & D)})"
        )
    F = field_of_order(params.q)
    label = f"optimal(n={params.n},k={params.k},r={params.r},q={params.q},l={params.l},b={params.b})"
    return CyclicCode(params.n, F, Z, label)


def run_defining_set(n: int, k: int, r: int) -> tuple[frozenset[int], frozenset[int]]:
    """Zeros of the evaluation code as the disjoint pair (run, extra).

    run = {1, ..., n - mu(r+1) + 1}; extra = {n - (mu - l)(r+1) + 1 : l = 1..mu-1}.
    """
    _check_lrc_params(n, k, r)
    mu = k // r
    run = frozenset(range(1, n - mu * (r + 1) + 2))
    extra = frozenset(n - (mu - l) * (r + 1) + 1 for l in range(1, mu))
    if run & extra:  # pragma: no cover - excluded by the parameter checks
        raise CodeError("run and extra zeros overlap")
    return run, extra


def lagrange_at(F: FieldTable, xs, ys, x: int) -> int:
    """Value at ``x`` of the interpolating polynomial through (xs, ys)."""
    acc = 0
    xs = [int(v) for v in xs]
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if not yi:
            continue
        num, den = 1, 1
        for jj, xj in enumerate(xs):
            if jj != i:
                num = F.mul(num, F.sub(x, xj))
                den = F.mul(den, F.sub(xi, xj))
        acc = F.add(acc, F.mul(int(yi), F.div(num, den)))
    return acc


def local_repair(code, word, position: int, erased=None, r: int | None = None) -> int:
    """Recover ``word[position]`` from its local group.

    For an :class:`RsLrcCode` this interpolates a polynomial of degree <= r-1
    through the other r points of the coset.  For a cyclic code over the
    locator field (``m = 1``, e.g. from :func:`optimal_cyclic_code`) pass ``r``; the
    symbol is solved from the weight-(r+1) dual vector whose support is the
    group.  ``erased`` lists every erased position; a second erasure inside
    the same group is an error.
    """
    erased = {position} if erased is None else set(erased) | {position}
    word = np.asarray(word, dtype=np.int64)
    if isinstance(code, RsLrcCode):
        group = code.local_group(position)
        others = [t for t in group if t != position]
        if erased & set(others):
            raise CodeError(f"another erasure inside the local group {group}")
        return lagrange_at(code.field, code.points[others], word[others], int(code.points[position]))
    if r is None:
        raise CodeError("pass the locality r for a cyclic code")
    from .locality import group_check_vector

    n = code.n
    if code.locator is not code.field or n % (r + 1):
        raise CodeError("cyclic repair needs n | q-1 and (r+1) | n")
    ls = [l for l in range(r + 1) if all(i in code.zeros for i in range(l, n, r + 1))]
    if not ls:
        raise CodeError(f"no residue class mod {r + 1} lies in the defining set")
    F = code.field
    nu = n // (r + 1)
    vs = np.roll(group_check_vector(code, r, ls[0]), position % nu)
    group = [t for t in range(n) if vs[t]]
    others = [t for t in group if t != position]
    if erased & set(others):
        raise CodeError(f"another erasure inside the local group {group}")
    acc = 0
    for t in others:
        acc = F.add(acc, F.mul(int(vs[t]), int(word[t])))
    return F.neg(F.div(acc, int(vs[position])))


__all__ = [
    "RsLrcCode",
    "OptimalCyclicParams",
    "cyclic_lrc_polynomial_form",
    "lagrange_at",
    "run_defining_set",
    "local_repair",
    "message_exponents",
    "optimal_distance",
    "rs_lrc_encode",
    "optimal_cyclic_code",
]
