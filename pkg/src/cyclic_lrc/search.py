"""Search over unions of cyclotomic cosets for codes meeting locality targets.

Locality is exact (oracle) when the smaller side of the code is cheap to
enumerate, otherwise it is the best coset certificate.  Disjoint recovery
sets are counted from coset certificates: the certificate for a class mod s
has its support on the multiples of n/s, so certificates for s and s' are
disjoint away from the coordinate exactly when gcd(s, s') = 1.
"""
from __future__ import annotations

import itertools
from math import gcd
from dataclasses import dataclass
from typing import Any

from . import oracle
from .cyclic_code import CyclicCode, bch_bound
from .finite_field import cyclotomic_cosets, divisors, field_of_order

MAX_SUBSETS = 2**16
EXACT_ENUM = 2**14


class SearchLimit(RuntimeError):
    pass


@dataclass(frozen=True)
class Constraints:
    k_min: int = 1
    k_max: int | None = None
    r_max: int | None = None
    d_min: int | None = None
    disjoint_min: int | None = None


@dataclass
class Candidate:
    representatives: tuple[int, ...]
    k: int
    r: int | None
    r_exact: bool
    d_lower: int
    certified_sizes: tuple[int, ...]  # s - 1 for every class mod s inside Z
    disjoint: int

    def to_dict(self) -> dict[str, Any]:
        return {"zeros": list(self.representatives), "k": self.k, "r": self.r, "r_exact": self.r_exact,
                "d_lower": self.d_lower, "certified_r": list(self.certified_sizes), "disjoint": self.disjoint}

    def rank_key(self, n: int) -> tuple:
        r = n if self.r is None else self.r
        return (-self.k, r, -self.d_lower, self.representatives)


def _certified(n: int, Z: frozenset[int]) -> list[int]:
    """All s > 1 dividing n such that some class mod s lies in Z."""
    out = []
    for s in divisors(n):
        if s < 2:
            continue
        if any(all(x in Z for x in range(c, n, s)) for c in range(s)):
            out.append(s)
    return out


def _max_coprime_family(ss: list[int]) -> int:
    best = 0
    for size in range(1, len(ss) + 1):
        found = any(all(gcd(a, b) == 1 for a, b in itertools.combinations(c, 2))
                    for c in itertools.combinations(ss, size))
        if not found:
            break
        best = size
    return best


def search(n: int, q: int, constraints: Constraints | None = None, limit: int | None = 20,
           max_subsets: int = MAX_SUBSETS, exact_enum: int = EXACT_ENUM) -> list[Candidate]:
    """Ranked defining sets (best first) meeting ``constraints``.

    Ranking: larger k, then smaller r, then larger BCH lower bound, then the
    representatives lexicographically.
    """
    if n < 1 or n > 105:
        raise ValueError("search supports 1 <= n <= 105")
    if q not in (2, 3, 4):
        raise ValueError("search supports q in {2, 3, 4}")
    c = constraints or Constraints()
    F = field_of_order(q)
    cosets = cyclotomic_cosets(n, q)
    if 2 ** len(cosets) > max_subsets:
        raise SearchLimit(f"{2 ** len(cosets)} coset unions exceed the limit {max_subsets}")
    out: list[Candidate] = []
    for mask in range(2 ** len(cosets)):
        chosen = [cosets[i] for i in range(len(cosets)) if mask >> i & 1]
        Z = frozenset(x for cs in chosen for x in cs)
        k = n - len(Z)
        if k < max(c.k_min, 1) or (c.k_max is not None and k > c.k_max):
            continue
        ss = _certified(n, Z)
        disjoint = _max_coprime_family(ss)
        if c.disjoint_min is not None and disjoint < c.disjoint_min:
            continue
        code = CyclicCode(n, F, Z)
        r_cert = min(ss) - 1 if ss else None
        r, exact = r_cert, False
        if min(q**k, q ** (n - k)) <= exact_enum and k < n:
            dd = oracle.dual_distance(code)
            r, exact = (None if dd is None else dd - 1), True
        if c.r_max is not None and (r is None or r > c.r_max):
            continue
        d_low = bch_bound(code).bound
        if c.d_min is not None and d_low < c.d_min:
            continue
        reps = tuple(sorted(cs[0] for cs in chosen))
        out.append(Candidate(reps, k, r, exact, d_low, tuple(s - 1 for s in ss), disjoint))
    out.sort(key=lambda cand: cand.rank_key(n))
    return out if limit is None else out[:limit]


__all__ = ["Candidate", "Constraints", "SearchLimit", "search"]
