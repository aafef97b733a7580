"""Upper bounds on the dimension/size of codes with locality.

All arithmetic is exact.  ``k_upper`` only uses closed-form bounds
(Singleton, Hamming, Griesmer, Plotkin), so shortening results are valid but
can be weaker than tables of best known codes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any

from . import simplex


class BoundError(ValueError):
    pass


def singleton_like(n: int, k: int, r: int) -> int:
    """d <= n - k - ceil(k/r) + 2."""
    if not (1 <= r <= k <= n):
        raise BoundError(f"need 1 <= r <= k <= n, got n={n}, k={k}, r={r}")
    return n - k - (-(-k // r)) + 2


def singleton_like_k(n: int, d: int, r: int) -> int:
    """Largest k with d <= n - k - ceil(k/r) + 2 (0 if none)."""
    if not (1 <= d <= n) or r < 1:
        raise BoundError(f"need 1 <= d <= n and r >= 1, got n={n}, d={d}, r={r}")
    best = 0
    for k in range(1, n + 1):
        if k >= r and singleton_like(n, k, r) >= d:
            best = k
        elif k < r and n - k - 1 + 2 >= d:  # ceil(k/r) = 1
            best = k
    return best


# ---------------------------------------------------------------------------
# k_q(n, d) estimates

def _hamming(n: int, d: int, q: int) -> int:
    t = (d - 1) // 2
    vol = sum(math.comb(n, i) * (q - 1) ** i for i in range(t + 1))
    k = 0
    while q ** (k + 1) * vol <= q**n:
        k += 1
    return k


def _griesmer(n: int, d: int, q: int) -> int:
    k, total = 0, 0
    while True:
        nxt = total + -(-d // q**k)
        if nxt > n:
            return k
        total = nxt
        k += 1


def _plotkin(n: int, d: int, q: int) -> int | None:
    # M <= qd / (qd - (q-1)n) when qd > (q-1)n
    den = q * d - (q - 1) * n
    if den <= 0:
        return None
    M = (q * d) // den
    k = 0
    while q ** (k + 1) <= M:
        k += 1
    return k


@lru_cache(maxsize=None)
def k_upper_detail(n: int, d: int, q: int) -> tuple[int, str, int, int]:
    """(bound, name of the tightest estimate, n used, d used)."""
    if not (1 <= d <= n):
        raise BoundError(f"need 1 <= d <= n, got n={n}, d={d}")
    if d == 1:
        return n, "trivial", n, d
    if q == 2 and d % 2 == 0:
        # puncturing: k_2(n, d) <= k_2(n-1, d-1)
        return k_upper_detail(n - 1, d - 1, q)
    cands = [(n - d + 1, "singleton"), (_hamming(n, d, q), "hamming"), (_griesmer(n, d, q), "griesmer")]
    p = _plotkin(n, d, q)
    if p is not None:
        cands.append((p, "plotkin"))
    k, name = min(cands, key=lambda c: c[0])
    return k, name, n, d


def k_upper(n: int, d: int, q: int) -> int:
    """Upper bound on the dimension of a linear [n, k, d]_q code."""
    return k_upper_detail(n, d, q)[0]


# ---------------------------------------------------------------------------
# reports

@dataclass
class BoundReport:
    name: str
    n: int
    d: int
    r: int
    q: int
    k_bound: int | None
    size: Fraction | None = None
    witness: dict[str, Any] = field(default_factory=dict)

    @property
    def log2_size(self) -> float | None:
        if self.size is None:
            return None
        return math.log2(self.size.numerator) - math.log2(self.size.denominator)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "name": self.name, "n": self.n, "d": self.d, "r": self.r, "q": self.q,
            "k_bound": self.k_bound, "witness": self.witness,
        }
        if self.size is not None:
            out["size"] = f"{self.size.numerator}/{self.size.denominator}" if self.size.denominator != 1 \
                else str(self.size.numerator)
            out["log2_size"] = round(self.log2_size, 6)
        return out


def shortening_bound(n: int, d: int, r: int, q: int) -> BoundReport:
    """min over t of t*r + k_q(n - t(r+1), d), 1 <= t <= n/(r+1), n - t(r+1) >= d."""
    ts = [t for t in range(1, n // (r + 1) + 1) if n - t * (r + 1) >= d]
    if not ts:
        raise BoundError(f"no t with n - t(r+1) >= d for n={n}, d={d}, r={r}")
    vals = {t: t * r + k_upper(n - t * (r + 1), d, q) for t in ts}
    best = min(vals.values())
    arg = [t for t in ts if vals[t] == best]
    t0 = arg[0]
    k_in, how, n_used, d_used = k_upper_detail(n - t0 * (r + 1), d, q)
    return BoundReport("shortening", n, d, r, q, best, None, {
        "t": t0, "minimizers": arg, "k_q": k_in, "k_q_estimate": how,
        "k_q_args": [n - t0 * (r + 1), d], "k_q_evaluated_at": [n_used, d_used],
        "values": {str(t): v for t, v in vals.items()},
    })


# ---------------------------------------------------------------------------
# Krawtchouk polynomials and the LP bound

@lru_cache(maxsize=None)
def krawtchouk(q: int, n: int, k: int, i: int) -> int:
    """K_k(i) = sum_j (-1)^j (q-1)^(k-j) C(i, j) C(n-i, k-j)."""
    if not (0 <= k <= n and 0 <= i <= n):
        raise BoundError("need 0 <= k, i <= n")
    return sum((-1) ** j * (q - 1) ** (k - j) * math.comb(i, j) * math.comb(n - i, k - j)
               for j in range(k + 1))


def lp_program(n: int, d: int, r: int, q: int, order: list[int] | None = None,
               zero_through: int | None = None) -> tuple[simplex.RationalLP, list[int]]:
    """The LP over variables a_d..a_n (in ``order`` if given).

    Dual weights 1..``zero_through`` are forced to vanish (equalities); the
    remaining dual weights only need to be nonnegative.  ``zero_through``
    defaults to r, i.e. dual distance exactly r+1.
    """
    idx = list(range(d, n + 1)) if order is None else list(order)
    if sorted(idx) != list(range(d, n + 1)):
        raise BoundError("order must be a permutation of d..n")
    zt = r if zero_through is None else zero_through
    lp = simplex.RationalLP([Fraction(1)] * len(idx))
    for k in range(1, n + 1):
        coeffs = [krawtchouk(q, n, k, i) for i in idx]
        rhs = -math.comb(n, k) * (q - 1) ** k
        lp.add(coeffs, "=" if k <= zt else ">=", rhs)
    return lp, idx


def lp_bound(n: int, d: int, r: int, q: int, order: list[int] | None = None,
             zero_through: int | None = None) -> BoundReport:
    """Delsarte bound on the size of a cyclic code with distance d and locality r."""
    if not (1 <= d <= n) or not (1 <= r + 1 <= n):
        raise BoundError(f"need d <= n and r+1 <= n, got n={n}, d={d}, r={r}")
    lp, idx = lp_program(n, d, r, q, order, zero_through)
    res = simplex.solve(lp)
    zt = r if zero_through is None else zero_through
    if res.status != simplex.OPTIMAL:
        return BoundReport("lp", n, d, r, q, None, None, {"status": res.status, "zero_through": zt})
    size = 1 + res.value
    # largest k with q^k <= size
    k = 0
    while Fraction(q ** (k + 1)) <= size:
        k += 1
    a = {str(i): f"{v.numerator}/{v.denominator}" if v.denominator != 1 else str(v.numerator)
         for i, v in zip(idx, res.x) if v}
    rep = BoundReport("lp", n, d, r, q, k, size, {
        "status": res.status, "pivots": res.pivots, "zero_through": zt, "a": dict(sorted(a.items(), key=lambda kv: int(kv[0]))),
    })
    return rep


def all_bounds(n: int, d: int, r: int, q: int, which: str = "all") -> list[BoundReport]:
    out = []
    if which in ("all", "singleton"):
        out.append(BoundReport("singleton_like", n, d, r, q, singleton_like_k(n, d, r)))
    if which in ("all", "sh"):
        try:
            out.append(shortening_bound(n, d, r, q))
        except BoundError as exc:
            out.append(BoundReport("shortening", n, d, r, q, None, None, {"error": str(exc)}))
    if which in ("all", "lp"):
        out.append(lp_bound(n, d, r, q))
    return out


__all__ = [
    "BoundError",
    "BoundReport",
    "all_bounds",
    "k_upper",
    "k_upper_detail",
    "krawtchouk",
    "lp_bound",
    "lp_program",
    "shortening_bound",
    "singleton_like",
    "singleton_like_k",
]
