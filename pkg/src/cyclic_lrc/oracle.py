"""Brute-force ground truth for small linear codes.

Everything here enumerates codewords exhaustively, so results are exact but
limited by ``max_enum`` (number of codewords walked).  When only one of a
code and its dual is small, the other side's weight distribution comes from
the MacWilliams transform in exact integer arithmetic.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field as dc_field
from fractions import Fraction
from typing import Any

import numpy as np

from . import _kernels, linalg
from .bounds import krawtchouk
from .cyclic_code import CyclicCode, LinearCodeMatrix
from .finite_field import FieldTable

DEFAULT_MAX_ENUM = 2**28
COLLECT_CAP = 1 << 20


class EnumerationCeiling(RuntimeError):
    """The requested enumeration is larger than the configured ceiling."""


# ---------------------------------------------------------------------------
# matrix plumbing

def _full_rank(M: np.ndarray, F: FieldTable) -> np.ndarray:
    if M.size == 0:
        return M.reshape(0, M.shape[1] if M.ndim == 2 else 0)
    return linalg.rref(M, F)[0]


def generator_of(code) -> tuple[np.ndarray, FieldTable]:
    """Full-rank generator matrix and field of a code-like object."""
    if isinstance(code, CyclicCode):
        return code.generator_matrix().matrix, code.field
    if isinstance(code, LinearCodeMatrix):
        if code.role == "parity-check":
            return linalg.nullspace(code.matrix, code.field, code.n), code.field
        return _full_rank(code.matrix, code.field), code.field
    if hasattr(code, "generator_matrix") and hasattr(code, "field"):
        return _full_rank(np.asarray(code.generator_matrix()), code.field), code.field
    M, F = code
    return _full_rank(np.asarray(M, dtype=np.int64), F), F


def dual_generator_of(code) -> tuple[np.ndarray, FieldTable]:
    if isinstance(code, CyclicCode):
        return code.parity_check_matrix().matrix, code.field
    if isinstance(code, LinearCodeMatrix) and code.role == "parity-check":
        return _full_rank(code.matrix, code.field), code.field
    G, F = generator_of(code)
    n = G.shape[1]
    if G.shape[0] == 0:
        return np.eye(n, dtype=np.int64), F
    return linalg.nullspace(G, F), F


# ---------------------------------------------------------------------------
# enumeration

@dataclass
class Enumeration:
    n: int
    q: int
    k: int
    histogram: list[int]
    best: list[int]  # least weight of a nonzero word through each coordinate (n+1: none)
    best_count: list[int]
    cover: list[int]  # words of weight <= collect_weight through each coordinate
    supports: list[int]  # bitmasks of collected words, in enumeration order
    collect_weight: int

    @property
    def size(self) -> int:
        return self.q**self.k


def _segments(total: int, workers: int) -> list[tuple[int, int]]:
    workers = max(1, min(workers, total))
    step = -(-total // workers)
    return [(a, min(a + step, total)) for a in range(0, total, step)]


def _tables(F: FieldTable) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    els = F.elements()
    A, B = np.meshgrid(els, els, indexing="ij")
    return F.add_v(A, B), F.sub_v(A, B), F.mul_v(A, B)


def enumerate_code(
    G: np.ndarray,
    F: FieldTable,
    *,
    track: bool = False,
    collect_weight: int = -1,
    cap: int = COLLECT_CAP,
    max_enum: int = DEFAULT_MAX_ENUM,
    threads: int = 1,
) -> Enumeration:
    """Walk every codeword of the row space of the full-rank ``G``."""
    G = np.asarray(G, dtype=np.int64)
    k, n = G.shape if G.ndim == 2 and G.size else (0, G.shape[-1] if G.ndim == 2 else 0)
    total = F.q**k
    if total > max_enum:
        raise EnumerationCeiling(f"{F.q}^{k} = {total} codewords exceed the ceiling {max_enum}")
    if n > 128:
        raise ValueError("enumeration supports n <= 128")
    if F.q > 256:
        raise ValueError("enumeration supports q <= 256")
    if k == 0:
        hist = [0] * (n + 1)
        hist[0] = 1
        return Enumeration(n, F.q, 0, hist, [n + 1] * n, [0] * n, [0] * n, [], collect_weight)
    cap_seg = max(cap, 0)
    segs = _segments(total, threads)
    if F.q == 2 and n <= 64:
        rows = np.zeros(k, dtype=np.uint64)
        for t in range(k):
            rows[t] = np.uint64(sum(1 << j for j in range(n) if G[t, j]))

        def run(seg):
            return _kernels.enumerate_binary(rows, n, seg[0], seg[1], track, collect_weight, cap_seg)
    else:
        addt, subt, mult = _tables(F)
        rowmult = np.ascontiguousarray(mult[:, G].transpose(1, 0, 2))  # [t, c, j]

        def run(seg):
            return _kernels.enumerate_qary(rowmult, addt, subt, n, F.q, seg[0], seg[1], track,
                                           collect_weight, cap_seg)

    if len(segs) == 1:
        parts = [run(segs[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(segs)) as ex:
            parts = list(ex.map(run, segs))

    hist = np.zeros(n + 1, dtype=np.int64)
    best = np.full(n, n + 1, dtype=np.int64)
    bestcnt = np.zeros(n, dtype=np.int64)
    cover = np.zeros(n, dtype=np.int64)
    supports: list[int] = []
    for h, b, bc, cv, coll, ncoll, overflow in parts:
        if overflow:
            raise EnumerationCeiling(f"more than {cap} words of weight <= {collect_weight}")
        hist += h
        cover += cv
        lower = b < best
        same = b == best
        bestcnt = np.where(lower, bc, np.where(same, bestcnt + bc, bestcnt))
        best = np.minimum(best, b)
        if coll.ndim == 1:
            supports.extend(int(x) for x in coll[:ncoll])
        else:
            supports.extend(int(lo) | (int(hi) << 64) for lo, hi in coll[:ncoll])
    return Enumeration(n, F.q, k, [int(x) for x in hist], [int(x) for x in best],
                       [int(x) for x in bestcnt], [int(x) for x in cover], supports, collect_weight)


def naive_weight_distribution(G: np.ndarray, F: FieldTable) -> dict[int, int]:
    """Re-encode every message (slow; for cross-checks on tiny codes)."""
    G = np.asarray(G, dtype=np.int64)
    k, n = G.shape
    out: dict[int, int] = {}
    for idx in range(F.q**k):
        msg = [(idx // F.q**t) % F.q for t in range(k)]
        w = np.zeros(n, dtype=np.int64)
        for t, a in enumerate(msg):
            if a:
                w = F.add_v(w, F.mul_v(a, G[t]))
        wt = int(np.count_nonzero(w))
        out[wt] = out.get(wt, 0) + 1
    return dict(sorted(out.items()))


def _hist_dict(hist: list[int]) -> dict[int, int]:
    return {w: c for w, c in enumerate(hist) if c}


def macwilliams(dist: dict[int, int], n: int, q: int) -> dict[int, int]:
    """Weight distribution of the dual code, exactly."""
    size = sum(dist.values())
    out: dict[int, int] = {}
    for j in range(n + 1):
        s = sum(c * krawtchouk(q, n, j, i) for i, c in dist.items())
        val = Fraction(s, size)
        if val.denominator != 1 or val < 0:
            raise ValueError("input is not the weight distribution of a linear code")
        if val:
            out[j] = int(val)
    return out


def weight_distribution(code, max_enum: int = DEFAULT_MAX_ENUM, threads: int = 1) -> dict[int, int]:
    """Exact histogram {weight: count} by Gray-code enumeration of the code itself."""
    G, F = generator_of(code)
    return _hist_dict(enumerate_code(G, F, max_enum=max_enum, threads=threads).histogram)


def _distribution_either_side(code, dual: bool, max_enum: int, threads: int) -> dict[int, int]:
    G, F = generator_of(code)
    n = G.shape[1]
    k = G.shape[0]
    own, other = (n - k, k) if dual else (k, n - k)
    if F.q**own <= max_enum:
        M = dual_generator_of(code)[0] if dual else G
        return _hist_dict(enumerate_code(M, F, max_enum=max_enum, threads=threads).histogram)
    if F.q**other <= max_enum:
        M = G if dual else dual_generator_of(code)[0]
        d = _hist_dict(enumerate_code(M, F, max_enum=max_enum, threads=threads).histogram)
        return macwilliams(d, n, F.q)
    raise EnumerationCeiling(f"both q^k and q^(n-k) exceed the ceiling {max_enum}")


def _min_nonzero(dist: dict[int, int]) -> int | None:
    ws = [w for w in dist if w > 0]
    return min(ws) if ws else None


def min_distance(code, max_enum: int = DEFAULT_MAX_ENUM, threads: int = 1) -> int | None:
    """Minimum distance (None for the zero code)."""
    return _min_nonzero(_distribution_either_side(code, False, max_enum, threads))


def dual_distance(code, max_enum: int = DEFAULT_MAX_ENUM, threads: int = 1) -> int | None:
    """Minimum distance of the dual (None when the dual is the zero code)."""
    return _min_nonzero(_distribution_either_side(code, True, max_enum, threads))


# ---------------------------------------------------------------------------
# locality

@dataclass
class LocalityResult:
    r: int | None  # None when some coordinate has no recovery set at all
    per_coordinate: list[int | None]
    min_weight_counts: list[int]  # dual words of least weight through each coordinate
    d_dual: int | None


def exact_locality(code, max_enum: int = DEFAULT_MAX_ENUM, threads: int = 1) -> LocalityResult:
    """r_i = min{wt(c) - 1 : c in dual, c_i != 0}; r = max_i r_i."""
    H, F = dual_generator_of(code)
    e = enumerate_code(H, F, track=True, max_enum=max_enum, threads=threads)
    n = e.n
    per = [b - 1 if b <= n else None for b in e.best]
    d_dual = _min_nonzero(_hist_dict(e.histogram))
    r = None if any(x is None for x in per) or not per else max(per)
    if isinstance(code, CyclicCode) and d_dual is not None:
        if any(x != d_dual - 1 for x in per):  # pragma: no cover - would be a kernel bug
            raise AssertionError("cyclic code with unequal per-coordinate locality")
    return LocalityResult(r, per, e.best_count, d_dual)


def _mask_to_set(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass
class RecoveryInventory:
    weight_ceiling: int
    words_per_coordinate: list[int]  # dual codewords (not supports) through each coordinate
    supports: list[tuple[int, ...]]  # distinct supports, sorted by (size, lexicographic)

    def sets_for(self, i: int) -> list[tuple[int, ...]]:
        """Recovery sets of coordinate i: supports through i with i removed."""
        out = [tuple(x for x in s if x != i) for s in self.supports if i in s]
        return sorted(out, key=lambda s: (len(s), s))


def recovery_inventory(code, weight_ceiling: int, max_enum: int = DEFAULT_MAX_ENUM,
                       threads: int = 1, cap: int = COLLECT_CAP) -> RecoveryInventory:
    H, F = dual_generator_of(code)
    e = enumerate_code(H, F, collect_weight=weight_ceiling, cap=cap, max_enum=max_enum, threads=threads)
    sups = sorted({_mask_to_set(m) for m in e.supports}, key=lambda s: (len(s), s))
    return RecoveryInventory(weight_ceiling, e.cover, sups)


def recovery_sets(code, i: int, weight_ceiling: int, max_enum: int = DEFAULT_MAX_ENUM,
                  threads: int = 1) -> list[tuple[int, ...]]:
    """Distinct sets S with S | {i} the support of a dual word of weight <= ceiling."""
    return recovery_inventory(code, weight_ceiling, max_enum, threads).sets_for(i)


def _maximal_disjoint(sets: list[frozenset[int]]) -> list[list[int]]:
    """All maximal families of pairwise disjoint sets (indices), by backtracking."""
    m = len(sets)
    compat = [[not (sets[a] & sets[b]) for b in range(m)] for a in range(m)]
    out: list[list[int]] = []

    def extend(chosen: list[int], cand: list[int], excluded: list[int]):
        if not cand and not excluded:
            out.append(list(chosen))
            return
        for v in list(cand):
            extend(chosen + [v], [u for u in cand if compat[v][u]], [u for u in excluded if compat[v][u]])
            cand.remove(v)
            excluded.append(v)

    extend([], list(range(m)), [])
    return out


def disjoint_families(code, i: int, weight_ceiling: int | None = None, max_enum: int = DEFAULT_MAX_ENUM,
                      threads: int = 1, exhaustive_limit: int = 20) -> list[list[tuple[int, ...]]]:
    """Maximal families of pairwise disjoint recovery sets of coordinate i.

    With at most ``exhaustive_limit`` candidate sets every maximal family is
    returned (largest first); otherwise a single greedy family (smallest sets
    first).  ``weight_ceiling`` defaults to the dual distance.
    """
    if weight_ceiling is None:
        weight_ceiling = dual_distance(code, max_enum, threads)
        if weight_ceiling is None:
            return []
    sets = recovery_sets(code, i, weight_ceiling, max_enum, threads)
    fs = [frozenset(s) for s in sets]
    if len(fs) <= exhaustive_limit:
        fams = _maximal_disjoint(fs)
        fams = [sorted(f) for f in fams]
        fams.sort(key=lambda f: (-len(f), [(len(sets[j]), sets[j]) for j in f]))
        return [[sets[j] for j in f] for f in fams]
    fam: list[int] = []
    used: set[int] = set()
    for j, s in enumerate(fs):
        if not (s & used):
            fam.append(j)
            used |= s
    return [[sets[j] for j in fam]]


# ---------------------------------------------------------------------------
# report

@dataclass
class OracleReport:
    n: int
    k: int
    q: int
    d_min: int | None
    weight_distribution: dict[int, int]
    d_dual: int | None
    r_exact: int | None
    per_coordinate_r: list[int | None] | None
    min_weight_counts: list[int] | None
    enumerated_side: str
    enumeration_size: int
    runtime: float = dc_field(default=0.0)

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["weight_distribution"] = {str(w): c for w, c in self.weight_distribution.items()}
        return d


def oracle_report(code, max_enum: int = DEFAULT_MAX_ENUM, threads: int = 1) -> OracleReport:
    """Distance, weight distribution and locality from the cheaper side."""
    t0 = time.perf_counter()
    G, F = generator_of(code)
    k, n = G.shape[0], G.shape[1]
    q = F.q
    if q ** (n - k) <= max_enum:
        H = dual_generator_of(code)[0]
        e = enumerate_code(H, F, track=True, max_enum=max_enum, threads=threads)
        dual_dist = _hist_dict(e.histogram)
        primal = macwilliams(dual_dist, n, q)
        per = [b - 1 if b <= n else None for b in e.best]
        r = None if any(x is None for x in per) or not per else max(per)
        rep = OracleReport(n, k, q, _min_nonzero(primal), primal, _min_nonzero(dual_dist), r, per,
                           e.best_count, "dual", q ** (n - k))
    elif q**k <= max_enum:
        e = enumerate_code(G, F, max_enum=max_enum, threads=threads)
        primal = _hist_dict(e.histogram)
        dual_dist = macwilliams(primal, n, q)
        dd = _min_nonzero(dual_dist)
        # every coordinate of a cyclic code meets a minimum-weight dual word
        r = dd - 1 if (isinstance(code, CyclicCode) and dd is not None) else None
        rep = OracleReport(n, k, q, _min_nonzero(primal), primal, dd, r, None, None, "primal", q**k)
    else:
        raise EnumerationCeiling(f"both {q}^{k} and {q}^{n - k} exceed the ceiling {max_enum}")
    rep.runtime = time.perf_counter() - t0
    return rep


# ---------------------------------------------------------------------------
# optional non-authoritative search

def stochastic_low_weight(G: np.ndarray, F: FieldTable, target: int, iterations: int = 2000,
                          seed: int = 0) -> np.ndarray | None:
    """Random information-set search for a nonzero word of weight <= target.

    Returns the first word found (verified to be in the row space) or None.
    A miss proves nothing; a hit is only an upper bound on the distance.
    """
    rng = np.random.default_rng(seed)
    G = _full_rank(np.asarray(G, dtype=np.int64), F)
    k, n = G.shape
    for _ in range(iterations):
        perm = rng.permutation(n)
        R, piv = linalg.rref(G[:, perm], F)
        if len(piv) < k:
            continue
        cands = [R[a] for a in range(k)]
        if F.q == 2:
            cands += [R[a] ^ R[b] for a in range(k) for b in range(a + 1, k)]
        for c in cands:
            w = int(np.count_nonzero(c))
            if 0 < w <= target:
                word = np.zeros(n, dtype=np.int64)
                word[perm] = c
                if linalg.in_row_space(word, G, F):
                    return word
    return None


__all__ = [
    "DEFAULT_MAX_ENUM",
    "EnumerationCeiling",
    "LocalityResult",
    "OracleReport",
    "RecoveryInventory",
    "disjoint_families",
    "dual_distance",
    "enumerate_code",
    "exact_locality",
    "macwilliams",
    "min_distance",
    "naive_weight_distribution",
    "oracle_report",
    "recovery_inventory",
    "recovery_sets",
    "stochastic_low_weight",
    "weight_distribution",
]
