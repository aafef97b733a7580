"""Locality and distance upper bounds for cyclic codes, each with a witness.

Every bound is backed by explicit vectors that are checked against the code
before the bound is returned: dual words for locality, codewords for
distance.  A certificate that fails its check raises
:class:`CertificateError`.

Conventions: ``G_s`` is the subgroup generated by ``alpha^s`` and the coset
``alpha^c G_s`` is the exponent class ``{c + i s mod n}``.  A dual word of
weight w through coordinate i gives a recovery set of size w - 1, so the
locality of a cyclic code is ``d_dual - 1``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import reduce
from math import ceil, gcd
from typing import Any, Iterable

import numpy as np

from . import linalg
from .cyclic_code import CyclicCode, bch_bound, BCHCertificate
from .finite_field import FieldTable, divisors, embedding, multiplicative_order, restriction, trace_v
from .irreducible import averaging_distance_bound

SUBFIELD_SCAN_CEILING = 2**16


class CertificateError(RuntimeError):
    """A witness failed verification or a hypothesis does not hold."""


def _support(w) -> tuple[int, ...]:
    return tuple(int(i) for i in np.flatnonzero(np.asarray(w)))


@dataclass
class LocalityCertificate:
    source: str
    bound_r: int
    witness: np.ndarray  # dual word over the symbol field
    field: FieldTable
    recovery_sets: list[tuple[int, ...]]  # recovery sets of ``coordinate`` (coordinate excluded)
    recovery_words: list[np.ndarray]  # dual words whose supports give ``recovery_sets``
    count_per_symbol: int
    coordinate: int = 0
    extension_witness: np.ndarray | None = None  # dual word over the locator field
    details: dict[str, Any] = dc_field(default_factory=dict)

    @property
    def witness_weight(self) -> int:
        return int(np.count_nonzero(self.witness))

    def to_dict(self) -> dict[str, Any]:
        sup = _support(self.witness)
        return {
            "source": self.source,
            "bound_r": self.bound_r,
            "witness_support": list(sup),
            "witness_values": [int(self.witness[i]) for i in sup],
            "recovery_sets": [list(s) for s in self.recovery_sets],
            "count_per_symbol": self.count_per_symbol,
            "coordinate": self.coordinate,
            "details": _jsonable(self.details),
        }


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return [_jsonable(v) for v in x.tolist()]
    if isinstance(x, (np.integer,)):
        return int(x)
    return x


# ---------------------------------------------------------------------------
# verification gate

def _orthogonal(G: np.ndarray, w: np.ndarray, F: FieldTable) -> bool:
    if G.size == 0:
        return True
    return not np.any(linalg.matmul(G, np.asarray(w, dtype=np.int64)[:, None], F))


def in_dual(code: CyclicCode, w) -> bool:
    """w (over the symbol field) is orthogonal to every codeword."""
    return _orthogonal(code.generator_matrix().matrix, np.asarray(w), code.field)


def in_dual_extension(code: CyclicCode, w) -> bool:
    """w (over the locator field) is orthogonal to every codeword."""
    emb = embedding(code.field, code.locator)
    return _orthogonal(emb[code.generator_matrix().matrix], np.asarray(w), code.locator)


def verify_certificate(code: CyclicCode, cert: LocalityCertificate) -> None:
    if cert.witness.shape != (code.n,):
        raise CertificateError("witness has the wrong length")
    if not np.any(cert.witness):
        raise CertificateError("witness is the zero vector")
    if not in_dual(code, cert.witness):
        raise CertificateError(f"{cert.source}: witness is not in the dual code")
    if cert.witness_weight - 1 > cert.bound_r:
        raise CertificateError(f"{cert.source}: witness weight {cert.witness_weight} exceeds bound_r + 1")
    if cert.extension_witness is not None and not in_dual_extension(code, cert.extension_witness):
        raise CertificateError(f"{cert.source}: locator-field witness is not in the dual code")
    if len(cert.recovery_sets) != len(cert.recovery_words):
        raise CertificateError("recovery sets and words do not match up")
    i = cert.coordinate
    for S, w in zip(cert.recovery_sets, cert.recovery_words):
        if not w[i]:
            raise CertificateError(f"{cert.source}: recovery word misses coordinate {i}")
        if tuple(x for x in _support(w) if x != i) != tuple(S):
            raise CertificateError(f"{cert.source}: recovery set is not the support of its word")
        if len(S) > cert.bound_r:
            raise CertificateError(f"{cert.source}: recovery set larger than bound_r")
        if not in_dual(code, w):
            raise CertificateError(f"{cert.source}: recovery word is not in the dual code")
    if cert.count_per_symbol > len(set(cert.recovery_sets)):
        raise CertificateError(f"{cert.source}: fewer distinct recovery sets than claimed")


# ---------------------------------------------------------------------------
# building blocks

def class_in_zeros(code: CyclicCode, s: int, c: int) -> bool:
    """alpha^c G_s, i.e. {c + i s mod n}, lies in the defining set."""
    return all(x in code.zeros for x in range(c % s, code.n, s))


def group_check_vector(code: CyclicCode, r: int, l: int) -> np.ndarray:
    """Weight-(r+1) vector with ``alpha^{j nu l}`` at position ``j nu`` (nu = n/(r+1)).

    Entries live in the locator field; it is orthogonal to the code when the
    class ``l mod r+1`` lies in the defining set.
    """
    n = code.n
    if n % (r + 1):
        raise CertificateError(f"r+1={r + 1} does not divide n={n}")
    L, a = code.locator, code.alpha
    nu = n // (r + 1)
    v = np.zeros(n, dtype=np.int64)
    for j in range(r + 1):
        v[j * nu] = L.pow(a, j * nu * l)
    return v


def group_partition(n: int, r: int) -> list[tuple[int, ...]]:
    """Supports of the nu cyclic shifts of the group check vector."""
    nu = n // (r + 1)
    return [tuple(u + j * nu for j in range(r + 1)) for u in range(nu)]


def _subfield_degree(L: FieldTable, F: FieldTable, vec: np.ndarray) -> int:
    """Smallest d (over F) with every entry of vec in GF(|F|^d) inside L."""
    M = L.m // F.m
    for d in divisors(M):
        if all(L.in_subfield(int(x), F.m * d) for x in set(vec.tolist())):
            return d
    return M  # pragma: no cover


def trace_words(code: CyclicCode, vec: np.ndarray) -> list[tuple[int, np.ndarray]]:
    """Distinct nonzero words tr(delta * vec) over the symbol field.

    ``delta`` ranges over the smallest subfield holding the entries of ``vec``;
    by transitivity of the trace this gives the same set of words as ``delta``
    over the whole locator field.  Returned as (delta, word) pairs.
    """
    L, F = code.locator, code.field
    if L is F:
        ds = [int(x) for x in F.elements()[1:]]
        return [(d, F.mul_v(d, vec)) for d in ds]
    d = _subfield_degree(L, F, vec)
    deltas = L.subfield_elements(F.m * d)
    if len(deltas) > SUBFIELD_SCAN_CEILING:
        # a basis suffices for a spanning set, not for minimum weight
        deltas = np.array([0] + [L.pow(L.generator, ((L.q - 1) // (F.q**d - 1)) * e) for e in range(d)])
    back = restriction(F, L)
    seen: dict[bytes, tuple[int, np.ndarray]] = {}
    for delta in deltas.tolist():
        if not delta:
            continue
        t = trace_v(L, F.m, L.mul_v(delta, vec), F.m * d)
        w = np.array([back[int(x)] for x in t], dtype=np.int64)
        if np.any(w):
            seen.setdefault(w.tobytes(), (int(delta), w))
    return list(seen.values())


def _through(words: Iterable[tuple[int, np.ndarray]], i: int) -> tuple[list[tuple[int, ...]], list[np.ndarray], list[int]]:
    """Distinct supports through coordinate i (lightest first) with a word and delta for each."""
    best: dict[tuple[int, ...], tuple[int, np.ndarray]] = {}
    for delta, w in words:
        if w[i]:
            S = tuple(x for x in _support(w) if x != i)
            best.setdefault(S, (delta, w))
    keys = sorted(best, key=lambda s: (len(s), s))
    return keys, [best[k][1] for k in keys], [best[k][0] for k in keys]


def _finish(code: CyclicCode, cert: LocalityCertificate) -> LocalityCertificate:
    verify_certificate(code, cert)
    return cert


def _class_subcode(code: CyclicCode, s: int, c: int):
    """group check vector for the class c mod s and its trace words."""
    v = group_check_vector(code, s - 1, c)
    if not in_dual_extension(code, v):
        raise CertificateError("group check vector is not orthogonal to the code")
    return v, trace_words(code, v)


# ---------------------------------------------------------------------------
# locality certificates

def coset_locality(code: CyclicCode, r: int) -> LocalityCertificate | None:
    """Locality <= r when a class ``l mod r+1`` lies in the defining set."""
    n = code.n
    if r < 0 or n % (r + 1):
        return None
    ls = [l for l in range(r + 1) if class_in_zeros(code, r + 1, l)]
    if not ls:
        return None
    l = ls[0]
    v, words = _class_subcode(code, r + 1, l)
    sets, rw, deltas = _through(words, 0)
    witness = rw[0]
    return _finish(code, LocalityCertificate(
        "coset", r, witness, code.field, sets, rw, len(sets), 0, v,
        {"l": l, "s": r + 1, "classes": ls, "partition": group_partition(n, r)},
    ))


def binary_coset_locality(code: CyclicCode, z: int) -> LocalityCertificate:
    """Binary code containing alpha^c G_{2^z-1}, gcd(c, 2^z-1) = 1: simplex subcode of the dual."""
    if code.q != 2:
        raise CertificateError("binary_coset_locality needs a binary code")
    s = 2**z - 1
    if z < 1 or code.n % s:
        raise CertificateError(f"2^z-1={s} does not divide n={code.n}")
    cs = [c for c in range(s) if gcd(c, s) == 1 and class_in_zeros(code, s, c)]
    if not cs:
        raise CertificateError(f"no coset alpha^c G_{s} with gcd(c,{s})=1 lies in the defining set")
    c = cs[0]
    v, words = _class_subcode(code, s, c)
    sets, rw, deltas = _through(words, 0)
    bound = 2 ** (z - 1) - 1
    cert = LocalityCertificate(
        "binary-coset", bound, rw[0], code.field, sets, rw, 2 ** (z - 1), 0, v,
        {"z": z, "s": s, "c": c, "classes": cs, "gammas": deltas,
         "subcode_weights": sorted({int(np.count_nonzero(w)) for _, w in words})},
    )
    return _finish(code, cert)


def qary_coset_bound(q: int, s: int, c: int) -> tuple[int, int, int]:
    """(bound_r, t, m): r < s(1 - (q^(m-1)-1)/(q^m-1)) with t = ord(beta^c), m = ord_t(q)."""
    t = s // gcd(s, c % s)
    m = multiplicative_order(q, t)
    X = averaging_distance_bound(q, s, m)
    return ceil(X) - 1, t, m


def qary_coset_locality(code: CyclicCode, s: int) -> LocalityCertificate:
    """Averaging bound on the irreducible dual subcode attached to alpha^c G_s."""
    if code.n % s:
        raise CertificateError(f"s={s} does not divide n={code.n}")
    cs = [c for c in range(s) if class_in_zeros(code, s, c)]
    if not cs:
        raise CertificateError(f"no coset of G_{s} lies in the defining set")
    scored = sorted(cs, key=lambda c: (qary_coset_bound(code.q, s, c)[0], c))
    c = scored[0]
    bound, t, m = qary_coset_bound(code.q, s, c)
    v, words = _class_subcode(code, s, c)
    sets, rw, deltas = _through(words, 0)
    lightest = min(int(np.count_nonzero(w)) for _, w in words)
    witness = next(w for w in rw if np.count_nonzero(w) == lightest) if any(
        np.count_nonzero(w) == lightest for w in rw) else rw[0]
    good = [S for S in sets if len(S) <= bound]
    gw = [w for S, w in zip(sets, rw) if len(S) <= bound]
    return _finish(code, LocalityCertificate(
        "qary-coset", bound, witness, code.field, good, gw, len(good), 0, v,
        {"s": s, "c": c, "t": t, "m": m, "classes": cs,
         "averaging_bound": str(averaging_distance_bound(code.q, s, m)),
         "subcode_min_weight": lightest},
    ))


def ternary_two_weight_locality(code: CyclicCode, t: int) -> LocalityCertificate:
    """Two-weight irreducible dual subcode for ternary codes containing alpha^c G_t."""
    if code.q != 3:
        raise CertificateError("ternary_two_weight_locality needs a ternary code")
    if code.n % t:
        raise CertificateError(f"t={t} does not divide n={code.n}")
    m = multiplicative_order(3, t)
    if m % 2:
        raise CertificateError(f"ord_t(3)={m} is odd")
    N = (3**m - 1) // t
    if gcd((3**m - 1) // 2, N) != 2:
        raise CertificateError(f"gcd((3^m-1)/2, N) = {gcd((3**m - 1) // 2, N)} != 2")
    cs = [c for c in range(t) if gcd(c, t) == 1 and class_in_zeros(code, t, c)]
    if not cs:
        raise CertificateError(f"no coset alpha^c G_{t} with gcd(c,{t})=1 lies in the defining set")
    c = cs[0]
    W = 2 * (3**m - 3 ** (m // 2)) // (3 * N)
    predicted = 3 ** (m - 1) - 3 ** (m // 2 - 1)
    v, words = _class_subcode(code, t, c)
    light = [(d, w) for d, w in words if np.count_nonzero(w) <= W]
    words_through = sum(1 for _, w in light if w[0])
    sets, rw, deltas = _through(light, 0)
    return _finish(code, LocalityCertificate(
        "ternary-two-weight", W - 1, rw[0], code.field, sets, rw, len(sets), 0, v,
        {"t": t, "c": c, "m": m, "N": N, "weight": W,
         "predicted_words_per_symbol": predicted, "words_per_symbol": words_through,
         "distinct_sets_per_symbol": len(sets)},
    ))


# ---------------------------------------------------------------------------
# several cosets

def odd_multiplicity_set(n: int, ps: list[int], ls: list[int]) -> frozenset[int]:
    """Exponents lying in an odd number of the classes {l_k + j p_k}."""
    out = set()
    for i in range(n):
        if sum(1 for p, l in zip(ps, ls) if (i - l) % p == 0) % 2:
            out.add(i)
    return frozenset(out)


def symdiff_weight_formula(p1: int, l1: int, p2: int, l2: int) -> int:
    """Exact weight of f1 + f2 in characteristic 2.

    Exponents shared by f1 and f2 are the gcd(p1, p2) multiples of
    n/gcd(p1, p2); exactly gcd(p1, p2, l1 - l2) of them cancel.
    """
    g = gcd(p1, p2)
    return p1 + p2 - g - gcd(g, l1 - l2)


def symdiff_inclusion_exclusion(ps: list[int], ls: list[int]) -> int:
    """Inclusion-exclusion count p1+p2-2g12 (or the three-class analogue)."""
    if len(ps) == 2:
        return ps[0] + ps[1] - 2 * gcd(ps[0], ps[1], ls[0] - ls[1])
    (p1, p2, p3), (l1, l2, l3) = ps, ls
    return (p1 + p2 + p3 - 2 * gcd(p1, p2, l1 - l2) - 2 * gcd(p1, p3, l1 - l3) - 2 * gcd(p2, p3, l2 - l3)
            + 4 * reduce(gcd, [p1, p2, p3, l1 - l2, l2 - l3]))


def symdiff_polynomial(L: FieldTable, alpha: int, n: int, ps: list[int], ls: list[int]) -> np.ndarray:
    """Coefficients of f = sum_k c_k sum_j (alpha^{l_k} x)^{j n/p_k} over L.

    c_k = 1 in characteristic 2; with two classes in odd characteristic
    c_1 = 1/p_1 and c_2 = -1/p_2, so f vanishes exactly off the symmetric
    difference.
    """
    f = np.zeros(n, dtype=np.int64)
    if L.p == 2:
        cs = [1] * len(ps)
    else:
        if len(ps) != 2:
            raise CertificateError("three classes are only supported in characteristic 2")
        cs = [L.inv(ps[0] % L.p), L.neg(L.inv(ps[1] % L.p))]
    for p, l, ck in zip(ps, ls, cs):
        if n % p:
            raise CertificateError(f"{p} does not divide n={n}")
        step = n // p
        for j in range(p):
            e = j * step
            f[e] = L.add(int(f[e]), L.mul(ck, L.pow(alpha, (l * e) % n)))
    return f


@dataclass
class SymDiffCertificate:
    divisors: list[int]
    shifts: list[int]
    polynomial: np.ndarray  # over the locator field
    weight: int
    formula_weight: int | None  # exact closed form (two classes, characteristic 2)
    inclusion_exclusion_bound: int
    bound_r: int
    locality: LocalityCertificate

    def to_dict(self) -> dict[str, Any]:
        sup = _support(self.polynomial)
        return {
            "divisors": self.divisors, "shifts": self.shifts, "weight": self.weight,
            "formula_weight": self.formula_weight, "inclusion_exclusion_bound": self.inclusion_exclusion_bound,
            "bound_r": self.bound_r, "polynomial_support": list(sup),
            "polynomial_values": [int(self.polynomial[i]) for i in sup],
            "certificate": self.locality.to_dict(),
        }


def _shift_words_through(words: list[tuple[int, np.ndarray]], i: int, limit: int = 64):
    """Cyclic shifts of the given words that are nonzero at coordinate i."""
    out = []
    for delta, w in words:
        for e in _support(w):
            out.append((delta, np.roll(w, i - e)))
            if len(out) >= limit:
                return out
    return out


def symdiff_dual_vector(code: CyclicCode, p1: int, l1: int, p2: int, l2: int,
                        p3: int | None = None, l3: int | None = None) -> SymDiffCertificate:
    """Dual word from two (or three) classes whose odd-multiplicity union lies in Z."""
    n = code.n
    ps, ls = [p1, p2], [l1, l2]
    if p3 is not None:
        ps.append(p3)
        ls.append(0 if l3 is None else l3)
    for p in ps:
        if p < 1 or n % p:
            raise CertificateError(f"{p} does not divide n={n}")
    if len(ps) == 3 and code.field.p != 2:
        raise CertificateError("three classes are only supported in characteristic 2")
    odd = odd_multiplicity_set(n, ps, ls)
    if not odd <= code.zeros:
        missing = sorted(odd - code.zeros)[:8]
        raise CertificateError(f"odd-multiplicity set not contained in Z (e.g. {missing})")
    f = symdiff_polynomial(code.locator, code.alpha, n, ps, ls)
    if not np.any(f):
        raise CertificateError("degenerate: the polynomial cancels completely")
    if not in_dual_extension(code, f):
        raise CertificateError("symmetric-difference polynomial is not orthogonal to the code")
    weight = int(np.count_nonzero(f))
    formula = symdiff_weight_formula(p1, l1, p2, l2) if (len(ps) == 2 and code.field.p == 2) else None
    if formula is not None and formula != weight:
        raise CertificateError(f"weight {weight} disagrees with the closed form {formula}")
    words = trace_words(code, f)
    lightest = min(words, key=lambda dw: (int(np.count_nonzero(dw[1])), dw[0]))[1]
    sets, rw, _ = _through(_shift_words_through(words, 0), 0)
    cert = _finish(code, LocalityCertificate(
        "symdiff", weight - 1, lightest, code.field, sets, rw, len(sets), 0, f,
        {"divisors": ps, "shifts": ls, "weight": weight},
    ))
    return SymDiffCertificate(ps, ls, f, weight, formula, symdiff_inclusion_exclusion(ps, ls), weight - 1, cert)


def recovery_intersection(cert: LocalityCertificate, index_set: Iterable[int]) -> dict[str, int]:
    """Bound 2^(z - rank(u_i)) and exact size of the intersection of supports.

    ``index_set`` indexes ``cert.recovery_sets``; the supports include the
    designated coordinate.  ``u_i`` are the multipliers of the simplex words.
    """
    I = sorted(set(index_set))
    if not I:
        raise ValueError("index set is empty")
    if cert.source != "binary-coset":
        raise CertificateError("intersection bounds need a binary-coset certificate")
    z = cert.details["z"]
    gammas = [cert.details["gammas"][i] for i in I]
    bits = max(int(g).bit_length() for g in gammas)
    U = np.array([[(g >> b) & 1 for b in range(bits)] for g in gammas], dtype=np.int64)
    from .finite_field import build_field

    rank = linalg.rank(U, build_field(2, 1))
    sups = [set(cert.recovery_sets[i]) | {cert.coordinate} for i in I]
    exact = len(set.intersection(*sups))
    return {"bound": 2 ** (z - rank), "exact": exact, "rank": rank,
            "exact_without_coordinate": exact - 1}


# ---------------------------------------------------------------------------
# distance upper bounds

def in_code_extension(code: CyclicCode, w) -> bool:
    """w (over the locator field) is a codeword of the extension code."""
    H = code.parity_check_matrix().matrix
    emb = embedding(code.field, code.locator)
    return _orthogonal(emb[H], np.asarray(w), code.locator)


@dataclass
class DistanceBound:
    bound: int
    kind: str
    codeword: np.ndarray  # over the symbol field, verified in the code
    details: dict[str, Any]

    def to_dict(self) -> dict[str, Any]:
        sup = _support(self.codeword)
        return {"bound": self.bound, "kind": self.kind, "codeword_support": list(sup),
                "codeword_values": [int(self.codeword[i]) for i in sup], "details": _jsonable(self.details)}


@dataclass
class DistanceReport:
    lower: BCHCertificate
    upper: list[DistanceBound]
    exact: int | None

    @property
    def best_upper(self) -> int | None:
        return self.upper[0].bound if self.upper else None

    def to_dict(self) -> dict[str, Any]:
        return {"bch_lower": {"bound": self.lower.bound, "start": self.lower.start, "stride": self.lower.stride,
                              "length": self.lower.length},
                "upper": [u.to_dict() for u in self.upper], "exact": self.exact}


def _lightest_codeword(code: CyclicCode, vec: np.ndarray) -> np.ndarray:
    words = trace_words(code, vec)
    w = min(words, key=lambda dw: (int(np.count_nonzero(dw[1])), dw[0]))[1]
    if not code.contains(w):
        raise CertificateError("distance witness is not a codeword")
    return w


def coset_avoidance_bounds(code: CyclicCode) -> list[DistanceBound]:
    """d <= m whenever some class {i + j m} misses the defining set."""
    n, L, a = code.n, code.locator, code.alpha
    out = []
    for m in divisors(n):
        for i in range(m):
            if any(x in code.zeros for x in range(i, n, m)):
                continue
            step = n // m
            c = np.zeros(n, dtype=np.int64)
            for u in range(m):
                c[u * step] = L.pow(a, (-i * u * step) % n)
            if not in_code_extension(code, c):
                raise CertificateError("coset-avoidance word is not in the code")
            w = _lightest_codeword(code, c)
            out.append(DistanceBound(int(np.count_nonzero(w)), "coset-avoidance", w, {"m": m, "i": i}))
            break
    return out


def _best_symdiff(code: CyclicCode, ps: list[int]) -> tuple[int, list[int], np.ndarray] | None:
    """Lightest polynomial over all shift choices whose odd set misses Z."""
    n = code.n
    best = None
    ranges = [range(p) for p in ps]
    for ls in itertools.product(*ranges):
        odd = odd_multiplicity_set(n, ps, list(ls))
        if odd & code.zeros:
            continue
        f = symdiff_polynomial(code.locator, code.alpha, n, ps, [(-l) % n for l in ls])
        if not np.any(f):
            continue
        wt = int(np.count_nonzero(f))
        if best is None or wt < best[0]:
            best = (wt, list(ls), f)
    return best


def symdiff_distance_bounds(code: CyclicCode, triples: bool = True,
                            max_shift_combos: int = 20000) -> list[DistanceBound]:
    """d <= weight(f) when the odd-multiplicity set of two (or three) classes misses Z.

    Three classes are tried in characteristic 2 only, and only for divisor
    triples with at most ``max_shift_combos`` shift choices.
    """
    n = code.n
    divs = [d for d in divisors(n) if 1 < d < n]
    groups: list[list[int]] = [list(c) for c in itertools.combinations(divs, 2)]
    if triples and code.field.p == 2:
        groups += [list(c) for c in itertools.combinations(divs, 3)
                   if c[0] * c[1] * c[2] <= max_shift_combos]
    out = []
    for ps in groups:
        best = _best_symdiff(code, ps)
        if best is None:
            continue
        wt, ls, f = best
        if not in_code_extension(code, f):
            raise CertificateError("symmetric-difference word is not in the code")
        w = _lightest_codeword(code, f)
        out.append(DistanceBound(int(np.count_nonzero(w)), "symdiff", w,
                                 {"divisors": ps, "shifts": ls, "polynomial_weight": wt,
                                  "inclusion_exclusion_bound": symdiff_inclusion_exclusion(ps, ls)}))
    return out


def distance_upper_bound(code: CyclicCode) -> DistanceReport:
    """All coset/symdiff upper bounds (sorted), the BCH lower bound, and d if they meet."""
    ups = coset_avoidance_bounds(code) + symdiff_distance_bounds(code)
    ups.sort(key=lambda u: (u.bound, u.kind, str(u.details)))
    low = bch_bound(code)
    exact = ups[0].bound if ups and ups[0].bound == low.bound else None
    return DistanceReport(low, ups, exact)


def symdiff_locality_search(code: CyclicCode, triples: bool = True,
                            max_shift_combos: int = 20000) -> list[SymDiffCertificate]:
    """Lightest symmetric-difference certificate per divisor pair (and triple in char 2)."""
    n = code.n
    divs = [d for d in divisors(n) if 1 < d < n]
    groups: list[list[int]] = [list(c) for c in itertools.combinations(divs, 2)]
    if triples and code.field.p == 2:
        groups += [list(c) for c in itertools.combinations(divs, 3)
                   if c[0] * c[1] * c[2] <= max_shift_combos]
    out = []
    for ps in groups:
        best = None
        for ls in itertools.product(*[range(p) for p in ps]):
            odd = odd_multiplicity_set(n, ps, list(ls))
            if not odd or not odd <= code.zeros:
                continue
            f = symdiff_polynomial(code.locator, code.alpha, n, ps, list(ls))
            wt = int(np.count_nonzero(f))
            if wt and (best is None or wt < best[0]):
                best = (wt, list(ls))
        if best is not None:
            ls = best[1]
            out.append(symdiff_dual_vector(code, ps[0], ls[0], ps[1], ls[1],
                                           *((ps[2], ls[2]) if len(ps) == 3 else ())))
    out.sort(key=lambda c: (c.bound_r, c.divisors, c.shifts))
    return out


def all_locality_certificates(code: CyclicCode, symdiff: bool = True) -> list[LocalityCertificate]:
    """Every applicable certificate, sorted by bound_r."""
    out: list[LocalityCertificate] = []
    n = code.n
    for d in divisors(n):
        if d < 2:
            continue
        c = coset_locality(code, d - 1)
        if c is not None:
            out.append(c)
        if any(class_in_zeros(code, d, cc) for cc in range(d)):
            try:
                out.append(qary_coset_locality(code, d))
            except CertificateError:
                pass
        if code.q == 2 and (d + 1) & d == 0:
            try:
                out.append(binary_coset_locality(code, (d + 1).bit_length() - 1))
            except CertificateError:
                pass
        if code.q == 3:
            try:
                out.append(ternary_two_weight_locality(code, d))
            except CertificateError:
                pass
    if symdiff:
        out.extend(c.locality for c in symdiff_locality_search(code))
    out.sort(key=lambda c: (c.bound_r, c.source))
    return out


__all__ = [
    "CertificateError",
    "DistanceBound",
    "DistanceReport",
    "LocalityCertificate",
    "SymDiffCertificate",
    "all_locality_certificates",
    "binary_coset_locality",
    "class_in_zeros",
    "coset_avoidance_bounds",
    "coset_locality",
    "distance_upper_bound",
    "in_dual",
    "in_dual_extension",
    "group_partition",
    "group_check_vector",
    "odd_multiplicity_set",
    "qary_coset_bound",
    "qary_coset_locality",
    "recovery_intersection",
    "symdiff_distance_bounds",
    "symdiff_locality_search",
    "symdiff_dual_vector",
    "symdiff_inclusion_exclusion",
    "symdiff_polynomial",
    "symdiff_weight_formula",
    "ternary_two_weight_locality",
    "trace_words",
    "verify_certificate",
]
