"""Finite fields GF(p^m) with table-driven arithmetic.

Elements are plain Python/numpy integers.  An element's integer value is the
base-``p`` encoding of its coefficient vector in the polynomial basis, lowest
degree first: ``x = c_0 + c_1 p + ... + c_{m-1} p^{m-1}``.  The prime subfield
therefore consists of the integers ``0..p-1``.

Fields up to ``TABLE_CEILING`` elements get full exp/log tables.  Larger fields
(up to ``FIELD_CEILING``) fall back to polynomial arithmetic and have no
discrete logarithms.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import gcd

import numpy as np

TABLE_CEILING = 2**20
FIELD_CEILING = 2**32

# Discrete log of zero.  Never used as a number: every path masks zeros first.
ZERO_LOG = -1


class FieldError(ValueError):
    pass


# ---------------------------------------------------------------------------
# integer helpers

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization of a positive integer."""
    if n < 1:
        raise ValueError("n must be positive")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def multiplicative_order(q: int, n: int) -> int:
    """Smallest m >= 1 with q^m = 1 mod n (n = 1 gives 1)."""
    if n == 1:
        return 1
    if gcd(q, n) != 1:
        raise FieldError(f"gcd({q}, {n}) != 1")
    m, x = 1, q % n
    while x != 1:
        x = (x * q) % n
        m += 1
    return m


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q = p^e, or raise."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    f = factorize(q)
    if len(f) != 1:
        raise FieldError(f"{q} is not a prime power")
    ((p, e),) = f.items()
    return p, e


# ---------------------------------------------------------------------------
# polynomials over the prime field GF(p), as coefficient lists (lowest first)

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df:
        c = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        _trim(a)
    return a


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def is_irreducible(poly: list[int] | tuple[int, ...], p: int) -> bool:
    """Rabin's test for a polynomial over GF(p) given lowest coefficient first."""
    f = _trim([c % p for c in poly])
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]

    def frob_power(k: int) -> list[int]:
        h = x
        for _ in range(k):
            h = _ppowmod(h, p, f, p)
        return h

    if _psub(frob_power(m), x, p):
        return False
    for ell in factorize(m):
        g = _pgcd(f, _psub(frob_power(m // ell), x, p), p)
        if len(g) > 1:
            return False
    return True


def first_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically first monic irreducible of degree m over GF(p).

    Candidates are ordered by the integer c_0 + c_1 p + ... + c_{m-1} p^{m-1}
    of their lower coefficients.
    """
    for code in range(p**m):
        coeffs = [(code // p**i) % p for i in range(m)] + [1]
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")  # pragma: no cover


# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class FieldTable:
    """GF(p^m) with a fixed modulus and primitive element.

    Immutable after construction; share freely between threads.
    """

    p: int
    m: int
    modulus: tuple[int, ...]
    q: int
    generator: int
    order_factors: dict[int, int]
    exp: np.ndarray | None = dc_field(repr=False)
    log: np.ndarray | None = dc_field(repr=False)

    # -- encoding ---------------------------------------------------------
    def coeffs(self, x: int) -> list[int]:
        p = self.p
        return [(int(x) // p**i) % p for i in range(self.m)]

    def from_coeffs(self, c) -> int:
        return sum((int(ci) % self.p) * self.p**i for i, ci in enumerate(c))

    @property
    def order(self) -> int:
        return self.q

    @property
    def has_tables(self) -> bool:
        return self.exp is not None

    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    # -- scalar arithmetic ----------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return int(a) ^ int(b)
        if self.m == 1:
            return (int(a) + int(b)) % self.p
        p, out, a, b = self.p, 0, int(a), int(b)
        w = 1
        for _ in range(self.m):
            out += ((a % p + b % p) % p) * w
            a //= p
            b //= p
            w *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return int(a)
        if self.m == 1:
            return (-int(a)) % self.p
        return self.from_coeffs([-c for c in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        a, b = int(a), int(b)
        if a == 0 or b == 0:
            return 0
        if self.exp is not None:
            return int(self.exp[(int(self.log[a]) + int(self.log[b])) % (self.q - 1)])
        return self._poly_mul(a, b)

    def pow(self, a: int, e: int) -> int:
        a = int(a)
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if e == 0 else 0
        if self.exp is not None:
            return int(self.exp[(int(self.log[a]) * e) % (self.q - 1)])
        return self._poly_pow(a, e % (self.q - 1))

    def inv(self, a: int) -> int:
        if int(a) == 0:
            raise ZeroDivisionError("0 has no inverse in GF(%d)" % self.q)
        return self.pow(a, -1)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def log_of(self, a: int) -> int:
        if self.log is None:
            raise FieldError("discrete logs are only tabulated for q <= TABLE_CEILING")
        if int(a) == 0:
            raise FieldError("log of zero")
        return int(self.log[int(a)])

    def exp_of(self, k: int) -> int:
        if self.exp is not None:
            return int(self.exp[k % (self.q - 1)])
        return self._poly_pow(self.generator, k % (self.q - 1))

    def element_order(self, a: int) -> int:
        if int(a) == 0:
            raise FieldError("zero has no multiplicative order")
        if self.log is not None:
            return (self.q - 1) // gcd(int(self.log[int(a)]), self.q - 1)
        order = self.q - 1
        for ell, e in self.order_factors.items():
            for _ in range(e):
                if self._poly_pow(int(a), order // ell) == 1:
                    order //= ell
                else:
                    break
        return order

    def frobenius(self, a: int, k: int = 1) -> int:
        """a^(p^k)."""
        return self.pow(a, self.p ** (k % self.m)) if self.m > 1 else int(a)

    # -- vectorized arithmetic (numpy int64 arrays) ------------------------
    def add_v(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        w = 1
        for _ in range(self.m):
            out += ((a // w % p + b // w % p) % p) * w
            w *= p
        return out

    def neg_v(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        if self.m == 1:
            return (-a) % self.p
        p = self.p
        out = np.zeros_like(a)
        w = 1
        for _ in range(self.m):
            out += ((-(a // w % p)) % p) * w
            w *= p
        return out

    def sub_v(self, a, b) -> np.ndarray:
        return self.add_v(a, self.neg_v(b))

    def mul_v(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a * b) % self.p
        if self.exp is None:
            fn = np.vectorize(self.mul, otypes=[np.int64])
            return fn(a, b)
        a, b = np.broadcast_arrays(a, b)
        nz = (a != 0) & (b != 0)
        out = np.zeros(a.shape, dtype=np.int64)
        out[nz] = self.exp[(self.log[a[nz]] + self.log[b[nz]]) % (self.q - 1)]
        return out

    def pow_v(self, a, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.exp is None:
            fn = np.vectorize(lambda x: self.pow(x, e), otypes=[np.int64])
            return fn(a)
        nz = a != 0
        out = np.zeros(a.shape, dtype=np.int64)
        if e == 0:
            out[:] = 1
            return out
        out[nz] = self.exp[(self.log[a[nz]] * e) % (self.q - 1)]
        return out

    def inv_v(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("0 has no inverse")
        return self.pow_v(a, -1)

    def dot(self, a, b) -> int:
        """Inner product of two vectors."""
        prods = self.mul_v(a, b)
        acc = 0
        for x in prods.tolist():
            acc = self.add(acc, x)
        return acc

    def sum_v(self, a, axis: int = -1) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        a = np.moveaxis(a, axis, -1)
        acc = np.zeros(a.shape[:-1], dtype=np.int64)
        for j in range(a.shape[-1]):
            acc = self.add_v(acc, a[..., j])
        return acc

    # -- subfields ----------------------------------------------------------
    def subfield_elements(self, d: int) -> np.ndarray:
        """All elements of the subfield GF(p^d), sorted."""
        if self.m % d:
            raise FieldError(f"GF({self.p}^{d}) is not a subfield of GF({self.p}^{self.m})")
        step = (self.q - 1) // (self.p**d - 1)
        ks = np.arange(0, self.q - 1, step, dtype=np.int64)
        if self.exp is not None:
            vals = self.exp[ks]
        else:
            vals = np.array([self.exp_of(int(k)) for k in ks], dtype=np.int64)
        return np.sort(np.concatenate([[0], vals]))

    def in_subfield(self, a: int, d: int) -> bool:
        return self.pow(a, self.p**d) == int(a)

    # -- slow path ----------------------------------------------------------
    def _poly_mul(self, a: int, b: int) -> int:
        prod = _pmul(_trim(self.coeffs(a)), _trim(self.coeffs(b)), self.p)
        return self.from_coeffs(_pmod(prod, list(self.modulus), self.p))

    def _poly_pow(self, a: int, e: int) -> int:
        result, base = 1, int(a)
        while e:
            if e & 1:
                result = self._poly_mul(result, base)
            base = self._poly_mul(base, base)
            e >>= 1
        return result

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})"


def _mult_matrix(c: int, p: int, m: int, modulus: list[int]) -> np.ndarray:
    """Matrix M over GF(p) with digits(x) @ M = digits(c * x)."""
    cc = _trim([(c // p**i) % p for i in range(m)])
    rows = []
    for j in range(m):
        xj = [0] * j + [1]
        prod = _pmod(_pmul(xj, cc, p), modulus, p)
        rows.append(prod + [0] * (m - len(prod)))
    return np.array(rows, dtype=np.int64)


def _build_tables(p: int, m: int, modulus: list[int], g: int) -> tuple[np.ndarray, np.ndarray]:
    q = p**m
    weights = p ** np.arange(m, dtype=np.int64)
    exp = np.empty(q - 1, dtype=np.int64)
    exp[0] = 1
    filled = 1
    power = g  # g^filled
    while filled < q - 1:
        take = min(filled, q - 1 - filled)
        block = exp[:take]
        digits = (block[:, None] // weights[None, :]) % p
        new = (digits @ _mult_matrix(power, p, m, modulus)) % p
        exp[filled:filled + take] = new @ weights
        filled += take
        last = [(int(exp[filled - 1]) // p**i) % p for i in range(m)]
        nxt = _pmod(_pmul(_trim(last), _trim([(g // p**i) % p for i in range(m)]), p), modulus, p)
        power = sum(c * p**i for i, c in enumerate(nxt))
    log = np.full(q, ZERO_LOG, dtype=np.int64)
    log[exp] = np.arange(q - 1, dtype=np.int64)
    if np.count_nonzero(log[1:] == ZERO_LOG):
        raise FieldError("generator is not primitive")  # pragma: no cover
    return exp, log


def _find_generator(p: int, m: int, modulus: list[int], factors: dict[int, int]) -> int:
    q = p**m
    if q == 2:
        return 1
    probe = FieldTable(p, m, tuple(modulus), q, 0, factors, None, None)
    for g in range(2, q):
        if all(probe._poly_pow(g, (q - 1) // ell) != 1 for ell in factors):
            return g
    raise FieldError("no primitive element found")  # pragma: no cover


@lru_cache(maxsize=None)
def _build_field_cached(p: int, m: int, modulus: tuple[int, ...]) -> FieldTable:
    q = p**m
    factors = factorize(q - 1) if q > 2 else {}
    g = _find_generator(p, m, list(modulus), factors)
    if q <= TABLE_CEILING:
        if q == 2:
            exp = np.array([1], dtype=np.int64)
            log = np.array([ZERO_LOG, 0], dtype=np.int64)
        else:
            exp, log = _build_tables(p, m, list(modulus), g)
    else:
        exp = log = None
    return FieldTable(p, m, modulus, q, g, factors, exp, log)


def build_field(p: int, m: int = 1, modulus=None) -> FieldTable:
    """Construct GF(p^m).

    ``modulus`` is a monic degree-``m`` polynomial over GF(p) given lowest
    coefficient first; by default the lexicographically first irreducible one.
    The primitive element is the smallest integer-encoded generator.
    """
    if not is_prime(p):
        raise FieldError(f"p={p} is not prime")
    if m < 1:
        raise FieldError("extension degree must be >= 1")
    if p**m > FIELD_CEILING:
        raise FieldError(f"GF({p}^{m}) exceeds the field ceiling {FIELD_CEILING}")
    if modulus is None:
        modulus = first_irreducible(p, m)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree m")
        if not is_irreducible(modulus, p):
            raise FieldError(f"modulus {modulus} is reducible over GF({p})")
    return _build_field_cached(p, m, tuple(modulus))


def field_of_order(q: int) -> FieldTable:
    p, e = prime_power(q)
    return build_field(p, e)


# ---------------------------------------------------------------------------
# roots of unity, traces, cosets

def nth_root_of_unity(field: FieldTable, n: int) -> int:
    """g^((q-1)/n) for the field's primitive element g; has order exactly n."""
    if n < 1 or (field.q - 1) % n:
        raise FieldError(f"{n} does not divide q-1 = {field.q - 1}")
    return field.exp_of((field.q - 1) // n)


def trace(field: FieldTable, sub_degree: int, x: int, ext_degree: int | None = None) -> int:
    """Relative trace from GF(p^ext_degree) down to GF(p^sub_degree).

    ``x`` must lie in the subfield of degree ``ext_degree`` (default: the whole
    field).  The result is an element of ``field`` lying in GF(p^sub_degree).
    """
    ext = field.m if ext_degree is None else ext_degree
    if field.m % ext or ext % sub_degree:
        raise FieldError(f"need {sub_degree} | {ext} | {field.m}")
    acc, y = 0, int(x)
    step = field.p**sub_degree
    for _ in range(ext // sub_degree):
        acc = field.add(acc, y)
        y = field.pow(y, step)
    return acc


def trace_v(field: FieldTable, sub_degree: int, x, ext_degree: int | None = None) -> np.ndarray:
    ext = field.m if ext_degree is None else ext_degree
    if field.m % ext or ext % sub_degree:
        raise FieldError(f"need {sub_degree} | {ext} | {field.m}")
    y = np.asarray(x, dtype=np.int64)
    acc = np.zeros(y.shape, dtype=np.int64)
    step = field.p**sub_degree
    for _ in range(ext // sub_degree):
        acc = field.add_v(acc, y)
        y = field.pow_v(y, step)
    return acc


@lru_cache(maxsize=64)
def trace_table(field: FieldTable, sub_degree: int) -> np.ndarray:
    """Absolute trace values for every element (index = element)."""
    return trace_v(field, sub_degree, field.elements())


def cyclotomic_coset(i: int, n: int, q: int) -> tuple[int, ...]:
    """Orbit of i under multiplication by q mod n, in generation order."""
    i %= n
    out = [i]
    j = (i * q) % n
    while j != i:
        out.append(j)
        j = (j * q) % n
    return tuple(out)


def cyclotomic_cosets(n: int, q: int) -> list[tuple[int, ...]]:
    """Partition of {0..n-1} into q-cyclotomic cosets.

    Each coset is returned sorted, so its first entry is the minimal
    representative; cosets are ordered by representative.
    """
    if gcd(n, q) != 1:
        raise FieldError(f"gcd(n={n}, q={q}) != 1")
    seen = [False] * n
    out = []
    for i in range(n):
        if not seen[i]:
            c = tuple(sorted(cyclotomic_coset(i, n, q)))
            for j in c:
                seen[j] = True
            out.append(c)
    return out


# ---------------------------------------------------------------------------
# embeddings

@lru_cache(maxsize=None)
def embedding(small: FieldTable, big: FieldTable) -> np.ndarray:
    """Array ``emb`` with ``emb[x]`` the image of ``x`` in ``big``.

    The generator of the polynomial basis of ``small`` is sent to the smallest
    root of ``small.modulus`` in ``big``, which fixes a deterministic field
    homomorphism.
    """
    if small.p != big.p or big.m % small.m:
        raise FieldError(f"{small!r} is not a subfield of {big!r}")
    if small is big:
        return small.elements()
    if small.m == 1:
        return small.elements()
    cands = big.subfield_elements(small.m)
    root = None
    for c in cands.tolist():
        acc = 0
        for coef in reversed(small.modulus):
            acc = big.add(big.mul(acc, c), coef)
        if acc == 0:
            root = c
            break
    if root is None:  # pragma: no cover
        raise FieldError("no root of the subfield modulus found")
    powers = [1]
    for _ in range(small.m - 1):
        powers.append(big.mul(powers[-1], root))
    emb = np.zeros(small.q, dtype=np.int64)
    for x in range(small.q):
        acc = 0
        for c, pw in zip(small.coeffs(x), powers):
            if c:
                acc = big.add(acc, big.mul(c, pw))
        emb[x] = acc
    return emb


@lru_cache(maxsize=None)
def restriction(small: FieldTable, big: FieldTable) -> dict[int, int]:
    """Inverse of :func:`embedding` as a dict from ``big`` to ``small``."""
    return {int(v): i for i, v in enumerate(embedding(small, big).tolist())}
