"""Compiled codeword-enumeration loops.

Both kernels walk a contiguous block ``[start, stop)`` of message indices in
Gray-code order, so consecutive codewords differ by one (scaled) generator
row.  Blocks are independent; the caller merges their outputs.
"""
from __future__ import annotations

import numpy as np
from numba import njit

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


@njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return np.int64((x * _H01) >> np.uint64(56))


@njit(cache=True, inline="always")
def _ctz(x):
    c = 0
    while (x & 1) == 0:
        x >>= 1
        c += 1
    return c


@njit(cache=True, nogil=True)
def enumerate_binary(rows, n, start, stop, track, collect_w, cap):
    """Binary code, n <= 64, rows as uint64 bitmasks.

    Returns (hist, best, bestcnt, cover, coll, ncoll, overflow):
    ``best[i]``/``bestcnt[i]`` are the least weight of a nonzero word with
    bit i set and how many words attain it (only if ``track``); ``cover[i]``
    counts words of weight <= collect_w with bit i set; ``coll`` holds up to
    ``cap`` such supports.
    """
    k = rows.shape[0]
    hist = np.zeros(n + 1, dtype=np.int64)
    best = np.full(n, n + 1, dtype=np.int64)
    bestcnt = np.zeros(n, dtype=np.int64)
    cover = np.zeros(n, dtype=np.int64)
    coll = np.zeros(cap, dtype=np.uint64)
    ncoll = 0
    overflow = False
    maxbest = n + 1
    g = start ^ (start >> 1)
    word = np.uint64(0)
    for t in range(k):
        if (g >> t) & 1:
            word ^= rows[t]
    one = np.uint64(1)
    for idx in range(start, stop):
        if idx > start:
            word ^= rows[_ctz(idx)]
        w = _popcount(word)
        hist[w] += 1
        if w == 0:
            continue
        if track and w <= maxbest:
            x = word
            changed = False
            for i in range(n):
                if (x >> np.uint64(i)) & one:
                    if w < best[i]:
                        best[i] = w
                        bestcnt[i] = 1
                        changed = True
                    elif w == best[i]:
                        bestcnt[i] += 1
            if changed:
                maxbest = 0
                for i in range(n):
                    if best[i] > maxbest:
                        maxbest = best[i]
        if w <= collect_w:
            for i in range(n):
                if (word >> np.uint64(i)) & one:
                    cover[i] += 1
            if ncoll < cap:
                coll[ncoll] = word
                ncoll += 1
            else:
                overflow = True
    return hist, best, bestcnt, cover, coll, ncoll, overflow


@njit(cache=True, nogil=True)
def enumerate_qary(rowmult, addt, subt, n, q, start, stop, track, collect_w, cap):
    """Code over GF(q) with q <= 256 given by addition/subtraction tables.

    ``rowmult[t, c]`` is generator row t scaled by field element c.  The
    message walk is the modular q-ary Gray code: each step adds one to a
    single Gray digit.  Supports are collected as two uint64 words (n <= 128).
    """
    k = rowmult.shape[0]
    hist = np.zeros(n + 1, dtype=np.int64)
    best = np.full(n, n + 1, dtype=np.int64)
    bestcnt = np.zeros(n, dtype=np.int64)
    cover = np.zeros(n, dtype=np.int64)
    coll = np.zeros((cap, 2), dtype=np.uint64)
    ncoll = 0
    overflow = False
    maxbest = n + 1
    # digits of start and its Gray digits
    b = np.zeros(k + 1, dtype=np.int64)
    x = start
    for t in range(k):
        b[t] = x % q
        x //= q
    gd = np.zeros(k, dtype=np.int64)
    word = np.zeros(n, dtype=np.int64)
    for t in range(k):
        gd[t] = (b[t] - b[t + 1]) % q
        if gd[t]:
            for j in range(n):
                word[j] = addt[word[j], rowmult[t, gd[t], j]]
    one = np.uint64(1)
    for idx in range(start, stop):
        if idx > start:
            t = 0
            y = idx
            while y % q == 0:
                y //= q
                t += 1
            old = gd[t]
            new = (old + 1) % q
            delta = subt[new, old]
            gd[t] = new
            for j in range(n):
                word[j] = addt[word[j], rowmult[t, delta, j]]
        w = 0
        for j in range(n):
            if word[j] != 0:
                w += 1
        hist[w] += 1
        if w == 0:
            continue
        if track and w <= maxbest:
            changed = False
            for i in range(n):
                if word[i] != 0:
                    if w < best[i]:
                        best[i] = w
                        bestcnt[i] = 1
                        changed = True
                    elif w == best[i]:
                        bestcnt[i] += 1
            if changed:
                maxbest = 0
                for i in range(n):
                    if best[i] > maxbest:
                        maxbest = best[i]
        if w <= collect_w:
            lo = np.uint64(0)
            hi = np.uint64(0)
            for i in range(n):
                if word[i] != 0:
                    cover[i] += 1
                    if i < 64:
                        lo |= one << np.uint64(i)
                    else:
                        hi |= one << np.uint64(i - 64)
            if ncoll < cap:
                coll[ncoll, 0] = lo
                coll[ncoll, 1] = hi
                ncoll += 1
            else:
                overflow = True
    return hist, best, bestcnt, cover, coll, ncoll, overflow
