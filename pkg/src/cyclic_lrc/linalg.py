"""Row reduction, rank and null spaces over a finite field."""
from __future__ import annotations

import numpy as np

from .finite_field import FieldTable


def rref(M, F: FieldTable) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form (zero rows dropped) and pivot columns."""
    A = np.array(M, dtype=np.int64, copy=True)
    if A.ndim != 2:
        raise ValueError("expected a matrix")
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        lead = int(A[r, c])
        if lead != 1:
            A[r] = F.mul_v(A[r], F.inv(lead))
        others = np.nonzero(A[:, c])[0]
        others = others[others != r]
        if others.size:
            if F.q == 2:
                A[others] ^= A[r]
            else:
                factors = A[others, c][:, None]
                A[others] = F.sub_v(A[others], F.mul_v(factors, A[r][None, :]))
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(M, F: FieldTable) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(M, F)[1])


def nullspace(M, F: FieldTable, ncols: int | None = None) -> np.ndarray:
    """Basis (as rows) of {x : M x^T = 0}."""
    M = np.asarray(M, dtype=np.int64)
    if M.size == 0:
        n = M.shape[1] if M.ndim == 2 and M.shape[1] else ncols
        return np.eye(n, dtype=np.int64)
    R, pivots = rref(M, F)
    n = M.shape[1]
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = F.neg(int(R[r, f]))
    return basis


def matmul(A, B, F: FieldTable) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if A.shape[1] != B.shape[0]:
        raise ValueError("shape mismatch")
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    if F.m == 1:
        return (A @ B) % F.p
    for k in range(A.shape[1]):
        out = F.add_v(out, F.mul_v(A[:, k:k + 1], B[k:k + 1, :]))
    return out


def same_row_space(A, B, F: FieldTable) -> bool:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    ra = rref(A, F)[0] if A.size else np.zeros((0, B.shape[1] if B.ndim == 2 else 0), dtype=np.int64)
    rb = rref(B, F)[0] if B.size else np.zeros((0, ra.shape[1]), dtype=np.int64)
    return ra.shape == rb.shape and bool(np.array_equal(ra, rb))


def in_row_space(v, M, F: FieldTable) -> bool:
    M = np.asarray(M, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    if not np.any(v):
        return True
    if M.size == 0:
        return False
    return rank(np.vstack([M, v]), F) == rank(M, F)
