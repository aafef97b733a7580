"""Dense two-phase simplex over exact rationals with Bland's rule."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

OPTIMAL = "OPTIMAL"
INFEASIBLE = "INFEASIBLE"
UNBOUNDED = "UNBOUNDED"


@dataclass
class RationalLP:
    """maximize c.x subject to rows (a, sense, b) with sense in {"=", ">=", "<="}, x >= 0."""

    objective: list[Fraction]
    rows: list[tuple[list[Fraction], str, Fraction]] = field(default_factory=list)

    def add(self, coeffs: Sequence, sense: str, rhs) -> None:
        if sense not in ("=", ">=", "<="):
            raise ValueError(f"unknown sense {sense!r}")
        if len(coeffs) != len(self.objective):
            raise ValueError("row length does not match the number of variables")
        self.rows.append(([Fraction(c) for c in coeffs], sense, Fraction(rhs)))

    @property
    def num_vars(self) -> int:
        return len(self.objective)


@dataclass
class LPResult:
    status: str
    value: Fraction | None = None
    x: list[Fraction] | None = None
    duals: list[Fraction] | None = None  # one per constraint row
    pivots: int = 0


def _pivot(T: list[list[Fraction]], r: int, c: int) -> None:
    row = T[r]
    pv = row[c]
    if pv != 1:
        inv = 1 / pv
        T[r] = row = [v * inv for v in row]
    nz = [j for j, v in enumerate(row) if v]
    for i, other in enumerate(T):
        if i == r:
            continue
        f = other[c]
        if f:
            for j in nz:
                other[j] -= f * row[j]


def _run(T: list[list[Fraction]], basis: list[int], obj_row: int, allowed: int) -> tuple[str, int]:
    """Maximize the objective stored (negated) in T[obj_row]; Bland's rule."""
    pivots = 0
    m = len(basis)
    while True:
        z = T[obj_row]
        enter = next((j for j in range(allowed) if z[j] < 0), None)
        if enter is None:
            return OPTIMAL, pivots
        best, leave = None, None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return UNBOUNDED, pivots
        _pivot(T, leave, enter)
        basis[leave] = enter
        pivots += 1


def solve(lp: RationalLP) -> LPResult:
    """Two-phase simplex; the optimum is certified by re-checking dual feasibility."""
    nv = lp.num_vars
    rows = []
    slack_cols = 0
    for a, sense, b in lp.rows:
        rows.append((list(a), sense, b))
        if sense != "=":
            slack_cols += 1
    m = len(rows)
    ncol = nv + slack_cols + m  # structural, slack, artificial
    T: list[list[Fraction]] = []
    sign: list[int] = []
    s = nv
    slack_of: list[int | None] = []
    for i, (a, sense, b) in enumerate(rows):
        row = [Fraction(0)] * (ncol + 1)
        row[:nv] = a
        if sense == ">=":
            row[s] = Fraction(-1)
            slack_of.append(s)
            s += 1
        elif sense == "<=":
            row[s] = Fraction(1)
            slack_of.append(s)
            s += 1
        else:
            slack_of.append(None)
        row[-1] = b
        sg = 1
        if b < 0:
            row = [-v for v in row]
            sg = -1
        sign.append(sg)
        row[nv + slack_cols + i] = Fraction(1)
        T.append(row)
    basis = [nv + slack_cols + i for i in range(m)]
    # phase 1: maximize -sum(artificials)
    w = [Fraction(0)] * (ncol + 1)
    for i in range(m):
        for j in range(ncol + 1):
            w[j] -= T[i][j]
    for i in range(m):
        w[nv + slack_cols + i] = Fraction(0)
    T.append(w)
    status, p1 = _run(T, basis, m, nv + slack_cols)
    if T[m][-1] != 0:
        return LPResult(INFEASIBLE, pivots=p1)
    # drive remaining artificials out of the basis
    for i in range(m):
        if basis[i] >= nv + slack_cols:
            col = next((j for j in range(nv + slack_cols) if T[i][j] != 0), None)
            if col is not None:
                _pivot(T, i, col)
                basis[i] = col
    T.pop()
    # phase 2
    z = [Fraction(0)] * (ncol + 1)
    for j, cj in enumerate(lp.objective):
        z[j] = -Fraction(cj)
    for i, bj in enumerate(basis):
        if bj < nv and z[bj]:
            f = z[bj]
            z = [zv - f * tv for zv, tv in zip(z, T[i])]
    T.append(z)
    status, p2 = _run(T, basis, m, nv + slack_cols)
    if status != OPTIMAL:
        return LPResult(status, pivots=p1 + p2)
    x = [Fraction(0)] * nv
    for i, bj in enumerate(basis):
        if bj < nv:
            x[bj] = T[i][-1]
    value = sum((Fraction(c) * v for c, v in zip(lp.objective, x)), Fraction(0))
    # dual values: reduced costs of the artificial columns, undoing the row sign flips
    zrow = T[m]
    duals = [zrow[nv + slack_cols + i] * sign[i] for i in range(m)]
    _certify(lp, x, value, duals)
    return LPResult(OPTIMAL, value, x, duals, p1 + p2)


def _certify(lp: RationalLP, x: list[Fraction], value: Fraction, y: list[Fraction]) -> None:
    """Exact primal and dual feasibility plus equal objective values."""
    for v in x:
        if v < 0:
            raise ArithmeticError("primal solution has a negative entry")
    for (a, sense, b), yi in zip(lp.rows, y):
        lhs = sum((ai * xi for ai, xi in zip(a, x)), Fraction(0))
        if (sense == "=" and lhs != b) or (sense == ">=" and lhs < b) or (sense == "<=" and lhs > b):
            raise ArithmeticError("primal solution violates a constraint")
        # for a maximization: y <= 0 on ">=" rows, y >= 0 on "<=" rows
        if (sense == ">=" and yi > 0) or (sense == "<=" and yi < 0):
            raise ArithmeticError("dual solution has the wrong sign")
    for j, cj in enumerate(lp.objective):
        col = sum((a[j] * yi for (a, _, _), yi in zip(lp.rows, y)), Fraction(0))
        if col < cj:
            raise ArithmeticError("dual solution is infeasible")
    dual_value = sum((b * yi for (_, _, b), yi in zip(lp.rows, y)), Fraction(0))
    if dual_value != value:
        raise ArithmeticError("primal and dual objective values differ")


__all__ = ["INFEASIBLE", "LPResult", "OPTIMAL", "RationalLP", "UNBOUNDED", "solve"]
