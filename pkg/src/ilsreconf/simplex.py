"""Dense two-phase tableau simplex over :class:`fractions.Fraction` with Bland's rule.

Solves ``minimize c.x  subject to  A x <= b, x >= 0`` exactly. Intended for the
small LPs this package builds; nothing here is tuned for size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


class LPError(RuntimeError):
    pass


class Infeasible(LPError):
    pass


class Unbounded(LPError):
    pass


@dataclass(frozen=True)
class LPResult:
    value: Fraction
    x: tuple[Fraction, ...]
    duals: tuple[Fraction, ...]  # one per <= row, all <= 0 for a minimisation


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], basis: list[int]):
        self.rows = rows  # last entry of each row is the right-hand side
        self.basis = basis

    def pivot(self, r: int, col: int, extra: Sequence[list[Fraction]] = ()) -> None:
        row = self.rows[r]
        piv = row[col]
        if piv != ONE:
            row[:] = [v / piv if v else v for v in row]
        support = [j for j, v in enumerate(row) if v]
        for k, other in enumerate(list(self.rows) + list(extra)):
            if k == r:
                continue
            f = other[col]
            if f:
                for j in support:
                    other[j] -= f * row[j]
        self.basis[r] = col

    def reduced_costs(self, cost: Sequence[Fraction]) -> list[Fraction]:
        width = len(self.rows[0]) - 1 if self.rows else len(cost)
        red = list(cost[:width]) + [ZERO]
        for r, bcol in enumerate(self.basis):
            cb = cost[bcol]
            if cb:
                for j, v in enumerate(self.rows[r]):
                    if v:
                        red[j] -= cb * v
        return red

    def run(self, cost: Sequence[Fraction], allowed: Sequence[bool]) -> None:
        """Minimise ``cost`` from the current basic feasible solution (Bland's rule)."""
        red = self.reduced_costs(cost)
        while True:
            enter = -1
            for j in range(len(red) - 1):
                if allowed[j] and red[j] < 0:
                    enter = j
                    break
            if enter < 0:
                return
            best = None
            for r, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    key = (row[-1] / a, self.basis[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                raise Unbounded("objective is unbounded below")
            self.pivot(best[1], enter, (red,))


def solve_lp(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    """Exact optimum of ``min c.x  s.t.  A x <= b, x >= 0``."""
    c = [Fraction(v) for v in c]
    nx = len(c)
    m = len(A)
    A = [[Fraction(v) for v in row] for row in A]
    b = [Fraction(v) for v in b]
    for row in A:
        if len(row) != nx:
            raise ValueError("row width does not match the cost vector")

    negative = [i for i in range(m) if b[i] < 0]
    nart = len(negative)
    width = nx + m + nart
    rows: list[list[Fraction]] = []
    basis: list[int] = []
    art_col = {}
    for k, i in enumerate(negative):
        art_col[i] = nx + m + k
    for i in range(m):
        row = [ZERO] * (width + 1)
        sign = -ONE if i in art_col else ONE
        for j in range(nx):
            row[j] = sign * A[i][j]
        row[nx + i] = sign
        row[-1] = sign * b[i]
        if i in art_col:
            row[art_col[i]] = ONE
            basis.append(art_col[i])
        else:
            basis.append(nx + i)
        rows.append(row)
    tab = _Tableau(rows, basis)

    if nart:
        phase1 = [ZERO] * (nx + m) + [ONE] * nart
        tab.run(phase1, [True] * width)
        infeas = sum((tab.rows[r][-1] for r, col in enumerate(tab.basis) if col >= nx + m), ZERO)
        if infeas > 0:
            raise Infeasible("LP has no feasible point")
        # drive artificials out of the basis
        for r in range(len(tab.rows)):
            if tab.basis[r] >= nx + m:
                row = tab.rows[r]
                for j in range(nx + m):
                    if row[j] != 0:
                        tab.pivot(r, j)
                        break
        keep = [r for r in range(len(tab.rows)) if tab.basis[r] < nx + m]
        tab.rows = [tab.rows[r] for r in keep]
        tab.basis = [tab.basis[r] for r in keep]

    cost = c + [ZERO] * (m + nart)
    allowed = [True] * (nx + m) + [False] * nart
    tab.run(cost, allowed)

    x = [ZERO] * width
    for r, col in enumerate(tab.basis):
        x[col] = tab.rows[r][-1]
    value = sum((ci * xi for ci, xi in zip(c, x)), ZERO)
    red = tab.reduced_costs(cost)
    # slack column of row i has cost 0 and unit column e_i, so its reduced cost is -y_i
    duals = tuple(-red[nx + i] for i in range(m))
    return LPResult(value, tuple(x[:nx]), duals)
