"""Complexity index Z(I): the optimum of the sign-pattern LP, computed exactly.

For every row ``i`` the LP asks

    sum_{j: a_ij > 0} alpha_j + sum_{j: a_ij < 0} (1 - alpha_j) <= Z,   0 <= alpha_j <= 1,

and minimises ``Z``. Only the sign pattern of ``A`` matters.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from ilsreconf.core import ILSInstance
from ilsreconf.simplex import Infeasible, solve_lp

HALF = Fraction(1, 2)
SignMatrix = tuple[tuple[int, ...], ...]


class Regime(enum.Enum):
    LESS_THAN_ONE = "LessThanOne"
    EXACTLY_ONE = "ExactlyOne"
    GREATER_THAN_ONE = "GreaterThanOne"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class IndexSolution:
    z: Fraction
    alpha: tuple[Fraction, ...]

    @property
    def regime(self) -> Regime:
        return classify(self)


def sign_pattern(inst: ILSInstance) -> SignMatrix:
    """Entrywise sign of ``A`` as +1 / 0 / -1."""
    return tuple(tuple((a > 0) - (a < 0) for a in row) for row in inst.A)


def row_cost(signs: Sequence[int], alpha: Sequence[Fraction]) -> Fraction:
    cost = Fraction(0)
    for s, a in zip(signs, alpha):
        if s > 0:
            cost += a
        elif s < 0:
            cost += 1 - a
    return cost


def max_row_cost(signs: SignMatrix, alpha: Sequence[Fraction]) -> Fraction:
    return max((row_cost(r, alpha) for r in signs), default=Fraction(0))


def _lp_over_signs(signs: SignMatrix, n: int, fixed: Mapping[int, Fraction] | None = None) -> IndexSolution:
    """Solve the index LP with some ``alpha_j`` pinned to given values."""
    fixed = dict(fixed or {})
    free = [j for j in range(n) if j not in fixed]
    col = {j: k + 1 for k, j in enumerate(free)}  # column 0 is Z
    width = len(free) + 1
    A, b = [], []
    for row in signs:
        coeffs = [Fraction(0)] * width
        coeffs[0] = Fraction(-1)
        rhs = Fraction(0)
        for j, s in enumerate(row):
            if not s:
                continue
            if j in fixed:
                rhs -= fixed[j] if s > 0 else 1 - fixed[j]
            elif s > 0:
                coeffs[col[j]] += 1
            else:
                coeffs[col[j]] -= 1
                rhs -= 1
        A.append(coeffs)
        b.append(rhs)
    for j in free:
        coeffs = [Fraction(0)] * width
        coeffs[col[j]] = Fraction(1)
        A.append(coeffs)
        b.append(Fraction(1))
    cost = [Fraction(1)] + [Fraction(0)] * len(free)
    res = solve_lp(cost, A, b)
    alpha = [Fraction(0)] * n
    for j, v in fixed.items():
        alpha[j] = Fraction(v)
    for j in free:
        alpha[j] = res.x[col[j]]
    # Z >= 0 is implied by any row; with no rows the LP optimum is 0.
    return IndexSolution(res.value, tuple(alpha))


def compute_index(inst: ILSInstance) -> IndexSolution:
    """Exact ``Z(I)`` with an optimal ``alpha``; half-integral whenever one exists at ``Z``."""
    signs = sign_pattern(inst)
    if inst.m == 0:
        return IndexSolution(Fraction(0), tuple(Fraction(1) for _ in range(inst.n)))
    sol = _lp_over_signs(signs, inst.n)
    if (2 * sol.z).denominator != 1:
        return sol  # half-integral alpha gives row costs in (1/2)Z
    snapped = half_integral_alpha(inst, sol.z)
    if snapped is not None:
        return IndexSolution(sol.z, snapped)
    return sol


def classify(sol: IndexSolution) -> Regime:
    if sol.z < 1:
        return Regime.LESS_THAN_ONE
    if sol.z == 1:
        return Regime.EXACTLY_ONE
    return Regime.GREATER_THAN_ONE


def _preferred_values(signs: SignMatrix, j: int) -> tuple[Fraction, ...]:
    """Try order for ``alpha_j``: a one-signed column is free at one end, a mixed one is balanced at 1/2."""
    pos = any(r[j] > 0 for r in signs)
    neg = any(r[j] < 0 for r in signs)
    if pos and not neg:
        return (Fraction(0), HALF, Fraction(1))
    if neg and not pos:
        return (Fraction(1), HALF, Fraction(0))
    return (HALF, Fraction(1), Fraction(0))


def half_integral_alpha(inst: ILSInstance, bound: Fraction) -> tuple[Fraction, ...] | None:
    """Some ``alpha`` in ``{0, 1/2, 1}^n`` with every row cost ``<= bound``, or ``None``.

    Depth-first over the coordinates; a partial fixing is kept only while the LP
    with those fixings still reaches ``bound``.
    """
    signs = sign_pattern(inst)
    n = inst.n
    bound = Fraction(bound)

    # variables that appear in no row: any value works
    used = {j for r in signs for j, s in enumerate(r) if s}
    fixed: dict[int, Fraction] = {j: Fraction(1) for j in range(n) if j not in used}
    order = [j for j in range(n) if j in used]

    def lp_ok(fx) -> bool:
        try:
            return _lp_over_signs(signs, n, fx).z <= bound
        except Infeasible:
            return False

    if not lp_ok(fixed):
        return None

    def dfs(k: int) -> bool:
        if k == len(order):
            return True
        j = order[k]
        for v in _preferred_values(signs, j):
            fixed[j] = v
            if _partial_ok(signs, fixed, bound) and lp_ok(fixed) and dfs(k + 1):
                return True
        del fixed[j]
        return False

    if not dfs(0):
        return None
    alpha = tuple(fixed[j] for j in range(n))
    assert max_row_cost(signs, alpha) <= bound
    return alpha


def _partial_ok(signs: SignMatrix, fixed: Mapping[int, Fraction], bound: Fraction) -> bool:
    """Cheap necessary check: cost from fixed entries alone may not exceed ``bound``."""
    for row in signs:
        cost = Fraction(0)
        for j, s in enumerate(row):
            if s and j in fixed:
                cost += fixed[j] if s > 0 else 1 - fixed[j]
        if cost > bound:
            return False
    return True


def verify_index_solution(inst: ILSInstance, sol: IndexSolution) -> bool:
    """Re-substitute ``(z, alpha)`` into every LP constraint."""
    if len(sol.alpha) != inst.n:
        return False
    if any(a < 0 or a > 1 for a in sol.alpha):
        return False
    return max_row_cost(sign_pattern(inst), sol.alpha) <= sol.z
