"""Index-one systems: split the variables into a TVPI part Q and a Horn part H.

After flipping the variables with ``alpha_j = 0`` in a half-integral LP optimum,
``Q = {alpha_j = 1/2}`` and ``H = {alpha_j = 1}`` satisfy

  (a) every row has at most two nonzeros in Q,
  (b) every row has at most one positive entry in H,
  (c) a row with a positive H entry has no nonzero Q entry.

Rows without Q entries (``S``) form a Horn system over H. The remaining rows,
with H fixed at the Horn minimum, form a TVPI system over Q.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ilsreconf import horn, tvpi
from ilsreconf.core import (
    Assignment,
    ILSInstance,
    PathWitness,
    PreconditionError,
    flip_columns,
    flip_point,
    join_paths,
    require_feasible,
)
from ilsreconf.index_lp import HALF, compute_index, half_integral_alpha, max_row_cost, sign_pattern

log = logging.getLogger(__name__)


class NoHalfIntegralOptimum(PreconditionError):
    """No alpha in {0, 1/2, 1}^n keeps every row cost within 1."""

    def __init__(self, z: Fraction):
        self.z = z
        super().__init__(f"no half-integral alpha with row cost <= 1 (index {z})")


class PartitionError(RuntimeError):
    """A constructed partition failed re-verification."""


@dataclass(frozen=True)
class QHPartition:
    """Variable split on the flipped instance ``normalized``; indices are 0-based."""

    Q: frozenset
    H: frozenset
    flipped: frozenset
    S: tuple[int, ...]
    S_bar: tuple[int, ...]
    normalized: ILSInstance
    alpha: tuple[Fraction, ...]

    def to_normal(self, x: Sequence[int]) -> Assignment:
        return flip_point(x, self.flipped, self.normalized.d)

    from_normal = to_normal  # flipping is an involution


def qh_violations(inst: ILSInstance, Q, H) -> list[str]:
    """Which of the conditions (a)-(c) fail on ``inst`` for the split ``Q``/``H``."""
    problems = []
    Q, H = set(Q), set(H)
    if Q & H or (Q | H) != set(range(inst.n)):
        problems.append("Q and H must partition the variables")
    for i, row in enumerate(inst.A):
        q_nz = sum(1 for j in Q if row[j])
        h_pos = sum(1 for j in H if row[j] > 0)
        if q_nz > 2:
            problems.append(f"row {i}: {q_nz} nonzeros in Q (a)")
        if h_pos > 1:
            problems.append(f"row {i}: {h_pos} positive entries in H (b)")
        if h_pos and q_nz:
            problems.append(f"row {i}: positive H entry together with a Q entry (c)")
    return problems


def partition_from_alpha(inst: ILSInstance, alpha: Sequence[Fraction]) -> QHPartition:
    alpha = tuple(Fraction(a) for a in alpha)
    if any(a not in (0, HALF, 1) for a in alpha):
        raise ValueError("alpha must be half-integral")
    if max_row_cost(sign_pattern(inst), alpha) > 1:
        raise ValueError("alpha has a row cost above 1")
    flipped = frozenset(j for j, a in enumerate(alpha) if a == 0)
    norm = flip_columns(inst, flipped)
    Q = frozenset(j for j, a in enumerate(alpha) if a == HALF)
    H = frozenset(range(inst.n)) - Q
    problems = qh_violations(norm, Q, H)
    if problems:
        raise PartitionError("; ".join(problems))
    S = tuple(i for i, row in enumerate(norm.A) if not any(row[j] for j in Q))
    S_bar = tuple(i for i in range(norm.m) if i not in set(S))
    return QHPartition(Q, H, flipped, S, S_bar, norm, alpha)


def compute_qh_partition(inst: ILSInstance, alpha: Sequence[Fraction] | None = None) -> QHPartition:
    """QH-partition built from a half-integral alpha (computed when not given)."""
    if alpha is None:
        sol = compute_index(inst)
        if sol.z > 1:
            raise PreconditionError(f"index {sol.z} exceeds 1")
        alpha = sol.alpha
        if any(a not in (0, HALF, 1) for a in alpha) or max_row_cost(sign_pattern(inst), alpha) > 1:
            alpha = half_integral_alpha(inst, Fraction(1))
            if alpha is None:
                raise NoHalfIntegralOptimum(sol.z)
    return partition_from_alpha(inst, alpha)


def _sub(x: Sequence[int], cols: Sequence[int]) -> list[int]:
    return [x[j] for j in cols]


def _embed(base: Sequence[int], cols: Sequence[int], vals: Sequence[int]) -> Assignment:
    out = list(base)
    for j, v in zip(cols, vals):
        out[j] = v
    return tuple(out)


def horn_part(part: QHPartition) -> ILSInstance | None:
    H = sorted(part.H)
    if not H:
        return None
    return part.normalized.restrict(part.S, H)


def tvpi_part(part: QHPartition, x_h: Sequence[int]) -> ILSInstance | None:
    """Rows of ``S_bar`` over Q with the H variables fixed at ``x_h``."""
    Q, H = sorted(part.Q), sorted(part.H)
    if not Q:
        return None
    A = part.normalized.A
    shift = [sum((A[i][j] * v for j, v in zip(H, x_h)), Fraction(0)) for i in part.S_bar]
    return part.normalized.restrict(part.S_bar, Q, shift)


def solve_ils1(
    inst: ILSInstance,
    s: Sequence[int],
    t: Sequence[int],
    partition: QHPartition | None = None,
) -> tuple[bool, PathWitness | None]:
    """Decide reachability on an instance of index at most one; witness on yes."""
    s, t = require_feasible(inst, s, t)
    if s == t:
        return True, PathWitness((s,))
    if partition is None:
        try:
            partition = compute_qh_partition(inst)
        except NoHalfIntegralOptimum as exc:
            from ilsreconf import oracle

            log.warning("%s; falling back to exhaustive search", exc)
            return oracle.bfs_reachable(inst, s, t)
    part = partition
    norm = part.normalized
    sn, tn = part.to_normal(s), part.to_normal(t)
    Q, H = sorted(part.Q), sorted(part.H)

    # Horn stage over H
    ih = horn_part(part)
    if ih is not None:
        s_steps = horn.greedy_descent(ih, _sub(sn, H))
        t_steps = horn.greedy_descent(ih, _sub(tn, H))
        if s_steps[-1] != t_steps[-1]:
            return False, None
        x_h = s_steps[-1]
    else:
        s_steps = t_steps = [()]
        x_h = ()

    # TVPI stage over Q with H at the Horn minimum
    iq = tvpi_part(part, x_h)
    if iq is not None:
        sq, tq = _sub(sn, Q), _sub(tn, Q)
        q_steps = tvpi.greedy_toward(iq, sq, tq)
        if list(q_steps[-1]) != tq:
            return False, None
    else:
        q_steps = [()]

    first = [_embed(sn, H, v) for v in s_steps]
    mid_base = _embed(sn, H, x_h)
    middle = [_embed(mid_base, Q, v) for v in q_steps]
    last = [_embed(tn, H, v) for v in reversed(t_steps)]
    path = join_paths(first, middle, last)
    assert path.end == tn and all(norm.is_feasible(x) for x in path.steps)
    return True, PathWitness(tuple(part.from_normal(x) for x in path.steps))
