"""Index below one: the solution graph is connected and a short path always exists.

Such matrices admit an elimination ordering. Flipping the columns removed by
condition (ii) and sorting by the ordering makes every positive entry the last
nonzero of its row with only nonpositive entries before it (property P1). The
result is Horn, and prefix substitution of the global minimum walks any
solution to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from ilsreconf import horn
from ilsreconf.core import (
    ILSInstance,
    PathWitness,
    PreconditionError,
    flip_columns,
    flip_point,
    join_paths,
    permute_columns,
    require_feasible,
)
from ilsreconf.index_lp import compute_index

COND_I = "i"    # positive entries are alone in their row
COND_II = "ii"  # negative entries are alone in their row


@dataclass(frozen=True)
class EliminationOrdering:
    order: tuple[int, ...]  # 0-based column indices, in elimination order
    kinds: tuple[str, ...]


def _holds(A, j: int, remaining, positive: bool) -> bool:
    for row in A:
        a = row[j]
        if (a > 0 if positive else a < 0) and any(row[k] for k in remaining if k != j):
            return False
    return True


def elimination_ordering(inst: ILSInstance) -> EliminationOrdering | None:
    """Greedy elimination, lowest column index first; ``None`` if it gets stuck.

    Kind per column: (i) when the column has no positive entry, (ii) when it has
    no negative entry, otherwise whichever of (i), (ii) holds, preferring (i).
    """
    A = inst.A
    remaining = list(range(inst.n))
    order, kinds = [], []
    while remaining:
        for j in remaining:
            col = [row[j] for row in A]
            cond_i = _holds(A, j, remaining, True)
            cond_ii = _holds(A, j, remaining, False)
            if not (cond_i or cond_ii):
                continue
            if not any(a > 0 for a in col):
                kind = COND_I
            elif not any(a < 0 for a in col):
                kind = COND_II
            else:
                kind = COND_I if cond_i else COND_II
            order.append(j)
            kinds.append(kind)
            remaining.remove(j)
            break
        else:
            return None
    return EliminationOrdering(tuple(order), tuple(kinds))


def replay_ordering(inst: ILSInstance, ordering: EliminationOrdering) -> bool:
    """Re-check every recorded elimination step against the columns still present."""
    if sorted(ordering.order) != list(range(inst.n)):
        return False
    remaining = list(range(inst.n))
    for j, kind in zip(ordering.order, ordering.kinds):
        if not _holds(inst.A, j, remaining, kind == COND_I):
            return False
        remaining.remove(j)
    return True


def has_p1(inst: ILSInstance) -> bool:
    for row in inst.A:
        for j, a in enumerate(row):
            if a > 0:
                if any(row[k] > 0 for k in range(j)) or any(row[k] for k in range(j + 1, inst.n)):
                    return False
    return True


class P1Form(NamedTuple):
    instance: ILSInstance
    flipped: frozenset  # 0-based original columns that were flipped
    order: tuple[int, ...]  # new column k is original column order[k]


def normalize_p1(inst: ILSInstance) -> P1Form:
    """Flip and reorder columns so the matrix has property P1; a P1 input is returned as is."""
    if has_p1(inst):
        return P1Form(inst, frozenset(), tuple(range(inst.n)))
    ordering = elimination_ordering(inst)
    if ordering is None:
        raise PreconditionError("matrix admits no elimination ordering")
    flipped = frozenset(j for j, k in zip(ordering.order, ordering.kinds) if k == COND_II)
    out = permute_columns(flip_columns(inst, flipped), ordering.order)
    if not has_p1(out):
        raise RuntimeError("normalized matrix fails property P1")
    return P1Form(out, flipped, ordering.order)


def to_p1_point(form: P1Form, x: Sequence[int], d: int):
    y = flip_point(x, form.flipped, d)
    return tuple(y[j] for j in form.order)


def from_p1_point(form: P1Form, y: Sequence[int], d: int):
    x = [0] * len(y)
    for k, j in enumerate(form.order):
        x[j] = y[k]
    return flip_point(x, form.flipped, d)


def prefix_path(s: Sequence[int], x_star: Sequence[int]) -> list[tuple[int, ...]]:
    """``s^k``: the first ``k`` coordinates replaced by those of ``x_star``."""
    return [tuple(x_star[:k]) + tuple(s[k:]) for k in range(len(s) + 1)]


def z_less_one_path(inst: ILSInstance, s: Sequence[int], t: Sequence[int]) -> PathWitness:
    """A path of length at most ``2n`` from ``s`` to ``t`` through the global minimum."""
    z = compute_index(inst).z
    if z >= 1:
        raise PreconditionError(f"index {z} is not below 1")
    s, t = require_feasible(inst, s, t)
    if s == t:
        return PathWitness((s,))
    form = normalize_p1(inst)
    d = inst.d
    sp, tp = to_p1_point(form, s, d), to_p1_point(form, t, d)
    x_star = horn.greedy_descent(form.instance, sp)[-1]
    steps = prefix_path(sp, x_star) + prefix_path(tp, x_star)[::-1]
    for y in steps:
        if not form.instance.is_feasible(y):
            raise RuntimeError(f"prefix vector {y} is infeasible")
    return join_paths([from_p1_point(form, y, d) for y in steps])
