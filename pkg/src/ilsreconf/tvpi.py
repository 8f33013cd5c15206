"""TVPI systems: at most two nonzero coefficients per row.

Their solution sets are closed under the coordinatewise median. Fixing an anchor
``t``, ``median(t, x, y)`` is a meet and induces the order ``<=_t``; each
component has a unique ``<=_t``-minimal element, reached by moving single
coordinates toward ``t``.
"""

from __future__ import annotations

from typing import Sequence

from ilsreconf.core import Assignment, ILSInstance, PathWitness, PreconditionError, require_feasible


def median(x: int, y: int, z: int) -> int:
    return sorted((x, y, z))[1]


def meet(p: int, x: int, y: int) -> int:
    """``x ⊓_p y``."""
    return median(p, x, y)


def leq(p: int, x: int, y: int) -> bool:
    """``x <=_p y``: ``x`` lies between ``p`` and ``y``."""
    return median(p, x, y) == x


def leq_vec(t: Sequence[int], x: Sequence[int], y: Sequence[int]) -> bool:
    return all(leq(p, a, b) for p, a, b in zip(t, x, y))


def median_vec(x: Sequence[int], y: Sequence[int], z: Sequence[int]) -> Assignment:
    return tuple(median(a, b, c) for a, b, c in zip(x, y, z))


def is_tvpi(inst: ILSInstance) -> bool:
    return all(sum(1 for a in row if a) <= 2 for row in inst.A)


def _require_tvpi(inst: ILSInstance) -> None:
    if not is_tvpi(inst):
        raise PreconditionError("instance is not TVPI (a row has three or more nonzeros)")


def greedy_toward(
    inst: ILSInstance,
    s: Sequence[int],
    t: Sequence[int],
    box: tuple[Sequence[int], Sequence[int]] | None = None,
    order: Sequence[int] | None = None,
) -> list[Assignment]:
    """Vertices of the greedy ``t``-monotone walk from ``s``.

    Scans coordinates with ``x_j != t_j`` in ``order`` (default increasing); the
    first that can move toward ``t_j`` jumps as far toward it as feasibility
    allows, then the scan restarts. ``box = (lo, hi)`` confines every coordinate.
    """
    x = list(s)
    order = range(inst.n) if order is None else order
    steps = [tuple(x)]
    moved = True
    while moved:
        moved = False
        for j in order:
            if x[j] == t[j]:
                continue
            lo, hi = inst.coord_range(x, j)
            if box is not None:
                lo = max(lo, box[0][j])
                hi = min(hi, box[1][j])
            target = max(lo, t[j]) if t[j] < x[j] else min(hi, t[j])
            if target != x[j]:
                x[j] = target
                steps.append(tuple(x))
                moved = True
                break
    return steps


def t_descend(inst: ILSInstance, s: Sequence[int], t: Sequence[int]) -> tuple[Assignment, PathWitness]:
    """The ``<=_t``-minimal solution of ``s``'s component and a ``t``-monotone path to it."""
    _require_tvpi(inst)
    s, t = require_feasible(inst, s, t)
    steps = greedy_toward(inst, s, t)
    return steps[-1], PathWitness(tuple(steps))


def tvpi_reconfigure(inst: ILSInstance, s: Sequence[int], t: Sequence[int]) -> tuple[bool, PathWitness | None]:
    """``s`` reaches ``t`` iff the ``t``-descent from ``s`` ends at ``t``."""
    x_star, path = t_descend(inst, s, t)
    if x_star != tuple(t):
        return False, None
    return True, path


def is_t_monotone(path: PathWitness, t: Sequence[int]) -> bool:
    """Every step moves exactly one coordinate strictly toward ``t`` in ``<=_t``."""
    for a, b in zip(path.steps, path.steps[1:]):
        diff = [j for j in range(len(a)) if a[j] != b[j]]
        if len(diff) != 1:
            return False
        j = diff[0]
        if not leq(t[j], b[j], a[j]):
            return False
    return True
