"""Horn systems: at most one positive coefficient per row.

Their solution sets are closed under coordinatewise min, so each component has
a unique minimal element and every solution reaches it by decreasing one
coordinate at a time.
"""

from __future__ import annotations

from typing import Sequence

from ilsreconf.core import Assignment, ILSInstance, PathWitness, PreconditionError, join_paths, require_feasible


def is_horn(inst: ILSInstance) -> bool:
    return all(sum(1 for a in row if a > 0) <= 1 for row in inst.A)


def _require_horn(inst: ILSInstance) -> None:
    if not is_horn(inst):
        raise PreconditionError("instance is not Horn (a row has two or more positive entries)")


def greedy_descent(
    inst: ILSInstance,
    s: Sequence[int],
    lower: Sequence[int] | None = None,
    order: Sequence[int] | None = None,
) -> list[Assignment]:
    """Vertices visited by the greedy decrease, starting at ``s``.

    Scans coordinates in ``order`` (default increasing index); the first one that
    can decrease drops to its smallest feasible value in one edge, then the scan
    restarts. ``lower`` adds the box constraint ``x >= lower``. Assumes ``s`` is
    feasible.
    """
    x = list(s)
    order = range(inst.n) if order is None else order
    steps = [tuple(x)]
    moved = True
    while moved:
        moved = False
        for j in order:
            lo, _ = inst.coord_range(x, j)
            if lower is not None and lower[j] > lo:
                lo = lower[j]
            if lo < x[j]:
                x[j] = lo
                steps.append(tuple(x))
                moved = True
                break
    return steps


def descend_to_min(inst: ILSInstance, s: Sequence[int]) -> tuple[Assignment, PathWitness]:
    """Unique minimal solution of ``s``'s component and a monotone path to it."""
    _require_horn(inst)
    (s,) = require_feasible(inst, s)
    steps = greedy_descent(inst, s)
    return steps[-1], PathWitness(tuple(steps))


def horn_reconfigure(inst: ILSInstance, s: Sequence[int], t: Sequence[int]) -> tuple[bool, PathWitness | None]:
    """``s`` and ``t`` are connected iff their component minima agree."""
    _require_horn(inst)
    s, t = require_feasible(inst, s, t)
    if s == t:
        return True, PathWitness((s,))
    s_min, ps = descend_to_min(inst, s)
    t_min, pt = descend_to_min(inst, t)
    if s_min != t_min:
        return False, None
    return True, join_paths(ps.steps, pt.reversed().steps)


def is_monotone(path: PathWitness) -> bool:
    """Every step decreases exactly one coordinate."""
    for a, b in zip(path.steps, path.steps[1:]):
        diff = [(u, v) for u, v in zip(a, b) if u != v]
        if len(diff) != 1 or diff[0][1] > diff[0][0]:
            return False
    return True
