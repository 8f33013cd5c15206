"""Brute-force ground truth over the explicit solution graph.

Everything here enumerates ``{0..d}^n`` and is meant for desk-scale instances.
The number of states is checked against a budget before any work is done.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from ilsreconf import accel
from ilsreconf.core import Assignment, ILSInstance, PathWitness, require_feasible

DEFAULT_MAX_STATES = 2_000_000


class BudgetExceeded(RuntimeError):
    """The state space is larger than the allowed budget."""

    def __init__(self, states: int, budget: int):
        self.states = states
        self.budget = budget
        super().__init__(f"state space of {states} exceeds budget {budget}")


def default_budget() -> int:
    env = os.environ.get("ILS_MAX_STATES")
    if env:
        return int(env)
    return DEFAULT_MAX_STATES


def state_count(inst: ILSInstance) -> int:
    return (inst.d + 1) ** inst.n


def check_budget(inst: ILSInstance, max_states: int | None = None) -> None:
    budget = default_budget() if max_states is None else max_states
    total = state_count(inst)
    if total > budget:
        raise BudgetExceeded(total, budget)


class StateSpace:
    """Feasibility mask of an instance plus index/assignment conversion."""

    def __init__(self, inst: ILSInstance):
        self.inst = inst
        self.n = inst.n
        self.d = inst.d
        self.w = accel.weights(inst.n, inst.d)
        rows = inst.int_rows
        self.mask = accel.feasible_mask([r[0] for r in rows], [r[1] for r in rows], inst.n, inst.d)

    def index(self, x: Sequence[int]) -> int:
        return sum(v * w for v, w in zip(x, self.w))

    def point(self, idx: int) -> Assignment:
        return tuple(accel.decode(idx, self.n, self.d))

    def feasible_points(self) -> list[Assignment]:
        return [self.point(i) for i, ok in enumerate(self.mask) if ok]

    def path_to(self, parent, src: int, dst: int) -> PathWitness:
        steps = [dst]
        while steps[-1] != src:
            steps.append(parent[steps[-1]])
        return PathWitness(tuple(self.point(i) for i in reversed(steps)))


@lru_cache(maxsize=16)
def _space(inst: ILSInstance) -> StateSpace:
    return StateSpace(inst)


def state_space(inst: ILSInstance, max_states: int | None = None) -> StateSpace:
    check_budget(inst, max_states)
    return _space(inst)


def neighbors(inst: ILSInstance, x: Sequence[int]) -> list[Assignment]:
    """Feasible assignments at Hamming distance one from ``x``, in lexicographic order."""
    (x,) = require_feasible(inst, x)
    smaller, larger = [], []
    for j in range(inst.n):
        rng = inst.coord_range(x, j)
        if rng is None:
            continue
        lo, hi = rng
        for v in range(lo, x[j]):
            smaller.append(x[:j] + (v,) + x[j + 1:])
    for j in range(inst.n - 1, -1, -1):
        lo, hi = inst.coord_range(x, j)
        for v in range(x[j] + 1, hi + 1):
            larger.append(x[:j] + (v,) + x[j + 1:])
    return smaller + larger


def bfs_reachable(
    inst: ILSInstance,
    s: Sequence[int],
    t: Sequence[int],
    max_states: int | None = None,
) -> tuple[bool, PathWitness | None]:
    """Exhaustive reachability; on success also a shortest witness."""
    s, t = require_feasible(inst, s, t)
    if s == t:
        return True, PathWitness((s,))
    sp = state_space(inst, max_states)
    src, dst = sp.index(s), sp.index(t)
    dist, parent = accel.bfs_tree(sp.mask, sp.n, sp.d, src, dst)
    if dist[dst] < 0:
        return False, None
    return True, sp.path_to(parent, src, dst)


def shortest_distance(inst: ILSInstance, s, t, max_states: int | None = None) -> int | None:
    ok, path = bfs_reachable(inst, s, t, max_states)
    return path.length if ok else None


def component_of(inst: ILSInstance, x: Sequence[int], max_states: int | None = None) -> list[Assignment]:
    """All assignments in the component of ``x``, in lexicographic order."""
    (x,) = require_feasible(inst, x)
    sp = state_space(inst, max_states)
    dist, _ = accel.bfs_tree(sp.mask, sp.n, sp.d, sp.index(x))
    return [sp.point(i) for i, v in enumerate(dist) if v >= 0]


def component_minimum(inst: ILSInstance, x: Sequence[int], anchor: Sequence[int] | None = None, max_states=None) -> Assignment:
    """Bottom of ``x``'s component under ``<=`` (or under ``<=_anchor`` when given).

    Found by exhaustive search; raises if the component has no unique bottom.
    """
    comp = component_of(inst, x, max_states)
    if anchor is None:
        below = lambda a, b: all(u <= v for u, v in zip(a, b))
    else:
        below = lambda a, b: all(min(p, v) <= u <= max(p, v) for p, u, v in zip(anchor, a, b))
    bottoms = [c for c in comp if all(below(c, o) for o in comp)]
    if len(bottoms) != 1:
        raise ValueError("component has no unique bottom element")
    return bottoms[0]


@dataclass
class GraphStats:
    """Component census of the solution graph."""

    space: StateSpace
    labels: object
    component_count: int
    component_sizes: list[int]
    _diam: dict = field(default_factory=dict, repr=False)

    @property
    def feasible_count(self) -> int:
        return sum(self.component_sizes)

    def members(self, k: int) -> list[int]:
        return [i for i, lab in enumerate(self.labels) if lab == k]

    def component_points(self, k: int) -> list[Assignment]:
        return [self.space.point(i) for i in self.members(k)]

    def component_index(self, x: Sequence[int]) -> int:
        return self.labels[self.space.index(x)]

    def diameter_of(self, k: int) -> int:
        """Largest BFS distance inside component ``k`` (all-sources BFS)."""
        if k not in self._diam:
            sp = self.space
            self._diam[k] = max(accel.eccentricity(sp.mask, sp.n, sp.d, i) for i in self.members(k))
        return self._diam[k]

    def is_path(self, k: int) -> bool:
        """True iff component ``k`` is a simple path (a single vertex counts)."""
        sp = self.space
        deg = accel.degrees(sp.mask, sp.n, sp.d)
        idx = self.members(k)
        if len(idx) == 1:
            return True
        degs = [deg[i] for i in idx]
        edges = sum(degs) // 2
        return max(degs) <= 2 and degs.count(1) == 2 and edges == len(idx) - 1

    @property
    def diameter(self) -> int:
        return max((self.diameter_of(k) for k in range(self.component_count)), default=0)


def graph_stats(inst: ILSInstance, max_states: int | None = None) -> GraphStats:
    sp = state_space(inst, max_states)
    labels, count = accel.component_labels(sp.mask, sp.n, sp.d)
    sizes = [0] * count
    for lab in labels:
        if lab >= 0:
            sizes[lab] += 1
    return GraphStats(sp, labels, count, sizes)
