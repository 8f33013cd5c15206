"""Unit systems (entries in {0, +1, -1}): answers in time polynomial in log d.

Paths here can be exponentially long in the input size, so witnesses are kept
as :class:`CompressedPath`, a list of repeated moves.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Sequence

from ilsreconf import horn, tvpi
from ilsreconf.core import (
    Assignment,
    ILSInstance,
    PathWitness,
    PreconditionError,
    flip_columns,
    flip_point,
    require_feasible,
)
from ilsreconf.ils1 import compute_qh_partition, horn_part, tvpi_part


# ---------------------------------------------------------------- compressed paths


@dataclass(frozen=True)
class Move:
    """Repeat ``repeat`` times: step each coordinate of ``coords`` by ``dirs`` (in order)."""

    coords: tuple[int, ...]
    dirs: tuple[int, ...]
    repeat: int

    def __post_init__(self):
        if len(self.coords) != len(self.dirs):
            raise ValueError("one direction per coordinate")
        if len(set(self.coords)) != len(self.coords):
            raise ValueError("a move lists each coordinate once")
        if self.repeat < 0 or any(d not in (1, -1) for d in self.dirs):
            raise ValueError("bad move")

    def reversed(self) -> "Move":
        return Move(tuple(reversed(self.coords)), tuple(-d for d in reversed(self.dirs)), self.repeat)


@dataclass(frozen=True)
class CompressedPath:
    """Run-length form of a walk that changes one coordinate by one unit per edge."""

    start: Assignment
    moves: tuple[Move, ...] = ()
    iterations: int = field(default=0, compare=False)

    @property
    def length(self) -> int:
        return sum(len(mv.coords) * mv.repeat for mv in self.moves)

    @property
    def end(self) -> Assignment:
        x = list(self.start)
        for mv in self.moves:
            for j, d in zip(mv.coords, mv.dirs):
                x[j] += d * mv.repeat
        return tuple(x)

    def reversed(self) -> "CompressedPath":
        return CompressedPath(self.end, tuple(mv.reversed() for mv in reversed(self.moves)))

    def then(self, other: "CompressedPath") -> "CompressedPath":
        if other.start != self.end:
            raise ValueError("paths do not meet")
        return CompressedPath(self.start, self.moves + other.moves)

    def iter_steps(self):
        x = list(self.start)
        yield tuple(x)
        for mv in self.moves:
            for _ in range(mv.repeat):
                for j, d in zip(mv.coords, mv.dirs):
                    x[j] += d
                    yield tuple(x)

    def expand(self, limit: int = 1_000_000) -> PathWitness:
        if self.length > limit:
            raise ValueError(f"expanded path would have {self.length} edges (limit {limit})")
        return PathWitness(tuple(self.iter_steps()))

    def serialize(self) -> str:
        return "".join(format_move(mv) + "\n" for mv in self.moves)


def format_move(mv: Move) -> str:
    coords = ",".join(str(j + 1) for j in mv.coords)
    dirs = ",".join("+" if d > 0 else "-" for d in mv.dirs)
    return f"U={{{coords}}} dir={{{dirs}}} p={mv.repeat}"


_MOVE_RE = re.compile(r"^U=\{([0-9,\s]*)\}\s+dir=\{([+\-,\s]*)\}\s+p=(\d+)$")


def parse_compressed(text: str, start: Sequence[int]) -> CompressedPath:
    moves = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _MOVE_RE.match(line)
        if not m:
            from ilsreconf.core import ParseError

            raise ParseError(f"not a move: {line!r}", lineno)
        coords = tuple(int(c) - 1 for c in m.group(1).replace(" ", "").split(",") if c)
        dirs = tuple(1 if c == "+" else -1 for c in m.group(2).replace(" ", "").split(",") if c)
        moves.append(Move(coords, dirs, int(m.group(3))))
    return CompressedPath(tuple(start), tuple(moves))


def validate_compressed(inst: ILSInstance, path: CompressedPath, s=None, t=None) -> bool:
    """Exact check that every expanded vertex is feasible, without full expansion.

    Inside one move, the k-th vertex of repetition r is affine in r, and so is
    every row's left-hand side; checking the first and last repetition covers
    all of them.
    """
    if s is not None and tuple(s) != path.start:
        return False
    if t is not None and tuple(t) != path.end:
        return False
    if len(path.start) != inst.n or not inst.is_feasible(path.start):
        return False
    x = list(path.start)
    for mv in path.moves:
        if mv.repeat == 0:
            continue
        checks = [0, mv.repeat - 1] if mv.repeat > 1 else [0]
        for r in checks:
            y = list(x)
            for j, d in zip(mv.coords, mv.dirs):
                y[j] += d * r
            for j, d in zip(mv.coords, mv.dirs):
                y[j] += d
                if not inst.is_feasible(y):
                    return False
        for j, d in zip(mv.coords, mv.dirs):
            x[j] += d * mv.repeat
    return True


def _flip_moves(moves, flipped) -> tuple[Move, ...]:
    return tuple(
        Move(mv.coords, tuple(-d if j in flipped else d for j, d in zip(mv.coords, mv.dirs)), mv.repeat)
        for mv in moves
    )


def _embed_moves(moves, cols) -> tuple[Move, ...]:
    return tuple(Move(tuple(cols[j] for j in mv.coords), mv.dirs, mv.repeat) for mv in moves)


# ---------------------------------------------------------------- unit Horn


def is_unit(inst: ILSInstance) -> bool:
    return all(a in (0, 1, -1) for row in inst.A for a in row)


def _unit_rows(inst: ILSInstance) -> list[tuple[tuple[int, ...], int]]:
    # with integer coefficients and integer x, A_i x >= b_i iff A_i x >= ceil(b_i)
    return [(tuple(int(a) for a in row), math.ceil(b)) for row, b in zip(inst.A, inst.b)]


@dataclass(frozen=True)
class UnitHornTrace:
    minimum: Assignment
    path: CompressedPath
    iterations: int


def unit_horn_trace(inst: ILSInstance, s: Sequence[int]) -> UnitHornTrace:
    """Unique minimal solution of ``s``'s component by repeated depth-one descents."""
    if not is_unit(inst) or not horn.is_horn(inst):
        raise PreconditionError("instance is not unit Horn")
    (s,) = require_feasible(inst, s)
    rows = _unit_rows(inst)
    n = inst.n
    V = set(range(n))
    T: set[int] = set()
    u = list(s)
    moves = []
    iterations = 0
    while T != V:
        iterations += 1
        if iterations > n + 1:
            raise RuntimeError("unit Horn loop did not settle within n + 1 rounds")
        lower = [u[j] if j in T else u[j] - 1 for j in range(n)]
        steps = horn.greedy_descent(inst, u, lower)
        order = [next(j for j in range(n) if a[j] != b[j]) for a, b in zip(steps, steps[1:])]
        U = set(order)
        if U:
            p = min(u[j] for j in U)
            for coeffs, b in rows:
                delta = sum(coeffs[j] for j in U)
                if delta > 0:
                    slack = sum(c * v for c, v in zip(coeffs, u)) - b
                    p = min(p, slack // delta)
            for j in U:
                u[j] -= p
            if p:
                moves.append(Move(tuple(order), (-1,) * len(order), p))
        W = set()
        for j in U:
            if u[j] == 0:
                W.add(j)
                continue
            for coeffs, b in rows:
                if coeffs[j] != 1:
                    continue
                if any(c == -1 and k in U for k, c in enumerate(coeffs)):
                    continue
                if sum(c * v for c, v in zip(coeffs, u)) == b:
                    W.add(j)
                    break
        T = (V - U) | W
    path = CompressedPath(s, tuple(moves), iterations)
    return UnitHornTrace(tuple(u), path, iterations)


def unit_horn_min(inst: ILSInstance, s: Sequence[int]) -> tuple[Assignment, CompressedPath]:
    tr = unit_horn_trace(inst, s)
    return tr.minimum, tr.path


def unit_horn_reconfigure(inst: ILSInstance, s, t) -> tuple[bool, CompressedPath | None]:
    """Compare the component minima; on yes, descend from ``s`` and climb back up to ``t``."""
    s, t = require_feasible(inst, s, t)
    if s == t:
        return True, CompressedPath(s)
    ms, ps = unit_horn_min(inst, s)
    mt, pt = unit_horn_min(inst, t)
    if ms != mt:
        return False, None
    return True, ps.then(pt.reversed())


# ---------------------------------------------------------------- UTVPI ladder


def ladder_rungs(s: Sequence[int], t: Sequence[int]) -> list[Assignment]:
    """``u^i = max(s - i, t)`` for ``i = 0..max|s - t|`` (assumes ``s >= t``)."""
    p = max((a - b for a, b in zip(s, t)), default=0)
    return [tuple(max(a - i, b) for a, b in zip(s, t)) for i in range(p + 1)]


def first_rung_order(inst: ILSInstance, s: Sequence[int], t: Sequence[int]) -> list[int] | None:
    """Coordinate order of a monotone walk ``u^0 -> u^1``, or ``None`` if ``u^1`` is unreachable.

    Assumes ``s >= t``. The walk stays in the box ``[u^1, u^0]``.
    """
    u0 = tuple(s)
    u1 = tuple(max(a - 1, b) for a, b in zip(s, t))
    if not inst.is_feasible(u1):
        return None
    steps = tvpi.greedy_toward(inst, u0, u1, box=(u1, u0))
    if steps[-1] != u1:
        return None
    return [next(j for j in range(inst.n) if a[j] != b[j]) for a, b in zip(steps, steps[1:])]


def ladder_moves(order: Sequence[int], s: Sequence[int], t: Sequence[int]) -> tuple[Move, ...]:
    """Group the rungs into moves: rung ``i`` replays ``order`` restricted to gaps above ``i``."""
    gap = [a - b for a, b in zip(s, t)]
    moves = []
    done = 0
    for g in sorted(set(g for g in gap if g > 0)):
        active = tuple(j for j in order if gap[j] >= g)
        moves.append(Move(active, (-1,) * len(active), g - done))
        done = g
    return tuple(moves)


def utvpi_reconfigure(inst: ILSInstance, s: Sequence[int], t: Sequence[int]) -> tuple[bool, CompressedPath | None]:
    """Reachability on a unit TVPI system via the first rung of the ladder."""
    if not is_unit(inst) or not tvpi.is_tvpi(inst):
        raise PreconditionError("instance is not unit TVPI")
    s, t = require_feasible(inst, s, t)
    if s == t:
        return True, CompressedPath(s)
    flipped = frozenset(j for j in range(inst.n) if s[j] < t[j])
    norm = flip_columns(inst, flipped)
    sn, tn = flip_point(s, flipped, inst.d), flip_point(t, flipped, inst.d)
    order = first_rung_order(norm, sn, tn)
    if order is None:
        return False, None
    moves = _flip_moves(ladder_moves(order, sn, tn), flipped)
    return True, CompressedPath(s, moves)


# ---------------------------------------------------------------- unit index one


def unit_ils1_solve(inst: ILSInstance, s: Sequence[int], t: Sequence[int]) -> tuple[bool, CompressedPath | None]:
    """Index-one skeleton with the unit Horn and unit TVPI solvers inside."""
    if not is_unit(inst):
        raise PreconditionError("instance is not unit")
    s, t = require_feasible(inst, s, t)
    if s == t:
        return True, CompressedPath(s)
    part = compute_qh_partition(inst)
    sn, tn = part.to_normal(s), part.to_normal(t)
    Q, H = sorted(part.Q), sorted(part.H)

    ih = horn_part(part)
    if ih is not None:
        hs = unit_horn_trace(ih, [sn[j] for j in H])
        ht = unit_horn_trace(ih, [tn[j] for j in H])
        if hs.minimum != ht.minimum:
            return False, None
        x_h = hs.minimum
        down = _embed_moves(hs.path.moves, H)
        up = _embed_moves(ht.path.reversed().moves, H)
    else:
        x_h, down, up = (), (), ()

    iq = tvpi_part(part, x_h)
    mid = ()
    if iq is not None:
        ok, qpath = utvpi_reconfigure(iq, [sn[j] for j in Q], [tn[j] for j in Q])
        if not ok:
            return False, None
        mid = _embed_moves(qpath.moves, Q)

    moves = _flip_moves(down + mid + up, part.flipped)
    path = CompressedPath(s, moves)
    assert path.end == t
    return True, path
