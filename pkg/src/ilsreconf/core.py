"""Exact-rational ILS data model, feasibility, Hamming moves and file formats."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

Assignment = tuple[int, ...]


class ParseError(ValueError):
    """Malformed instance or assignment text."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class InfeasibleError(ValueError):
    """An assignment that had to be feasible is not."""


class PreconditionError(ValueError):
    """The instance is outside the class a solver handles."""


def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating-point coefficients are not accepted; use int, Fraction or 'p/q'")
    return Fraction(value)


@dataclass(frozen=True)
class ILSInstance:
    """``A x >= b`` over the integer box ``{0, ..., d}^n``.

    ``A`` and ``b`` are stored as tuples of :class:`fractions.Fraction` (always in
    lowest terms). ``n`` is explicit so that row-less instances keep their width.
    """

    A: tuple[tuple[Fraction, ...], ...]
    b: tuple[Fraction, ...]
    d: int
    n: int = field(default=-1)

    def __post_init__(self):
        A = tuple(tuple(_to_fraction(a) for a in row) for row in self.A)
        b = tuple(_to_fraction(v) for v in self.b)
        n = self.n
        if n < 0:
            if not A:
                raise ValueError("n must be given for an instance without rows")
            n = len(A[0])
        if len(A) != len(b):
            raise ValueError(f"A has {len(A)} rows but b has {len(b)} entries")
        for i, row in enumerate(A):
            if len(row) != n:
                raise ValueError(f"row {i} has {len(row)} entries, expected {n}")
        if n < 1:
            raise ValueError("n must be at least 1")
        if int(self.d) != self.d or self.d < 1:
            raise ValueError("d must be a positive integer")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "d", int(self.d))

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], rhs: Iterable, d: int, n: int | None = None) -> "ILSInstance":
        return cls(tuple(tuple(r) for r in rows), tuple(rhs), d, -1 if n is None else n)

    @property
    def m(self) -> int:
        return len(self.A)

    @cached_property
    def int_rows(self) -> tuple[tuple[tuple[int, ...], int], ...]:
        """Rows scaled to coprime integers: ``(coefficients, rhs)`` per row.

        Scaling by the positive lcm of the denominators preserves the feasible set.
        """
        out = []
        for row, rhs in zip(self.A, self.b):
            lcm = rhs.denominator
            for a in row:
                lcm = lcm * a.denominator // math.gcd(lcm, a.denominator)
            coeffs = [int(a * lcm) for a in row]
            c0 = int(rhs * lcm)
            g = 0
            for c in coeffs:
                g = math.gcd(g, c)
            g = math.gcd(g, c0)
            if g > 1:
                coeffs = [c // g for c in coeffs]
                c0 //= g
            out.append((tuple(coeffs), c0))
        return tuple(out)

    @cached_property
    def column_rows(self) -> tuple[tuple[int, ...], ...]:
        """For every column, the indices of rows where it is nonzero."""
        cols = [[] for _ in range(self.n)]
        for i, row in enumerate(self.A):
            for j, a in enumerate(row):
                if a:
                    cols[j].append(i)
        return tuple(tuple(c) for c in cols)

    def is_feasible(self, x: Sequence[int]) -> bool:
        d = self.d
        for v in x:
            if v < 0 or v > d:
                return False
        for coeffs, rhs in self.int_rows:
            if sum(c * v for c, v in zip(coeffs, x) if c) < rhs:
                return False
        return True

    def coord_range(self, x: Sequence[int], j: int) -> tuple[int, int] | None:
        """Values ``v`` for which ``x`` with ``x[j] = v`` stays feasible.

        Every row is a half-line in ``x[j]`` once the other coordinates are fixed,
        so the answer is an interval ``(lo, hi)``; ``None`` if it is empty. Rows not
        involving ``j`` are assumed satisfied.
        """
        lo, hi = 0, self.d
        rows = self.int_rows
        for i in self.column_rows[j]:
            coeffs, rhs = rows[i]
            c = coeffs[j]
            rest = rhs - sum(a * v for k, (a, v) in enumerate(zip(coeffs, x)) if a and k != j)
            if c > 0:
                # c * v >= rest
                lo = max(lo, -((-rest) // c))
            else:
                # c * v >= rest  <=>  v <= rest / c (c < 0)
                hi = min(hi, rest // c)
            if lo > hi:
                return None
        return lo, hi

    def restrict(self, rows: Sequence[int], cols: Sequence[int], rhs_shift: Sequence[Fraction] | None = None) -> "ILSInstance":
        """Sub-system ``A[rows, cols] x >= b[rows] - rhs_shift``."""
        if not cols:
            raise ValueError("a sub-system needs at least one column")
        A = tuple(tuple(self.A[i][j] for j in cols) for i in rows)
        b = [self.b[i] for i in rows]
        if rhs_shift is not None:
            b = [bi - s for bi, s in zip(b, rhs_shift)]
        return ILSInstance(A, tuple(b), self.d, len(cols))


@dataclass(frozen=True)
class FeasibilityReport:
    feasible: bool
    violated_rows: tuple[int, ...]
    slacks: tuple[Fraction, ...]


@dataclass(frozen=True)
class PathWitness:
    """A walk in the solution graph, listed vertex by vertex (endpoints included).

    ``length`` counts edges, so a witness for ``s == t`` has ``steps == (s,)`` and
    length zero.
    """

    steps: tuple[Assignment, ...]

    @property
    def length(self) -> int:
        return max(len(self.steps) - 1, 0)

    @property
    def start(self) -> Assignment:
        return self.steps[0]

    @property
    def end(self) -> Assignment:
        return self.steps[-1]

    def reversed(self) -> "PathWitness":
        return PathWitness(tuple(reversed(self.steps)))

    def __iter__(self):
        return iter(self.steps)


def hamming(x: Sequence[int], y: Sequence[int]) -> int:
    return sum(1 for a, b in zip(x, y) if a != b)


def join_paths(*parts: Sequence[Assignment]) -> PathWitness:
    """Concatenate vertex lists, dropping repeated vertices at the seams."""
    out: list[Assignment] = []
    for part in parts:
        for v in part:
            v = tuple(v)
            if not out or out[-1] != v:
                out.append(v)
    return PathWitness(tuple(out))


def validate_path(inst: ILSInstance, path, s: Sequence[int] | None = None, t: Sequence[int] | None = None) -> bool:
    """True iff every step is feasible and consecutive steps differ in exactly one coordinate."""
    steps = list(path.steps if isinstance(path, PathWitness) else path)
    if not steps:
        return False
    if s is not None and tuple(steps[0]) != tuple(s):
        return False
    if t is not None and tuple(steps[-1]) != tuple(t):
        return False
    for k, x in enumerate(steps):
        if len(x) != inst.n or not inst.is_feasible(x):
            return False
        if k and hamming(steps[k - 1], x) != 1:
            return False
    return True


def _check_point(inst: ILSInstance, x: Sequence[int]) -> Assignment:
    if len(x) != inst.n:
        raise ValueError(f"assignment has {len(x)} entries, instance has n={inst.n}")
    x = tuple(int(v) for v in x)
    for j, v in enumerate(x):
        if v < 0 or v > inst.d:
            raise ValueError(f"x[{j}] = {v} outside [0, {inst.d}]")
    return x


def require_feasible(inst: ILSInstance, *points: Sequence[int]) -> list[Assignment]:
    out = []
    for x in points:
        x = _check_point(inst, x)
        if not inst.is_feasible(x):
            raise InfeasibleError(f"{x} is not a feasible solution")
        out.append(x)
    return out


def evaluate(inst: ILSInstance, x: Sequence[int]) -> FeasibilityReport:
    x = _check_point(inst, x)
    slacks = tuple(sum((a * v for a, v in zip(row, x)), Fraction(0)) - b for row, b in zip(inst.A, inst.b))
    violated = tuple(i for i, s in enumerate(slacks) if s < 0)
    return FeasibilityReport(not violated, violated, slacks)


def flip_point(x: Sequence[int], cols: Iterable[int], d: int) -> Assignment:
    cols = set(cols)
    return tuple(d - v if j in cols else v for j, v in enumerate(x))


def flip_columns(inst: ILSInstance, cols: Iterable[int]) -> ILSInstance:
    """Substitute ``x_j -> d - x_j`` for every ``j`` in ``cols`` (0-based)."""
    cols = set(cols)
    if not cols:
        return inst
    d = inst.d
    A = []
    b = []
    for row, bi in zip(inst.A, inst.b):
        shift = sum((row[j] for j in cols), Fraction(0))
        A.append(tuple(-a if j in cols else a for j, a in enumerate(row)))
        b.append(bi - d * shift)
    return ILSInstance(tuple(A), tuple(b), d, inst.n)


def flip_variable(inst: ILSInstance, j: int, points: Iterable[Sequence[int]] = ()) -> tuple[ILSInstance, list[Assignment]]:
    """Polarity change of column ``j`` (1-based): ``(A', b - d*A_j, d)`` and mapped points."""
    if not 1 <= j <= inst.n:
        raise IndexError(f"column {j} out of range 1..{inst.n}")
    col = j - 1
    return flip_columns(inst, [col]), [flip_point(p, [col], inst.d) for p in points]


def permute_columns(inst: ILSInstance, order: Sequence[int]) -> ILSInstance:
    """New column ``k`` is old column ``order[k]``."""
    A = tuple(tuple(row[j] for j in order) for row in inst.A)
    return ILSInstance(A, inst.b, inst.d, inst.n)


# ---------------------------------------------------------------- file formats


def _parse_rational(tok: str, lineno: int) -> Fraction:
    try:
        if "/" in tok:
            p, q = tok.split("/")
            return Fraction(int(p), int(q))
        return Fraction(int(tok))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not an integer or p/q rational: {tok!r}", lineno) from None


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_instance(text: str) -> ILSInstance:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty instance file", 1) from None
    parts = header.split()
    if len(parts) != 3:
        raise ParseError("header must be 'm n d'", lineno)
    try:
        m, n, d = (int(p) for p in parts)
    except ValueError:
        raise ParseError("header must hold three integers", lineno) from None
    if m < 0 or n < 1:
        raise ParseError("need m >= 0 and n >= 1", lineno)
    if d < 1:
        raise ParseError("d must be at least 1", lineno)
    A, b = [], []
    for lineno, line in lines:
        if len(A) == m:
            raise ParseError(f"more than m={m} rows", lineno)
        toks = line.split()
        if len(toks) != n + 2 or toks[n] != ">=":
            raise ParseError(f"expected {n} coefficients, '>=' and a right-hand side", lineno)
        A.append(tuple(_parse_rational(tk, lineno) for tk in toks[:n]))
        b.append(_parse_rational(toks[n + 1], lineno))
    if len(A) != m:
        raise ParseError(f"expected {m} rows, found {len(A)}", None)
    return ILSInstance(tuple(A), tuple(b), d, n)


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def serialize_instance(inst: ILSInstance) -> str:
    out = [f"{inst.m} {inst.n} {inst.d}"]
    for row, bi in zip(inst.A, inst.b):
        out.append(" ".join(_fmt(a) for a in row) + " >= " + _fmt(bi))
    return "\n".join(out) + "\n"


def parse_assignment(text: str, n: int | None = None) -> Assignment:
    toks = [tk for _, line in _content_lines(text) for tk in line.split()]
    try:
        x = tuple(int(tk) for tk in toks)
    except ValueError:
        raise ParseError(f"assignment must be integers: {text.strip()!r}") from None
    if n is not None and len(x) != n:
        raise ParseError(f"assignment has {len(x)} entries, expected {n}")
    return x


def format_assignment(x: Sequence[int]) -> str:
    return " ".join(str(v) for v in x)


def serialize_path(path: PathWitness) -> str:
    return "".join(format_assignment(x) + "\n" for x in path.steps)


def parse_path(text: str) -> PathWitness:
    steps = []
    for lineno, line in _content_lines(text):
        try:
            steps.append(tuple(int(tk) for tk in line.split()))
        except ValueError:
            raise ParseError("path lines must be integer vectors", lineno) from None
    return PathWitness(tuple(steps))
