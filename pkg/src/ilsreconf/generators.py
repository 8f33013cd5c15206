"""Instance families, hardness gadgets, CNF encoding and random instance generators."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ilsreconf.core import Assignment, ILSInstance, ParseError, flip_columns, permute_columns

# ---------------------------------------------------------------- fixed families


def gen_chain(n: int, d: int) -> ILSInstance:
    """``x_j - x_{j+1} >= 0`` and ``x_{j+1} - x_j >= -1`` for consecutive pairs."""
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    rows, rhs = [], []
    for j in range(n - 1):
        r = [0] * n
        r[j], r[j + 1] = 1, -1
        rows.append(r)
        rhs.append(0)
    for j in range(n - 1):
        r = [0] * n
        r[j], r[j + 1] = -1, 1
        rows.append(r)
        rhs.append(-1)
    return ILSInstance.from_rows(rows, rhs, d)


def gen_hypercube(n: int) -> ILSInstance:
    """``-x_j >= -1`` over ``{0, 1}^n``: every vertex of the cube is feasible."""
    if n < 1:
        raise ValueError("need n >= 1")
    rows = [[-1 if k == j else 0 for k in range(n)] for j in range(n)]
    return ILSInstance.from_rows(rows, [-1] * n, 1)


def gen_equality_chain(d: int) -> ILSInstance:
    """``x_1 - x_2 >= 0`` and ``-x_1 + x_2 >= 0``: only the diagonal is feasible."""
    if d < 1:
        raise ValueError("need d >= 1")
    return ILSInstance.from_rows([[1, -1], [-1, 1]], [0, 0], d)


def gen_affine_gadget() -> ILSInstance:
    """Odd-parity points of ``{0,1}^3`` as four inequalities."""
    return ILSInstance.from_rows(
        [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]], [1, -1, -1, -1], 1
    )


# ---------------------------------------------------------------- CNF


@dataclass(frozen=True)
class CnfFormula:
    """Clauses as tuples of nonzero DIMACS literals (``-k`` is the negation of variable ``k``)."""

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for c in self.clauses:
            if not c:
                raise ValueError("empty clause")
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range 1..{self.num_vars}")

    def satisfied_by(self, x: Sequence[int]) -> bool:
        return all(any((x[abs(l) - 1] == 1) == (l > 0) for l in c) for c in self.clauses)


AFFINE_CNF = CnfFormula(3, ((1, 2, 3), (1, -2, -3), (-1, 2, -3), (-1, -2, 3)))


def parse_dimacs(text: str) -> CnfFormula:
    num_vars = None
    clauses, current = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("problem line must be 'p cnf VARS CLAUSES'", lineno)
            num_vars = int(parts[2])
            continue
        if num_vars is None:
            raise ParseError("clause before the problem line", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", lineno) from None
            if lit == 0:
                if current:
                    clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if current:
        clauses.append(tuple(current))
    if num_vars is None:
        raise ParseError("missing problem line")
    return CnfFormula(num_vars, tuple(clauses))


def write_dimacs(phi: CnfFormula) -> str:
    out = [f"p cnf {phi.num_vars} {len(phi.clauses)}"]
    out += [" ".join(str(l) for l in c) + " 0" for c in phi.clauses]
    return "\n".join(out) + "\n"


def sat_to_ils(phi: CnfFormula) -> ILSInstance:
    """One row per clause over ``{0,1}``: ``sum_{L+} x_j - sum_{L-} x_j >= 1 - |L-|``."""
    rows, rhs = [], []
    for c in phi.clauses:
        r = [0] * phi.num_vars
        neg = 0
        for lit in c:
            if lit > 0:
                r[lit - 1] += 1
            else:
                r[-lit - 1] -= 1
                neg += 1
        rows.append(r)
        rhs.append(1 - neg)
    return ILSInstance.from_rows(rows, rhs, 1, phi.num_vars)


# ---------------------------------------------------------------- gadgets


@dataclass(frozen=True)
class GadgetParams:
    gamma: Fraction

    def __post_init__(self):
        object.__setattr__(self, "gamma", Fraction(self.gamma))
        if self.gamma <= 1:
            raise ValueError("gamma must exceed 1")

    @property
    def epsilon(self) -> Fraction:
        return self.gamma - 1

    @property
    def t(self) -> int:
        return math.ceil(1 / self.epsilon)


def clause_gadget(l1: int, l2: int, l3: int, y: Sequence[int], z: Sequence[int]) -> list[tuple[int, ...]]:
    """The clause chain replacing ``(l1 v l2 v l3)``; ``y``/``z`` are the auxiliary variable ids."""
    t = len(y) - 1
    out = [(l1, -y[0])]
    out += [(y[k], -y[k + 1]) for k in range(t)]
    out.append((y[t], l2, z[t]))
    out += [(-z[k + 1], z[k]) for k in range(t - 1, -1, -1)]
    out.append((-z[0], l3))
    return out


def expand_sat_gadget(phi3: CnfFormula, params: GadgetParams) -> CnfFormula:
    """Replace every 3-clause by its chain; auxiliaries go after the originals, clause by clause."""
    t = params.t
    nxt = phi3.num_vars + 1
    clauses = []
    for c in phi3.clauses:
        if len(c) != 3:
            raise ValueError(f"clause {c} does not have three literals")
        if len({abs(l) for l in c}) != 3:
            raise ValueError(f"clause {c} repeats a variable")
        y = list(range(nxt, nxt + t + 1))
        z = list(range(nxt + t + 1, nxt + 2 * t + 2))
        nxt += 2 * t + 2
        clauses += clause_gadget(c[0], c[1], c[2], y, z)
    return CnfFormula(nxt - 1, tuple(clauses))


@dataclass(frozen=True)
class DiameterFamily:
    instance: ILSInstance
    s: Assignment
    t: Assignment
    expected_length: int  # from the recurrence l(n) = 3 l(n-2) + 4, l(2) = 2d


def recurrence_length(n: int, d: int) -> int:
    length = 2 * d
    for _ in range(4, n + 1, 2):
        length = 3 * length + 4
    return length


def closed_form_length(n: int, d: int) -> int:
    """The closed form stated alongside the recurrence; it disagrees with it."""
    return 2 * (d + 2) * 3 ** (n // 2 - 1) - 2


def gen_diameter_family(n: int, d: int) -> DiameterFamily:
    """Three-variable-per-row system whose component of ``0`` is a long path."""
    if n < 2 or n % 2:
        raise ValueError("n must be even and at least 2")
    if d < 2:
        raise ValueError("d must be at least 2")
    rows: list[dict[int, int]] = [{0: -1, 1: 1}, {0: 1, 1: -1}]
    rhs = [0, -1]
    for k in range(4, n + 1, 2):
        a, b = k - 2, k - 1  # 0-based x_{k-1}, x_k
        rows += [{a: -1, b: 1}, {a: 1, b: -1}]
        rhs += [0, -1]
        for j in (0, 1):
            rows.append({j: 1, a: 2 * d, b: -d})
            rhs.append(0)
        for j in range(2, k - 2):
            rows.append({j: 1, a: 4, b: -2})
            rhs.append(0)
        for j in range(k - 2):
            rows.append({j: -1, a: 2, b: -4})
            rhs.append(-6)
    dense = [[r.get(j, 0) for j in range(n)] for r in rows]
    inst = ILSInstance.from_rows(dense, rhs, d)
    s = (0,) * n
    t = (d, d) + (2,) * (n - 2)
    return DiameterFamily(inst, s, t, recurrence_length(n, d))


def expand_ils_gadget(fam, params: GadgetParams) -> ILSInstance:
    """Replace each row ``a1 x_i1 + a2 x_i2 + a3 x_i3 >= b`` by a chain with ``2(t+1)`` auxiliaries.

    The nonzero entries of a row take the roles ``i1, i2, i3`` in column order;
    rows with fewer than three nonzeros get coefficient 0 in the missing roles
    (the resulting all-zero rows are kept). Accepts a :class:`DiameterFamily` or
    a bare instance.
    """
    inst = fam.instance if isinstance(fam, DiameterFamily) else fam
    t = params.t
    n = inst.n
    aux = 2 * (t + 1) * inst.m
    N = n + aux
    rows, rhs = [], []
    base = n
    for row, b in zip(inst.A, inst.b):
        nz = [j for j, a in enumerate(row) if a]
        if len(nz) > 3:
            raise ValueError("a row has more than three nonzeros")
        roles = [(j, row[j]) for j in nz] + [(None, Fraction(0))] * (3 - len(nz))
        (i1, a1), (i2, a2), (i3, a3) = roles
        y = list(range(base, base + t + 1))
        z = list(range(base + t + 1, base + 2 * t + 2))
        base += 2 * t + 2

        def add(entries, r):
            vec = [Fraction(0)] * N
            for j, c in entries:
                if j is not None:
                    vec[j] += c
            rows.append(vec)
            rhs.append(Fraction(r))

        add([(i1, a1), (y[0], -a1)], 0)
        for k in range(t):
            add([(y[k], a1), (y[k + 1], -a1)], 0)
        add([(y[t], a1), (i2, a2), (z[t], a3)], b)
        for k in range(t):
            add([(z[k + 1], -a3), (z[k], a3)], 0)
        add([(z[0], -a3), (i3, a3)], 0)
    return ILSInstance(tuple(tuple(r) for r in rows), tuple(rhs), inst.d, N)


# ---------------------------------------------------------------- structural expressions


@dataclass(frozen=True)
class ExpressionReport:
    projection_ok: bool
    fibers_connected: bool
    shared_extensions: bool

    @property
    def ok(self) -> bool:
        return self.projection_ok and self.fibers_connected and self.shared_extensions


def _connected(points: list[tuple[int, ...]]) -> bool:
    if not points:
        return True
    pts = set(points)
    seen = {points[0]}
    stack = [points[0]]
    while stack:
        p = stack.pop()
        for q in pts:
            if q not in seen and sum(1 for a, b in zip(p, q) if a != b) == 1:
                seen.add(q)
                stack.append(q)
    return len(seen) == len(pts)


def check_structural_expression(original: ILSInstance, expanded: ILSInstance, max_states: int | None = None) -> ExpressionReport:
    """Brute-force check that ``expanded`` (original variables first) expresses ``original``."""
    from ilsreconf.oracle import state_space

    k = original.n
    orig_pts = set(state_space(original, max_states).feasible_points())
    fibers: dict[tuple, list] = {}
    for p in state_space(expanded, max_states).feasible_points():
        fibers.setdefault(p[:k], []).append(p[k:])
    projection_ok = set(fibers) == orig_pts
    fibers_connected = all(_connected(v) for v in fibers.values())
    shared = True
    ext = {a: set(v) for a, v in fibers.items()}
    for a in ext:
        for b in ext:
            if a < b and sum(1 for u, v in zip(a, b) if u != v) == 1 and not ext[a] & ext[b]:
                shared = False
    return ExpressionReport(projection_ok, fibers_connected, shared)


def gadget_table(t: int) -> dict[tuple[int, int, int], set[tuple[tuple[int, ...], tuple[int, ...]]]]:
    """All ``(y, z)`` extending each literal assignment ``(l1, l2, l3)`` in one clause chain."""
    from itertools import product

    lits = (1, 2, 3)
    y = list(range(4, 5 + t))
    z = list(range(5 + t, 6 + 2 * t))
    phi = CnfFormula(3 + 2 * (t + 1), tuple(clause_gadget(*lits, y, z)))
    table = {}
    for ell in product((0, 1), repeat=3):
        sols = set()
        for aux in product((0, 1), repeat=2 * (t + 1)):
            if phi.satisfied_by(ell + aux):
                sols.add((aux[: t + 1], aux[t + 1:]))
        table[ell] = sols
    return table


# ---------------------------------------------------------------- random instances


def _rhs_for(rng, rows, point, slack: int):
    return [sum(a * v for a, v in zip(r, point)) - rng.randint(0, slack) for r in rows]


def random_horn(rng, n: int, d: int, m: int, coeffs=(1, 2), unit: bool = False, slack: int = 2) -> tuple[ILSInstance, Assignment]:
    """Horn rows built around a random point, which is returned as a known solution."""
    mags = (1,) if unit else coeffs
    point = tuple(rng.randint(0, d) for _ in range(n))
    rows = []
    for _ in range(m):
        r = [0] * n
        support = rng.sample(range(n), rng.randint(1, min(n, 3)))
        pos = rng.choice(support + [None])
        for j in support:
            r[j] = rng.choice(mags) * (1 if j == pos else -1)
        rows.append(r)
    return ILSInstance.from_rows(rows, _rhs_for(rng, rows, point, slack), d, n), point


def random_tvpi(rng, n: int, d: int, m: int, coeffs=(1, 2), unit: bool = False, slack: int = 2) -> tuple[ILSInstance, Assignment]:
    mags = (1,) if unit else coeffs
    point = tuple(rng.randint(0, d) for _ in range(n))
    rows = []
    for _ in range(m):
        r = [0] * n
        for j in rng.sample(range(n), min(n, rng.randint(1, 2))):
            r[j] = rng.choice(mags) * rng.choice((1, -1))
        rows.append(r)
    return ILSInstance.from_rows(rows, _rhs_for(rng, rows, point, slack), d, n), point


def random_qh(rng, n: int, d: int, m: int, coeffs=(1, 2), unit: bool = False, slack: int = 2) -> tuple[ILSInstance, Assignment]:
    """Index at most one by construction: a random QH split, rows obeying (a)-(c), random flips."""
    mags = (1,) if unit else coeffs
    Q = [j for j in range(n) if rng.random() < 0.5]
    H = [j for j in range(n) if j not in Q]
    point = tuple(rng.randint(0, d) for _ in range(n))
    rows = []
    for _ in range(m):
        r = [0] * n
        if Q and (not H or rng.random() < 0.5):
            for j in rng.sample(Q, min(len(Q), rng.randint(1, 2))):
                r[j] = rng.choice(mags) * rng.choice((1, -1))
            for j in H:
                if rng.random() < 0.3:
                    r[j] = -rng.choice(mags)
        else:
            support = rng.sample(H, rng.randint(1, min(len(H), 3)))
            pos = rng.choice(support + [None])
            for j in support:
                r[j] = rng.choice(mags) * (1 if j == pos else -1)
        rows.append(r)
    inst = ILSInstance.from_rows(rows, _rhs_for(rng, rows, point, slack), d, n)
    flips = [j for j in range(n) if rng.random() < 0.3]
    point = tuple(d - v if j in flips else v for j, v in enumerate(point))
    return flip_columns(inst, flips), point


def random_low_index(rng, n: int, d: int, m: int, coeffs=(1, 2), slack: int = 2) -> tuple[ILSInstance, Assignment]:
    """A property-P1 matrix, then random column flips and a random column permutation."""
    point = tuple(rng.randint(0, d) for _ in range(n))
    rows = []
    for _ in range(m):
        r = [0] * n
        last = rng.randint(0, n - 1)
        for j in range(last):
            if rng.random() < 0.5:
                r[j] = -rng.choice(coeffs)
        r[last] = rng.choice(coeffs) * rng.choice((1, -1))
        rows.append(r)
    inst = ILSInstance.from_rows(rows, _rhs_for(rng, rows, point, slack), d, n)
    flips = [j for j in range(n) if rng.random() < 0.5]
    inst = flip_columns(inst, flips)
    point = tuple(d - v if j in flips else v for j, v in enumerate(point))
    order = list(range(n))
    rng.shuffle(order)
    return permute_columns(inst, order), tuple(point[j] for j in order)


def random_general(rng, n: int, d: int, m: int, coeffs=(1, 2), slack: int = 2) -> tuple[ILSInstance, Assignment]:
    point = tuple(rng.randint(0, d) for _ in range(n))
    rows = [[rng.choice((0,) + tuple(coeffs) + tuple(-c for c in coeffs)) for _ in range(n)] for _ in range(m)]
    for r in rows:
        if not any(r):
            r[rng.randrange(n)] = 1
    return ILSInstance.from_rows(rows, _rhs_for(rng, rows, point, slack), d, n), point


_FAMILIES = {
    "LessThanOne": (random_low_index, random_horn),
    "ExactlyOne": (random_qh, random_tvpi, random_horn),
    "GreaterThanOne": (random_general,),
}


def random_in_regime(rng, regime: str, n: int, d: int, m: int, unit: bool | None = None, tries: int = 1000):
    """Rejection-sample an instance whose index falls in ``regime`` (a :class:`Regime` value).

    Returns ``(instance, known_solution)``. A single row always has index 0, so
    ``m`` is raised to 2 outside the lowest regime. Needs ``n >= 2`` for index
    one and ``n >= 3`` above one; raises ``RuntimeError`` if every draw misses.
    """
    from ilsreconf.index_lp import classify, compute_index

    regime = str(regime)
    if regime != "LessThanOne":
        m = max(m, 2)
    gens = _FAMILIES[regime]
    for _ in range(tries):
        gen = rng.choice(gens)
        kwargs = {}
        if gen is random_general or gen is random_low_index:
            if unit:
                kwargs["coeffs"] = (1,)
        else:
            kwargs["unit"] = rng.random() < 0.5 if unit is None else unit
        inst, point = gen(rng, n, d, m, **kwargs)
        if str(classify(compute_index(inst))) == regime:
            return inst, point
    raise RuntimeError(f"no {regime} instance found in {tries} draws")
