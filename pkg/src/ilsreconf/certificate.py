"""Disconnection certificates for index-one systems, and a search for them when n is small.

Work happens on the flipped instance of a QH-partition. There ``<=_QH`` is the
plain order on H and the order ``<=_{t_j}`` toward the anchor on Q, and the
solution set is closed under ``min_QH``. A vector ``w`` with

  C0  w is feasible,
  C1  w <=_QH x,
  C2  no single step from w down in ``<=_QH`` is feasible,
  C3  w_j >_QH m_j for some j,

proves that ``x`` is not connected to ``m = min_QH(s, t)``, hence ``s`` is not
connected to ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ilsreconf.core import Assignment, ILSInstance, ParseError, PreconditionError, flip_columns, require_feasible
from ilsreconf.ils1 import QHPartition, compute_qh_partition, partition_from_alpha, qh_violations
from ilsreconf.tvpi import leq, median

DEFAULT_MAX_N = 6


@dataclass(frozen=True)
class Certificate:
    """All vectors are in the instance's own (unflipped) coordinates."""

    w: Assignment
    partition: QHPartition
    anchor_t: Assignment
    reset_target: Assignment
    endpoint: Assignment


def min_qh(partition: QHPartition, t: Sequence[int], x: Sequence[int], y: Sequence[int]) -> Assignment:
    """``min`` on H and ``median(t, ., .)`` on Q, in the partition's flipped coordinates."""
    return tuple(
        median(t[j], x[j], y[j]) if j in partition.Q else min(x[j], y[j])
        for j in range(len(x))
    )


def _leq_qh(part: QHPartition, anchor, a, b) -> bool:
    return all(leq(anchor[j], a[j], b[j]) if j in part.Q else a[j] <= b[j] for j in range(len(a)))


def certificate_failures(inst: ILSInstance, cert: Certificate, x: Sequence[int]) -> list[str]:
    """Names of the conditions C0..C3 that ``cert`` violates for endpoint ``x``."""
    part = cert.partition
    n = inst.n
    if any(len(v) != n for v in (cert.w, cert.anchor_t, cert.reset_target, x)):
        raise ValueError("dimension mismatch between certificate and instance")
    norm = flip_columns(inst, part.flipped)
    if qh_violations(norm, part.Q, part.H):
        return ["partition"]
    w = part.to_normal(cert.w)
    m = part.to_normal(cert.reset_target)
    xn = part.to_normal(x)
    d = inst.d
    failed = []
    if any(v < 0 or v > d for v in w) or not norm.is_feasible(w):
        failed.append("C0")
    if not _leq_qh(part, m, w, xn):
        failed.append("C1")
    if "C0" not in failed:
        for j in range(n):
            if j in part.Q:
                if w[j] == m[j]:
                    continue
                sigma = 1 if w[j] > m[j] else -1
            else:
                sigma = 1
            y = list(w)
            y[j] -= sigma
            if 0 <= y[j] <= d and norm.is_feasible(y):
                failed.append("C2")
                break
    if not any((w[j] != m[j]) if j in part.Q else (w[j] > m[j]) for j in range(n)):
        failed.append("C3")
    return failed


def check_certificate(inst: ILSInstance, cert: Certificate, s: Sequence[int]) -> bool:
    """True iff C0-C3 hold for ``cert`` with endpoint ``s``."""
    return not certificate_failures(inst, cert, s)


def certifies_disconnection(inst: ILSInstance, cert: Certificate, s: Sequence[int], t: Sequence[int]) -> bool:
    """Full check that ``cert`` separates ``s`` from ``t``.

    Also confirms that the reset target is ``min_QH(s, t)`` with anchor ``t`` and
    that the certificate's endpoint is ``s`` or ``t``.
    """
    s, t = tuple(s), tuple(t)
    part = cert.partition
    if tuple(cert.anchor_t) != t or tuple(cert.endpoint) not in (s, t):
        return False
    tn = part.to_normal(t)
    m = part.from_normal(min_qh(part, tn, part.to_normal(s), tn))
    if tuple(cert.reset_target) != m:
        return False
    return check_certificate(inst, cert, cert.endpoint)


# ---------------------------------------------------------------- exact integer feasibility

# A system is a list of rows (coeffs, rhs) meaning coeffs . w >= rhs, plus bounds.


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _propagate(rows, lo: list[int], hi: list[int]) -> bool:
    """Tighten ``lo``/``hi`` in place until stable; False if some domain empties.

    Bounds derived from a stale row maximum are weaker, never wrong, so one pass
    per row suffices before re-looping.
    """
    changed = True
    while changed:
        changed = False
        for coeffs, rhs in rows:
            best = 0
            for c, l, h in zip(coeffs, lo, hi):
                if c > 0:
                    best += c * h
                elif c < 0:
                    best += c * l
            if best < rhs:
                return False
            for k, c in enumerate(coeffs):
                if c > 0:
                    b = _ceil_div(rhs - (best - c * hi[k]), c)
                    if b > lo[k]:
                        lo[k] = b
                        changed = True
                elif c < 0:
                    b = (rhs - (best - c * lo[k])) // c
                    if b < hi[k]:
                        hi[k] = b
                        changed = True
                else:
                    continue
                if lo[k] > hi[k]:
                    return False
    return True


def integer_point(rows, lo: Sequence[int], hi: Sequence[int]) -> list[int] | None:
    """Some integer ``w`` with ``lo <= w <= hi`` satisfying every row, or ``None``.

    Bound propagation, then branching on the narrowest open coordinate.
    """
    lo, hi = list(lo), list(hi)
    if not _propagate(rows, lo, hi):
        return None
    open_ = [k for k in range(len(lo)) if lo[k] < hi[k]]
    if not open_:
        return lo
    k = min(open_, key=lambda j: (hi[j] - lo[j], j))
    for v in range(lo[k], hi[k] + 1):
        lo2, hi2 = list(lo), list(hi)
        lo2[k] = hi2[k] = v
        w = integer_point(rows, lo2, hi2)
        if w is not None:
            return w
    return None


# ---------------------------------------------------------------- search


def _hurt_rows(rows, d: int, k: int, sigma: int, n: int) -> list[tuple[tuple[int, ...], int]]:
    """Constraints "``w - sigma e_k`` violates row i", one per row that such a step can hurt.

    Row ``c . w >= r`` is violated after the step iff ``c . w <= r + sigma c_k - 1``,
    written here as ``-c . w >= -(r + sigma c_k - 1)``. The domain bound that the
    step can cross is included as an extra row.
    """
    out = []
    for coeffs, r in rows:
        if sigma * coeffs[k] > 0:
            out.append((tuple(-c for c in coeffs), -(r + sigma * coeffs[k] - 1)))
    e = [0] * n
    if sigma > 0:
        e[k] = -1
        out.append((tuple(e), 0))  # w_k <= 0
    else:
        e[k] = 1
        out.append((tuple(e), d))  # w_k >= d
    return out


def _search_pair(norm: ILSInstance, part: QHPartition, x: Assignment, m: Assignment) -> Assignment | None:
    """A ``w`` meeting C0-C3 for endpoint ``x`` and reset target ``m`` (flipped coordinates)."""
    n, d = norm.n, norm.d
    rows = list(norm.int_rows)
    base_lo, base_hi = [0] * n, [d] * n
    q_free = []  # Q coordinates that may leave the anchor
    q_sign = {}
    for j in range(n):
        if j in part.Q:
            if x[j] == m[j]:
                base_lo[j] = base_hi[j] = m[j]
            else:
                q_free.append(j)
                q_sign[j] = 1 if x[j] > m[j] else -1
                base_lo[j], base_hi[j] = min(x[j], m[j]), max(x[j], m[j])
        else:
            base_hi[j] = min(base_hi[j], x[j])
    if not _propagate(rows, base_lo, base_hi):
        return None

    h_coords = [j for j in range(n) if j not in part.Q]
    for pattern in range(1 << len(q_free)):
        active_q = [q for b, q in enumerate(q_free) if pattern >> b & 1]
        lo, hi = list(base_lo), list(base_hi)
        for q in q_free:
            if q in active_q:
                if q_sign[q] > 0:
                    lo[q] = max(lo[q], m[q] + 1)
                else:
                    hi[q] = min(hi[q], m[q] - 1)
            else:
                lo[q] = hi[q] = m[q]
        if not _propagate(rows, lo, hi):
            continue
        obligations = [(k, 1) for k in h_coords] + [(q, q_sign[q]) for q in active_q]
        choices = [_hurt_rows(rows, d, k, sg, n) for k, sg in obligations]
        # C3: an H coordinate strictly above m, or any active Q coordinate
        c3 = [(j, "H") for j in h_coords] + ([(None, "Q")] if active_q else [])
        for j, kind in c3:
            lo3, hi3 = list(lo), list(hi)
            if kind == "H":
                lo3[j] = max(lo3[j], m[j] + 1)
            w = _guess(rows, choices, 0, [], lo3, hi3)
            if w is not None:
                return tuple(w)
    return None


def _guess(rows, choices, depth: int, picked: list, lo, hi) -> list[int] | None:
    """Pick one hurt-row constraint per obligation, pruning by propagation."""
    system = rows + picked
    lo, hi = list(lo), list(hi)
    if not _propagate(system, lo, hi):
        return None
    if depth == len(choices):
        return integer_point(system, lo, hi)
    for row in choices[depth]:
        w = _guess(rows, choices, depth + 1, picked + [row], lo, hi)
        if w is not None:
            return w
    return None


def search_certificate_fixed_n(
    inst: ILSInstance,
    s: Sequence[int],
    t: Sequence[int],
    max_n: int = DEFAULT_MAX_N,
    partition: QHPartition | None = None,
) -> Certificate | None:
    """A disconnection certificate for ``s`` and ``t``, or ``None`` if they are connected."""
    if inst.n > max_n:
        raise PreconditionError(f"certificate search is limited to n <= {max_n} (got {inst.n})")
    s, t = require_feasible(inst, s, t)
    if s == t:
        return None
    part = partition or compute_qh_partition(inst)
    norm = part.normalized
    sn, tn = part.to_normal(s), part.to_normal(t)
    m = min_qh(part, tn, sn, tn)
    for x, xn in ((s, sn), (t, tn)):
        w = _search_pair(norm, part, xn, m)
        if w is not None:
            return Certificate(part.from_normal(w), part, t, part.from_normal(m), x)
    return None


# ---------------------------------------------------------------- text format


def serialize_certificate(cert: Certificate) -> str:
    """One header line, then one labelled line of integers per field (indices 1-based)."""
    part = cert.partition

    def ints(v):
        return " ".join(str(x) for x in v)

    lines = [
        "certificate v1",
        "w " + ints(cert.w),
        "Q " + ints(sorted(j + 1 for j in part.Q)),
        "H " + ints(sorted(j + 1 for j in part.H)),
        "flipped " + ints(sorted(j + 1 for j in part.flipped)),
        "anchor " + ints(cert.anchor_t),
        "reset " + ints(cert.reset_target),
        "endpoint " + ints(cert.endpoint),
    ]
    return "\n".join(lines) + "\n"


def parse_certificate(text: str, inst: ILSInstance) -> Certificate:
    fields = {}
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines or lines[0] != "certificate v1":
        raise ParseError("certificate must start with 'certificate v1'", 1)
    for lineno, line in enumerate(lines[1:], start=2):
        key, *vals = line.split()
        try:
            fields[key] = tuple(int(v) for v in vals)
        except ValueError:
            raise ParseError(f"non-integer entry in {key!r}", lineno) from None
    need = ("w", "Q", "H", "flipped", "anchor", "reset", "endpoint")
    missing = [k for k in need if k not in fields]
    if missing:
        raise ParseError(f"certificate lacks {', '.join(missing)}")
    Q = {j - 1 for j in fields["Q"]}
    flipped = {j - 1 for j in fields["flipped"]}
    alpha = [Fraction(1, 2) if j in Q else (0 if j in flipped else 1) for j in range(inst.n)]
    try:
        part = partition_from_alpha(inst, alpha)
    except Exception as exc:
        raise ParseError(f"partition in certificate is not valid: {exc}") from None
    if sorted(j + 1 for j in part.H) != sorted(fields["H"]):
        raise ParseError("Q and H do not partition the variables")
    return Certificate(fields["w"], part, fields["anchor"], fields["reset"], fields["endpoint"])
