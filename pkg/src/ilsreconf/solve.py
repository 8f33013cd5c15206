"""Reachability with dispatch on the complexity index."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ilsreconf import horn, ils1, low_index, oracle, tvpi, unit
from ilsreconf.core import ILSInstance, PathWitness, PreconditionError, require_feasible, validate_path
from ilsreconf.index_lp import compute_index

log = logging.getLogger(__name__)

METHODS = ("auto", "horn", "tvpi", "ils1", "unit", "zlt1", "oracle")


@dataclass(frozen=True)
class SolveResult:
    """``answer`` is ``None`` when the question was left undecided (oracle budget)."""

    answer: bool | None
    witness: PathWitness | None
    compressed: unit.CompressedPath | None
    method_used: str
    z: Fraction | None
    note: str = ""

    def path(self, limit: int = 1_000_000) -> PathWitness | None:
        """The witness vertex by vertex, expanding a compressed one if needed."""
        if self.witness is not None:
            return self.witness
        if self.compressed is not None:
            return self.compressed.expand(limit)
        return None

    @property
    def length(self) -> int | None:
        if self.witness is not None:
            return self.witness.length
        if self.compressed is not None:
            return self.compressed.length
        return None


def _oracle(inst, s, t, z, max_states) -> SolveResult:
    try:
        ok, path = oracle.bfs_reachable(inst, s, t, max_states=max_states)
    except oracle.BudgetExceeded as exc:
        return SolveResult(None, None, None, "oracle", z, str(exc))
    return SolveResult(ok, path, None, "oracle", z)


def solve(
    inst: ILSInstance,
    s: Sequence[int],
    t: Sequence[int],
    method: str = "auto",
    max_states: int | None = None,
) -> SolveResult:
    """Decide whether ``t`` is reachable from ``s`` and return a witness on yes.

    ``auto`` picks by index: below one the prefix-substitution path, exactly one
    the unit solver for unit matrices and the QH-decomposition solver otherwise,
    above one the exhaustive search within ``max_states``.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    s, t = require_feasible(inst, s, t)
    z = compute_index(inst).z if method in ("auto", "zlt1") else None

    if method == "auto":
        if z < 1:
            method = "zlt1"
        elif z == 1:
            method = "unit" if unit.is_unit(inst) else "ils1"
        else:
            return _oracle(inst, s, t, z, max_states)

    if method == "oracle":
        return _oracle(inst, s, t, z, max_states)
    if method == "zlt1":
        return SolveResult(True, low_index.z_less_one_path(inst, s, t), None, "zlt1", z)
    if method == "horn":
        ok, path = horn.horn_reconfigure(inst, s, t)
        return SolveResult(ok, path, None, "horn", z)
    if method == "tvpi":
        ok, path = tvpi.tvpi_reconfigure(inst, s, t)
        return SolveResult(ok, path, None, "tvpi", z)
    if method == "unit":
        try:
            ok, cpath = unit.unit_ils1_solve(inst, s, t)
        except ils1.NoHalfIntegralOptimum as exc:
            log.warning("%s; using the general index-one solver", exc)
        else:
            return SolveResult(ok, None, cpath, "unit", z)
    ok, path = ils1.solve_ils1(inst, s, t)
    return SolveResult(ok, path, None, "ils1", z)


def check_result(inst: ILSInstance, s, t, result: SolveResult) -> bool:
    """Re-validate the witness carried by a yes answer."""
    if result.answer is not True:
        return result.witness is None and result.compressed is None
    if result.compressed is not None:
        return unit.validate_compressed(inst, result.compressed, s, t)
    return result.witness is not None and validate_path(inst, result.witness, s, t)


__all__ = ["METHODS", "SolveResult", "solve", "check_result", "PreconditionError"]
