"""Reconfiguration of integer linear systems, organized by the complexity index.

The package decides whether one feasible integer solution of ``A x >= b`` over
``{0..d}^n`` can be turned into another by changing one coordinate at a time,
staying feasible throughout.
"""

from ilsreconf.core import (
    ILSInstance,
    FeasibilityReport,
    ParseError,
    PathWitness,
    evaluate,
    flip_variable,
    parse_instance,
    serialize_instance,
    validate_path,
)
from ilsreconf.index_lp import IndexSolution, Regime, classify, compute_index, sign_pattern
from ilsreconf.solve import SolveResult, solve

__all__ = [
    "ILSInstance",
    "FeasibilityReport",
    "ParseError",
    "PathWitness",
    "evaluate",
    "flip_variable",
    "parse_instance",
    "serialize_instance",
    "validate_path",
    "IndexSolution",
    "Regime",
    "classify",
    "compute_index",
    "sign_pattern",
    "SolveResult",
    "solve",
]

__version__ = "0.1.0"
