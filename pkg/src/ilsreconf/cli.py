"""Command-line front end.

Exit codes: 0 yes/success, 1 no/invalid, 2 usage or input error, 3 undecided
(oracle budget exceeded).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from ilsreconf import certificate, generators, oracle, unit
from ilsreconf.core import (
    ILSInstance,
    InfeasibleError,
    ParseError,
    PreconditionError,
    parse_assignment,
    parse_instance,
    parse_path,
    serialize_instance,
    serialize_path,
    validate_path,
)
from ilsreconf.index_lp import classify, compute_index
from ilsreconf.solve import METHODS, solve

EXIT_YES, EXIT_NO, EXIT_USAGE, EXIT_UNDECIDED = 0, 1, 2, 3


def _q(x: Fraction) -> str:
    return str(Fraction(x))


def _emit(args, data: dict, text: str) -> None:
    print(json.dumps(data) if args.json else text)


def _load(path: str) -> ILSInstance:
    return parse_instance(Path(path).read_text())


def _endpoints(args, inst):
    return parse_assignment(args.src, inst.n), parse_assignment(args.dst, inst.n)


# ---------------------------------------------------------------- commands


def cmd_index(args) -> int:
    inst = _load(args.file)
    sol = compute_index(inst)
    regime = str(classify(sol))
    data = {"z": _q(sol.z), "regime": regime, "alpha": [_q(a) for a in sol.alpha]}
    text = f"{_q(sol.z)}\n{regime}"
    if args.alpha:
        text += "\nalpha " + " ".join(_q(a) for a in sol.alpha)
    _emit(args, data, text)
    return EXIT_YES


def _write_witness(args, inst, s, t, res) -> str | None:
    """Store the yes-path, or a disconnection certificate when one is found on no."""
    if not args.witness:
        return None
    if res.answer:
        if res.compressed is not None:
            body, kind = res.compressed.serialize(), "compressed"
        else:
            body, kind = serialize_path(res.witness), "path"
    else:
        if res.answer is None:
            return None
        cert = None
        z = res.z if res.z is not None else compute_index(inst).z
        if z <= 1 and inst.n <= certificate.DEFAULT_MAX_N:
            cert = certificate.search_certificate_fixed_n(inst, s, t)
        if cert is None:
            return None
        body, kind = certificate.serialize_certificate(cert), "certificate"
    Path(args.witness).write_text(body)
    return kind


def cmd_solve(args) -> int:
    inst = _load(args.file)
    s, t = _endpoints(args, inst)
    method = "oracle" if args.command == "oracle" else args.method
    res = solve(inst, s, t, method=method, max_states=args.max_states)
    kind = _write_witness(args, inst, s, t, res)
    answer = {True: "YES", False: "NO", None: "UNDECIDED"}[res.answer]
    data = {
        "answer": answer,
        "method": res.method_used,
        "z": None if res.z is None else _q(res.z),
        "length": res.length,
        "witness": kind,
        "note": res.note,
    }
    text = answer
    if args.verbose:
        text += f"\nmethod {res.method_used}"
        if res.z is not None:
            text += f"\nz {_q(res.z)}"
        if res.length is not None:
            text += f"\nlength {res.length}"
        if res.note:
            text += f"\nnote {res.note}"
    _emit(args, data, text)
    return {True: EXIT_YES, False: EXIT_NO, None: EXIT_UNDECIDED}[res.answer]


def cmd_stats(args) -> int:
    inst = _load(args.file)
    st = oracle.graph_stats(inst, args.max_states)
    comps = []
    for k in range(st.component_count):
        pts = st.component_points(k)
        comps.append({
            "size": st.component_sizes[k],
            "diameter": st.diameter_of(k),
            "is_path": st.is_path(k),
            "first": list(pts[0]),
        })
    data = {"feasible": st.feasible_count, "components": st.component_count, "detail": comps}
    lines = [f"feasible {st.feasible_count}", f"components {st.component_count}"]
    for k, c in enumerate(comps):
        first = " ".join(map(str, c["first"]))
        lines.append(f"component {k}: size {c['size']} diameter {c['diameter']} path {str(c['is_path']).lower()} first ({first})")
    _emit(args, data, "\n".join(lines))
    return EXIT_YES


def cmd_gen(args) -> int:
    kind = args.kind
    p = args.params
    comment = ""

    def need(k):
        if len(p) != k:
            raise ParseError(f"gen {kind} takes {k} integer parameter(s)")
        return p

    if kind == "chain":
        n, d = need(2)
        inst = generators.gen_chain(n, d)
    elif kind == "hypercube":
        (n,) = need(1)
        inst = generators.gen_hypercube(n)
    elif kind == "eqchain":
        (d,) = need(1)
        inst = generators.gen_equality_chain(d)
    elif kind == "diameter":
        n, d = need(2)
        fam = generators.gen_diameter_family(n, d)
        inst = fam.instance
        comment = (f"# s {' '.join(map(str, fam.s))}\n# t {' '.join(map(str, fam.t))}\n"
                   f"# expected path length {fam.expected_length}\n")
    elif kind == "ils-gadget":
        n, d = need(2)
        inst = generators.expand_ils_gadget(generators.gen_diameter_family(n, d), generators.GadgetParams(args.gamma))
    else:  # sat-gadget
        need(0)
        phi = generators.parse_dimacs(Path(args.cnf).read_text()) if args.cnf else generators.AFFINE_CNF
        phi = generators.expand_sat_gadget(phi, generators.GadgetParams(args.gamma))
        if args.dimacs:
            _write(args.output, generators.write_dimacs(phi))
            return EXIT_YES
        inst = generators.sat_to_ils(phi)
    _write(args.output, comment + serialize_instance(inst))
    return EXIT_YES


def _write(dest, text: str) -> None:
    if dest in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(dest).write_text(text)


def cmd_certify(args) -> int:
    inst = _load(args.file)
    s, t = _endpoints(args, inst)
    text = Path(args.witness).read_text()
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if lines and lines[0] == "certificate v1":
        cert = certificate.parse_certificate(text, inst)
        ok, kind = certificate.certifies_disconnection(inst, cert, s, t), "certificate"
    elif lines and lines[0].startswith("U="):
        ok, kind = unit.validate_compressed(inst, unit.parse_compressed(text, s), s, t), "compressed"
    else:
        ok, kind = validate_path(inst, parse_path(text), s, t), "path"
    verdict = "VALID" if ok else "INVALID"
    _emit(args, {"valid": ok, "kind": kind}, f"{verdict} {kind}")
    return EXIT_YES if ok else EXIT_NO


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ils", description="Reconfiguration of integer linear systems.")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)

    p = sub.add_parser("index", parents=[common], help="exact complexity index and regime")
    p.add_argument("file")
    p.add_argument("--alpha", action="store_true", help="also print an optimal alpha")
    p.set_defaults(func=cmd_index)

    for name in ("solve", "oracle"):
        p = sub.add_parser(name, parents=[common],
                           help="decide reachability" if name == "solve" else "decide by exhaustive search")
        p.add_argument("file")
        p.add_argument("--from", dest="src", required=True, help='start assignment, e.g. "0 0"')
        p.add_argument("--to", dest="dst", required=True, help="target assignment")
        if name == "solve":
            p.add_argument("--method", choices=METHODS, default="auto")
        p.add_argument("--witness", metavar="OUT", help="write the path (or a certificate on NO)")
        p.add_argument("--max-states", type=int, default=None, help="oracle state budget")
        p.set_defaults(func=cmd_solve)

    p = sub.add_parser("stats", parents=[common], help="solution-graph census by exhaustive search")
    p.add_argument("file")
    p.add_argument("--max-states", type=int, default=None)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("gen", parents=[common], help="write an instance family")
    p.add_argument("kind", choices=("chain", "hypercube", "eqchain", "diameter", "sat-gadget", "ils-gadget"))
    p.add_argument("params", type=int, nargs="*", help="chain N D | hypercube N | eqchain D | diameter N D | ils-gadget N D")
    p.add_argument("--gamma", type=Fraction, default=Fraction(2), help="gadget index bound (> 1)")
    p.add_argument("--cnf", help="DIMACS 3-CNF for sat-gadget (default: the odd-parity formula)")
    p.add_argument("--dimacs", action="store_true", help="sat-gadget: write the expanded CNF instead")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("certify", parents=[common], help="check a path, compressed path or certificate")
    p.add_argument("file")
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    p.add_argument("--witness", required=True)
    p.set_defaults(func=cmd_certify)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_YES
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (ParseError, InfeasibleError, PreconditionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except oracle.BudgetExceeded as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
