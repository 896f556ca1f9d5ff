"""Command-line front end.

Exit status: 0 when every check passes, 1 when a verification fails,
2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import verify
from .charclass import ChernError
from .diagrams import stu_reduce
from .graphs import GraphError, GraphVector, parse_graph
from .homology import MAX_DEGREE, homology_basis, reduce
from .manifolds import EvaluationError, default_dataset, load_dataset, rw_report
from .report import render
from .verify import Check
from .wheels import omega_coefficients, parse_polywheel, polywheel_close

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _data(args):
    return load_dataset(args.dataset) if getattr(args, "dataset", None) else default_dataset()


def _degree(args, fallback: Optional[int] = None) -> int:
    k = args.degree if args.degree is not None else fallback
    if k is None:
        raise GraphError("--degree is required")
    if not 0 <= k <= MAX_DEGREE:
        raise GraphError(f"degree must be between 0 and {MAX_DEGREE}")
    return k


def cmd_reduce(args) -> List[Check]:
    g = parse_graph(args.graph_text)
    k = _degree(args, g.degree)
    hb = homology_basis(k)
    coords = reduce(GraphVector.of(g), hb)
    return [Check(f"reduce {args.graph_text}", True,
                  {"degree": k, "basis": tuple(str(b) for b in hb.basis), "coordinates": coords})]


def cmd_basis(args) -> List[Check]:
    hb = homology_basis(_degree(args))
    return [Check(f"basis degree {hb.degree}", True,
                  {"dimension": hb.dimension, "graphs": tuple(str(b) for b in hb.basis)})]


def cmd_polywheel(args) -> List[Check]:
    wheels = parse_polywheel(args.spec)
    v = polywheel_close(wheels)
    if isinstance(v, GraphVector):
        k = sum(w.spokes for w in wheels) // 2
        hb = homology_basis(_degree(args, k))
        return [Check(f"polywheel {args.spec}", True,
                      {"basis": tuple(str(b) for b in hb.basis), "coordinates": reduce(v, hb)})]
    nf = stu_reduce(v)
    return [Check(f"polywheel {args.spec}", True,
                  {"normal form": tuple(f"{c} * [{d}]" for d, c in nf)})]


def cmd_rw(args) -> List[Check]:
    rep = rw_report(args.manifold, args.graph, _data(args))
    fields = {"value": rep.value}
    for name, combo in rep.polywheels.items():
        fields[f"polywheels on {name}"] = combo
    fields["trace"] = tuple(dict.fromkeys(rep.trace))
    return [Check(f"rw {rep.manifold} {args.graph}", True, fields)]


def cmd_omega(args) -> List[Check]:
    if not 1 <= args.terms <= 8:
        raise GraphError("--terms must be between 1 and 8")
    b = omega_coefficients(args.terms)
    return [Check("omega", True, {f"b{2 * i}": b[i] for i in range(1, args.terms + 1)})]


def cmd_dataset(args) -> List[Check]:
    data = load_dataset(args.file) if args.file else _data(args)
    return verify.dataset(data)


def cmd_verify(args) -> List[Check]:
    data = _data(args)
    suite = args.suite
    if suite == "table1":
        return verify.table1(args.k)
    if suite == "wheeling":
        return verify.wheeling((args.k,) if args.k else (1, 2))
    if suite == "td-half":
        if args.manifold and not args.all:
            return verify.td_half([args.manifold], data)
        return verify.td_half(None, data)
    if suite == "stu":
        d = args.degree if args.degree is not None else 3
        if not 0 <= d <= 3:
            raise GraphError("stu degree must be between 0 and 3")
        return verify.stu(d)
    if suite in ("closed-forms",):
        return verify.closed_forms(data)
    if suite == "chern-gap":
        return verify.chern_gap(data=data)
    if suite == "all":
        out: List[Check] = []
        out += verify.table1()
        out += verify.polywheel_gap()
        out += verify.omega()
        out += verify.wheeling()
        out += verify.closed_forms(data)
        out += verify.td_half(None, data)
        out += verify.chern_gap(data=data)
        out += verify.c4()
        out += verify.stu()
        out += verify.dataset(data)
        return out
    return verify.SUITES[suite]()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "records"), default="text")
    common.add_argument("--dataset", help="Chern-number dataset (defaults to the shipped file)")

    p = argparse.ArgumentParser(prog="rwgraphs", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("reduce", parents=[common], help="graph homology coordinates of a graph")
    r.add_argument("graph_text", metavar="GRAPH")
    r.add_argument("--degree", type=int)
    r.set_defaults(func=cmd_reduce)

    b = sub.add_parser("basis", parents=[common], help="graph homology basis")
    b.add_argument("--degree", type=int, required=True)
    b.set_defaults(func=cmd_basis)

    w = sub.add_parser("polywheel", parents=[common], help="close a polywheel, e.g. '<w(2) w(4)>'")
    w.add_argument("spec")
    w.add_argument("--degree", type=int)
    w.set_defaults(func=cmd_polywheel)

    rw = sub.add_parser("rw", parents=[common], help="Rozansky-Witten invariant")
    rw.add_argument("--manifold", required=True)
    rw.add_argument("--graph", required=True)
    rw.set_defaults(func=cmd_rw)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=sorted(verify.SUITES) + ["all"])
    v.add_argument("--k", type=int)
    v.add_argument("--degree", type=int)
    v.add_argument("--manifold")
    v.add_argument("--all", action="store_true")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("dataset", parents=[common], help="dataset tools")
    d.add_argument("action", choices=("validate",))
    d.add_argument("file", nargs="?")
    d.set_defaults(func=cmd_dataset)

    o = sub.add_parser("omega", parents=[common], help="coefficients of the Wheeling element")
    o.add_argument("--terms", type=int, default=2)
    o.set_defaults(func=cmd_omega)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        checks = args.func(args)
    except (GraphError, EvaluationError, ChernError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(render(checks, args.format), file=out)
    return EXIT_OK if all(c.ok for c in checks) else EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
