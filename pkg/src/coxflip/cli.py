"""Command-line interface: graphs, orbits, solving, orders, verification.

Exit codes: 0 on success (and all checks passing), 1 when a verify suite
reports a failing check, 2 on usage or domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import CoxflipError
from .flipping import generators
from .gf2 import Gf2Vector
from .graphs import CoxeterGraph, build_family
from .groups import StabilizerChain, enumerate_group
from .orbits import classifier_fibers, classify, orbit_partition
from .solver import MoveSequence, solve
from .verify import run_suite


def _graph_from_args(args: argparse.Namespace) -> CoxeterGraph:
    if getattr(args, "custom", None):
        with open(args.custom) as fh:
            return CoxeterGraph.from_json(json.load(fh))
    if args.family is None or args.n is None:
        raise CoxflipError("need --family and --n (or --custom FILE)")
    return build_family(args.family, args.n)


def _orbit_classes(g: CoxeterGraph, method: str) -> list[dict]:
    if method == "closed-form":
        fibers = classifier_fibers(g.family, g.n)
        ordered = sorted(fibers.items(), key=lambda kv: kv[1][1])
        return [
            {"label": label, "size": str(size), "rep": Gf2Vector(g.n, rep).to_string()}
            for label, (size, rep) in ordered
        ]
    part = orbit_partition(generators(g), g.n)
    out = []
    for cls in part.classes:
        label = cls.label
        if g.family in ("A", "D", "E"):
            label = classify(g.family, g.n, cls.representative)
        out.append(
            {"label": label, "size": str(cls.size), "rep": cls.representative.to_string()}
        )
    return out


def cmd_graph(args: argparse.Namespace) -> int:
    print(json.dumps(_graph_from_args(args).to_json(), indent=2))
    return 0


def cmd_orbits(args: argparse.Namespace) -> int:
    g = build_family(args.family, args.n)
    classes = _orbit_classes(g, args.method)
    payload = {"n": g.n, "family": g.family, "classes": classes}
    print(json.dumps(payload, indent=2))
    if args.report_dir:
        from .report import write_orbit_report

        paths = write_orbit_report(g, classes, args.report_dir)
        print(json.dumps({"report": paths}, indent=2), file=sys.stderr)
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    g = build_family(args.family, args.n)
    a = Gf2Vector.from_string(args.src)
    b = Gf2Vector.from_string(args.dst)
    result = solve(g, a, b)
    if isinstance(result, MoveSequence):
        payload = {"reachable": True, "moves": list(result.moves)}
        if g.family in ("A", "D", "E"):
            label = classify(g.family, g.n, a)
            payload["from_label"] = label
            payload["to_label"] = label
    else:
        payload = {
            "reachable": False,
            "moves": [],
            "from_label": result.from_label,
            "to_label": result.to_label,
        }
    print(json.dumps(payload, indent=2))
    return 0


def cmd_group_order(args: argparse.Namespace) -> int:
    gens = generators(build_family(args.family, args.n))
    if args.method == "enumerate":
        order = enumerate_group(gens).order
    else:
        order = StabilizerChain(gens).order
    print(str(order))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    result = run_suite(args.suite, args.family, args.n)
    print(json.dumps(result.to_json(), indent=2))
    if args.report_dir:
        from .report import write_verify_report

        paths = write_verify_report(result, args.report_dir)
        print(json.dumps({"report": paths}, indent=2), file=sys.stderr)
    return 0 if result.all_pass else 1


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxflip",
        description="Flipping puzzles on simply-laced Coxeter graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="emit a graph as JSON")
    p.add_argument("--family", choices=["A", "D", "E"])
    p.add_argument("--n", type=int)
    p.add_argument("--custom", metavar="FILE", help="JSON file with a custom graph")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("orbits", help="orbit classes of a family puzzle")
    p.add_argument("--family", choices=["A", "D", "E"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["bfs", "closed-form"], default="bfs")
    p.add_argument("--report-dir", metavar="DIR", help="also write CSV and figures")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("solve", help="find a legal move sequence")
    p.add_argument("--family", choices=["A", "D", "E"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--from", dest="src", required=True, metavar="BITS")
    p.add_argument("--to", dest="dst", required=True, metavar="BITS")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("group-order", help="order of the flipping group")
    p.add_argument("--family", choices=["A", "D", "E"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["enumerate", "chain"], default="chain")
    p.set_defaults(func=cmd_group_order)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument(
        "--suite",
        required=True,
        choices=["relations", "orbits", "center", "kernel", "tables", "e8-w0"],
    )
    p.add_argument("--family", choices=["A", "D", "E"])
    p.add_argument("--n", type=int)
    p.add_argument("--report-dir", metavar="DIR", help="also write CSV and figures")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP/JSON service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CoxflipError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
