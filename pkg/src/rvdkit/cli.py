"""Command-line interface: ``rvdkit <subcommand> ...``.

Exit status is 0 on success or a valid coloring, 1 when a coloring or cut
check fails (or an audit reports a failure), 2 on usage and input errors.
Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import extremal
from .audit import THEOREMS, audit
from .enumeration import enumerate_connected
from .families import FamilySpecError, family_coloring, family_value, parse_descriptor
from .graph import Graph, GraphError
from .graphio import ParseError, format_edge_list, read_graph, read_graphs, read_text, to_graph6
from .rainbow import find_rainbow_cut, format_coloring, parse_coloring, verify_coloring
from .solver import DEFAULT_CAP, SolverCapExceeded, rvd_exact

log = logging.getLogger("rvdkit")


class UsageError(Exception):
    pass


def _format_cert(cert) -> str:
    cut = " ".join(map(str, cert.cut)) if cert.cut else "-"
    text = f"{cert.x} {cert.y}: cut {{{cut}}}"
    if cert.witness is not None:
        text += f" witness {cert.witness}"
    return text


def _write_graph(g: Graph, out: str | None, fmt: str) -> str:
    text = to_graph6(g) + "\n" if fmt == "graph6" else format_edge_list(g)
    if out:
        Path(out).write_text(text, encoding="utf-8")
        return ""
    return text


def cmd_rvd(args) -> int:
    graphs = read_graphs(args.file, args.format)
    many = len(graphs) > 1
    results = []
    for g in graphs:
        res = rvd_exact(g, cap=args.cap, certify=True)
        results.append((g, res))
        if args.json:
            continue
        if many:
            print(f"{to_graph6(g)} rvd = {res.value}")
            continue
        print(f"rvd = {res.value}")
        print(f"lower bound = {res.lower_bound} ({res.lower_bound_reason})")
        print("coloring:")
        sys.stdout.write(format_coloring(res.witness))
        if args.certificates:
            print("certificates:")
            for key in sorted(res.certificates):
                print(_format_cert(res.certificates[key]))
    if args.json:
        payload = [
            {
                "graph6": to_graph6(g),
                "rvd": res.value,
                "coloring": list(res.witness.colors),
                "lower_bound": res.lower_bound,
                "lower_bound_reason": res.lower_bound_reason,
                **(
                    {"certificates": [
                        {"x": c.x, "y": c.y, "cut": list(c.cut), "witness": c.witness}
                        for _, c in sorted(res.certificates.items())
                    ]}
                    if args.certificates else {}
                ),
            }
            for g, res in results
        ]
        print(json.dumps(payload if many else payload[0], indent=2))
    if args.coloring_out and not many:
        Path(args.coloring_out).write_text(format_coloring(results[0][1].witness), encoding="utf-8")
    return 0


def _load_pair(args):
    g = read_graph(args.file, args.format)
    coloring = parse_coloring(read_text(args.coloring), g.n)
    return g, coloring


def cmd_verify(args) -> int:
    g, coloring = _load_pair(args)
    res = verify_coloring(g, coloring)
    if res.valid:
        print("valid")
        if args.certificates:
            for key in sorted(res.certificates):
                print(_format_cert(res.certificates[key]))
        return 0
    x, y = res.violation
    print(f"invalid: no rainbow vertex-cut for pair {x} {y}")
    return 1


def cmd_cut(args) -> int:
    g, coloring = _load_pair(args)
    for v in (args.x, args.y):
        if not 0 <= v < g.n:
            raise UsageError(f"vertex {v} is not in the graph")
    if args.x == args.y:
        raise UsageError("x and y must differ")
    cert = find_rainbow_cut(g, coloring, args.x, args.y)
    if cert is None:
        print("none")
        return 1
    print(_format_cert(cert))
    return 0


def cmd_family(args) -> int:
    spec = parse_descriptor(args.spec)
    g, coloring = family_coloring(spec)
    print(f"rvd = {family_value(spec)}")
    if args.check:
        res = verify_coloring(g, coloring)
        print("verified" if res.valid else f"REJECTED at pair {res.violation}")
        if not res.valid:
            return 1
    print("coloring:")
    sys.stdout.write(format_coloring(coloring))
    print("graph:")
    sys.stdout.write(format_edge_list(g))
    return 0


def cmd_extremal(args) -> int:
    what = args.what
    if what == "min-size":
        n, k = _ints(args.params, 2, "min-size N K")
        print(extremal.min_size(n, k))
        return 0
    if what == "max-size":
        n, k = _ints(args.params, 2, "max-size N K")
        lo, hi = extremal.max_size_bounds(n, k)
        print(f"{lo} {hi}" if lo != hi else lo)
        return 0
    if what == "gen":
        if not args.params:
            raise UsageError("gen needs a family: Gk N K | H N | triangles N | chain N K")
        fam, rest = args.params[0], args.params[1:]
        if fam == "Gk":
            n, k = _ints(rest, 2, "gen Gk N K")
            g, coloring = extremal.gen_Gk(n, k)
            if args.coloring_out:
                Path(args.coloring_out).write_text(format_coloring(coloring), encoding="utf-8")
        elif fam == "H":
            (n,) = _ints(rest, 1, "gen H N")
            g = extremal.gen_H(n)
        elif fam == "triangles":
            (n,) = _ints(rest, 1, "gen triangles N")
            g = extremal.gen_triangle_blocks(n)
        elif fam == "chain":
            n, k = _ints(rest, 2, "gen chain N K")
            g = extremal.gen_clique_chain(n, k)
        else:
            raise UsageError(f"unknown generator {fam!r}")
        sys.stdout.write(_write_graph(g, args.out, args.format))
        return 0
    raise UsageError(f"unknown extremal command {what!r}")


def _ints(params, count, usage):
    if len(params) != count or not all(p.isdigit() for p in params):
        raise UsageError(f"usage: extremal {usage}")
    return [int(p) for p in params]


def cmd_audit(args) -> int:
    theorems = args.theorems.split(",") if args.theorems else None
    report = audit(args.n, theorems, jobs=args.jobs, budget=args.budget, samples=args.samples)
    sys.stdout.write(report.to_json() + "\n" if args.json else report.to_text())
    return 0 if report.passed else 1


def cmd_enumerate(args) -> int:
    for g in enumerate_connected(args.n, up_to_isomorphism=not args.labeled):
        print(to_graph6(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rvdkit", description="Rainbow vertex-disconnection toolkit")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p):
        p.add_argument("file", help="graph file (edge list or graph6; '-' for stdin)")
        p.add_argument("--format", choices=["auto", "edges", "graph6"], default="auto")

    p = sub.add_parser("rvd", help="exact rvd with witness coloring")
    graph_args(p)
    p.add_argument("--certificates", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest block searched exactly")
    p.add_argument("--coloring-out", help="write the witness coloring to this file")
    p.set_defaults(func=cmd_rvd)

    p = sub.add_parser("verify", help="check a coloring")
    graph_args(p)
    p.add_argument("coloring")
    p.add_argument("--certificates", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cut", help="find a rainbow x-y vertex-cut")
    graph_args(p)
    p.add_argument("coloring")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("family", help="closed-form value and coloring for a named family")
    p.add_argument("spec", help="cycle:n=6, wheel:n=8, kpartite:1,2,3, complete:n=5, path:n=5, star:n=6")
    p.add_argument("--check", action="store_true", help="also run the verifier on the coloring")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("extremal", help="size formulas and extremal generators")
    p.add_argument("what", choices=["min-size", "max-size", "gen"])
    p.add_argument("params", nargs="*")
    p.add_argument("--out")
    p.add_argument("--coloring-out")
    p.add_argument("--format", choices=["edges", "graph6"], default="edges")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("audit", help="exhaustive theorem audit over small graphs")
    p.add_argument("n", type=int)
    p.add_argument("--theorems", help="comma-separated subset of: " + ", ".join(THEOREMS))
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=float, help="seconds per theorem before it is marked skipped")
    p.add_argument("--samples", type=int, default=100, help="random colorings per graph for cut-oracle")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("enumerate", help="connected graphs as graph6 lines")
    p.add_argument("n", type=int)
    p.add_argument("--labeled", action="store_true", help="all labeled graphs, no isomorph rejection")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except (UsageError, ParseError, GraphError, FamilySpecError, SolverCapExceeded, ValueError, OSError) as exc:
        print(f"rvdkit {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
