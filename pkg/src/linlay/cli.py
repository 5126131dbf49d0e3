"""Command line interface: ``linlay <subcommand> ...``.

Exit codes: 0 valid / SAT, 1 invalid / UNSAT, 2 usage or unsupported
size, 3 solver backend failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import bounds
from .constructions import deque_layout_Kn, deque_layout_Knn, rique_layout_Kn, rique_layout_Knn
from .core import (
    Graph,
    LayoutError,
    LayoutKind,
    UnsupportedSize,
    complete_bipartite_graph,
    complete_graph,
    validate_layout,
)
from .dequesim import exact_page_number
from .layout_io import read_layout, serialize_layout, write_layout
from .render import RenderSpec, render
from .sat.search import page_number_search, solve_layout
from .sat.solver import SOLVER_ENV

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BACKEND = 0, 1, 2, 3

FAMILIES = {
    "kn-deque": deque_layout_Kn,
    "kn-rique": rique_layout_Kn,
    "knn-deque": deque_layout_Knn,
    "knn-rique": rique_layout_Knn,
}

log = logging.getLogger("linlay")


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out and out != "-":
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def read_edge_list(path: str, num_vertices: int | None = None) -> Graph:
    edges = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].split()
            if not line:
                continue
            if len(line) != 2:
                raise UsageError(f"{path}:{lineno}: expected 'u v'")
            try:
                edges.append((int(line[0]), int(line[1])))
            except ValueError:
                raise UsageError(f"{path}:{lineno}: vertex ids must be integers") from None
    n = num_vertices if num_vertices is not None else 1 + max((max(e) for e in edges), default=-1)
    try:
        return Graph(n, edges)
    except LayoutError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _graph(args) -> tuple[Graph, str]:
    if args.kn is not None:
        return complete_graph(args.kn), f"K{args.kn}"
    if args.knn is not None:
        return complete_bipartite_graph(args.knn), f"K{args.knn},{args.knn}"
    return read_edge_list(args.edges, args.vertices), os.path.basename(args.edges)


def _graph_args(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--kn", type=int, metavar="N", help="complete graph K_N")
    g.add_argument("--knn", type=int, metavar="N", help="complete bipartite graph K_{N,N}")
    g.add_argument("--edges", metavar="FILE", help="edge list, one 'u v' per line")
    p.add_argument("--vertices", type=int, help="vertex count for --edges (default: max id + 1)")
    p.add_argument("--kind", required=True, choices=[k.value for k in LayoutKind])


def cmd_generate(args) -> int:
    try:
        layout = FAMILIES[args.family](args.n)
    except UnsupportedSize as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LayoutError as exc:
        raise UsageError(str(exc)) from None
    _emit(serialize_layout(layout, comment=f"{args.family} n={args.n}"), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        layout = read_layout(args.file)
    except LayoutError as exc:
        print(f"{args.file}: parse error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    report = validate_layout(layout)
    if args.json:
        print(json.dumps({
            "file": args.file, "valid": report.valid, "kind": layout.kind.value,
            "vertices": layout.graph.num_vertices, "edges": layout.graph.num_edges,
            "pages": layout.num_pages, "violations": [str(v) for v in report.violations],
        }, indent=2))
    else:
        for v in report.violations:
            print(v)
        state = "valid" if report.valid else f"INVALID ({len(report.violations)} violations)"
        print(f"{args.file}: {layout.kind.value} layout, {layout.graph.num_vertices} vertices, "
              f"{layout.graph.num_edges} edges, {layout.num_pages} pages: {state}")
    return EXIT_OK if report.valid else EXIT_FAIL


def cmd_solve(args) -> int:
    graph, label = _graph(args)
    kind = LayoutKind(args.kind)
    backend = args.backend
    if args.min:
        steps = []
        res = page_number_search(graph, kind, lo=args.lo, hi=args.hi, backend=backend,
                                 timeout=args.timeout, graph_label=label, on_step=steps.append)
        if args.log:
            with open(args.log, "a", encoding="utf-8") as sink:
                for st in steps:
                    witness = args.out if (st.status == "SAT" and args.out and args.out != "-") else None
                    sink.write(json.dumps({
                        "graph": label, "kind": kind.value, "pages": st.pages, "status": st.status,
                        "seconds": st.seconds, "vars": st.num_vars, "clauses": st.num_clauses,
                        "witness": witness,
                    }) + "\n")
        summary = {"graph": label, "kind": kind.value, "status": res.status,
                   "pages": res.pages, "bracket": list(res.bracket),
                   "steps": [vars(s) for s in res.steps]}
        print(json.dumps(summary), file=sys.stderr if args.out in (None, "-") else sys.stdout)
        if res.status == "UNKNOWN":
            return EXIT_BACKEND
        if res.layout is None:
            return EXIT_FAIL
        _emit(serialize_layout(res.layout, comment=f"{label} {kind.value} minimum {res.pages}"), args.out)
        return EXIT_OK

    if args.pages is None or args.pages < 1:
        raise UsageError("give --pages P (P >= 1) or --min")
    result, cnf, layout = solve_layout(graph, args.pages, kind, backend, args.timeout)
    if args.log:
        with open(args.log, "a", encoding="utf-8") as sink:
            sink.write(json.dumps({
                "graph": label, "kind": kind.value, "pages": args.pages, "status": result.status,
                "seconds": round(result.seconds, 4), "vars": cnf.num_vars,
                "clauses": cnf.num_clauses,
                "witness": args.out if layout is not None and args.out not in (None, "-") else None,
            }) + "\n")
    if result.status == "UNKNOWN":
        print(f"{label} {kind.value} p={args.pages}: UNKNOWN ({result.diagnostics})", file=sys.stderr)
        return EXIT_BACKEND
    if layout is None:
        print(f"{label} {kind.value} p={args.pages}: UNSAT")
        return EXIT_FAIL
    print(f"{label} {kind.value} p={args.pages}: SAT", file=sys.stderr)
    _emit(serialize_layout(layout, comment=f"{label} {kind.value} p={args.pages}"), args.out)
    return EXIT_OK


def cmd_render(args) -> int:
    try:
        layout = read_layout(args.file)
    except LayoutError as exc:
        print(f"{args.file}: parse error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    colors = args.palette.split(",") if args.palette else []
    try:
        spec = RenderSpec(mode=args.mode, cell=args.cell, colors=colors, title=args.title)
        svg = render(layout, spec)
    except LayoutError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(svg, args.out)
    return EXIT_OK


def cmd_exact(args) -> int:
    graph, label = _graph(args)
    try:
        p, layout = exact_page_number(graph, LayoutKind(args.kind), args.max_pages)
    except UnsupportedSize as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(json.dumps({"graph": label, "kind": args.kind, "max_pages": args.max_pages,
                      "pages": p, "exceeds_max": p is None}))
    if args.out and layout is not None:
        write_layout(layout, args.out, comment=f"{label} {args.kind} exact {p}")
    return EXIT_OK


def cmd_bounds(args) -> int:
    try:
        report = bounds.bounds_report(args.family, args.n, LayoutKind(args.kind))
    except LayoutError as exc:
        raise UsageError(str(exc)) from None
    print(json.dumps(report.to_dict(), indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="linlay", description="Deque and rique layouts of graphs.")
    ap.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write an explicit construction")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", "-o", help="output file (default stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="validate a layout file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="SAT search for a layout")
    _graph_args(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--pages", type=int)
    g.add_argument("--min", action="store_true", help="search the least page count")
    p.add_argument("--lo", type=int, default=1)
    p.add_argument("--hi", type=int)
    p.add_argument("--backend", help=f"'builtin' or a command with {{cnf}} (default ${SOLVER_ENV} or builtin)")
    p.add_argument("--timeout", type=float, help="seconds per SAT call")
    p.add_argument("--log", metavar="FILE", help="append JSON-lines records per solved instance")
    p.add_argument("--out", "-o")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("render", help="draw a layout as SVG")
    p.add_argument("file")
    p.add_argument("--mode", choices=["grid", "arcs"], default="grid")
    p.add_argument("--cell", type=int, default=14)
    p.add_argument("--palette", help="comma separated colors, one per page")
    p.add_argument("--title")
    p.add_argument("--out", "-o")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("exact", help="brute-force page number of a tiny graph")
    _graph_args(p)
    p.add_argument("--max-pages", type=int, default=4)
    p.add_argument("--out", "-o", help="write the witness layout")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("bounds", help="density bounds as JSON")
    p.add_argument("--family", required=True, choices=["kn", "knn"])
    p.add_argument("--kind", required=True, choices=["deque", "rique"])
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_bounds)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
