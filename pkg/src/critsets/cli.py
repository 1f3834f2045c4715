"""Command-line surface.

Subcommands: params, table, scan, atlas, sudoku (gen/trials/mnc/certify),
and reduce.  Graph sources are graph6 strings, files containing one, or
the generator mini-language cycle:N, complete:N, path:N, empty:N,
sudoku:N, latin:N.

Exit codes: 0 success, 1 input error, 2 size limit, 3 invariant breach.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import graphs, scan, sudoku
from .coloring import Coloring, chromatic_number
from .critical import PARAM_NAMES, ParamQuad, four_params, four_params_k
from .errors import (
    CritsetsError,
    Graph6Error,
    InternalError,
    InvalidParameterError,
    SizeLimitError,
    UnsupportedError,
)
from .graphs import Graph, bits, cartesian_product, make_complete
from .reductions import reduce_olcs, reduce_ulcs, verify_reduction_small

GENERATORS = {
    "cycle": graphs.make_cycle,
    "complete": graphs.make_complete,
    "path": graphs.make_path,
    "empty": graphs.make_empty,
    "latin": lambda n: cartesian_product(make_complete(n), make_complete(n)),
    "sudoku": lambda n: sudoku.sudoku_graph(n).graph,
}


def load_graph_source(src: str) -> Graph:
    if ":" in src:
        name, _, arg = src.partition(":")
        if name in GENERATORS:
            try:
                n = int(arg)
            except ValueError:
                raise InvalidParameterError(f"bad generator argument in {src!r}") from None
            return GENERATORS[name](n)
    if os.path.exists(src):
        with open(src) as fh:
            for line in fh:
                if line.strip():
                    return graphs.parse_graph6(line)
        raise InvalidParameterError(f"no graph6 line found in {src}")
    return graphs.parse_graph6(src)


def _set_str(mask: int) -> str:
    return "{" + ",".join(str(v) for v in bits(mask)) + "}"


def _coloring_str(coloring: Coloring) -> str:
    return ",".join(str(c) for c in coloring.colors)


def _quad_json(quad: ParamQuad) -> dict:
    out = {name: getattr(quad, name) for name in PARAM_NAMES}
    if quad.witnesses:
        out["witnesses"] = {
            name: {"coloring": list(col.colors), "set": bits(mask)}
            for name, (col, mask) in quad.witnesses.items()
        }
    return out


def cmd_params(args) -> int:
    g = load_graph_source(args.source)
    chi = chromatic_number(g, args.max_vertices)
    if args.k is not None:
        quad = four_params_k(g, args.k, args.max_vertices)
        k = args.k
    else:
        quad = four_params(g, args.max_vertices)
        k = chi
    if args.format == "json":
        print(json.dumps({"source": args.source, "n": g.n, "m": g.m, "chi": chi,
                          "k": k, **_quad_json(quad)}))
    elif args.format == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(["source", "n", "m", "chi", "k", *PARAM_NAMES])
        w.writerow([args.source, g.n, g.m, chi, k, *quad.values()])
    else:
        print(f"graph: {args.source} (n={g.n}, m={g.m}, chi={chi}, palette={k})")
        print(" ".join(f"{name}={getattr(quad, name)}" for name in PARAM_NAMES))
        for name in PARAM_NAMES:
            col, mask = quad.witnesses[name]
            print(f"{name} witness: set={_set_str(mask)} coloring={_coloring_str(col)}")
    return 0


def _table_records(n: int, nonbipartite: bool, max_vertices: int):
    for g in graphs.atlas_graphs(n):
        if nonbipartite and graphs.is_bipartite(g):
            continue
        yield scan.record_for_graph(g, max_vertices=max_vertices)


def cmd_table(args) -> int:
    if args.n > 7:
        raise SizeLimitError("tables are available up to 7 vertices")
    records = list(_table_records(args.n, args.nonbipartite, args.max_vertices))
    if args.format == "json":
        print(json.dumps([rec.__dict__ for rec in records]))
        return 0
    w = csv.writer(sys.stdout)
    w.writerow(["graph6", "n", "chi", *PARAM_NAMES, "uniquely_colorable", "uniform"])
    for rec in records:
        w.writerow([rec.graph6, rec.n, rec.chi, *rec.quad,
                    int(rec.uniquely_colorable), "" if rec.uniform is None else rec.uniform])
    return 0


def cmd_scan(args) -> int:
    with open(args.file) as fh:
        lines = fh.readlines()
    report = scan.scan_graph6_lines(
        lines, args.check, jobs=args.jobs, max_vertices=args.max_vertices,
        progress=args.progress,
    )
    if args.format == "json":
        print(json.dumps({
            "check": report.check,
            "checked": report.checked,
            "counterexamples": [rec.__dict__ for rec in report.counterexamples],
            "parse_errors": report.parse_errors,
        }))
        return 0
    if args.format == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(["graph6", "n", "chi", *PARAM_NAMES, "uniquely_colorable", "uniform", "holds"])
        for rec in report.records:
            w.writerow([rec.graph6, rec.n, rec.chi, *rec.quad,
                        int(rec.uniquely_colorable),
                        "" if rec.uniform is None else rec.uniform,
                        int(scan.implication_holds(report.check, rec))])
        return 0
    print(f"check={report.check} graphs={report.checked} "
          f"counterexamples={len(report.counterexamples)} parse_errors={len(report.parse_errors)}")
    for line_no, msg in report.parse_errors:
        print(f"  line {line_no}: {msg}")
    for rec in report.counterexamples:
        print(f"  counterexample: {rec.graph6} chi={rec.chi} quad={rec.quad} "
              f"uniquely_colorable={rec.uniquely_colorable}")
    return 0


def cmd_atlas(args) -> int:
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        for g in graphs.atlas_graphs(args.n):
            print(graphs.emit_graph6(g), file=out)
    finally:
        if args.out:
            out.close()
    return 0


def cmd_sudoku(args) -> int:
    if args.action == "gen":
        structure = sudoku.sudoku_graph(args.n)
        g = structure.graph
        print(graphs.emit_graph6(g))
        degrees = {g.degree(v) for v in range(g.n)}
        print(f"cells={g.n} edges={g.m} degree={sorted(degrees)}", file=sys.stderr)
        return 0
    if args.action == "trials":
        stats = sudoku.trial_campaign(args.n, args.count, seed=args.seed)
        out = open(args.out, "w", newline="") if args.out else sys.stdout
        try:
            w = csv.writer(out)
            w.writerow(["trial", "surviving", "cells"])
            for i, size in enumerate(stats.sizes):
                w.writerow([i, size, args.n ** 4])
        finally:
            if args.out:
                out.close()
        if stats.trials:
            print(f"trials={stats.trials} mean={stats.mean:.3f} "
                  f"min={stats.min_size} max={stats.max_size} seed={stats.seed}",
                  file=sys.stderr)
        return 0
    if args.action == "mnc":
        result = sudoku.mnc_exhaustive(args.n, symmetry=not args.no_symmetry)
        print(f"minimum clues: {result.min_clues}")
        print(sudoku.format_board(args.n, result.board.colors, result.clues), end="")
        if not sudoku.certify_fair_puzzle(
            sudoku.sudoku_graph(args.n), result.board, result.clues
        ):
            raise InternalError("reported witness failed certification")
        return 0
    if args.action == "certify":
        with open(args.file) as fh:
            text = fh.read()
        n, clues = sudoku.parse_board_text(text)
        structure = sudoku.sudoku_graph(n)
        cap = max(2, args.cap_extensions)
        count = sudoku.count_puzzle_completions(structure, clues, cap=cap)
        if count == 1:
            print("fair")
        elif count == 0:
            print("unfair (no completion)")
        else:
            more = "+" if count == cap else ""
            print(f"unfair ({count}{more} completions)")
        return 0
    raise InvalidParameterError(f"unknown sudoku action {args.action!r}")


def cmd_reduce(args) -> int:
    h = load_graph_source(args.source)
    instance = reduce_ulcs(h) if args.variant == "ulcs" else reduce_olcs(h)
    print(f"variant={instance.variant} |V(G)|={instance.graph.n} "
          f"|E(G)|={instance.graph.m} k={instance.k}")
    if args.out:
        with open(args.out + ".g6", "w") as fh:
            fh.write(graphs.emit_graph6(instance.graph) + "\n")
        with open(args.out + ".roles.json", "w") as fh:
            json.dump(instance.role_map_json(), fh, indent=2)
        print(f"wrote {args.out}.g6 and {args.out}.roles.json", file=sys.stderr)
    if args.verify:
        report = verify_reduction_small(
            h, args.variant, mode=args.mode, samples=args.samples,
            seed=args.seed, max_vertices=args.max_vertices,
        )
        value = "" if report.exact_value is None else f" {args.variant}(G)={report.exact_value}"
        print(f"verify mode={report.mode}{value} k={report.k} "
              f"H_3colorable={report.h_three_colorable} "
              f"consistent={report.consistent}: {report.detail}")
        if not report.consistent:
            raise InternalError("reduction verification failed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="critsets",
        description="Exact critical-set computations for graph colorings",
    )
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized steps")
    parser.add_argument("--max-vertices", type=int, default=20,
                        help="exact-search vertex cap (default 20)")
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--cap-extensions", type=int, default=2,
                        help="extension-count truncation (default 2)")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for scans")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="four extremal parameters of one graph")
    p.add_argument("source")
    p.add_argument("--k", type=int, default=None,
                   help="palette size for the parametrized variants (default chi)")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("table", help="parameter table over all isomorphism classes")
    p.add_argument("n", type=int)
    p.add_argument("--nonbipartite", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("scan", help="implication checks over a graph6 file")
    p.add_argument("file")
    p.add_argument("--check", choices=scan.CHECKS, required=True)
    p.add_argument("--progress", type=int, default=0,
                   help="report every N graphs on stderr")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("atlas", help="emit graph6 lines for all classes on n vertices")
    p.add_argument("n", type=int)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_atlas)

    p = sub.add_parser("sudoku", help="sudoku graph commands")
    action = p.add_subparsers(dest="action", required=True)
    q = action.add_parser("gen", help="emit the order-n graph as graph6")
    q.add_argument("n", type=int)
    q.set_defaults(func=cmd_sudoku)
    q = action.add_parser("trials", help="seeded thinning-process campaign (CSV)")
    q.add_argument("n", type=int)
    q.add_argument("--count", type=int, default=50)
    q.add_argument("--out", default=None)
    q.set_defaults(func=cmd_sudoku)
    q = action.add_parser("mnc", help="exhaustive minimum clue count (order 2)")
    q.add_argument("n", type=int, nargs="?", default=2)
    q.add_argument("--no-symmetry", action="store_true")
    q.set_defaults(func=cmd_sudoku)
    q = action.add_parser("certify", help="fair/unfair check for a puzzle file")
    q.add_argument("file")
    q.set_defaults(func=cmd_sudoku)

    p = sub.add_parser("reduce", help="build a hardness gadget instance")
    p.add_argument("variant", choices=("ulcs", "olcs"))
    p.add_argument("source")
    p.add_argument("--out", default=None, help="prefix for .g6 and .roles.json outputs")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--mode", choices=("auto", "full", "certificate"), default="auto")
    p.add_argument("--samples", type=int, default=20)
    p.set_defaults(func=cmd_reduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidParameterError, UnsupportedError, Graph6Error, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SizeLimitError as exc:
        print(f"size limit: {exc}", file=sys.stderr)
        return 2
    except (InternalError, CritsetsError) as exc:
        print(f"invariant breach: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
