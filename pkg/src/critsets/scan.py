"""Atlas scans: per-graph parameter records, implication checks, and a
process pool for the larger catalogs.
"""

from __future__ import annotations

import multiprocessing
import sys
from dataclasses import dataclass

from .coloring import DEFAULT_MAX_VERTICES, chromatic_number, is_uniquely_colorable
from .critical import four_params
from .errors import Graph6Error
from .graphs import Graph, emit_graph6, parse_graph6

CHECKS = ("prop1", "converse", "uniform")


@dataclass(frozen=True)
class GraphRecord:
    graph6: str
    n: int
    chi: int
    quad: tuple[int, int, int, int]
    uniquely_colorable: bool
    uniform: int | None


@dataclass
class ScanReport:
    check: str
    records: list[GraphRecord]
    counterexamples: list[GraphRecord]
    parse_errors: list[tuple[int, str]]

    @property
    def checked(self) -> int:
        return len(self.records)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def record_for_graph(g: Graph, graph6: str | None = None,
                     max_vertices: int = DEFAULT_MAX_VERTICES) -> GraphRecord:
    quad = four_params(g, max_vertices)
    return GraphRecord(
        graph6 if graph6 is not None else emit_graph6(g),
        g.n,
        chromatic_number(g, max_vertices),
        quad.values(),
        is_uniquely_colorable(g, max_vertices),
        quad.uniform_value(),
    )


def implication_holds(check: str, rec: GraphRecord) -> bool:
    """Whether the selected implication holds for one record.

    The empty graph is excluded (chi - 1 would be negative there).
    """
    if rec.n == 0:
        return True
    if check == "prop1":
        return not rec.uniquely_colorable or rec.uniform == rec.chi - 1
    if check == "converse":
        return rec.uniform != rec.chi - 1 or rec.uniquely_colorable
    if check == "uniform":
        return rec.uniform is not None
    raise ValueError(f"unknown check {check!r}")


def _worker(args: tuple[int, str, int]):
    line_no, line, max_vertices = args
    try:
        g = parse_graph6(line)
        return line_no, record_for_graph(g, line, max_vertices), None
    except Graph6Error as exc:
        return line_no, None, str(exc)


def scan_graph6_lines(
    lines,
    check: str,
    jobs: int = 1,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    progress=None,
) -> ScanReport:
    """Run one implication check over graph6 lines.

    Bad lines are recorded and skipped; record order follows input order
    even when distributed over a pool.
    """
    if check not in CHECKS:
        raise ValueError(f"check must be one of {CHECKS}")
    tasks = [
        (i + 1, line.strip(), max_vertices)
        for i, line in enumerate(lines)
        if line.strip()
    ]
    report = ScanReport(check, [], [], [])
    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            results = pool.imap(_worker, tasks, chunksize=16)
            _collect(report, results, check, progress)
    else:
        _collect(report, map(_worker, tasks), check, progress)
    return report


def _collect(report: ScanReport, results, check: str, progress):
    for done, (line_no, rec, err) in enumerate(results, 1):
        if err is not None:
            report.parse_errors.append((line_no, err))
            continue
        report.records.append(rec)
        if not implication_holds(check, rec):
            report.counterexamples.append(rec)
        if progress and done % progress == 0:
            print(f"  scanned {done} graphs", file=sys.stderr, flush=True)
