import csv
import io
import json

import pytest

from critsets.cli import load_graph_source, main
from critsets.errors import InvalidParameterError
from critsets.graphs import emit_graph6, enumerate_graphs, make_complete, make_cycle, parse_graph6
from critsets.sudoku import canonical_board, format_board, mnc_exhaustive


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_load_graph_source(tmp_path):
    assert load_graph_source("cycle:5") == make_cycle(5)
    assert load_graph_source("complete:3") == make_complete(3)
    assert load_graph_source(emit_graph6(make_cycle(4))) == make_cycle(4)
    path = tmp_path / "g.g6"
    path.write_text(emit_graph6(make_cycle(6)) + "\n")
    assert load_graph_source(str(path)) == make_cycle(6)
    latin = load_graph_source("latin:2")
    assert (latin.n, latin.m) == (4, 4)
    with pytest.raises(InvalidParameterError):
        load_graph_source("cycle:x")


def test_params_text(capsys):
    code, out, _ = run_cli(capsys, "params", "cycle:5")
    assert code == 0
    assert "uscs=3 oscs=3 ulcs=4 olcs=4" in out
    code, out, _ = run_cli(capsys, "params", "latin:2")
    assert code == 0 and "uscs=1 oscs=1 ulcs=1 olcs=1" in out
    code, out, _ = run_cli(capsys, "params", "complete:4")
    assert code == 0 and "uscs=3 oscs=3 ulcs=3 olcs=3" in out


def test_params_json_and_csv(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "params", "cycle:7")
    assert code == 0
    data = json.loads(out)
    assert (data["uscs"], data["oscs"], data["ulcs"], data["olcs"]) == (4, 5, 4, 6)
    assert data["chi"] == 3
    code, out, _ = run_cli(capsys, "--format", "csv", "params", "cycle:7")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][:3] == ["source", "n", "m"]
    assert rows[1][5:] == ["4", "5", "4", "6"]


def test_params_k_flag(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "params", "complete:2", "--k", "3")
    assert code == 0
    data = json.loads(out)
    assert (data["uscs"], data["olcs"]) == (2, 2)
    code, _, err = run_cli(capsys, "params", "cycle:5", "--k", "2")
    assert code == 1 and "error" in err


def test_params_error_codes(capsys):
    code, _, err = run_cli(capsys, "params", "not-a-graph6{{")
    assert code == 1
    code, _, err = run_cli(capsys, "params", "cycle:25")
    assert code == 2 and "size limit" in err


def test_table_small(capsys):
    code, out, _ = run_cli(capsys, "table", "3")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    header, body = rows[0], rows[1:]
    assert len(body) == 4
    by_g6 = {row[0]: row for row in body}
    k3_row = by_g6[emit_graph6(parse_graph6("Bw"))]
    assert k3_row[3:7] == ["2", "2", "2", "2"]
    code, out, _ = run_cli(capsys, "table", "4", "--nonbipartite")
    rows = list(csv.reader(io.StringIO(out)))
    assert all(int(row[2]) >= 3 for row in rows[1:])  # chi of nonbipartite
    code, _, err = run_cli(capsys, "table", "8")
    assert code == 2


def test_scan_command(capsys, tmp_path):
    path = tmp_path / "atlas.g6"
    lines = [emit_graph6(g) for n in range(1, 5) for g in enumerate_graphs(n)]
    path.write_text("\n".join(lines) + "\nBADLINE{{\n")
    code, out, _ = run_cli(capsys, "scan", str(path), "--check", "uniform")
    assert code == 0
    # the paw (graph6 CN) is the one class on <=4 vertices that is not
    # critically uniform; see tests/test_critical.py
    assert "counterexamples=1" in out
    assert "CN" in out
    assert "parse_errors=1" in out
    code, out, _ = run_cli(capsys, "--format", "json", "scan", str(path), "--check", "converse")
    data = json.loads(out)
    assert data["checked"] == 18 and data["counterexamples"] == []
    empty = tmp_path / "empty.g6"
    empty.write_text("")
    code, out, _ = run_cli(capsys, "scan", str(empty), "--check", "prop1")
    assert code == 0 and "graphs=0" in out


def test_atlas_command(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "atlas", "5")
    assert code == 0
    lines = [l for l in out.splitlines() if l]
    assert len(lines) == 34
    out_file = tmp_path / "n4.g6"
    code, _, _ = run_cli(capsys, "atlas", "4", "--out", str(out_file))
    assert code == 0
    assert len(out_file.read_text().splitlines()) == 11


def test_sudoku_gen(capsys):
    code, out, err = run_cli(capsys, "sudoku", "gen", "3")
    assert code == 0
    g = parse_graph6(out.strip())
    assert (g.n, g.m) == (81, 810)
    assert "degree=[20]" in err


def test_sudoku_trials_deterministic(capsys):
    code, out1, err1 = run_cli(capsys, "--seed", "7", "sudoku", "trials", "2", "--count", "10")
    assert code == 0
    code, out2, _ = run_cli(capsys, "--seed", "7", "sudoku", "trials", "2", "--count", "10")
    assert out1 == out2
    rows = list(csv.reader(io.StringIO(out1)))
    assert rows[0] == ["trial", "surviving", "cells"]
    assert len(rows) == 11
    assert "mean=" in err1


def test_sudoku_mnc(capsys):
    code, out, _ = run_cli(capsys, "sudoku", "mnc", "2")
    assert code == 0
    assert "minimum clues: 4" in out
    code, _, err = run_cli(capsys, "sudoku", "mnc", "3")
    assert code == 1


def test_sudoku_certify(capsys, tmp_path):
    result = mnc_exhaustive(2)
    fair = tmp_path / "fair.txt"
    fair.write_text(format_board(2, result.board.colors, result.clues))
    code, out, _ = run_cli(capsys, "sudoku", "certify", str(fair))
    assert code == 0 and out.strip() == "fair"
    empty = tmp_path / "empty.txt"
    empty.write_text(format_board(2, canonical_board(2).colors, clues=0))
    code, out, _ = run_cli(capsys, "sudoku", "certify", str(empty))
    assert code == 0 and out.startswith("unfair")
    code, _, _ = run_cli(capsys, "sudoku", "certify", str(tmp_path / "missing.txt"))
    assert code == 1


def test_reduce_command(capsys, tmp_path):
    prefix = tmp_path / "inst"
    code, out, _ = run_cli(capsys, "reduce", "ulcs", "complete:3", "--out", str(prefix))
    assert code == 0
    assert "|V(G)|=27" in out and "k=9" in out
    g = parse_graph6((tmp_path / "inst.g6").read_text().strip())
    assert g.n == 27
    roles = json.loads((tmp_path / "inst.roles.json").read_text())
    assert roles["k"] == 9 and len(roles["roles"]) == 27

    code, out, _ = run_cli(capsys, "reduce", "olcs", "path:3")
    assert code == 0 and "|V(G)|=13" in out and "k=8" in out

    code, out, _ = run_cli(capsys, "reduce", "ulcs", "complete:2", "--verify")
    assert code == 0
    assert "consistent=True" in out and "ulcs(G)=4" in out
