import json
import sys
from pathlib import Path
from xml.etree import ElementTree

import pytest

from linlay.cli import EXIT_BACKEND, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from linlay.layout_io import read_layout

TOOL = Path(__file__).resolve().parent / "tools" / "builtin_dimacs.py"


def test_generate_then_verify(tmp_path, capsys):
    out = tmp_path / "k30.linlay"
    assert main(["generate", "--family", "kn-rique", "--n", "30", "-o", str(out)]) == EXIT_OK
    assert read_layout(out).num_pages == 9
    assert main(["verify", str(out)]) == EXIT_OK
    assert "valid" in capsys.readouterr().out
    assert main(["verify", str(out), "--json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["valid"] and data["pages"] == 9 and data["edges"] == 435


def test_generate_to_stdout(capsys):
    assert main(["generate", "--family", "kn-deque", "--n", "8"]) == EXIT_OK
    assert "linlay 1 deque 8 2" in capsys.readouterr().out


def test_generate_below_min_names_it(capsys):
    assert main(["generate", "--family", "knn-deque", "--n", "20"]) == EXIT_USAGE
    assert "N_min = 36" in capsys.readouterr().err


def test_verify_reports_conflicts(tmp_path, capsys):
    f = tmp_path / "bad.linlay"
    f.write_text("linlay 1 deque 4 1\norder: 0 1 2 3\npage 1:\n0 2 hh\n1 3 hh\n")
    assert main(["verify", str(f)]) == EXIT_FAIL
    assert "conflict" in capsys.readouterr().out


def test_verify_parse_error(tmp_path, capsys):
    f = tmp_path / "bad.linlay"
    f.write_text("linlay 1 deque 2 1\norder: 0 1\npage 1:\n0 1 xx\n")
    assert main(["verify", str(f)]) == EXIT_FAIL
    assert "etype" in capsys.readouterr().err


def test_solve_fixed_pages(tmp_path, capsys):
    log = tmp_path / "sweep.jsonl"
    assert main(["solve", "--kn", "5", "--kind", "deque", "--pages", "1", "--backend", "builtin",
                 "--log", str(log)]) == EXIT_FAIL
    out = tmp_path / "k5.linlay"
    assert main(["solve", "--kn", "5", "--kind", "deque", "--pages", "2", "--backend", "builtin",
                 "--log", str(log), "-o", str(out)]) == EXIT_OK
    recs = [json.loads(line) for line in log.read_text().splitlines()]
    assert [r["status"] for r in recs] == ["UNSAT", "SAT"]
    assert recs[1]["witness"] == str(out) and recs[0]["witness"] is None
    assert set(recs[0]) == {"graph", "kind", "pages", "status", "seconds", "vars", "clauses", "witness"}
    assert main(["verify", str(out)]) == EXIT_OK


def test_solve_min_with_external_backend(tmp_path, capsys):
    log = tmp_path / "sweep.jsonl"
    out = tmp_path / "k5.linlay"
    backend = f"{sys.executable} {TOOL} {{cnf}}"
    # the density bound starts the scan at 2 stacks
    assert main(["solve", "--kn", "5", "--kind", "stack", "--min", "--backend", backend,
                 "--log", str(log), "-o", str(out)]) == EXIT_OK
    assert read_layout(out).num_pages == 3
    recs = [json.loads(line) for line in log.read_text().splitlines()]
    assert [(r["pages"], r["status"]) for r in recs] == [(2, "UNSAT"), (3, "SAT")]
    assert recs[1]["witness"] == str(out)


def test_solve_edge_list(tmp_path, capsys):
    f = tmp_path / "c4.txt"
    f.write_text("# a 4-cycle\n0 1\n1 2\n2 3\n3 0\n")
    assert main(["solve", "--edges", str(f), "--kind", "stack", "--pages", "1",
                 "--backend", "builtin"]) == EXIT_OK


def test_solve_unknown_backend(capsys):
    assert main(["solve", "--kn", "4", "--kind", "deque", "--pages", "1",
                 "--backend", "/nonexistent {cnf}"]) == EXIT_BACKEND


def test_solve_usage_errors(tmp_path, capsys):
    assert main(["solve", "--kn", "4", "--kind", "deque"]) == EXIT_USAGE
    assert main(["solve", "--kn", "4", "--kind", "nope", "--pages", "1"]) == EXIT_USAGE
    f = tmp_path / "bad.txt"
    f.write_text("0 0\n")
    assert main(["solve", "--edges", str(f), "--kind", "deque", "--pages", "1"]) == EXIT_USAGE
    assert main(["solve", "--edges", str(tmp_path / "missing.txt"), "--kind", "deque",
                 "--pages", "1"]) == EXIT_USAGE


@pytest.mark.parametrize("mode", ["grid", "arcs"])
def test_render(tmp_path, mode):
    lay = tmp_path / "k9.linlay"
    main(["generate", "--family", "kn-deque", "--n", "9", "-o", str(lay)])
    svg = tmp_path / "k9.svg"
    assert main(["render", str(lay), "--mode", mode, "--title", "K9", "-o", str(svg)]) == EXIT_OK
    root = ElementTree.parse(svg).getroot()
    assert root.tag.endswith("svg")


def test_render_rejects_invalid_layout(tmp_path, capsys):
    f = tmp_path / "bad.linlay"
    f.write_text("linlay 1 deque 4 1\norder: 0 1 2 3\npage 1:\n0 2 hh\n1 3 hh\n")
    assert main(["render", str(f)]) == EXIT_FAIL


def test_render_bad_palette(tmp_path, capsys):
    lay = tmp_path / "k6.linlay"
    main(["generate", "--family", "kn-deque", "--n", "9", "-o", str(lay)])
    assert main(["render", str(lay), "--palette", "red,red,red"]) == EXIT_USAGE


def test_exact(capsys, tmp_path):
    out = tmp_path / "k5.linlay"
    assert main(["exact", "--kn", "5", "--kind", "rique", "-o", str(out)]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["pages"] == 2
    assert read_layout(out).num_pages == 2
    assert main(["exact", "--kn", "9", "--kind", "deque"]) == EXIT_USAGE


def test_bounds(capsys):
    assert main(["bounds", "--family", "kn", "--kind", "deque", "--n", "10"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["lower_bound_pages"] == 3 and data["upper_bound_pages"] == 3
    assert data["identity_checked"] is True
    assert main(["bounds", "--family", "knn", "--kind", "rique", "--n", "30"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["num_vertices"] == 60 and data["m"] == 900


def test_bad_subcommand(capsys):
    assert main(["frobnicate"]) == EXIT_USAGE
