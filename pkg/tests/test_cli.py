import json
import subprocess
import sys
from pathlib import Path

import pytest

from c5t.cli import main
from c5t.io import parse_edge_list

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_book(capsys):
    code, out, _ = run(capsys, "analyze", FIXTURES / "book3.txt", "--json")
    assert code == 0
    res = json.loads(out)["result"]
    assert res["triangles"] == 3
    assert res["blocks"] == {"crown": 1, "k4": 0, "invalid": 0}
    assert res["c5"] is None
    assert res["claim1"]["passed"]


def test_analyze_c5(capsys):
    code, out, _ = run(capsys, "analyze", FIXTURES / "c5.txt", "--json")
    res = json.loads(out)["result"]
    assert code == 0
    assert res["triangles"] == 0 and res["c5"] == [0, 1, 2, 3, 4]
    assert res["claim1"]["precondition_failed"]


def test_analyze_human_output(capsys):
    code, out, _ = run(capsys, "analyze", FIXTURES / "book3.txt")
    assert code == 0
    assert "triangles" in out and "1 crown, 0 K4" in out


def test_analyze_malformed(capsys):
    code, _, err = run(capsys, "analyze", FIXTURES / "malformed.txt")
    assert code == 2
    assert "line 3" in err


def test_analyze_labels(tmp_path, capsys):
    p = tmp_path / "labelled.txt"
    p.write_text("a b\nb c\nc a\nc d\nd e\ne a\n")
    code, out, _ = run(capsys, "analyze", p, "--labels", "--json")
    res = json.loads(out)["result"]
    assert code == 0 and res["triangles"] == 1
    assert sorted(res["c5"]) == ["a", "b", "c", "d", "e"]


def test_missing_file(capsys):
    code, _, err = run(capsys, "analyze", "/nonexistent/graph.txt")
    assert code == 2 and "cannot read" in err


def test_reduce_k4(tmp_path, capsys):
    out_path = tmp_path / "g0.txt"
    code, out, _ = run(capsys, "reduce", FIXTURES / "k4.txt", "--out", out_path, "--json")
    assert code == 0
    g0, _ = parse_edge_list(out_path.read_text())
    assert g0.m == 4
    ver = json.loads(out)["result"]["verification"]
    assert ver["passed"] and all(ver["checks"].values())


def test_reduce_c5_exits_1(tmp_path, capsys):
    code, _, err = run(capsys, "reduce", FIXTURES / "c5.txt", "--out", tmp_path / "x.txt")
    assert code == 1
    assert "0-1-2-3-4" in err
    assert not (tmp_path / "x.txt").exists()


def test_reduce_bg_fano(tmp_path, capsys):
    out_path = tmp_path / "g0.txt"
    code, out, _ = run(capsys, "reduce", FIXTURES / "bg_fano.txt", "--out", out_path)
    assert code == 0
    g0, _ = parse_edge_list(out_path.read_text())
    assert g0.m == 21
    assert "g0 girth 6" in out


def test_construct_pp_and_bg(tmp_path, capsys):
    p = tmp_path / "pp.txt"
    code, out, _ = run(capsys, "construct", "pp", "--q", 2, "--out", p)
    assert code == 0 and out.strip() == "n 14  m 21  t 0"
    g, _ = parse_edge_list(p.read_text())
    assert (g.n, g.m) == (14, 21)
    code, out, _ = run(capsys, "construct", "bg", "--q", 2, "--out", tmp_path / "bg.txt")
    assert out.strip() == "n 21  m 49  t 21"
    assert (tmp_path / "bg.txt").read_text() == (FIXTURES / "bg_fano.txt").read_text().split("\n", 1)[1]


def test_construct_bad_q(capsys):
    code, _, err = run(capsys, "construct", "pp", "--q", 6)
    assert code == 2 and "q must be prime" in err


def test_construct_named_graph6(capsys):
    code, out, err = run(capsys, "construct", "named", "--name", "complete-4", "--format", "graph6")
    assert code == 0 and out == "C~\n" and "t 4" in err


def test_construct_missing_q(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["construct", "pp"])
    assert exc.value.code == 2


def test_search_single_and_range(tmp_path, capsys):
    code, out, _ = run(capsys, "search", "--n", 4, "--json")
    res = json.loads(out)["result"]
    assert code == 0 and res[0]["n"] == 4 and res[0]["max_triangles"] == 4
    table = tmp_path / "table.jsonl"
    code, _, _ = run(capsys, "search", "--range", 3, 4, "--out", table)
    rows = [json.loads(line) for line in table.read_text().splitlines()]
    assert [r["max_triangles"] for r in rows] == [1, 4]


def test_search_idempotent_write(tmp_path, capsys):
    table = tmp_path / "table.jsonl"
    run(capsys, "search", "--range", 3, 5, "--out", table)
    first = table.read_text()
    run(capsys, "search", "--range", 3, 5, "--out", table)
    assert table.read_text() == first
    run(capsys, "search", "--n", 6, "--out", table)
    rows = [json.loads(line) for line in table.read_text().splitlines()]
    assert [r["n"] for r in rows] == [3, 4, 5, 6]
    assert rows[-1]["max_triangles"] == 5


def test_search_over_cap(capsys):
    code, _, err = run(capsys, "search", "--n", 9)
    assert code == 2 and "--cap" in err


def test_bounds_command(capsys):
    code, out, _ = run(capsys, "bounds", "--n", 8, "--json")
    payload = json.loads(out)["result"]
    assert code == 0
    assert payload["evaluations"][0]["main_theorem"] == 8.0
    code, out, _ = run(capsys, "bounds", FIXTURES / "bg_fano.txt", "--json")
    assert json.loads(out)["result"]["report"]["t"] == 21


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "c5t.cli", "analyze", str(FIXTURES / "c5.txt")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "0-1-2-3-4" in proc.stdout
