import json
import subprocess
import sys

import pytest

from hstarlab.cli import main, render, sweep


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def test_hstar_cycle(capsys):
    code, out, _ = run(["hstar", "family", "cycle", "3"], capsys)
    data = json.loads(out)
    assert code == 0
    assert data["hstar"] == [1, 4, 1] and data["gamma"] == [1, 2]
    assert data["palindromic"] and data["gamma_positive"] and data["real_rooted"]


def test_verify_both(capsys):
    code, out, _ = run(["verify", "family", "complete_bipartite", "2", "2"], capsys)
    assert code == 0 and json.loads(out)["match"]
    code, out, _ = run(["hstar", "family", "complete_bipartite", "2", "2", "--method", "both"], capsys)
    assert json.loads(out)["hstar"] == [1, 5, 5, 1]


def test_type_B_and_trees(capsys):
    code, out, _ = run(["hstar", "family", "path", "3", "--type", "B", "--method", "both"], capsys)
    assert json.loads(out)["hstar"] == [1, 11, 11, 1]
    code, out, _ = run(["hstar", "family", "tree", "1-2,2-3,2-4"], capsys)
    assert json.loads(out)["hstar"] == [1, 3, 3, 1]


def test_poset_sources(capsys):
    code, out, _ = run(["hstar", "poset", "antichain", "2", "--enriched"], capsys)
    assert json.loads(out)["hstar"] == [1, 6, 1]
    code, out, _ = run(["hstar", "twinned", "antichain", "2", "antichain", "2", "--method", "both"], capsys)
    assert json.loads(out)["hstar"] == [1, 4, 1]


def test_pseudo_symmetric_families(capsys):
    code, out, _ = run(["gamma", "family", "delpezzo", "1"], capsys)
    assert json.loads(out) == {"hstar": [1, 4, 1], "gamma": [1, 2], "gamma_positive": True}


def test_ehrhart(capsys):
    code, out, _ = run(["ehrhart", "family", "cross", "2"], capsys)
    data = json.loads(out)
    assert data["counts"][:3] == [1, 5, 13]


def test_json_file_round_trip(tmp_path, capsys):
    code, out, _ = run(["family", "cycle", "4"], capsys)
    f = tmp_path / "c4.json"
    f.write_text(out)
    code, out, _ = run(["hstar", str(f), "--method", "both"], capsys)
    assert code == 0 and json.loads(out)["hstar"] == [1, 5, 5, 1]
    code, out, _ = run(["family", "chain", "3"], capsys)
    p = tmp_path / "p.json"
    p.write_text(out)
    code, out, _ = run(["hstar", str(p), "--enriched", "--method", "both"], capsys)
    assert code == 0


def test_assignment_file(tmp_path, capsys):
    from hstarlab.graphpoly import path_graph
    from hstarlab.labengine import suspension_assignment

    f = tmp_path / "a.json"
    f.write_text(json.dumps(suspension_assignment(path_graph(2)).to_json()))
    code, out, _ = run(["verify", str(f)], capsys)
    assert code == 0 and json.loads(out)["formula"] == [1, 4, 1]


def test_exit_codes(tmp_path, capsys):
    assert run(["hstar", "family", "bogus", "3"], capsys)[0] == 1
    assert run(["hstar"], capsys)[0] == 1
    assert run(["hstar", "family", "cycle", "x"], capsys)[0] == 1
    assert run(["hstar", "family", "cycle", "8", "--method", "oracle", "--max-box", "100"], capsys)[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2]")
    assert run(["hstar", str(bad)], capsys)[0] == 1
    assert run(["verify", "poset", "chain", "2"], capsys)[0] == 1  # no formula route


def test_render_formats():
    res = {"hstar": [1, 4, 1], "palindromic": True}
    assert render(res, "pretty").splitlines()[0].startswith("hstar")
    assert render(res, "csv").splitlines()[1] == "hstar,1 4 1"
    rows = {"rows": [{"check": "a", "cases": 2, "passed": 2, "failed": 0}], "ok": True}
    assert "PASS" in render(rows, "pretty")


def test_small_sweep():
    rows = sweep(max_graph=3, max_poset=2, max_pair=2)
    assert rows and all(r["failed"] == 0 for r in rows)


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "hstarlab", "hstar", "family", "cycle", "4"], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["hstar"] == [1, 5, 5, 1]
