from __future__ import annotations

import json

import pytest

from homlab import fixtures
from homlab.cli import main
from homlab.graph import complete_graph, cycle_graph, format_edge_list, union_subproduct
from homlab.homsearch import Hom


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hom_exit_codes(capsys):
    code, out, _ = run(capsys, "hom", "--from", "c5", "--to", "c3")
    assert code == 0 and out.count("->") == 5
    code, out, _ = run(capsys, "hom", "--from", "c3", "--to", "c5")
    assert code == 1 and "no homomorphism" in out
    code, _, err = run(capsys, "hom", "--from", "nonexistent", "--to", "c5")
    assert code == 2 and "error" in err


def test_outputs_are_deterministic(capsys):
    a = run(capsys, "cover", "--graph", "moser", "--radius", "3")
    b = run(capsys, "cover", "--graph", "moser", "--radius", "3")
    assert a == b and a[0] == 0
    code, out, _ = run(capsys, "cover", "--graph", "c5", "--radius", "2", "--dot")
    assert code == 0 and out.startswith("graph cover {")


def test_product_and_powers(tmp_path, capsys):
    code, out, _ = run(capsys, "product", "--left", "c3", "--right", "c5")
    assert code == 0 and out
    code, out, _ = run(capsys, "p3inv", "--graph", "c3")
    assert code == 0 and "0:{1}" in out
    path = tmp_path / "k2.el"
    path.write_text(format_edge_list(complete_graph(2)))
    code, out, _ = run(capsys, "p3", "--graph", str(path))
    assert code == 0


def test_cover_verify_and_walk(capsys):
    code, out, _ = run(capsys, "cover", "--graph", "k_b", "--walk", "a; b c d e a", "--window", "2", "--verify")
    assert code == 0


def test_median_hom(capsys):
    code, out, _ = run(capsys, "median-hom", "--graph", "c5", "--n", "3")
    assert code == 0
    code, out, _ = run(capsys, "median-hom", "--graph", "k_b", "--n", "3")
    assert code == 1 and out.startswith("obstruction:")


def test_expgraph(capsys):
    code, out, _ = run(capsys, "expgraph", "--graph", "c5", "--n", "3")
    assert code == 0 and out


def test_classify(tmp_path, capsys):
    C3, C5 = cycle_graph(3), cycle_graph(5)
    U = union_subproduct(C3, range(3), C5, range(5))
    phi = Hom(U, C5, tuple(h for g in range(3) for h in range(5))).check()
    path = tmp_path / "phi.txt"
    path.write_text(phi.to_text())
    code, out, _ = run(capsys, "classify", "--g", "c3", "--c", "0,1,2", "--h", "c5",
                       "--d", "0,1,2,3,4", "--k", "c5", "--phi", str(path))
    assert code == 0 and out.startswith("case 1")


def test_verify_paper_by_tag(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "p3")
    lines = [ln for ln in out.splitlines() if ln.startswith("[")]
    assert code == 0 and len(lines) == 3
    assert all(ln.startswith("[PASS]") for ln in lines)
    code, out, _ = run(capsys, "verify-paper", "--only", "10", "--jsonl")
    rec = json.loads(out)
    assert rec["criterion"] == 10 and rec["ok"]


def test_corrupted_fixture_is_reported(tmp_path, capsys):
    G = fixtures.k_b()
    bad = G.remove_edges([G.edge_list()[0]])
    path = tmp_path / "k_b.el"
    path.write_text(format_edge_list(bad))
    code, out, _ = run(capsys, "verify-paper", "--only", "k_b", "--fixture", f"k_b={path}")
    assert code == 1
    line = next(ln for ln in out.splitlines() if "k_b-self-cover" in ln)
    assert line.startswith("[FAIL]") and ": " in line


def test_bad_arguments():
    with pytest.raises(SystemExit):
        main(["no-such-command"])
