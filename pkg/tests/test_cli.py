from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from quiversperner.cli import main, run


def run_text(*argv):
    buf = io.StringIO()
    code, report = run(list(argv), out=buf)
    return code, buf.getvalue(), report


def test_interval_examples():
    code, out, report = run_text("interval", "--n", "6", "--orient", "<<>>>")
    assert code == 0 and report.facts["width"] == 12
    code, out, report = run_text("interval", "--n", "7", "--alternating")
    assert code == 0 and report.facts["width"] == 13
    code, out, report = run_text("interval", "--n", "3", "--linear")
    assert code == 0 and report.facts["width"] == 3
    assert out.endswith("RESULT: PASS\n")


def test_bad_orientation_exits_nonzero():
    code, out, report = run_text("interval", "--n", "4", "--orient", "<x<")
    assert code == 1
    assert "BadOrientation" in out
    code, _, _ = run_text("interval", "--n", "13")
    assert code == 1


def test_verify_examples():
    code, _, report = run_text("verify", "zigzag", "--n", "6", "--s", "3")
    assert code == 0 and report.facts["width"] == 12 and report.facts["chains"] == 12
    code, _, report = run_text("verify", "a2_sperner", "--q", "5", "--a", "2")
    assert code == 0 and report.facts["width"] == 7 and report.facts["level_sizes"][2] == 7
    assert all(v.passed for v in report.verdicts if v.check.startswith("commutator"))
    code, _, report = run_text("verify", "alternating_even", "--m", "3")
    assert code == 0 and report.facts["width"] == 10


def test_failed_checks_carry_witnesses():
    code, out, report = run_text("verify", "alternating_even", "--m", "1")
    assert code == 1
    failed = [v for v in report.verdicts if not v.passed]
    assert failed and all(v.witness is not None for v in failed)
    assert {"expected": 3, "got": 2} in [v.witness for v in failed]


def test_missing_params():
    code, out, _ = run_text("verify", "zigzag", "--n", "6")
    assert code == 1 and "--s" in out
    code, out, _ = run_text("verify", "a2_sperner", "--q", "4", "--a", "2")
    assert code == 1 and "DomainError" in out


def test_json_report_schema():
    code, out, _ = run_text("verify", "alternating", "--m", "2", "--json")
    data = json.loads(out)
    assert data["schema"] == 1 and data["ok"] is True and "timings" not in data
    assert data["facts"]["width"] == 8


def test_determinism():
    argv = ["verify", "a2_sperner", "--q", "3", "--a", "2", "--json"]
    assert run_text(*argv)[1] == run_text(*argv)[1]


def test_emit_missing_params():
    for argv in (["emit", "interval"], ["emit", "subrep", "--q", "5"], ["emit", "chain-product"]):
        code, _, report = run_text(*argv)
        assert code == 1 and "ParamRange" in report.verdicts[-1].witness


def test_other_subcommands():
    assert run_text("stanley", "--q", "2", "--a", "2", "--dump-matrix", "1")[0] == 0
    assert run_text("pointed-star", "--rays", "2,3")[0] == 0
    code, _, report = run_text("pointed-star", "--rays", "1,1,1", "--sink-center")
    assert code == 0 and report.facts["width"] == 3
    assert run_text("chain-product", "--k", "2,2,3")[0] == 0
    assert run_text("verify", "pointed_star", "--rays", "1,2,2")[0] == 0
    assert run_text("verify", "chain_product", "--k", "1,1,1,1")[0] == 0
    assert run_text("subrep", "--q", "3", "--a", "2")[0] == 0


def test_max_elements_cap(monkeypatch):
    code, out, _ = run_text("subrep", "--q", "5", "--a", "2", "--max-elements", "10")
    assert code == 1 and "SizeLimit" in out
    monkeypatch.setenv("QS_MAX_ELEMENTS", "10")
    code, out, _ = run_text("subrep", "--q", "5", "--a", "2")
    assert code == 1


def dot_nodes_edges(text):
    nodes = [l for l in text.splitlines() if l.strip().startswith("n") and "[label=" in l]
    edges = [l for l in text.splitlines() if "->" in l]
    return nodes, edges


def test_emit_figures(tmp_path):
    out = tmp_path / "a3.dot"
    code, _, _ = run_text("emit", "interval", "--n", "3", "--alternating", "-o", str(out))
    nodes, edges = dot_nodes_edges(out.read_text())
    assert code == 0 and len(nodes) == 6 and len(edges) == 4

    out = tmp_path / "a6.dot"
    run_text("emit", "interval", "--n", "6", "--zigzag", "3", "-o", str(out))
    nodes, _ = dot_nodes_edges(out.read_text())
    assert len(nodes) == 21 and sum("filled" in l for l in nodes) == 12

    out = tmp_path / "subrep.dot"
    run_text("emit", "subrep", "--q", "5", "--a", "2", "-o", str(out))
    text = out.read_text()
    nodes, edges = dot_nodes_edges(text)
    assert len(nodes) == 21 and text.count("rank=same") == 5 and len(edges) == 36

    out = tmp_path / "p.json"
    run_text("emit", "chain-product", "--k", "1,2", "--format", "json", "-o", str(out))
    assert len(json.loads(out.read_text())["elements"]) == 6
    first = out.read_text()
    run_text("emit", "chain-product", "--k", "1,2", "--format", "json", "-o", str(out))
    assert out.read_text() == first


def test_emit_to_stdout(capsys):
    assert main(["emit", "pointed-star", "--rays", "1,1"]) == 0
    captured = capsys.readouterr()
    assert captured.out.startswith("digraph")
    assert "RESULT: PASS" in captured.err


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "quiversperner.cli", "interval", "--n", "3", "--linear"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and "width: 3" in proc.stdout


def test_help():
    with pytest.raises(SystemExit) as exc:
        main(["--help"])
    assert exc.value.code == 0
