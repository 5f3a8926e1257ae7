import json
import subprocess
import sys

import pytest

from conftest import FALSE_COMPLEMENTED_CLAIM
from zdgraph import load, serialize, validate
from zdgraph.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestBuild:
    def test_counterexample_product(self, capsys, tmp_path):
        path = tmp_path / "s.json"
        code, _, _ = run(capsys, "build", "--product", "powerset:3", "zn:4", "-o", str(path))
        assert code == 0
        assert load(path).order == 32

    def test_builtin_stdout(self, capsys):
        code, out, _ = run(capsys, "build", "--builtin", "zn:4")
        assert code == 0 and json.loads(out)["order"] == 4

    def test_non_associative_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"order": 3, "zero": 0, "labels": ["0", "a", "b"],
                                   "table": [[0, 0, 0], [0, 2, 0], [0, 0, 1]]}))
        code, _, err = run(capsys, "build", "--file", str(bad))
        assert code == 2
        assert "not associative" in err and "(1, 1, 2)" in err

    def test_malformed_selector(self, capsys):
        code, _, err = run(capsys, "build", "--builtin", "powerset")
        assert code == 2 and "malformed" in err

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "build", "--file", str(tmp_path / "nope.json"))[0] == 2


class TestAnalyze:
    def test_counterexample_product_json(self, capsys):
        code, out, _ = run(capsys, "analyze", "--product", "powerset:3", "zn:4", "--format", "json")
        assert code == 0
        assert json.loads(out)["graph"]["vertices"] == 29

    def test_p3_text(self, capsys):
        code, out, _ = run(capsys, "analyze", "--builtin", "powerset:3", "--format", "text")
        assert code == 0 and "uniquely complemented: yes" in out

    def test_empty_graph(self, capsys):
        code, out, _ = run(capsys, "analyze", "--builtin", "powerset:1", "--format", "json")
        doc = json.loads(out)
        assert code == 0 and doc["graph"]["vertices"] == 0 and doc["clique"]["size"] is None

    def test_cap_exit_three(self, capsys):
        code, _, err = run(capsys, "analyze", "--builtin", "powerset:3 x zn:4", "--cap-clique", "5")
        assert code == 3 and "exceeds cap" in err

    def test_env_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("ZDG_CAP_ORDER", "16")
        assert run(capsys, "analyze", "--builtin", "powerset:3 x zn:4")[0] == 3

    def test_unparseable_file(self, capsys, tmp_path):
        p = tmp_path / "x.json"
        p.write_text("{")
        assert run(capsys, "analyze", "--file", str(p))[0] == 2


class TestVerifyCommand:
    @FALSE_COMPLEMENTED_CLAIM
    def test_normal_run_exit_zero(self, capsys):
        code, out, _ = run(capsys, "verify-paper")
        assert code == 0 and "10/10" in out

    def test_normal_run_outcome(self, capsys):
        code, out, _ = run(capsys, "verify-paper")
        assert code == 1
        assert "9/10 checks passed" in out
        assert "[FAIL]  5. complemented" in out

    def test_cap_order(self, capsys):
        assert run(capsys, "verify-paper", "--cap-order", "16")[0] == 3

    def test_json(self, capsys):
        code, out, _ = run(capsys, "verify-paper", "--format", "json")
        doc = json.loads(out)
        assert len(doc["checks"]) == 10 and doc["score"] == "9/10"


class TestExport:
    def test_reduced_json(self, capsys):
        code, out, _ = run(capsys, "export", "--product", "powerset:3", "zn:4", "--reduced", "--format", "json")
        assert code == 0 and len(json.loads(out)["classes"]) == 22

    def test_graph_dot(self, capsys):
        code, out, _ = run(capsys, "export", "--builtin", "powerset:3", "--graph", "--format", "dot")
        assert code == 0 and out.count("[label=") == 6

    def test_same_bytes(self, capsys, tmp_path):
        a, b = tmp_path / "a.dot", tmp_path / "b.dot"
        for p in (a, b):
            assert run(capsys, "export", "--builtin", "powerset:3 x zn:4", "-o", str(p))[0] == 0
        assert a.read_bytes() == b.read_bytes()


class TestSearch:
    @FALSE_COMPLEMENTED_CLAIM
    def test_family_includes_counterexample_member(self, capsys):
        code, out, _ = run(capsys, "search", "--family", "powerset:2..3 x zn:2..5")
        assert "powerset:3 x zn:4" in out

    def test_family_runs(self, capsys):
        code, out, _ = run(capsys, "search", "--family", "powerset:2..3 x zn:2..5", "--format", "json")
        assert code == 0 and json.loads(out) == []

    def test_power_sets(self, capsys):
        code, out, _ = run(capsys, "search", "--family", "powerset:3..4", "--budget", "10")
        assert code == 0 and out == ""

    def test_budget_zero(self, capsys):
        code, out, _ = run(capsys, "search", "--family", "powerset:3..4", "--budget", "0")
        assert code == 0 and out == ""

    def test_malformed_family(self, capsys):
        assert run(capsys, "search", "--family", "powerset:x")[0] == 2


def test_round_trip_build_analyze_export(capsys, tmp_path):
    path = tmp_path / "s.json"
    assert run(capsys, "build", "--builtin", "powerset:2 x zn:4", "-o", str(path))[0] == 0
    code, out, _ = run(capsys, "analyze", "--file", str(path), "--format", "json")
    assert code == 0 and json.loads(out)["semigroup"]["order"] == 16
    assert run(capsys, "export", "--file", str(path), "--reduced", "--format", "json")[0] == 0
    s = load(path)
    assert serialize(validate(s.table, s.zero, s.labels)) == path.read_text(encoding="utf-8")


def test_usage_error_exit_two(capsys):
    assert run(capsys, "analyze")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "zdgraph", "build", "--builtin", "zn:3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["order"] == 3
