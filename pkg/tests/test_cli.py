import json
import subprocess
import sys

import pytest

from affcrystal.cli import run_cli

B21_ARGS = ["--family", "A1", "--n", "3", "--k", "2", "--l", "1"]


def run(argv, capsys):
    code = run_cli(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_graph_dot(capsys):
    code, out, _ = run(["graph", *B21_ARGS, "--format", "dot"], capsys)
    assert code == 0
    assert out.count("[label=") == 6 + 8
    assert '"A1[n=3,k=2,l=1]{3,4}" -> "A1[n=3,k=2,l=1]{1,3}" [label="0"];' in out


def test_graph_json_and_text(capsys):
    code, out, _ = run(["graph", *B21_ARGS, "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and len(data["vertices"]) == 6 and len(data["edges"]) == 8
    code, out, _ = run(["graph", *B21_ARGS, "--format", "text", "--labels", "0"], capsys)
    assert sorted(out.splitlines()) == ["24 -0-> 12", "34 -0-> 13"]


def test_verify(capsys):
    code, out, _ = run(["verify", "--family", "A2even", "--n", "2", "--l", "1", "--jmax", "3"], capsys)
    assert code == 0
    assert json.loads(out)["conditions"]["II"] is True


def test_verify_failure(tmp_path, capsys):
    sched = tmp_path / "bad.json"
    sched.write_text(json.dumps({"d": 4, "period_in_j": 1, "table": [[1, 0, 2, 1]]}))
    code, out, _ = run(["verify", "--family", "A2even", "--n", "2", "--schedule", str(sched)], capsys)
    assert code == 1
    assert json.loads(out)["witnesses"]


def test_demazure_intro(capsys):
    argv = ["demazure", *B21_ARGS, "--lambda", "1,0,0,0", "--k", "3", "--schedule", "intro"]
    code, out, _ = run(argv, capsys)
    data = json.loads(out)
    assert code == 0 and data["cardinality"] == 5
    assert sum(m for _, m in data["character"]) == 5
    code2, out2, _ = run(argv, capsys)
    assert out2 == out


def test_demazure_condition_failure(tmp_path, capsys):
    sched = tmp_path / "bad.json"
    sched.write_text(json.dumps({"d": 4, "table": [[1, 0, 2, 1]]}))
    code, out, _ = run(["demazure", "--family", "A2even", "--n", "2", "--k", "4",
                        "--schedule", str(sched)], capsys)
    assert code == 1
    assert json.loads(out)["report"]["witnesses"]


def test_oracle_and_invariance(capsys):
    code, out, _ = run(["oracle", "--family", "B1", "--n", "3", "--k", "7"], capsys)
    assert code == 0 and json.loads(out)["equal"] is True
    code, out, _ = run(["invariance", *B21_ARGS, "--L", "2"], capsys)
    assert code == 0 and json.loads(out)["cardinality"] == 36


def test_perfect_and_experiment(capsys):
    code, out, _ = run(["perfect", "--family", "C1", "--n", "2", "--l", "2"], capsys)
    assert code == 0 and json.loads(out)["passed"] is True
    code, out, _ = run(["experiment", "kappa2", "--family", "C1", "--n", "2"], capsys)
    data = json.loads(out)
    assert code == 0 and data["kappa1_found"] == 0 and data["kappa2_found"] > 0


def test_output_file(tmp_path, capsys):
    target = tmp_path / "g.dot"
    code, out, _ = run(["graph", *B21_ARGS, "--output", str(target)], capsys)
    assert code == 0 and out == ""
    assert target.read_text().startswith("digraph")


@pytest.mark.parametrize("argv", [
    [],
    ["graph"],
    ["graph", "--family", "X9", "--n", "3"],
    ["graph", "--family", "B1", "--n", "2"],
    ["graph", "--family", "A1", "--n", "3"],
    ["demazure", "--family", "B1", "--n", "3"],
    ["demazure", "--family", "B1", "--n", "3", "--k", "2", "--lambda", "1,0,0"],
    ["demazure", "--family", "B1", "--n", "3", "--k", "2", "--lambda", "0,0,1,0"],
    ["demazure", "--family", "B1", "--n", "3", "--k", "2", "--lambda", "x"],
    ["demazure", "--family", "A2even", "--n", "2", "--l", "2", "--k", "2", "--lambda", "0,1,0"],
    ["verify", "--family", "B1", "--n", "3", "--schedule", "nosuch.json"],
    ["oracle", "--family", "B1", "--n", "3", "--k", "1", "--k", "2"],
])
def test_usage_errors(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2
    assert "usage" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "affcrystal", "graph", *B21_ARGS, "--format", "json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert len(json.loads(proc.stdout)["edges"]) == 8


def test_budget_env(monkeypatch, capsys):
    monkeypatch.setenv("CRYSTAL_BUDGET", "3")
    code, out, _ = run(["demazure", "--family", "C1", "--n", "2", "--k", "8"], capsys)
    assert code == 1
    assert "budget" in json.loads(out)["error"]
