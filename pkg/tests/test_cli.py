import json
import subprocess
import sys

import pytest

from spehlab.cli import main
from spehlab.core import parse_multisegment
from spehlab.ring import parse_ring, ring_from_json
from spehlab.speh import char_F


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "text,expected",
    [("(0..2)", "(0..0)+(1..1)+(2..2)"), ("(-1..0)+(0..1)", "(-1..0)+(0..1)"), ("1", "1")],
)
def test_dual(capsys, text, expected):
    code, out, _ = run(capsys, "dual", text)
    assert code == 0 and out == expected + "\n"


def test_dual_json_and_trace(capsys):
    code, out, _ = run(capsys, "dual", "(0..2)", "--json")
    assert json.loads(out)["segments"][0] == {"line": "rho", "b": "0", "e": "0"}
    code, out, _ = run(capsys, "dual", "(0..2)", "--trace")
    log = json.loads(out)
    assert log["dual"] == "(0..0)+(1..1)+(2..2)"
    assert [r["output"] for r in log["rounds"]] == ["(2..2)", "(1..1)", "(0..0)"]


def test_global_flag_before_subcommand(capsys):
    code, out, _ = run(capsys, "--json", "dual", "(0..0)")
    assert code == 0 and json.loads(out) == {"segments": [{"line": "rho", "b": "0", "e": "0"}]}


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "dual", "(0..1")
    assert code == 2 and "position" in err


def test_char(capsys):
    code, out, _ = run(capsys, "char", "--l", "2", "--k", "2")
    assert code == 0 and parse_ring(out.strip()) == char_F(2, 2)
    code, out, _ = run(capsys, "char", "--l", "1", "--k", "3", "--json")
    assert ring_from_json(json.loads(out)) == char_F(1, 3)


def test_speh(capsys):
    assert run(capsys, "speh", "--l", "2", "--k", "2")[1] == "(-1..0)+(0..1)\n"
    assert run(capsys, "speh", "--l", "1", "--k", "2", "--s", "2")[1] == "(-1/4..-1/4)+(1/4..1/4)\n"


def test_leq(capsys):
    assert run(capsys, "leq", "(0..1)", "(0..0)+(1..1)")[1] == "true\n"
    assert run(capsys, "leq", "(0..0)+(1..1)", "(0..1)")[1] == "false\n"


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "-1,0,1")
    assert code == 0
    assert {parse_multisegment(x) for x in out.split()} == {
        parse_multisegment(t) for t in ["(-1..1)", "(-1..-1)+(0..1)", "(-1..0)+(1..1)", "(-1..-1)+(0..0)+(1..1)"]
    }


@pytest.mark.parametrize("points,nodes,edges", [("0,1", 2, 1), ("0,0", 1, 0), ("-1,0,1", 4, 4)])
def test_hasse(capsys, points, nodes, edges):
    code, out, _ = run(capsys, "hasse", points)
    assert code == 0 and out.startswith("digraph")
    assert out.count("label=") == nodes and out.count("->") == edges


def test_hasse_bad_points(capsys):
    assert run(capsys, "hasse", "0,x")[0] == 2


def test_dodgson(capsys):
    code, out, _ = run(capsys, "dodgson", "--l", "2", "--k", "3")
    assert code == 0 and json.loads(out)[0]["status"] == "pass"


def test_verify_theorem_a(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "theorem-a", "--max-l", "6", "--max-k", "6")
    reports = json.loads(out)
    assert code == 0 and len(reports) == 36 and all(r["status"] == "pass" for r in reports)


def test_verify_dodgson(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "dodgson", "--max-l", "4", "--max-k", "4")
    assert code == 0 and all(r["status"] == "pass" for r in json.loads(out))


def test_verify_unknown_suite(capsys):
    assert run(capsys, "verify", "--suite", "bogus")[0] == 2


def test_verify_report_schema(capsys):
    _, out, _ = run(capsys, "verify", "--suite", "theorem-i", "--max-l", "1", "--max-k", "2")
    for r in json.loads(out):
        assert set(r) >= {"suite", "params", "status"}
        assert r["status"] in {"pass", "fail", "skipped"}


def test_verify_failure_exit_code_and_counterexample(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "order-reversal", "--points", "3", "--mult", "2")
    r = json.loads(out)[0]
    assert code == 1 and r["status"] == "fail"
    assert set(r["counterexample"]) == {"input", "expected", "actual"}


def test_budget_and_strict(capsys, monkeypatch):
    code, out, _ = run(capsys, "verify", "--suite", "theorem-i", "--max-l", "2", "--max-k", "2", "--budget", "4")
    assert code == 0 and [r["status"] for r in json.loads(out)] == ["pass", "pass", "pass", "skipped"]
    code, _, _ = run(capsys, "verify", "--suite", "theorem-i", "--max-l", "2", "--max-k", "2", "--budget", "4", "--strict")
    assert code == 1
    monkeypatch.setenv("SPEHLAB_BUDGET", "4")
    _, out, _ = run(capsys, "verify", "--suite", "theorem-ii", "--max-l", "1", "--max-k", "3")
    assert [r["status"] for r in json.loads(out)] == ["pass", "skipped"]


def test_deterministic_across_processes():
    cmds = [
        ["hasse", "-1,0,0,1"],
        ["char", "--l", "3", "--k", "3"],
        ["enumerate", "0,0,1,1,2"],
        ["verify", "--suite", "theorem-a", "--max-l", "3", "--max-k", "3"],
    ]
    for cmd in cmds:
        outs = [
            subprocess.run([sys.executable, "-m", "spehlab", *cmd], capture_output=True, check=True).stdout
            for _ in range(2)
        ]
        assert outs[0] == outs[1]
