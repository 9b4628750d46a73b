import io
import json
import subprocess
import sys

import pytest

from limitsys import cli, pipeline
from limitsys.cli import UsageError, parse_ideal, parse_poly, run
from limitsys.trunc_ideal import Ideal, TruncRing, power_ideal_gens, variables

x, y, t = variables()


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_staircase_info_golden():
    code, out, _ = call("staircase", "info", "--lengths", "12,9,6,3")
    assert code == 0
    assert out == '{"colength":30,"h":4,"gentle":true}\n'


def test_staircase_render():
    code, out, _ = call("staircase", "render", "--lengths", "3,1")
    assert (code, out) == (0, "#\n###\n")


def test_qsearch_golden():
    code, out, _ = call("limits", "qsearch", "--ideal", "(x+y+t,x^2)^4", "--ys", "y,y,x", "--ps", "8,7")
    assert code == 0 and json.loads(out) == {"q": 5}


def test_limits_deficiency():
    code, out, _ = call("limits", "deficiency", "--ideal", "(x+y+t,x^2)^4", "--ys", "y,y,x", "--ps", "8,7,6")
    body = json.loads(out)
    assert code == 0 and body["direct"] == body["claim1"] == body["claim2"] and body["direct"][-1] > 0


def test_decide_regular_exit_zero():
    code, out, _ = call("decide", "--n", "36", "--e", "3", "--json")
    body = json.loads(out)
    assert code == 0 and body["status"] == "regular" and body["degrees"] == "all"
    assert all(c["ok"] for c in body["chain"])


def test_decide_hypothesis_exit_three():
    code, out, _ = call("decide", "--n", "16", "--e", "2")
    assert code == 3 and json.loads(out)["status"] == "hypothesis-failure"


def test_decide_undecided_exit_two(monkeypatch):
    verdict = pipeline.Verdict(pipeline.UNDECIDED, 36, 3, [], {}, "forced")
    monkeypatch.setattr(pipeline, "decide_regular", lambda n, e: verdict)
    code, out, _ = call("decide", "--n", "36", "--e", "3")
    assert code == 2 and json.loads(out)["status"] == "undecided"


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["staircase", "info"],
        ["hankel", "det", "--e", "3"],
        ["staircase", "info", "--lengths", "1,2"],
        ["limits", "qsearch", "--ideal", "(x,y", "--ys", "y", "--ps", "2"],
        ["limits", "qsearch", "--ideal", "(x,y)", "--ys", "y", "--ps", ""],
    ],
)
def test_usage_errors_exit_64(argv):
    code, out, err = call(*argv)
    assert code == 64 and out == "" and err.startswith("usage error")


def test_computation_error_exit_70():
    code, out, _ = call("limits", "iterate", "--ideal", "(x,y-t)^2", "--ys", "y", "--ps", "3,2")
    body = json.loads(out)
    assert code == 70 and body["error"] == "ValueError"


def test_stcres_plan_and_failure():
    code, out, _ = call("stcres", "--lengths", "30,20,10", "--tr", "1,2,3", "--m", "3,2,2")
    assert code == 0
    assert out == '{"p":[30,27,26,18,15,1,1],"traces":[1,3,3,2,3,3,3],"E_prime":"23,14,5"}\n'
    code, out, _ = call("stcres", "--lengths", "7,5,3", "--tr", "2,3", "--m", "1,1")
    assert code == 3 and json.loads(out)["failures"][0]["hypothesis"] == 1


def test_hankel_commands():
    code, out, _ = call("hankel", "det", "--e", "2", "--r", "2", "--n", "1")
    assert code == 0 and json.loads(out) == {"e": 2, "r": 2, "n": 1, "det": -1, "invertible": True}
    code, out, _ = call("hankel", "sweep", "--max-e", "3", "--csv")
    assert out.splitlines()[:2] == ["e,r,n,det", "1,1,1,-1"]


def test_oracle_json_and_csv():
    code, out, _ = call("oracle", "--n", "25", "--e", "3", "--d", "15", "--prime", "1000003", "--seed", "42", "--json")
    body = json.loads(out)
    assert code == 0 and body["kernel_dim"] == 0 and body["rows"] == 150 and body["cols"] == 136
    code, out, _ = call("oracle", "--n", "4", "--e", "2", "--d", "0", "--d-max", "2", "--csv")
    assert out.splitlines()[1] == "4,2,0,12,1,1,0,regular"


def test_output_is_byte_stable():
    argv = ["oracle", "--n", "9", "--e", "2", "--d", "6", "--seed", "3"]
    assert call(*argv) == call(*argv)


def test_verify_suite():
    code, out, _ = call("verify")
    assert code == 0 and all(json.loads(out).values())


def test_ideal_grammar():
    R = TruncRing(8, 3)
    same = [
        ("(x+y+t,x^2)^2", power_ideal_gens([x + y + t, x**2], 2)),
        ("(x,y)*(x,t)", [x * x, x * t, y * x, y * t]),
        ("(x)+(y^2-2xy)", [x, y**2 - 2 * x * y]),
        ("((x-t)^2, 3y)", [(x - t) ** 2, 3 * y]),
    ]
    for text, gens in same:
        assert Ideal.generated(R, parse_ideal(text)) == Ideal.generated(R, gens)
    assert parse_poly("-x+2*y^3") == -x + 2 * y**3


@pytest.mark.parametrize("text", ["", "(x,)", "(x)^", "(z)", "x+y", "(x))"])
def test_ideal_grammar_rejects(text):
    with pytest.raises(UsageError):
        parse_ideal(text)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "limitsys", "staircase", "info", "--lengths", "2,1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"colength": 3, "h": 2, "gentle": True}
    assert cli.main.__module__ == "limitsys.cli"
