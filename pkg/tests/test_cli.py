import json

import pytest

from luroth.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_expand_golden(capsys):
    code, out = run(capsys, "expand", "12/41")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"preperiod": [4, 2, 42], "period": [2], "word": "[4,2,42;(2)]", "value": "12/41"}
    _, out = run(capsys, "expand", "1/2")
    assert json.loads(out)["preperiod"] == [3]


def test_expand_errors(capsys):
    assert main(["expand", "3/2"]) == 2
    assert main(["expand", "abc"]) == 2
    assert main(["eval", "{bad"]) == 2


def test_eval(capsys):
    code, out = run(capsys, "eval", '{"preperiod":[3,3],"period":[2]}')
    assert code == 0 and json.loads(out)["value"] == "5/12"


def test_thickness(capsys):
    code, out = run(capsys, "thickness", "3", "16")
    doc = json.loads(out)
    assert code == 0 and doc["gamma"] == "2821/8440" and doc["interval"] == ["15/239", "2/5"]
    assert main(["thickness", "4", "4"]) == 2


def test_verify_exit_codes(capsys):
    code, out = run(capsys, "verify", "theorem1", "--pair", "4", "4")
    assert code == 0 and json.loads(out)["interval"] == ["6/11", "2/1"]
    code, out = run(capsys, "verify", "theorem1", "--pair", "3", "3")
    assert code == 0 and ["1/2", "11/20"] in json.loads(out)["extras"]["gap_certificate"]["gaps_mod1"]
    code, _ = run(capsys, "verify", "theorem1", "--pair", "3", "4")
    assert code == 1
    code, _ = run(capsys, "verify", "theorem2", "--ks", "3", "4", "5", "9", "245")
    assert code == 1
    code, _ = run(capsys, "verify", "theorem2", "--ks", "3", "4", "5", "6")
    assert code == 0
    code, out = run(capsys, "verify", "corollary3", "--k", "3", "--N", "16")
    assert code == 0 and json.loads(out)["interval"] == ["45/239", "6/5"]
    assert main(["verify", "theorem2"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "theorem9"])
    assert exc.value.code == 2


def test_verify_lemmas_reports_failure(capsys):
    code, out = run(capsys, "verify", "lemmas", "--n1-max", "4", "--n2-max", "12")
    doc = json.loads(out)
    assert code == 1 and not doc["passed"]
    assert {c["check"] for c in doc["counterexamples"]} == {"f1 strictly decreasing"}


def test_gap(capsys, monkeypatch):
    code, out = run(capsys, "gap", "2", "3", "2", "3", "--depths", "2", "2")
    assert code == 0 and json.loads(out)["gaps_mod1"] == [["0/1", "1/10"], ["1/2", "11/20"]]
    code, _ = run(capsys, "gap", "2", "4", "2", "4", "--depths", "3", "3")
    assert code == 1
    monkeypatch.setenv("LUROTH_MAX_PARTS", "10")
    assert main(["gap", "2", "3", "2", "3", "--depths", "4", "4"]) == 2


def test_dim(capsys):
    code, out = run(capsys, "dim", "2,3")
    assert code == 0 and json.loads(out)["value"].startswith("0.60096685")
    assert main(["dim", "2,3", "--tol", "0.5"]) == 2


def test_suite_section(capsys, tmp_path):
    out_path = tmp_path / "suite.json"
    code, out = run(capsys, "suite", "--section", "thickness", "--json", str(out_path))
    assert code == 0 and "gamma3,16" in out
    doc = json.loads(out_path.read_text())
    entry = next(e for e in doc["entries"] if e["claim_id"] == "gamma3,16")
    assert entry["status"] == "match" and entry["actual"] == "2821/8440"
    first = out_path.read_bytes()
    run(capsys, "suite", "--section", "thickness", "--json", str(out_path))
    assert out_path.read_bytes() == first


def test_figure(capsys, tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert main(["figure", "scc", "--n1", "2", "--n2", "3", "--depth", "2", "-o", str(a)]) == 0
    assert main(["figure", "scc", "--n1", "2", "--n2", "3", "--depth", "2", "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert main(["figure", "scc", "-o", str(a)]) == 2
    assert main(["figure", "sum_cover", "-o", str(tmp_path / "missing" / "x.svg")]) == 2
