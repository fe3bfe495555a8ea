import json
import subprocess
import sys

import pytest

from bchlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_field(capsys):
    code, out = run(capsys, "field", "--q", "3", "--m", "2", "--print-modulus")
    data = json.loads(out)
    assert code == 0
    assert data == {"p": 3, "e": 1, "D": 2, "alphaOrder": 8, "modulus": [1, 1, 2]}


def test_cosets_json_and_csv(capsys):
    code, out = run(capsys, "cosets", "--modulus", "13", "--q", "3")
    data = json.loads(out)
    assert [c["leader"] for c in data["cosets"]] == [0, 1, 2, 4, 7]
    code, out = run(capsys, "cosets", "--modulus", "8", "--q", "3", "--odd-only", "--csv")
    assert out.splitlines() == ["leader,size,members", "1,2,1 3", "5,2,5 7"]


def test_code(capsys):
    code, out = run(capsys, "code", "--family", "neg", "--q", "5", "--m", "3", "--delta", "16", "--b", "0", "--print-gen")
    data = json.loads(out)
    assert data["n"] == 62 and data["k"] == 32 and data["definingSetSize"] == 30
    assert len(data["generator"]) == 31 and data["generator"][-1] == 1


def test_weights(capsys):
    code, out = run(capsys, "weights", "--family", "neg", "--q", "3", "--m", "4", "--delta", "5", "--b", "1",
                    "--budget", str(3**12), "--via-dual")
    data = json.loads(out)
    assert data["d"] == 6 and data["certificate"] == "exact"
    assert sum(data["weights"].values()) == 3**28
    code, out = run(capsys, "weights", "--family", "cyc", "--q", "3", "--m", "3", "--delta", "7", "--b", "1",
                    "--extended")
    assert json.loads(out)["weights"] == {"0": 1, "8": 26, "9": 26, "11": 26, "14": 2}


def test_weights_lower_bound_only(capsys):
    code, out = run(capsys, "weights", "--family", "neg", "--q", "3", "--m", "5", "--delta", "3", "--b", "1",
                    "--budget", "100")
    data = json.loads(out)
    assert data["weights"] is None and data["certificate"] == "lower-bound-only" and data["d"] >= 3


def test_dualcheck(capsys):
    code, out = run(capsys, "dualcheck", "--q", "3", "--m", "3", "--delta", "7")
    data = json.loads(out)
    assert data["duallyBCH"] is True and data["witness"] == {"b": 0, "delta": 2}


def test_formula(capsys):
    code, out = run(capsys, "formula", "--id", "lemma8", "--q", "5", "--m", "3", "--a", "1")
    assert json.loads(out) == {"value": 32, "preconditionsOk": True}
    code, out = run(capsys, "formula", "--id", "lemma8", "--q", "3", "--m", "3", "--a", "1")
    data = json.loads(out)
    assert data["preconditionsOk"] is False and data["value"] is None
    code, out = run(capsys, "formula", "--list")
    assert "lemma11" in out and "table4" in out


def test_formula_usage_errors(capsys):
    assert main(["formula", "--id", "nope"]) == 2
    assert main(["formula", "--id", "lemma8", "--q", "5"]) == 2
    with pytest.raises(SystemExit) as e:
        main(["formula"])
    assert e.value.code == 2


def test_verify_exit_codes(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["verify", "--suite", "leaders26", "--q-set", "3", "--m-max", "4", "--format", "json",
                 "--out", str(out)]) == 0
    assert json.loads(out.read_text())["summary"]["fail"] == 0
    # the printed third odd leader is off for m = 4
    assert main(["verify", "--suite", "leaders15", "--q-set", "3", "--m-max", "4"]) == 1
    with pytest.raises(SystemExit) as e:
        main(["verify", "--suite", "nope"])
    assert e.value.code == 2


def test_config_errors_exit_2(capsys):
    assert main(["field", "--q", "6", "--m", "2"]) == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "bchlab", "formula", "--id", "leaders26", "--q", "3", "--m", "3"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["value"]["delta1"] == 7
