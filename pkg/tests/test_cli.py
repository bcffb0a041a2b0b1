import json
import subprocess
import sys
from pathlib import Path

import pytest

from schubcon.cli import execute, main
from schubcon.jsonio import class_from_json, class_to_json, run_check
from schubcon.partitions import Box
from schubcon.schubert_ring import special

ROOT = Path(__file__).resolve().parents[1]


def run(*argv):
    code, text = execute(list(argv))
    return code, json.loads(text)


def test_mult_example():
    code, out = run("mult", "--box", "d=1,n=3", "1", "1")
    assert code == 0
    assert out["terms"] == [{"coeff": 1, "partition": [2, 0]}, {"coeff": 1, "partition": [1, 1]}]


def test_mult_round_trip(tmp_path):
    code, out = run("mult", "--box", "d=1,n=3", "1", "1")
    path = tmp_path / "sq.json"
    path.write_text(json.dumps(out))
    code, again = run("mult", str(path), str(path))
    assert code == 0
    assert class_from_json(again) == special(Box(1, 2), 1) ** 4
    code, via_box = run("mult", "--box", "d=1,n=3", str(path), "1")
    assert class_from_json(via_box) == special(Box(1, 2), 1) ** 3


def test_conj_and_complement():
    assert run("conj", "--box", "d=3,n=7", "4,3,2,2") == (0, [4, 4, 2, 1])
    assert run("conj", "--box", "d=3,n=8", "4,3,2,2") == (0, [4, 4, 2, 1, 0])
    assert run("complement", "--box", "d=3,n=7", "4,3,2,2") == (0, [2, 2, 1, 0])


def test_mu_j_and_delta():
    code, out = run("mu-j", "--box", "d=3,n=9", "5,2,2,1")
    assert [e["mu_j"] for e in out] == [[6, 2, 2, 1], [3, 3, 3, 1], [2, 2, 2, 2]]
    code, single = run("mu-j", "--box", "d=3,n=9", "5,2,2,1", "--j", "2")
    assert single == [{"j": 2, "mu_j": [3, 3, 3, 1]}]
    code, out = run("delta", "--box", "d=3,n=7", "2,2,2,2")
    assert out["delta"] == 3


def test_pieri_dual_nonzero_omega_lr():
    assert run("pieri", "--box", "d=1,n=3", "1", "1")[1] == run("mult", "--box", "d=1,n=3", "1", "1")[1]
    code, out = run("dual", "--box", "d=2,n=5", "2,1")
    assert out["complement"] == [3, 2, 1]
    assert out["product"]["terms"] == [{"coeff": 1, "partition": [3, 3, 3]}]
    assert run("nonzero", "--box", "d=1,n=4", "2,1", "3")[1]["nonzero"] is False
    assert run("nonzero", "--box", "d=1,n=4", "2,1", "2,1")[1]["nonzero"] is True
    code, omega = run("omega", "--box", "d=1,n=3")
    assert code == 0 and len(omega["terms"]) == 3
    assert run("lr-oracle", "--box", "d=2,n=5", "2,1", "2,1")[1] == run("mult", "--box", "d=2,n=5", "2,1", "2,1")[1]


@pytest.mark.parametrize(
    "argv",
    [
        ["conj", "--box", "d=3,n=8", "4,3,x"],
        ["conj", "--box", "d=3,n=8", "4,5,2"],
        ["conj", "4,3,2,2"],
        ["mult", "--box", "d=1,n=3", "1"],
        ["mult", "--box", "d=1,n=3", "4", "1"],
        ["mu-j", "--box", "d=3,n=9", "5,2,2,1", "--j", "1"],
        ["frobnicate"],
        ["check", "--criterion", "nope", "--inputs", "fixtures/ex51.json"],
        ["check", "--criterion", "cor7.3"],
        ["omega", "--box", "d=1,n=3", "--space", "1,1"],
    ],
)
def test_validation_errors_exit_2(argv):
    code, out = run(*argv)
    assert code == 2
    assert set(out) == {"error"} and out["error"]["message"]


def test_check_cor73_fixture_exits_zero_when_false():
    code, out = run("check", "--criterion", "cor7.3", "--inputs", str(ROOT / "fixtures" / "ex51.json"))
    assert code == 0
    assert out["holds"] is False
    assert set(out) == {"criterion", "holds", "witnesses", "assumptions", "reason"}


def test_check_inline_request(tmp_path):
    req = {
        "criterion": "th2.2",
        "inputs": {
            "X": {"class": {"space": {"dims": [1, 1]}, "terms": [{"m": [1, 0], "coeff": 1}, {"m": [0, 1], "coeff": 1}]}},
            "Y": {"class": {"space": {"dims": [1, 1]}, "terms": [{"m": [1, 0], "coeff": 1}, {"m": [0, 1], "coeff": 1}]}},
            "strict": False,
        },
    }
    path = tmp_path / "req.json"
    path.write_text(json.dumps(req))
    code, out = run("check", "--inputs", str(path))
    assert code == 0 and out["holds"] is True


def test_ambient_flags_fill_missing_keys(tmp_path):
    req = {"criterion": "cor2.4", "inputs": {"X": {"class": {"terms": [{"m": [0, 0], "coeff": 1}]}}}}
    path = tmp_path / "req.json"
    path.write_text(json.dumps(req))
    assert run("check", "--inputs", str(path), "--space", "2,2")[1]["holds"] is True
    assert run("check", "--inputs", str(path))[0] == 2
    hansen = tmp_path / "hansen.json"
    hansen.write_text(json.dumps({"criterion": "hansen", "inputs": {"dim": 2}}))
    assert run("check", "--inputs", str(hansen), "--box", "d=1,n=3")[1]["holds"] is True


def test_every_criterion_is_dispatchable():
    g = {"class": {"box": {"d": 1, "n": 3}, "terms": [{"partition": [1], "coeff": 2}]}}
    m = {"class": {"space": {"dims": [2, 2]}, "terms": [{"m": [1, 1], "coeff": 1}]}}
    b = {"class": {"box": "d=1,n=3", "terms": [{"lambda": [1], "mu": [0], "coeff": 1}]}}
    requests = {
        "th7.1": {"F": b},
        "cor7.3": {"X": g, "Y": g},
        "cor7.4": {"X": g},
        "cor7.5": {"X": g, "Z": g},
        "th8.1": {"F": g, "mu": [1]},
        "cor8.3": {"F": g, "mu": [1, 1]},
        "th8.4": {"F": g, "ell": [2, 1]},
        "th2.2": {"X": m, "Y": m, "strict": True},
        "cor2.3": {"X": m, "Y": m},
        "cor2.4": {"X": m},
        "prop2.6": {"Z": m},
        "prop2.7a": {"X": m, "Z": m},
        "prop2.7b": {"X": m, "Z": m},
        "th1.3": {"X": m, "codims": [1, 0]},
        "hansen": {"dim": 2, "box": {"d": 1, "n": 3}},
        "bertini6.2": {"F": g, "l": 2},
    }
    for name, inputs in requests.items():
        cert = run_check(name, inputs)
        assert cert.criterion == name


def test_class_json_round_trip():
    c = special(Box(2, 3), 1) ** 3
    assert class_from_json(json.loads(json.dumps(class_to_json(c)))) == c
    assert class_from_json({"terms": [{"partition": [1], "coeff": 1}]}, Box(1, 2)) == special(Box(1, 2), 1)
    with pytest.raises(ValueError):
        class_from_json({"terms": [{"partition": [1], "coeff": 1}]})
    with pytest.raises(ValueError):
        class_from_json({"box": {"d": 1, "n": 3}, "terms": [{"partition": [1], "coeff": 1.5}]})


def test_fixtures_command_replays_everything():
    code, out = run("fixtures")
    assert code == 0
    assert out["failed"] == []
    assert out["total"] == len(list((ROOT / "fixtures").glob("*.json")))


def test_fixtures_command_flags_mismatch(tmp_path):
    doc = json.loads((ROOT / "fixtures" / "ex51.json").read_text())
    doc["expected"] = {"holds": True}
    (tmp_path / "bad.json").write_text(json.dumps(doc))
    code, out = run("fixtures", "--dir", str(tmp_path))
    assert code == 1 and out["failed"] == ["bad.json"]


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "o.json"
    assert main(["conj", "--box", "d=3,n=7", "4,3,2,2", "--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text()) == [4, 4, 2, 1]


def test_console_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "schubcon", "conj", "--box", "d=3,n=7", "4,3,2,2"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "[4, 4, 2, 1]"
