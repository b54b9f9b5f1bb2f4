import json

import pytest

from padiclift.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_lift_json(capsys):
    rc, out, _ = run(capsys, "lift", "--poly", "1,11,-5", "--prime", "7",
                     "--seed", "1", "--precision", "3", "--json")
    assert rc == 0
    payload = json.loads(out)
    (entry,) = payload["roots"]
    assert entry["residue"] == "239"
    assert entry["root"]["digits"] == [1, 6, 4]
    assert payload["input"] == {"poly": [1, 11, -5], "prime": 7, "precision": 3}


def test_lift_scan_mode(capsys):
    rc, out, _ = run(capsys, "lift", "--poly", "1,11,-5", "--prime", "7",
                     "--precision", "2", "--json")
    assert rc == 0
    payload = json.loads(out)
    assert sorted(int(e["residue"]) % 7 for e in payload["roots"]) == [1, 4]


def test_lift_double_seed_refines(capsys):
    rc, out, _ = run(capsys, "lift", "--poly", "17,6,2", "--prime", "5",
                     "--seed", "1", "--precision", "10", "--json")
    assert rc == 0
    payload = json.loads(out)
    assert sorted(int(e["residue"]) % 25 for e in payload["roots"]) == [6, 16]


def test_teichmuller(capsys):
    rc, out, _ = run(capsys, "teichmuller", "--prime", "5", "--q", "2",
                     "--precision", "2", "--json")
    assert rc == 0
    assert json.loads(out)["residue"] == "7"


def test_classify(capsys):
    rc, out, _ = run(capsys, "classify", "--f0", "9", "--f1", "12")
    assert rc == 0
    assert out.strip() == "NeedsRootAnalysis p=3 w=2 m=1"


def test_bell(capsys):
    rc, out, _ = run(capsys, "bell", "4", "2", "1,1,1")
    assert rc == 0
    assert out.strip() == "7"
    rc, out, _ = run(capsys, "bell", "3", "2", "1/2,1/3")
    assert rc == 0
    assert out.strip() == "1/2"


def test_invert(capsys):
    rc, out, _ = run(capsys, "invert", "--alphas", "1,0,0,0", "--json")
    assert rc == 0
    assert json.loads(out)["betas"] == ["-1/1", "4/1", "-30/1", "336/1"]


def test_factor_json(capsys):
    rc, out, _ = run(capsys, "factor", "--coeffs", "9,12,7,8", "--order", "10",
                     "--tail", "geometric:1", "--json")
    assert rc == 0
    payload = json.loads(out)
    assert payload["A"] == [3, -1] + [0] * 9
    assert payload["B"] == [3, 5] + [4] * 9
    assert payload["ell"] == 1
    assert all(payload["checks"].values())


def test_determinism(capsys):
    args = ("factor", "--coeffs", "9,12,7,8", "--order", "8",
            "--tail", "geometric:1", "--json")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_exit_codes(capsys):
    rc, _, err = run(capsys, "lift", "--poly", "1,11,-5", "--prime", "7",
                     "--seed", "2", "--precision", "3")
    assert rc == 1 and "NotARootModP" in err
    rc, _, err = run(capsys, "lift", "--poly", "1,11,-5", "--prime", "8",
                     "--seed", "1", "--precision", "3")
    assert rc == 2
    rc, _, _ = run(capsys, "nonsense")
    assert rc == 2
    rc, _, err = run(capsys, "factor", "--coeffs", "9,12,7", "--order", "6")
    assert rc == 1 and "NoSuitableRoot" in err


def test_malformed_inputs_are_usage_errors(capsys):
    rc, _, _ = run(capsys, "lift", "--poly", "1,x,3", "--prime", "7",
                   "--seed", "1", "--precision", "3")
    assert rc == 2
    rc, _, _ = run(capsys, "lift", "--poly", "1,11,-5", "--prime", "7",
                   "--seed", "1", "--precision", "0")
    assert rc == 2
    rc, _, _ = run(capsys, "factor", "--coeffs", "9,12,7,8", "--order", "6",
                   "--tail", "geometric:x")
    assert rc == 2
    rc, _, _ = run(capsys, "factor", "--coeffs", "9,12,7,8", "--order", "6",
                   "--tail", "arithmetic")
    assert rc == 2
    rc, _, _ = run(capsys, "bell", "3", "2", "1,1/0")
    assert rc == 2


def test_verify_roundtrip_lift(capsys, tmp_path, monkeypatch):
    rc, out, _ = run(capsys, "lift", "--poly", "1,11,-5", "--prime", "7",
                     "--seed", "1", "--precision", "40", "--json")
    path = tmp_path / "lift.json"
    path.write_text(out)
    rc, out2, _ = run(capsys, "verify", "--input", str(path))
    assert rc == 0 and "verified ok" in out2


def test_verify_roundtrip_factor(capsys, tmp_path):
    rc, out, _ = run(capsys, "factor", "--coeffs", "9,12,7,8", "--order", "10",
                     "--tail", "geometric:1", "--json")
    path = tmp_path / "factor.json"
    path.write_text(out)
    rc, out2, _ = run(capsys, "verify", "--input", str(path))
    assert rc == 0 and "verified ok" in out2


def test_verify_catches_corruption(capsys, tmp_path):
    rc, out, _ = run(capsys, "factor", "--coeffs", "9,12,7,8", "--order", "6",
                     "--tail", "geometric:1", "--json")
    payload = json.loads(out)
    payload["B"][2] += 1
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(payload))
    rc, _, err = run(capsys, "verify", "--input", str(path))
    assert rc == 1 and "FAIL" in err
