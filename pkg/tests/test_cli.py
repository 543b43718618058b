import json
import subprocess
import sys

import pytest

from qfibdiv import verify
from qfibdiv.cli import run
from qfibdiv.polyint import IntPoly, parse
from qfibdiv.verify import ClaimId, Failure


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_fib_coeffs(capsys):
    code, out, _ = call(capsys, "compute", "fib", "--family", "G", "--n", "5", "--format", "coeffs")
    assert code == 0 and out.strip() == "[1,0,1,1,1,0,1]"


def test_compute_fib_sum_method_and_pretty(capsys):
    code, out, _ = call(capsys, "compute", "fib", "--family", "fr", "--r", "0", "--n", "6", "--method", "sum")
    assert code == 0 and out.strip() == "2 + 2*q + 2*q^2 + 2*q^3"


def test_negative_r_is_usage_error(capsys):
    code, _, err = call(capsys, "compute", "fib", "--family", "fr", "--r", "-1", "--n", "6")
    assert code == 2 and "r >= 0" in err


def test_compute_other_objects(capsys):
    assert call(capsys, "compute", "qbinom", "4", "2", "--format", "coeffs")[1].strip() == "[1,1,2,1,1]"
    assert call(capsys, "compute", "cyclotomic", "12", "--format", "coeffs")[1].strip() == "[1,0,-1,0,1]"
    assert call(capsys, "compute", "qint", "3", "--m", "2", "--format", "coeffs")[1].strip() == "[1,0,1,0,1]"
    code, out, _ = call(capsys, "compute", "spectrum", "--family", "F", "--n", "20", "--max-d", "20", "--format", "json")
    assert code == 0 and {5, 10, 20} <= set(json.loads(out)["spectrum"])


def test_compute_json_round_trips(capsys):
    code, out, _ = call(capsys, "compute", "fib", "--family", "F", "--n", "30", "--format", "json")
    data = json.loads(out)
    assert data["family"] == "F" and data["n"] == 30
    assert parse(json.dumps(data["coeffs"])) == IntPoly(data["coeffs"])


def test_verify_json(capsys):
    code, out, _ = call(capsys, "verify", "LEMMA_1_1", "--bound", "50", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["status"] == "Proved-in-range" and data["instances_checked"] == 50


def test_verify_usage_errors(capsys):
    assert call(capsys, "verify", "NOPE", "--bound", "5")[0] == 2
    assert call(capsys, "verify", "VAL_5", "--bound", "999999")[0] == 2
    assert call(capsys, "verify", "VAL_5", "--bound", "25000", "--override")[0] == 0
    assert call(capsys, "frobnicate")[0] == 2
    assert call(capsys, "verify", "THM_2_1", "--instance", "{not json")[0] == 2


def test_verify_exit_one_on_counterexample(capsys, monkeypatch):
    fake = verify._Claim(
        lambda b: [{"n": 1}], lambda p: (1, [Failure(p, "[]", "[1]")]), "n <= {}".format, 1, 1, 5
    )
    monkeypatch.setitem(verify._REGISTRY, ClaimId.EQ_1_7, fake)
    code, out, _ = call(capsys, "verify", "EQ_1_7", "--bound", "1")
    assert code == 1 and "FAIL" in out


def test_internal_error_exit_three(capsys, monkeypatch):
    def boom(*a, **k):
        raise RuntimeError("kaput")

    monkeypatch.setattr("qfibdiv.cli.verify_claim", boom)
    assert call(capsys, "verify", "VAL_5", "--bound", "10")[0] == 3


def test_scan(capsys):
    code, out, _ = call(capsys, "scan", "conj32", "--max-6n", "36", "--max-r", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["status"] == "Supported" and data["notes"]


def test_verify_all_quick_json_is_deterministic(capsys):
    outs = []
    for jobs in ("1", "2"):
        code, out, _ = call(capsys, "verify", "all", "--bound-profile", "quick", "--format", "coeffs", "--no-timing", "--jobs", jobs)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]
    assert {d["claim"] for d in json.loads(outs[0])} == {c.value for c in ClaimId}


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qfibdiv", "compute", "cyclotomic", "5", "--format", "coeffs"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "[1,1,1,1,1]"
