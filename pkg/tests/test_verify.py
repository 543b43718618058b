import json

import pytest

from qfibdiv import verify
from qfibdiv.errors import BoundTooLarge, DomainError, UnknownClaim
from qfibdiv.polyint import IntPoly, divrem, mul, parse
from qfibdiv.qcore import q_int
from qfibdiv.qfib import four_term, fib
from qfibdiv.verify import (
    BOUND_PROFILES,
    COUNTEREXAMPLE,
    PROVED,
    SUPPORTED,
    ClaimId,
    Failure,
    claim_instances,
    is_prime,
    scan_conjecture,
    verify_claim,
    verify_instance,
)


def test_registry_is_exhaustive():
    assert set(verify._REGISTRY) == set(ClaimId)
    for profile in BOUND_PROFILES.values():
        assert set(profile) == set(ClaimId)


def test_is_prime_examples():
    assert is_prime(2) and not is_prime(1) and not is_prime(91)
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_lemma_example():
    rep = verify_claim(ClaimId.LEMMA_1_1, 50)
    assert rep.instances_checked == 50 and not rep.failures and rep.status == PROVED


def test_lemma_checks_both_directions(monkeypatch):
    # pretend Phi_n never divides: the n = +-2 mod 5 instances must then fail
    monkeypatch.setattr(verify, "residue", lambda a, n: type("R", (), {"is_zero": lambda self: False})())
    rep = verify_claim("LEMMA_1_1", 20)
    assert rep.status == COUNTEREXAMPLE
    assert sorted(f.params["n"] for f in rep.failures) == [2, 3, 7, 8, 12, 13, 17, 18]


def test_theorem_2_1_example():
    rep = verify_claim("THM_2_1", 250)
    assert rep.status == PROVED
    kinds = {p["kind"] for p in claim_instances("THM_2_1", 250)}
    assert kinds == {"divisibility", "quotient-identity", "factorization", "spectrum", "step"}


def test_val5_example():
    rep = verify_claim("VAL_5", 2000)
    assert rep.instances_checked == 2000 and rep.status == PROVED


def test_conjecture_examples():
    f12 = fib(four_term(0), 12)
    quot, rem = divrem(f12, q_int(8))
    assert not rem and quot == mul(IntPoly([2]), IntPoly([1, 0, 0, 1, 0, 1, 1, 1, 2, 1, 0, 1]))
    quot, rem = divrem(fib(four_term(0), 18), q_int(4, 3))
    assert not rem and all(c % 2 == 0 for c in quot.coeffs)
    for r in range(3):
        f6 = fib(four_term(r), 6)
        assert not divrem(f6, q_int(4))[1]


def test_conjectures_never_proved():
    for claim, bound in ((ClaimId.CONJ_3_1, 60), (ClaimId.CONJ_3_2, 36)):
        rep = scan_conjecture(claim, bound, 2)
        assert rep.status == SUPPORTED
    assert "f_r" in scan_conjecture("CONJ_3_2", 12, 1).notes[0]
    with pytest.raises(DomainError):
        scan_conjecture("THM_1_1", 60)


def test_conj_3_2_range_respects_max_r():
    inst = claim_instances("CONJ_3_2", 24, 1)
    assert {p["r"] for p in inst} == {0, 1}


def test_errors():
    with pytest.raises(UnknownClaim):
        verify_claim("THM_9_9", 10)
    with pytest.raises(BoundTooLarge):
        verify_claim("LEMMA_1_1", 10**6)
    with pytest.raises(DomainError):
        verify_claim("LEMMA_1_1", 0)
    assert verify_claim("VAL_5", 20001, override=True).status == PROVED


def test_counterexample_is_captured_losslessly(monkeypatch):
    bogus = IntPoly([10**40, -3, 0, 7])

    def fake_check(params):
        return 1, [Failure(params, "[]", verify.serialize(bogus))]

    fake = verify._Claim(lambda b: [{"n": n} for n in range(1, b + 1)], fake_check, "n <= {}".format, 3, 3, 10)
    monkeypatch.setitem(verify._REGISTRY, ClaimId.EQ_1_7, fake)
    rep = verify_claim("EQ_1_7", 3)
    assert rep.status == COUNTEREXAMPLE and len(rep.failures) == 3
    data = json.loads(rep.to_json())
    assert data["status"] == COUNTEREXAMPLE
    failure = data["failures"][1]
    assert failure["params"] == {"n": 2}
    assert parse(failure["actual"]) == bogus
    assert "--instance" in failure["rerun"] and '"n": 2' in failure["rerun"]


def test_verify_instance_reruns_failure_params():
    rep = verify_instance("THM_2_1", {"kind": "divisibility", "k": 2, "m": 3})
    assert rep.instances_checked == 1 and rep.status == PROVED
    rep = verify_instance("SUM_EQ_REC", {"family": "f_2", "n": 17})
    assert rep.status == PROVED
    rep = verify_instance("CONJ_3_1", {"n": 4})
    assert rep.status == SUPPORTED
    with pytest.raises(DomainError):
        verify_instance("LEMMA_1_1", {"m": 3})


def test_report_shape():
    data = verify_claim("PAN_TABLE", 20).to_dict()
    assert list(data) == ["claim", "range", "instances_checked", "failures", "status", "elapsed_ms", "notes"]
    assert data["elapsed_ms"] >= 0
    assert verify_claim("PAN_TABLE", 20).to_dict(timing=False)["elapsed_ms"] is None


def test_parallel_reports_match_serial():
    for claim, bound in (("COR_1_2", 40), ("CONJ_3_2", 36), ("THM_2_1", 60)):
        serial = verify_claim(claim, bound).to_json(timing=False)
        parallel = verify_claim(claim, bound, jobs=2).to_json(timing=False)
        assert serial == parallel


def test_quick_profile_covers_every_claim():
    reports = verify.verify_all("quick")
    assert {r.claim for r in reports} == set(ClaimId)
    assert all(r.instances_checked > 0 and not r.failures for r in reports)
