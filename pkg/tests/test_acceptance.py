"""Exit criteria.  All checks are exact; each criterion also carries a wall-clock budget."""

import subprocess
import sys
import time
from contextlib import contextmanager
from math import comb

import pytest

from qfibdiv.polyint import IntPoly, divrem, evaluate_int, mul
from qfibdiv.qcore import cyclotomic, divisors, q_binom_product_row, q_binom_row, q_int
from qfibdiv.qfib import SCHUR_F, SCHUR_G, four_term, fib, matrix_product
from qfibdiv.verify import PROVED, SUPPORTED, ClaimId, claim_instances, scan_conjecture, verify_claim

criterion = pytest.mark.criterion


@contextmanager
def budget(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.1f} s, budget {seconds} s"


def proved(claim, bound, **kw):
    rep = verify_claim(claim, bound, **kw)
    assert rep.failures == [], rep.failures[:3]
    assert rep.status == PROVED
    return rep


@criterion(1, "fib = fib_sum, F/G/f_0..f_3, n <= 300")
def test_oracle_equivalence():
    with budget(60):
        rep = proved(ClaimId.SUM_EQ_REC, 300)
    assert rep.instances_checked == 6 * 301


@criterion(2, "Rogers-Ramanujan sums, n <= 120")
def test_rr_identities():
    with budget(120):
        assert proved(ClaimId.RR_F_1_2, 120).instances_checked == 121
        assert proved(ClaimId.RR_G_1_5, 120).instances_checked == 121


@criterion(3, "Phi_n | F_{n+1} iff n = +-2 mod 5, n <= 150")
def test_lemma_both_directions():
    with budget(60):
        assert proved(ClaimId.LEMMA_1_1, 150).instances_checked == 150


@criterion(4, "[p] | F_{p+1} (p = +-2) and [p] | G_{p-1} (p = +-1), p < 100")
def test_prime_theorems():
    with budget(30):
        a = proved(ClaimId.THM_1_1, 99)
        b = proved(ClaimId.THM_1_2, 99)
    assert [i["p"] for i in claim_instances("THM_1_1", 99)] == [3, 7, 13, 17, 23, 37, 43, 47, 53, 67, 73, 83, 97]
    assert [i["p"] for i in claim_instances("THM_1_2", 99)] == [11, 19, 29, 31, 41, 59, 61, 71, 79, 89]
    assert a.instances_checked == 13 and b.instances_checked == 10


@criterion(5, "Phi_5n divides G_5n and F_5n, 5n <= 150")
def test_eq_1_6_1_7():
    with budget(30):
        assert proved(ClaimId.EQ_1_6, 150).instances_checked == 30
        assert proved(ClaimId.EQ_1_7, 150).instances_checked == 30


@criterion(6, "residue table for G_n mod Phi_n, 2 <= n <= 150")
def test_pan_table():
    with budget(60):
        assert proved(ClaimId.PAN_TABLE, 150).instances_checked == 149


@criterion(7, "F_n G_n = 0 or 1 mod Phi_n, 2 <= n <= 150")
def test_corollary_1_1():
    with budget(90):
        assert proved(ClaimId.COR_1_1, 150).instances_checked == 149


@criterion(8, "F_kn(zeta_k) = F_n F_k(zeta_k) and product split, kn <= 200")
def test_corollary_1_2():
    with budget(120):
        rep = proved(ClaimId.COR_1_2, 200)
    assert rep.instances_checked == sum(200 // k for k in range(2, 201))


@criterion(9, "[5^k]_{q^m} divides F and G, 5^k m <= 250, and worked factorizations")
def test_theorem_2_1():
    with budget(60):
        proved(ClaimId.THM_2_1, 250)
    names = {i["name"] for i in claim_instances("THM_2_1", 250) if i["kind"] == "factorization"}
    assert {"F5", "G5", "F10", "G10"} <= names
    pairs = {(i["k"], i["m"]) for i in claim_instances("THM_2_1", 250) if i["kind"] == "divisibility"}
    assert pairs == {(k, m) for k in (1, 2, 3) for m in range(1, 250 // 5**k + 1) if m % 5}


@criterion(10, "Cassini monomial n <= 100; residue -1 for 2 <= n <= 150")
def test_cassini():
    with budget(60):
        proved(ClaimId.CASSINI_1_9, 100)
        proved(ClaimId.EQ_1_10, 150)


@criterion(11, "matrix product entries, n <= 150")
def test_matrix_identity():
    with budget(30):
        for n in range(1, 151):
            m = matrix_product(n)
            assert (m.a11, m.a12, m.a21, m.a22) == (
                fib(SCHUR_F, n + 1),
                fib(SCHUR_G, n),
                fib(SCHUR_F, n),
                fib(SCHUR_G, n - 1),
            ), n


@criterion(12, "v_5(F_n), v_2(F_3n), v_2(F_6n), F_n mod 8 period 12")
def test_integer_valuations():
    with budget(10):
        assert proved(ClaimId.VAL_5, 2000).instances_checked == 2000
        proved(ClaimId.VAL_2, 500)


@criterion(13, "f(n,q) mod 2 formulas n <= 150; period 24 mod [4]_q n <= 300; 2[4]_q | f(6n,q)")
def test_parity():
    with budget(60):
        proved(ClaimId.F_MOD2, 150)
        rep = proved(ClaimId.F_PERIOD_24, 300)
    assert rep.instances_checked == 301 + 50 + 1


@criterion(14, "conjecture scans: CONJ_3_1 6n <= 240, CONJ_3_2 r <= 3, 6n <= 120")
def test_conjecture_scans():
    with budget(120):
        one = scan_conjecture(ClaimId.CONJ_3_1, 240)
        two = scan_conjecture(ClaimId.CONJ_3_2, 120, 3)
    for rep in (one, two):
        assert rep.failures == [] and rep.status == SUPPORTED
    assert one.instances_checked == 40 + 2
    assert two.instances_checked == 20 * 4 + 4
    f12_quot = IntPoly([1, 0, 0, 1, 0, 1, 1, 1, 2, 1, 0, 1])
    assert fib(four_term(0), 12) == mul(mul(IntPoly([2]), q_int(8)), f12_quot)
    for r in range(4):
        first = IntPoly([1] + [0] * (2 * r - 1) + [1]) if r else IntPoly([2])
        second = IntPoly([1] + [0] * (2 * r) + [1, 1, 1])
        assert fib(four_term(r), 6) == mul(first, second)
        assert divrem(fib(four_term(r), 6), q_int(4))[1].is_zero()


@criterion(15, "q-core identities: [n] = prod Phi_d, q-binomial symmetry, q=1, Pascal vs product")
def test_qcore_identities():
    with budget(60):
        for n in range(1, 201):
            prod = IntPoly([1])
            for d in divisors(n)[1:]:
                prod = mul(prod, cyclotomic(d))
            assert prod == q_int(n), n
        for n in range(0, 101):
            row = q_binom_row(n)
            assert row == row[::-1]
            assert [evaluate_int(b, 1) for b in row] == [comb(n, k) for k in range(n + 1)]
            assert q_binom_product_row(n) == row


@criterion(16, "verify all --bound-profile quick exits 0 within 5 minutes")
def test_verify_all_quick():
    with budget(300):
        proc = subprocess.run(
            [sys.executable, "-m", "qfibdiv", "verify", "all", "--bound-profile", "quick"],
            capture_output=True,
            text=True,
            timeout=300,
        )
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert proc.stdout.count("Proved-in-range") == 19 and proc.stdout.count("Supported") == 2
