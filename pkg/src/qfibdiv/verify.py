"""Claim registry and sweep engine.

Every checkable statement has a :class:`ClaimId`.  A claim knows how to list
its instances for a given bound and how to check one instance with exact
arithmetic.  :func:`verify_claim` runs the sweep (optionally across worker
processes) and returns a :class:`VerificationReport`; conjectures never come
back as proved, only as ``Supported`` or ``Counterexample``.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Callable

from .errors import BoundTooLarge, DomainError, UnknownClaim
from .polyint import ONE, ZERO, IntPoly, divrem, monomial, mul, reduce_coeffs_mod, serialize
from .qcore import cyclo_spectrum, cyclotomic, q_int, q_binom, residue, residue_mul, residue_scale
from .qfib import (
    SCHUR_F,
    SCHUR_G,
    cassini,
    four_term,
    fib,
    fib_sum,
    fib_sum_ranges,
    matrix_product,
    parse_family,
    vp,
)
from .rr import pan_expected_residue, residue_F_two_term, rr_G_terms, rr_sum_F, rr_sum_G, two_term_r

__all__ = [
    "ClaimId",
    "Failure",
    "VerificationReport",
    "PROVED",
    "SUPPORTED",
    "COUNTEREXAMPLE",
    "BOUND_PROFILES",
    "verify_claim",
    "verify_instance",
    "verify_all",
    "scan_conjecture",
    "is_prime",
    "claim_instances",
]

PROVED = "Proved-in-range"
SUPPORTED = "Supported"
COUNTEREXAMPLE = "Counterexample"


class ClaimId(str, Enum):
    THM_1_1 = "THM_1_1"
    THM_1_2 = "THM_1_2"
    LEMMA_1_1 = "LEMMA_1_1"
    EQ_1_6 = "EQ_1_6"
    EQ_1_7 = "EQ_1_7"
    COR_1_1 = "COR_1_1"
    COR_1_2 = "COR_1_2"
    THM_2_1 = "THM_2_1"
    CASSINI_1_9 = "CASSINI_1_9"
    EQ_1_10 = "EQ_1_10"
    PAN_TABLE = "PAN_TABLE"
    EQ_1_3_TABLE = "EQ_1_3_TABLE"
    RR_F_1_2 = "RR_F_1_2"
    RR_G_1_5 = "RR_G_1_5"
    SUM_EQ_REC = "SUM_EQ_REC"
    VAL_5 = "VAL_5"
    VAL_2 = "VAL_2"
    F_MOD2 = "F_MOD2"
    F_PERIOD_24 = "F_PERIOD_24"
    CONJ_3_1 = "CONJ_3_1"
    CONJ_3_2 = "CONJ_3_2"

    def __str__(self):
        return self.value


CONJECTURES = frozenset({ClaimId.CONJ_3_1, ClaimId.CONJ_3_2})


def parse_claim(name) -> ClaimId:
    if isinstance(name, ClaimId):
        return name
    try:
        return ClaimId(str(name).upper())
    except ValueError:
        raise UnknownClaim(f"unknown claim {name!r}") from None


@dataclass
class Failure:
    params: dict
    expected: str
    actual: str


@dataclass
class VerificationReport:
    claim: ClaimId
    range: str
    instances_checked: int
    failures: list = field(default_factory=list)
    status: str = PROVED
    elapsed_ms: float | None = None
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "claim": str(self.claim),
            "range": self.range,
            "instances_checked": self.instances_checked,
            "failures": [asdict(f) | {"rerun": _rerun_hint(self.claim, f.params)} for f in self.failures],
            "status": self.status,
            "elapsed_ms": round(self.elapsed_ms, 3) if timing and self.elapsed_ms is not None else None,
            "notes": list(self.notes),
        }

    def to_json(self, timing: bool = True, **kwargs) -> str:
        return json.dumps(self.to_dict(timing), **kwargs)


def _rerun_hint(claim, params) -> str:
    return f"qfibdiv verify {claim} --instance '{json.dumps(params, sort_keys=True)}'"


# ---------------------------------------------------------------------------
# helpers


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=8)
def _int_fibs(n_max: int) -> tuple:
    out = [0, 1]
    while len(out) <= n_max:
        out.append(out[-1] + out[-2])
    return tuple(out[: n_max + 1])


def _ifib(n: int) -> int:
    size = 1 << max(n, 1).bit_length()
    return _int_fibs(size)[n]


def _res_text(res) -> str:
    return f"Phi_{res.modulus_index}: {serialize(res.value)}"


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def _family_name(fam) -> str:
    return str(fam)


def _family_from_name(name: str):
    if name.startswith("f_"):
        return four_term(int(name[2:]))
    return parse_family(name)


# Each checker takes an instance dict and returns (checked_count, [Failure]).

Check = Callable[[dict], tuple]


def _one(params, ok, expected, actual):
    return 1, ([] if ok else [Failure(params, expected, actual)])


def _divides(d: IntPoly, a: IntPoly):
    quot, rem = divrem(a, d)
    return not rem, quot, rem


# -- F_n: prime and cyclotomic divisors -----------------------------------------


def _thm_1_1_instances(bound):
    return [{"p": p} for p in range(3, bound + 1) if is_prime(p) and p % 5 in (2, 3)]


def _thm_1_1(params):
    p = params["p"]
    ok, _, rem = _divides(q_int(p), fib(SCHUR_F, p + 1))
    return _one(params, ok, "remainder []", f"remainder {serialize(rem)}")


def _lemma_1_1_instances(bound):
    return [{"n": n} for n in range(1, bound + 1)]


def _lemma_1_1(params):
    n = params["n"]
    divisible = residue(fib(SCHUR_F, n + 1), n).is_zero()
    predicted = n % 5 in (2, 3)
    word = {True: "divisible", False: "not divisible"}
    return _one(params, divisible == predicted, word[predicted], word[divisible])


def _eq_1_3_instances(bound):
    return [{"n": n} for n in range(3, bound + 1)]


def _eq_1_3_table(params):
    n = params["n"]
    failures = []
    two = residue_F_two_term(n)
    direct = residue(fib(SCHUR_F, n + 1), n)
    if two != direct:
        failures.append(Failure(params | {"check": "two-term"}, _res_text(direct), _res_text(two)))
    if two.is_zero() != (n % 5 in (2, 3)):
        failures.append(
            Failure(params | {"check": "vanishing"}, f"zero iff n = +-2 mod 5", _res_text(two))
        )
    if n % 10 in (2, 3, 7, 8):
        m = n // 10
        r_exp, er_exp, emr_exp, binom_exp = {
            2: (2 * m, 10 * m + 1, 1, q_int(n)),
            3: (2 * m + 1, 10 * m + 4, -1, ZERO),
            7: (2 * m + 1, 10 * m + 6, 1, q_int(n)),
            8: (2 * m + 2, 10 * m + 9, -1, ZERO),
        }[n % 10]
        r = two_term_r(n)
        er, emr = (n + 5 * r) // 2, (n - 5 * r) // 2
        row = (r, er, emr, q_binom(n, er), q_binom(n, emr))
        want = (r_exp, er_exp, emr_exp, binom_exp, binom_exp)
        if row != want:
            failures.append(
                Failure(
                    params | {"check": "table-row"},
                    f"r={want[0]} e(r)={want[1]} e(-r)={want[2]} binomials={serialize(binom_exp)}",
                    f"r={r} e(r)={er} e(-r)={emr} binomials={serialize(row[3])},{serialize(row[4])}",
                )
            )
    return 1, failures


def _rr_f_instances(bound):
    return [{"n": n} for n in range(0, bound + 1)]


def _rr_f(params):
    n = params["n"]
    lhs, rhs = rr_sum_F(n), fib(SCHUR_F, n + 1)
    return _one(params, lhs == rhs, serialize(rhs), serialize(lhs))


# -- G_n: prime and cyclotomic divisors -----------------------------------------


def _thm_1_2_instances(bound):
    return [{"p": p} for p in range(2, bound + 1) if is_prime(p) and p % 5 in (1, 4)]


def _thm_1_2(params):
    p = params["p"]
    ok, _, rem = _divides(q_int(p), fib(SCHUR_G, p - 1))
    return _one(params, ok, "remainder []", f"remainder {serialize(rem)}")


def _rr_g(params):
    n = params["n"]
    lhs, rhs = rr_sum_G(n), fib(SCHUR_G, n)
    return _one(params, lhs == rhs, serialize(rhs), serialize(lhs))


def _five_n_instances(bound):
    return [{"n": n} for n in range(1, bound // 5 + 1)]


def _eq_1_6(params):
    n = 5 * params["n"]
    failures = []
    res = residue(fib(SCHUR_G, n), n)
    if not res.is_zero():
        failures.append(Failure(params, "Phi_%d: []" % n, _res_text(res)))
    edge = [j for _, _, j in rr_G_terms(n) if j in (0, n)]
    if edge:
        failures.append(Failure(params | {"check": "binomial-index"}, "all indices in (0, n)", f"edge indices {edge}"))
    return 1, failures


def _eq_1_7(params):
    n = 5 * params["n"]
    res = residue(fib(SCHUR_F, n), n)
    return _one(params, res.is_zero(), "Phi_%d: []" % n, _res_text(res))


def _pan_instances(bound):
    return [{"n": n} for n in range(2, bound + 1)]


def _pan_table(params):
    n = params["n"]
    case = pan_expected_residue(n)
    failures = []
    actual = residue(fib(SCHUR_G, n), n)
    if actual != case.expected:
        failures.append(Failure(params, _res_text(case.expected), _res_text(actual)))
    raw = residue(case.raw_term, n)
    if raw != case.expected:
        failures.append(Failure(params | {"check": "surviving-term"}, _res_text(case.expected), _res_text(raw)))
    return 1, failures


# -- Cassini and residue products ----------------------------------------------


def _cassini_instances(bound):
    return [{"n": n, "identity": ident} for n in range(1, bound + 1) for ident in ("cassini", "matrix")]


def _cassini(params):
    n = params["n"]
    if params["identity"] == "matrix":
        m = matrix_product(n)
        got = (m.a11, m.a12, m.a21, m.a22)
        want = (fib(SCHUR_F, n + 1), fib(SCHUR_G, n), fib(SCHUR_F, n), fib(SCHUR_G, n - 1))
        return _one(params, got == want, " ".join(map(serialize, want)), " ".join(map(serialize, got)))
    lhs = cassini(n)
    want = monomial(n * (n - 1) // 2, _sign(n))
    return _one(params, lhs == want, serialize(want), serialize(lhs))


def _eq_1_10_instances(bound):
    return [{"n": n} for n in range(2, bound + 1)]


def _eq_1_10(params):
    n = params["n"]
    minus_one = residue(-ONE, n)
    via_cassini = residue(cassini(n), n)
    via_monomial = residue(monomial(n * (n - 1) // 2, _sign(n)), n)
    ok = via_cassini == minus_one and via_monomial == minus_one
    return _one(params, ok, _res_text(minus_one), f"{_res_text(via_cassini)} / {_res_text(via_monomial)}")


def _cor_1_1_instances(bound):
    return [{"n": n} for n in range(2, bound + 1)]


def _cor_1_1(params):
    n = params["n"]
    prod = residue_mul(residue(fib(SCHUR_F, n), n), residue(fib(SCHUR_G, n), n))
    want = residue(ZERO if n % 5 == 0 else ONE, n)
    return _one(params, prod == want, _res_text(want), _res_text(prod))


def _cor_1_2_instances(bound):
    return [{"k": k, "n": n} for k in range(2, bound + 1) for n in range(1, bound // k + 1)]


def _cor_1_2(params):
    k, n = params["k"], params["n"]
    fn = _ifib(n)
    fkn = residue(fib(SCHUR_F, k * n), k)
    gkn = residue(fib(SCHUR_G, k * n), k)
    failures = []
    want_f = residue_scale(residue(fib(SCHUR_F, k), k), fn)
    want_g = residue_scale(residue(fib(SCHUR_G, k), k), fn)
    if fkn != want_f:
        failures.append(Failure(params | {"check": "F"}, _res_text(want_f), _res_text(fkn)))
    if gkn != want_g:
        failures.append(Failure(params | {"check": "G"}, _res_text(want_g), _res_text(gkn)))
    prod = residue_mul(fkn, gkn)
    want = residue(IntPoly.const(0 if k % 5 == 0 else fn * fn), k)
    if prod != want:
        failures.append(Failure(params | {"check": "product"}, _res_text(want), _res_text(prod)))
    return 1, failures


# -- q-integer divisors ---------------------------------------------------------

_WORKED_FACTORIZATIONS = {
    # name -> (family, index, factors)
    "F5": (SCHUR_F, 5, lambda: [q_int(5)]),
    "F10": (SCHUR_F, 10, lambda: [q_int(5, 2), ONE + monomial(1) + mul(monomial(4), q_int(9))]),
    "F10-split": (
        SCHUR_F,
        10,
        lambda: [q_int(5), IntPoly([1, -1, 1, -1, 1]), ONE + monomial(1) + mul(monomial(4), q_int(9))],
    ),
    "G5": (SCHUR_G, 5, lambda: [q_int(5), IntPoly([1, -1, 1])]),
    "G10": (SCHUR_G, 10, lambda: [q_int(5, 2), q_int(11), IntPoly([1, -1, 0, 1, -1, 0, 1])]),
}

_WORKED_SPECTRA = {10: {5, 10}, 15: {5, 15}, 20: {5, 10, 20}}


def _thm_2_1_instances(bound):
    out = []
    k = 1
    while 5**k <= bound:
        for m in range(1, bound // 5**k + 1):
            if m % 5:
                out.append({"kind": "divisibility", "k": k, "m": m})
        k += 1
    if bound >= 5:
        out += [{"kind": "quotient-identity", "k": p["k"], "m": p["m"]} for p in list(out)]
    for name, (_, idx, _) in _WORKED_FACTORIZATIONS.items():
        if idx <= bound:
            out.append({"kind": "factorization", "name": name})
    for n in _WORKED_SPECTRA:
        if n <= bound:
            out.append({"kind": "spectrum", "n": n})
    for n in range(0, min(20, (bound - 5) // 5) + 1):
        out.append({"kind": "step", "n": n})
    return out


def _thm_2_1(params):
    kind = params["kind"]
    if kind == "divisibility":
        k, m = params["k"], params["m"]
        d = q_int(5**k, m)
        failures = []
        for fam in (SCHUR_F, SCHUR_G):
            ok, _, rem = _divides(d, fib(fam, 5**k * m))
            if not ok:
                failures.append(Failure(params | {"family": str(fam)}, "remainder []", f"remainder {serialize(rem)}"))
        return 1, failures
    if kind == "quotient-identity":
        k, m = params["k"], params["m"]
        n = 5**k * m
        prod = ONE
        for d in range(1, n + 1):
            if n % d == 0 and m % d:
                prod = mul(prod, cyclotomic(d))
        want = q_int(5**k, m)
        return _one(params, prod == want, serialize(want), serialize(prod))
    if kind == "factorization":
        fam, idx, factors = _WORKED_FACTORIZATIONS[params["name"]]
        prod = ONE
        for f in factors():
            prod = mul(prod, f)
        got = fib(fam, idx)
        return _one(params, prod == got, serialize(prod), serialize(got))
    if kind == "spectrum":
        n = params["n"]
        found = cyclo_spectrum(fib(SCHUR_F, n), n)
        want = _WORKED_SPECTRA[n]
        return _one(params, want <= found, f"superset of {sorted(want)}", str(sorted(found)))
    if kind == "step":
        return _thm_2_1_step(params)
    raise DomainError(f"unknown THM_2_1 instance kind {kind!r}")


def _thm_2_1_step(params):
    # walk F_{5n+1} .. F_{5n+5} and G_{5n+1} .. G_{5n+5} modulo [5]_q = Phi_5
    n = params["n"]
    failures = []
    multipliers = {
        SCHUR_F: [ONE, ONE, IntPoly([1, 1]), IntPoly([1, 1, 1]), ZERO],
        SCHUR_G: [ONE, ONE, IntPoly([1, 0, 1]), IntPoly([1, 0, 1, 1]), ZERO],
    }
    for fam, mults in multipliers.items():
        base = fib(fam, 5 * n + 1)
        for offset, mult in enumerate(mults, start=1):
            want = residue(mul(mult, base), 5)
            got = residue(fib(fam, 5 * n + offset), 5)
            if want != got:
                failures.append(
                    Failure(params | {"family": str(fam), "index": 5 * n + offset}, _res_text(want), _res_text(got))
                )
    if IntPoly([1, 0, 1, 1, 1, 0, 1]) != mul(q_int(5), IntPoly([1, -1, 1])):
        failures.append(Failure(params | {"check": "G-multiplier"}, "[5]_q (1-q+q^2)", "mismatch"))
    return 1, failures


# -- q-sum oracle ---------------------------------------------------------------

_SUM_FAMILIES = (SCHUR_F, SCHUR_G, four_term(0), four_term(1), four_term(2), four_term(3))


def _sum_instances(bound):
    return [{"families": [str(f) for f in _SUM_FAMILIES], "n_max": bound}]


def _sum_eq_rec(params):
    if "family" in params:
        fam = _family_from_name(params["family"])
        n = params["n"]
        lhs, rhs = fib_sum(fam, n), fib(fam, n)
        return _one(params, lhs == rhs, serialize(rhs), serialize(lhs))
    fams = [_family_from_name(name) for name in params["families"]]
    failures = []
    count = 0
    for n, sums in fib_sum_ranges(fams, params["n_max"]):
        for fam in fams:
            count += 1
            rec = fib(fam, n)
            if sums[fam] != rec:
                failures.append(Failure({"family": str(fam), "n": n}, serialize(rec), serialize(sums[fam])))
    return count, failures


# -- integer valuations ---------------------------------------------------------


def _val_5_instances(bound):
    return [{"n_max": bound}]


def _val_5(params):
    if "n" in params:
        ns = [params["n"]]
    else:
        ns = range(1, params["n_max"] + 1)
    failures = []
    for n in ns:
        got, want = vp(_ifib(n), 5), vp(n, 5)
        if got != want:
            failures.append(Failure({"n": n}, str(want), str(got)))
    return len(ns), failures


def _val_2_instances(bound):
    return [{"n_max": bound}]


# F_n mod 8 for n = 0..11; the residues repeat with period 12
_MOD8_PERIOD = (0, 1, 1, 2, 3, 5, 0, 5, 5, 2, 7, 1)


def _val_2(params):
    if "kind" in params:
        checks = [(params["kind"], params["n"])]
    else:
        top = params["n_max"]
        checks = [("v2_3n", n) for n in range(1, top + 1, 2)]
        checks += [("v2_6n", n) for n in range(1, top + 1)]
        checks += [("mod8-period", n) for n in range(0, top + 1)]
        checks += [("mod8-6n", n) for n in range(1, top // 6 + 1)]
    failures = []
    for kind, n in checks:
        if kind == "v2_3n":
            got, want = vp(_ifib(3 * n), 2), 1
        elif kind == "v2_6n":
            got, want = vp(_ifib(6 * n), 2), vp(n, 2) + 3
        elif kind == "mod8-period":
            got, want = _ifib(n + 12) % 8, _ifib(n) % 8
        else:
            got, want = _ifib(6 * n) % 8, 0
        if got != want:
            failures.append(Failure({"kind": kind, "n": n}, str(want), str(got)))
    return len(checks), failures


# -- the f_r family ------------------------------------------------------------


def _f_mod2_instances(bound):
    return [{"n": n} for n in range(0, bound + 1)]


def _f_mod2(params):
    big_n = params["n"]
    n, c = divmod(big_n, 3)
    if c == 0:
        want = ZERO
    elif c == 1:
        want = monomial(n * (3 * n - 1) // 2)
    else:
        want = monomial(n * (3 * n + 1) // 2)
    got = reduce_coeffs_mod(fib(four_term(0), big_n), 2)
    return _one(params, got == want, serialize(want), serialize(got))


def _period_instances(bound):
    out = [{"kind": "period", "n": n} for n in range(0, bound + 1)]
    out += [{"kind": "sixfold", "n": n} for n in range(1, bound // 6 + 1)]
    out.append({"kind": "f6"})
    return out


def _period_24(params):
    f0 = four_term(0)
    four = q_int(4)
    kind = params["kind"]
    if kind == "period":
        n = params["n"]
        a = divrem(fib(f0, n), four)[1]
        b = divrem(fib(f0, n + 24), four)[1]
        return _one(params, a == b, serialize(a), serialize(b))
    if kind == "sixfold":
        poly = fib(f0, 6 * params["n"])
        quot, rem = divrem(poly, four)
        ok = not rem and all(c % 2 == 0 for c in quot.coeffs)
        return _one(params, ok, "remainder [] and even quotient", f"remainder {serialize(rem)}, quotient {serialize(quot)}")
    want = mul(IntPoly.const(2), four)
    got = fib(f0, 6)
    return _one(params, got == want, serialize(want), serialize(got))


def _conj_divisor(n: int) -> tuple:
    k = vp(n, 2)
    odd = n >> k
    return k, odd, q_int(2 ** (k + 2), odd)


_F12_QUOTIENT = IntPoly([1, 0, 0, 1, 0, 1, 1, 1, 2, 1, 0, 1])


def _conj_3_1_instances(max_6n):
    out = [{"n": n} for n in range(1, max_6n // 6 + 1)]
    if max_6n >= 12:
        out.append({"example": "f12"})
    if max_6n >= 18:
        out.append({"example": "f18"})
    return out


def _conj_3_1(params):
    f0 = four_term(0)
    if params.get("example") == "f12":
        want = mul(mul(IntPoly.const(2), q_int(8)), _F12_QUOTIENT)
        got = fib(f0, 12)
        return _one(params, got == want, serialize(want), serialize(got))
    if params.get("example") == "f18":
        quot, rem = divrem(fib(f0, 18), q_int(4, 3))
        ok = not rem and all(c % 2 == 0 for c in quot.coeffs)
        return _one(params, ok, "2[4]_{q^3} divides f(18,q)", f"remainder {serialize(rem)}, quotient {serialize(quot)}")
    n = params["n"]
    k, odd, d = _conj_divisor(n)
    quot, rem = divrem(fib(f0, 6 * n), d)
    ok = not rem and all(c % 2 == 0 for c in quot.coeffs)
    return _one(
        params,
        ok,
        f"2[{2 ** (k + 2)}]_(q^{odd}) divides f({6 * n},q)",
        f"remainder {serialize(rem)}, quotient {serialize(quot)}",
    )


def _conj_3_2_instances(max_6n, max_r=3):
    out = [{"n": n, "r": r} for n in range(1, max_6n // 6 + 1) for r in range(0, max_r + 1)]
    if max_6n >= 6:
        out += [{"example": "f_r(6)", "r": r} for r in range(0, max_r + 1)]
    return out


def _conj_3_2(params):
    r = params["r"]
    fam = four_term(r)
    if params.get("example"):
        got = fib(fam, 6)
        want = mul(ONE + monomial(2 * r), IntPoly([1] + [0] * (2 * r) + [1, 1, 1]))
        ok = got == want and not divrem(got, q_int(4))[1]
        return _one(params, ok, serialize(want), serialize(got))
    n = params["n"]
    k, odd, d = _conj_divisor(n)
    quot, rem = divrem(fib(fam, 6 * n), d)
    return _one(
        params,
        not rem,
        f"[{2 ** (k + 2)}]_(q^{odd}) divides f_{r}({6 * n},q)",
        f"remainder {serialize(rem)}, quotient {serialize(quot)}",
    )


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class _Claim:
    instances: Callable
    check: Check
    range_text: Callable
    quick: int
    full: int
    limit: int
    notes: tuple = ()


_REGISTRY = {
    ClaimId.THM_1_1: _Claim(_thm_1_1_instances, _thm_1_1, "odd primes p <= {} with p = +-2 mod 5".format, 60, 100, 400),
    ClaimId.THM_1_2: _Claim(_thm_1_2_instances, _thm_1_2, "primes p <= {} with p = +-1 mod 5".format, 60, 100, 400),
    ClaimId.LEMMA_1_1: _Claim(_lemma_1_1_instances, _lemma_1_1, "1 <= n <= {}, both directions".format, 50, 150, 400),
    ClaimId.EQ_1_6: _Claim(_five_n_instances, _eq_1_6, "5n <= {}".format, 50, 150, 400),
    ClaimId.EQ_1_7: _Claim(_five_n_instances, _eq_1_7, "5n <= {}".format, 50, 150, 400),
    ClaimId.COR_1_1: _Claim(_cor_1_1_instances, _cor_1_1, "2 <= n <= {}".format, 50, 150, 400),
    ClaimId.COR_1_2: _Claim(_cor_1_2_instances, _cor_1_2, "k >= 2, n >= 1, kn <= {}".format, 60, 200, 400),
    ClaimId.THM_2_1: _Claim(
        _thm_2_1_instances, _thm_2_1, "5^k m <= {}, k >= 1, m != 0 mod 5; worked examples".format, 100, 250, 700
    ),
    ClaimId.CASSINI_1_9: _Claim(_cassini_instances, _cassini, "1 <= n <= {}, determinant and matrix form".format, 50, 100, 300),
    ClaimId.EQ_1_10: _Claim(_eq_1_10_instances, _eq_1_10, "2 <= n <= {}".format, 50, 150, 400),
    ClaimId.PAN_TABLE: _Claim(_pan_instances, _pan_table, "2 <= n <= {}".format, 50, 150, 400),
    ClaimId.EQ_1_3_TABLE: _Claim(_eq_1_3_instances, _eq_1_3_table, "3 <= n <= {}".format, 50, 100, 250),
    ClaimId.RR_F_1_2: _Claim(_rr_f_instances, _rr_f, "0 <= n <= {}".format, 40, 120, 200),
    ClaimId.RR_G_1_5: _Claim(_rr_f_instances, _rr_g, "0 <= n <= {}".format, 40, 120, 200),
    ClaimId.SUM_EQ_REC: _Claim(
        _sum_instances, _sum_eq_rec, "0 <= n <= {}; F, G, f_0..f_3".format, 80, 300, 400
    ),
    ClaimId.VAL_5: _Claim(_val_5_instances, _val_5, "1 <= n <= {}".format, 500, 2000, 20000),
    ClaimId.VAL_2: _Claim(_val_2_instances, _val_2, "n <= {}; F_3n, F_6n, F_n mod 8".format, 200, 500, 5000),
    ClaimId.F_MOD2: _Claim(_f_mod2_instances, _f_mod2, "0 <= n <= {}".format, 60, 150, 400),
    ClaimId.F_PERIOD_24: _Claim(_period_instances, _period_24, "0 <= n <= {} (period), 6n <= {} (divisibility)".format, 100, 300, 600),
    ClaimId.CONJ_3_1: _Claim(_conj_3_1_instances, _conj_3_1, "6n <= {}".format, 96, 240, 480),
    ClaimId.CONJ_3_2: _Claim(
        _conj_3_2_instances,
        _conj_3_2,
        "6n <= {}, 0 <= r <= {}".format,
        48,
        120,
        360,
        notes=("statement prints f(6(2m+1)2^k, q) on the right-hand side; read as f_r throughout",),
    ),
}

BOUND_PROFILES = {
    "quick": {c: entry.quick for c, entry in _REGISTRY.items()},
    "full": {c: entry.full for c, entry in _REGISTRY.items()},
}


def _range_text(claim: ClaimId, bound: int, max_r: int) -> str:
    entry = _REGISTRY[claim]
    if claim is ClaimId.CONJ_3_2:
        return entry.range_text(bound, max_r)
    if claim is ClaimId.F_PERIOD_24:
        return entry.range_text(bound, bound)
    return entry.range_text(bound)


def claim_instances(claim, bound: int, max_r: int = 3) -> list:
    claim = parse_claim(claim)
    if claim is ClaimId.CONJ_3_2:
        return _conj_3_2_instances(bound, max_r)
    return _REGISTRY[claim].instances(bound)


def _run_one(job):
    claim, params = job
    return _REGISTRY[ClaimId(claim)].check(params)


def _finish(claim, range_text, results, start) -> VerificationReport:
    count = 0
    failures = []
    for checked, fails in results:
        count += checked
        failures.extend(fails)
    if failures:
        status = COUNTEREXAMPLE
    else:
        status = SUPPORTED if claim in CONJECTURES else PROVED
    return VerificationReport(
        claim=claim,
        range=range_text,
        instances_checked=count,
        failures=failures,
        status=status,
        elapsed_ms=(time.perf_counter() - start) * 1000.0,
        notes=list(_REGISTRY[claim].notes),
    )


def _run_jobs(claim: ClaimId, instances: list, jobs: int) -> list:
    work = [(claim.value, p) for p in instances]
    if jobs <= 1 or len(work) < 2:
        return [_run_one(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map keeps submission order, so the report does not depend on scheduling
        return list(pool.map(_run_one, work, chunksize=max(1, len(work) // (4 * jobs))))


def _check_bound(claim: ClaimId, bound: int, override: bool) -> None:
    if bound < 1:
        raise DomainError(f"bound must be positive, got {bound}")
    limit = _REGISTRY[claim].limit
    if bound > limit and not override:
        raise BoundTooLarge(f"{claim} bound {bound} exceeds the soft limit {limit}; pass override to run anyway")


def verify_claim(claim, bound: int | None = None, *, override: bool = False, jobs: int = 1, max_r: int = 3) -> VerificationReport:
    """Sweep one claim up to ``bound`` (defaults to the quick profile)."""
    claim = parse_claim(claim)
    if bound is None:
        bound = _REGISTRY[claim].quick
    _check_bound(claim, bound, override)
    start = time.perf_counter()
    instances = claim_instances(claim, bound, max_r)
    results = _run_jobs(claim, instances, jobs)
    return _finish(claim, _range_text(claim, bound, max_r), results, start)


def verify_instance(claim, params: dict) -> VerificationReport:
    """Re-run a single instance, e.g. one taken from a failure record."""
    claim = parse_claim(claim)
    start = time.perf_counter()
    try:
        result = _REGISTRY[claim].check(dict(params))
    except (KeyError, TypeError) as exc:
        raise DomainError(f"malformed instance for {claim}: {params!r}") from exc
    return _finish(claim, "instance " + json.dumps(params, sort_keys=True), [result], start)


def scan_conjecture(claim, max_6n: int, max_r: int = 3, *, override: bool = False, jobs: int = 1) -> VerificationReport:
    claim = parse_claim(claim)
    if claim not in CONJECTURES:
        raise DomainError(f"{claim} is not a conjecture")
    if max_r < 0:
        raise DomainError("max_r must be nonnegative")
    return verify_claim(claim, max_6n, override=override, jobs=jobs, max_r=max_r)


def verify_all(profile: str = "quick", *, jobs: int = 1) -> list:
    if profile not in BOUND_PROFILES:
        raise DomainError(f"unknown bound profile {profile!r}")
    return [verify_claim(c, b, jobs=jobs) for c, b in BOUND_PROFILES[profile].items()]
