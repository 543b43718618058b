"""Finite Rogers-Ramanujan sums for F_n(q) and G_n(q) and their residues mod Phi_n."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .polyint import ZERO, IntPoly, add_shifted, monomial
from .qcore import Residue, q_binom, q_binom_row, residue

__all__ = [
    "rr_F_terms",
    "rr_G_terms",
    "rr_sum_F",
    "rr_sum_G",
    "two_term_r",
    "residue_F_two_term",
    "PanResidueCase",
    "pan_expected_residue",
    "ell",
]


def _terms(n: int, exponent, index) -> list:
    # every k whose binomial index lands in [0, n]; |k| <= n/2.5 + 1 bounds them
    out = []
    span = n // 2 + 2
    for k in range(-span, span + 1):
        j = index(k)
        if 0 <= j <= n:
            out.append((k, exponent(k), j))
    return out


def rr_F_terms(n: int) -> list:
    """``(k, exponent, binomial index)`` for the surviving terms of the F-sum."""
    return _terms(n, lambda k: k * (5 * k - 1) // 2, lambda k: (n + 5 * k) // 2)


def rr_G_terms(n: int) -> list:
    """``(k, exponent, binomial index)`` for the surviving terms of the G-sum."""
    return _terms(n, lambda k: k * (5 * k - 3) // 2, lambda k: (n - 1 + 5 * k) // 2)


def _signed_sum(n: int, terms) -> IntPoly:
    if n < 0:
        raise DomainError("n must be nonnegative")
    row = q_binom_row(n)
    total = ZERO
    for k, e, j in terms:
        total = add_shifted(total, row[j], e, -1 if k % 2 else 1)
    return total


def rr_sum_F(n: int) -> IntPoly:
    """``sum_k (-1)^k q^{k(5k-1)/2} [n; floor((n+5k)/2)]``, which equals F_{n+1}(q)."""
    return _signed_sum(n, rr_F_terms(n))


def rr_sum_G(n: int) -> IntPoly:
    """``sum_k (-1)^k q^{k(5k-3)/2} [n; floor((n-1+5k)/2)]``, which equals G_n(q)."""
    return _signed_sum(n, rr_G_terms(n))


def two_term_r(n: int) -> int:
    return (n + 2) // 5


def residue_F_two_term(n: int) -> Residue:
    """The k = +-r terms of the F-sum, r = floor((n+2)/5), reduced mod Phi_n.

    For n >= 3 every other term carries a binomial [n;j] with 0 < j < n,
    which Phi_n divides, so this agrees with the residue of F_{n+1}.  When
    r = 0 (n <= 2) the two terms are the same k = 0 term counted twice.
    """
    if n < 1:
        raise DomainError("n must be positive")
    r = two_term_r(n)
    sign = -1 if r % 2 else 1
    poly = add_shifted(ZERO, q_binom(n, (n - 5 * r) // 2), r * (5 * r + 1) // 2, sign)
    poly = add_shifted(poly, q_binom(n, (n + 5 * r) // 2), r * (5 * r - 1) // 2, sign)
    return residue(poly, n)


@dataclass(frozen=True)
class PanResidueCase:
    """Row of the residue table for G_n mod Phi_n, n = 5m + c."""

    n: int
    m: int
    c: int
    r_of_n: int
    raw_term: IntPoly
    expected: Residue


def pan_expected_residue(n: int) -> PanResidueCase:
    """Closed-form residue of G_n(q) modulo Phi_n from the five-case table.

    ``raw_term`` is the single G-sum term that survives modulo Phi_n,
    ``(-1)^r q^{r(5r-3)/2}`` with k = r(n); ``expected`` is the simplified
    right-hand column.
    """
    if n < 2:
        raise DomainError("the residue table starts at n = 2")
    m, c = divmod(n, 5)
    if c == 0:
        r, expected = 0, ZERO
    elif c == 1:
        r, expected = -m, monomial(m)
    elif c == 2:
        r, expected = -m, monomial(3 * m + 1, -1)
    elif c == 3:
        r, expected = m + 1, monomial(2 * m + 1, -1)
    else:
        r, expected = m + 1, monomial(4 * m + 3)
    raw = ZERO if c == 0 else monomial(r * (5 * r - 3) // 2, -1 if r % 2 else 1)
    return PanResidueCase(n, m, c, r, raw, residue(expected, n))


def ell(m: int, k: int) -> int:
    """``k(5k-3)/2 - C(floor((5(m+k)+1)/2), 2)`` with C(x, 2) = x(x-1)/2 for every integer x."""
    x = (5 * (m + k) + 1) // 2
    return k * (5 * k - 3) // 2 - x * (x - 1) // 2
