"""q-integers, Gaussian binomials, cyclotomic polynomials and the rings Z[q]/(Phi_n)."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import DomainError, ModulusMismatch, ZeroPolynomial
from .polyint import (
    ONE,
    ZERO,
    IntPoly,
    divrem,
    monomial,
    mul,
    unpack_nonneg,
)

__all__ = [
    "q_int",
    "q_binom",
    "q_binom_product",
    "q_binom_product_row",
    "q_binom_row",
    "packed_pascal_rows",
    "packing_width",
    "cyclotomic",
    "divisors",
    "euler_phi",
    "Residue",
    "residue",
    "residue_add",
    "residue_mul",
    "residue_scale",
    "fold_mod_xn_minus_1",
    "cyclo_spectrum",
]


def q_int(n: int, m: int = 1) -> IntPoly:
    """``[n]_{q^m} = 1 + q^m + ... + q^{(n-1)m}``."""
    if n < 1 or m < 1:
        raise DomainError(f"q_int needs n >= 1 and m >= 1, got n={n}, m={m}")
    coeffs = [0] * ((n - 1) * m + 1)
    coeffs[::m] = [1] * n
    return IntPoly._raw(tuple(coeffs))


# ---------------------------------------------------------------------------
# Gaussian binomials


def packing_width(n_max: int) -> int:
    """Byte width large enough for every coefficient of [a;k], a <= n_max.

    The coefficients of [a;k] sum to C(a,k) < 2**a, and the q-Fibonacci
    diagonal sums built on top of them are bounded by F_{a+1} < 2**a as well.
    """
    return (n_max + 1) // 8 + 1


def packed_pascal_rows(n_max: int, width: int, k_limit=None) -> Iterator[tuple[int, list]]:
    """Yield ``(a, row)`` for a = 0..n_max, row[k] = [a;k] packed at ``width`` bytes.

    Rows follow ``[a;k] = [a-1;k-1] + q^k [a-1;k]`` and only two are alive at
    a time.  ``k_limit(a)`` caps the entries kept in row ``a``; entries of
    row ``a`` are exact only if ``k_limit(a) <= k_limit(a-1) + 1``.
    """
    bits = 8 * width
    row = [1]
    yield 0, row
    for a in range(1, n_max + 1):
        kmax = a if k_limit is None else min(a, k_limit(a))
        if kmax < 0:
            row = []
            yield a, row
            continue
        new = [1] * (kmax + 1)
        prev_len = len(row)
        for k in range(1, kmax + 1):
            left = row[k - 1] if k - 1 < prev_len else 0
            right = row[k] if k < prev_len else 0
            if k == a:
                new[k] = 1
            else:
                new[k] = left + (right << (k * bits))
        row = new
        yield a, row


def q_binom_row(n: int) -> list:
    """All Gaussian binomials ``[n;0], ..., [n;n]`` as polynomials."""
    if n < 0:
        return []
    width = packing_width(n)
    half = n // 2
    row = None
    for a, packed in packed_pascal_rows(n, width, k_limit=lambda a: half):
        row = packed
    out = [IntPoly._raw(tuple(unpack_nonneg(v, width))) for v in row[: half + 1]]
    return out + out[: n - half][::-1]


@lru_cache(maxsize=4096)
def q_binom(n: int, k: int) -> IntPoly:
    """Gaussian binomial ``[n;k]``; zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return ZERO
    k = min(k, n - k)
    if k == 0:
        return ONE
    width = packing_width(n)
    row = None
    for _, row in packed_pascal_rows(n, width, k_limit=lambda a: k):
        pass
    return IntPoly._raw(tuple(unpack_nonneg(row[k], width)))


def q_binom_product_row(n: int, k_max: int | None = None) -> list:
    """``[n;0], ..., [n;k_max]`` from the product formula, one factor at a time.

    ``[n;j] = [n;j-1] * [n-j+1] / [j]`` and ``1/[j] = (q-1)/(q^j-1)``; every
    division is checked to be exact.
    """
    if n < 0:
        return []
    k_max = n if k_max is None else min(k_max, n)
    out = [ONE]
    cur = ONE
    q_minus_1 = IntPoly((-1, 1))
    for j in range(1, k_max + 1):
        num = mul(mul(cur, q_int(n - j + 1)), q_minus_1)
        cur, rem = divrem(num, monomial(j) - ONE)
        if rem:
            raise ArithmeticError(f"[{n};{j}] product formula left a remainder")
        out.append(cur)
    return out


def q_binom_product(n: int, k: int) -> IntPoly:
    """``[n]...[n-k+1] / ([1]...[k])`` by exact polynomial division."""
    if k < 0 or n < 0 or k > n:
        return ZERO
    return q_binom_product_row(n, min(k, n - k))[-1]


# ---------------------------------------------------------------------------
# cyclotomic polynomials


def divisors(n: int) -> list:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


_cyclo_lock = threading.RLock()


@lru_cache(maxsize=None)
def _cyclotomic_cached(n: int) -> IntPoly:
    poly = monomial(n) - ONE
    for d in divisors(n)[:-1]:
        poly, rem = divrem(poly, cyclotomic(d))
        if rem:
            raise ArithmeticError(f"Phi_{d} does not divide q^{n} - 1")
    return poly


def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, via ``(q^n - 1) / prod_{d|n, d<n} Phi_d``."""
    if n < 1:
        raise DomainError(f"cyclotomic index must be positive, got {n}")
    with _cyclo_lock:
        return _cyclotomic_cached(n)


# ---------------------------------------------------------------------------
# residues mod Phi_n


@dataclass(frozen=True)
class Residue:
    """Class of a polynomial in Z[q]/(Phi_n), i.e. its value at a primitive n-th root of unity."""

    modulus_index: int
    value: IntPoly

    def __post_init__(self):
        if self.modulus_index < 1:
            raise DomainError("modulus index must be positive")
        if len(self.value) > euler_phi(self.modulus_index):
            raise ValueError("residue value is not reduced")

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def __mul__(self, other):
        if isinstance(other, Residue):
            return residue_mul(self, other)
        if isinstance(other, int):
            return residue_scale(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other):
        if isinstance(other, Residue):
            return residue_add(self, other)
        return NotImplemented

    def __neg__(self):
        return residue_scale(self, -1)


def fold_mod_xn_minus_1(a: IntPoly, n: int) -> IntPoly:
    """Reduce ``a`` modulo ``q^n - 1`` (a multiple of Phi_n)."""
    c = a.coeffs
    if len(c) <= n:
        return a
    return IntPoly([sum(c[j::n]) for j in range(n)])


def residue(a: IntPoly, n: int) -> Residue:
    """Canonical remainder of ``a`` modulo Phi_n."""
    if isinstance(a, int):
        a = IntPoly.const(a)
    folded = fold_mod_xn_minus_1(a, n)
    _, rem = divrem(folded, cyclotomic(n))
    return Residue(n, rem)


def _check_same(a: Residue, b: Residue) -> int:
    if a.modulus_index != b.modulus_index:
        raise ModulusMismatch(f"cannot combine residues mod Phi_{a.modulus_index} and Phi_{b.modulus_index}")
    return a.modulus_index


def residue_add(a: Residue, b: Residue) -> Residue:
    n = _check_same(a, b)
    return Residue(n, a.value + b.value)


def residue_mul(a: Residue, b: Residue) -> Residue:
    n = _check_same(a, b)
    return residue(mul(a.value, b.value), n)


def residue_scale(a: Residue, c: int) -> Residue:
    return Residue(a.modulus_index, a.value * c)


def cyclo_spectrum(a: IntPoly, max_d: int) -> set:
    """Indices ``d <= max_d`` with Phi_d dividing ``a`` exactly."""
    if a.is_zero():
        raise ZeroPolynomial("every cyclotomic polynomial divides zero")
    return {d for d in range(1, max_d + 1) if residue(a, d).is_zero()}
