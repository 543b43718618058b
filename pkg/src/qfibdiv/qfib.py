"""The Schur-Carlitz q-Fibonacci pair and the four-term family f_r, plus integer Fibonacci helpers.

Three families are supported:

* ``SCHUR_F``: F_n(q) = F_{n-1}(q) + q^{n-2} F_{n-2}(q), F_0 = 0, F_1 = 1
* ``SCHUR_G``: G_n(q) = G_{n-1}(q) + q^{n-1} G_{n-2}(q), G_0 = 0, G_1 = 1
* ``four_term(r)``: f_r(n,q) from the four-term recurrence, r >= 0

Each has a recurrence route (:func:`fib`) and an independent direct-sum route
(:func:`fib_sum`, :func:`fib_sum_range`) through Gaussian binomials.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError
from .polyint import ONE, ZERO, IntPoly, add_shifted, mul, sub, unpack_nonneg
from .qcore import packed_pascal_rows

__all__ = [
    "FamilyId",
    "SCHUR_F",
    "SCHUR_G",
    "four_term",
    "parse_family",
    "fib",
    "fib_sum",
    "fib_sum_range",
    "fib_sum_ranges",
    "clear_cache",
    "FibMatrix",
    "matrix_product",
    "cassini",
    "int_fib",
    "vp",
]


@dataclass(frozen=True, order=True)
class FamilyId:
    kind: str
    r: int = 0

    def __post_init__(self):
        if self.kind not in ("F", "G", "f"):
            raise DomainError(f"unknown family kind {self.kind!r}")
        if self.kind == "f" and self.r < 0:
            raise DomainError(
                f"f_r is only supported for r >= 0 (got r={self.r}); negative r needs Laurent polynomials"
            )
        if self.kind != "f" and self.r != 0:
            raise DomainError("r only applies to the f_r family")

    def __str__(self):
        return f"f_{self.r}" if self.kind == "f" else self.kind

    def sum_exponent(self, k: int) -> int:
        """Power of q multiplying [n-1-k; k] in the defining sum."""
        if self.kind == "F":
            return k * k
        if self.kind == "G":
            return k * k + k
        return k * (k - 1) // 2 + 2 * self.r * k


SCHUR_F = FamilyId("F")
SCHUR_G = FamilyId("G")


def four_term(r: int = 0) -> FamilyId:
    return FamilyId("f", r)


def parse_family(name: str, r: int = 0) -> FamilyId:
    """Map CLI spellings (``F``, ``G``, ``fr``/``f``) onto a :class:`FamilyId`."""
    key = name.strip()
    if key in ("F", "SchurF"):
        return SCHUR_F
    if key in ("G", "SchurG"):
        return SCHUR_G
    if key in ("f", "fr"):
        return four_term(r)
    raise DomainError(f"unknown family {name!r}; expected F, G or fr")


# ---------------------------------------------------------------------------
# recurrence route

_cache: dict = {}
_cache_lock = threading.Lock()


def _initial(family: FamilyId) -> list:
    if family.kind == "f":
        r2 = 2 * family.r
        one_q2r = IntPoly([1] + [0] * (r2 - 1) + [1]) if r2 else IntPoly([2])
        return [ZERO, ONE, ONE, one_q2r, add_shifted(one_q2r, ONE, 1 + r2)]
    return [ZERO, ONE]


def _next(family: FamilyId, seq: list, n: int) -> IntPoly:
    if family.kind == "F":
        return add_shifted(seq[n - 1], seq[n - 2], n - 2)
    if family.kind == "G":
        return add_shifted(seq[n - 1], seq[n - 2], n - 1)
    r = family.r
    step = add_shifted(seq[n - 1], seq[n - 3], n - 3 + 2 * r)
    return add_shifted(step, seq[n - 4], n - 4 + 4 * r)


def fib(family: FamilyId, n: int) -> IntPoly:
    """n-th member of ``family`` by its recurrence; the computed prefix is cached."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    with _cache_lock:
        seq = _cache.get(family)
        if seq is None:
            seq = _cache[family] = _initial(family)
        while len(seq) <= n:
            seq.append(_next(family, seq, len(seq)))
        return seq[n]


def clear_cache(family: FamilyId | None = None) -> None:
    """Drop cached prefixes (all families if ``family`` is None)."""
    with _cache_lock:
        if family is None:
            _cache.clear()
        else:
            _cache.pop(family, None)


# ---------------------------------------------------------------------------
# direct-sum route


def fib_sum_ranges(families, n_max: int) -> Iterator[tuple[int, dict]]:
    """Yield ``(n, {family: sum_k q^{e(k)} [n-1-k; k]})`` for n = 0..n_max in order.

    One pass over the q-Pascal triangle feeds every n and every family at
    once: entry [a;k] belongs to n = a + k + 1, and the sums for n are
    complete once row n-1 has been visited.  Accumulators stay packed until
    then.  Only entries with a + k < n_max are built; those are bounded by
    C(a, k) <= F_{a+k+1} <= F_{n_max}, which fixes the packing width.
    """
    families = tuple(families)
    if n_max < 0:
        return
    yield 0, {fam: ZERO for fam in families}
    if n_max == 0:
        return
    width = int_fib(n_max).bit_length() // 8 + 1
    bits = 8 * width
    accs = {fam: [0] * (n_max + 1) for fam in families}
    top = n_max - 1
    for a, row in packed_pascal_rows(top, width, k_limit=lambda a: top - a):
        n = a + 1
        out = {}
        for fam, acc in accs.items():
            expo = fam.sum_exponent
            for k, entry in enumerate(row):
                acc[n + k] += entry << (expo(k) * bits)
            out[fam] = IntPoly._raw(tuple(unpack_nonneg(acc[n], width)))
            acc[n] = 0
        yield n, out


def fib_sum_range(family: FamilyId, n_max: int) -> Iterator[tuple[int, IntPoly]]:
    """Yield ``(n, fib_sum(family, n))`` for n = 0..n_max in one pass."""
    for n, polys in fib_sum_ranges((family,), n_max):
        yield n, polys[family]


def fib_sum(family: FamilyId, n: int) -> IntPoly:
    """n-th member of ``family`` straight from its defining sum."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    result = ZERO
    for m, poly in fib_sum_range(family, n):
        if m == n:
            result = poly
    return result


# ---------------------------------------------------------------------------
# matrix form and Cassini


@dataclass(frozen=True)
class FibMatrix:
    a11: IntPoly
    a12: IntPoly
    a21: IntPoly
    a22: IntPoly

    def rows(self):
        return ((self.a11, self.a12), (self.a21, self.a22))

    def __matmul__(self, other: "FibMatrix") -> "FibMatrix":
        return FibMatrix(
            mul(self.a11, other.a11) + mul(self.a12, other.a21),
            mul(self.a11, other.a12) + mul(self.a12, other.a22),
            mul(self.a21, other.a11) + mul(self.a22, other.a21),
            mul(self.a21, other.a12) + mul(self.a22, other.a22),
        )


def _A(e: int) -> FibMatrix:
    return FibMatrix(ONE, IntPoly.const(1) if e == 0 else IntPoly([0] * e + [1]), ONE, ZERO)


def matrix_product(n: int) -> FibMatrix:
    """``A(q^{n-1}) A(q^{n-2}) ... A(q) A(1)`` with ``A(x) = [[1, x], [1, 0]]``.

    Multiplied left to right.  Right-multiplying by A(q^e) only adds columns
    and shifts, so the general 2x2 product is not needed.
    """
    if n < 1:
        raise DomainError("matrix_product needs n >= 1")
    m = _A(n - 1)
    for e in range(n - 2, -1, -1):
        # [[a, b], [c, d]] @ [[1, q^e], [1, 0]] = [[a + b, q^e a], [c + d, q^e c]]
        m = FibMatrix(m.a11 + m.a12, add_shifted(ZERO, m.a11, e), m.a21 + m.a22, add_shifted(ZERO, m.a21, e))
    return m


def cassini(n: int) -> IntPoly:
    """Left-hand side ``F_{n+1} G_{n-1} - F_n G_n``."""
    if n < 1:
        raise DomainError("cassini needs n >= 1")
    return sub(
        mul(fib(SCHUR_F, n + 1), fib(SCHUR_G, n - 1)),
        mul(fib(SCHUR_F, n), fib(SCHUR_G, n)),
    )


# ---------------------------------------------------------------------------
# integers


def int_fib(n: int) -> int:
    if n < 0:
        raise DomainError("n must be nonnegative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def vp(x: int, p: int) -> int:
    """p-adic valuation of a positive integer."""
    if x == 0:
        raise DomainError("the valuation of 0 is infinite")
    if p < 2:
        raise DomainError("p must be at least 2")
    x = abs(x)
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e
