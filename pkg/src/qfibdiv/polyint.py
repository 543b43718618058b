"""Dense univariate polynomials over the integers.

An :class:`IntPoly` stores its coefficients in ascending degree order as a
tuple of Python ints, so coefficients never overflow.  The zero polynomial is
the empty tuple.  Values are immutable and hashable.

Large products use Kronecker substitution: both operands are packed into a
single big integer, multiplied by CPython's native big-int multiply and
unpacked again.  The packing helpers are also used by :mod:`qfibdiv.qcore`
for the q-Pascal triangle, where every coefficient is nonnegative.
"""

from __future__ import annotations

import re
from functools import total_ordering
from typing import Iterable, Sequence

from .errors import DivisionByZero, NonUnitLeadingCoefficient, ParseError

__all__ = [
    "IntPoly",
    "MINUS_INFINITY",
    "add",
    "sub",
    "neg",
    "mul",
    "shift",
    "add_shifted",
    "divrem",
    "evaluate_int",
    "reduce_coeffs_mod",
    "serialize",
    "parse",
    "pretty",
    "monomial",
    "pack_nonneg",
    "unpack_nonneg",
]


@total_ordering
class _MinusInfinity:
    """Degree of the zero polynomial; compares below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("-inf-degree")

    def __repr__(self):
        return "-inf"


MINUS_INFINITY = _MinusInfinity()


def _normalize(coeffs: Sequence[int]) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class IntPoly:
    """Immutable dense polynomial in ``q`` with integer coefficients."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = list(coeffs)
        for c in coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficient {c!r} is not an int")
        object.__setattr__(self, "coeffs", _normalize(coeffs))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, coeffs: tuple) -> "IntPoly":
        # caller guarantees a normalized tuple of ints
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        object.__setattr__(p, "_hash", None)
        return p

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls._raw((c,) if c else ())

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    def __reduce__(self):
        return (IntPoly, (self.coeffs,))

    @property
    def degree(self):
        """Degree, or :data:`MINUS_INFINITY` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int) and not isinstance(other, bool):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.coeffs)
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        return pretty(self)

    def __add__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else sub(self, other)

    def __rsub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else sub(other, self)

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while e:
            if e & 1:
                result = mul(result, base)
            e >>= 1
            if e:
                base = mul(base, base)
        return result

    def __divmod__(self, other):
        return divrem(self, _coerce(other))

    def __floordiv__(self, other):
        return divrem(self, _coerce(other))[0]

    def __mod__(self, other):
        return divrem(self, _coerce(other))[1]

    def __call__(self, x: int) -> int:
        return evaluate_int(self, x)


def _coerce(x):
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return IntPoly.const(x)
    return None


ZERO = IntPoly()
ONE = IntPoly((1,))
Q = IntPoly((0, 1))


def monomial(e: int, c: int = 1) -> IntPoly:
    """Return ``c*q**e``."""
    if e < 0:
        raise ValueError("negative exponent")
    if not c:
        return ZERO
    return IntPoly._raw((0,) * e + (c,))


def add(a: IntPoly, b: IntPoly) -> IntPoly:
    x, y = a.coeffs, b.coeffs
    if len(x) < len(y):
        x, y = y, x
    if not y:
        return a if x is a.coeffs else b
    out = list(x)
    out[: len(y)] = map(int.__add__, x, y)
    return IntPoly._raw(_normalize(out))


def neg(a: IntPoly) -> IntPoly:
    return IntPoly._raw(tuple(-c for c in a.coeffs))


def sub(a: IntPoly, b: IntPoly) -> IntPoly:
    x, y = a.coeffs, b.coeffs
    if not y:
        return a
    if len(x) >= len(y):
        out = list(x)
        out[: len(y)] = map(int.__sub__, x, y)
    else:
        out = [-c for c in y]
        out[: len(x)] = map(int.__sub__, x, y)
    return IntPoly._raw(_normalize(out))


def shift(a: IntPoly, e: int) -> IntPoly:
    """Return ``a * q**e``."""
    if e < 0:
        raise ValueError("shift exponent must be nonnegative")
    if not a.coeffs or e == 0:
        return a
    return IntPoly._raw((0,) * e + a.coeffs)


def add_shifted(a: IntPoly, b: IntPoly, e: int, c: int = 1) -> IntPoly:
    """Return ``a + c * q**e * b`` without materialising the shifted term."""
    if e < 0:
        raise ValueError("shift exponent must be nonnegative")
    y = b.coeffs
    if not y or not c:
        return a
    x = a.coeffs
    end = e + len(y)
    out = list(x)
    if len(out) < end:
        out.extend([0] * (end - len(out)))
    if c == 1:
        out[e:end] = map(int.__add__, out[e:end], y)
    elif c == -1:
        out[e:end] = map(int.__sub__, out[e:end], y)
    else:
        out[e:end] = [u + c * v for u, v in zip(out[e:end], y)]
    return IntPoly._raw(_normalize(out))


# ---------------------------------------------------------------------------
# Kronecker packing


def pack_nonneg(coeffs: Sequence[int], width: int) -> int:
    """Pack nonnegative coefficients below ``2**(8*width)`` into one int."""
    return int.from_bytes(b"".join(c.to_bytes(width, "little") for c in coeffs), "little")


def unpack_nonneg(value: int, width: int, length: int | None = None) -> list:
    """Inverse of :func:`pack_nonneg`; trailing zeros are dropped."""
    if value < 0:
        raise ValueError("packed value is negative")
    nbytes = (value.bit_length() + 7) // 8
    count = -(-nbytes // width)
    if length is not None:
        count = max(count, length)
    data = value.to_bytes(count * width, "little")
    frm = int.from_bytes
    out = [frm(data[i : i + width], "little") for i in range(0, count * width, width)]
    while out and not out[-1]:
        out.pop()
    return out


def _pack_signed(coeffs: Sequence[int], width: int) -> int:
    if all(c >= 0 for c in coeffs):
        return pack_nonneg(coeffs, width)
    pos = pack_nonneg([c if c > 0 else 0 for c in coeffs], width)
    negs = pack_nonneg([-c if c < 0 else 0 for c in coeffs], width)
    return pos - negs


def _unpack_signed(value: int, width: int) -> list:
    # digits are balanced: each coefficient has |c| < 2**(8*width - 1)
    if value < 0:
        return [-c for c in _unpack_signed(-value, width)]
    digits = unpack_nonneg(value, width)
    bits = 8 * width
    half = 1 << (bits - 1)
    full = 1 << bits
    out = []
    carry = 0
    for d in digits:
        d += carry
        if d >= half:
            out.append(d - full)
            carry = 1
        else:
            out.append(d)
            carry = 0
    if carry:
        out.append(carry)
    return out


_SCHOOLBOOK_LIMIT = 1500


def _mul_schoolbook(x: tuple, y: tuple) -> list:
    out = [0] * (len(x) + len(y) - 1)
    for i, c in enumerate(x):
        if c:
            for j, d in enumerate(y):
                out[i + j] += c * d
    return out


def mul(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact product; bit-identical whichever algorithm is selected."""
    x, y = a.coeffs, b.coeffs
    if not x or not y:
        return ZERO
    if len(x) == 1:
        c = x[0]
        return IntPoly._raw(tuple(c * d for d in y))
    if len(y) == 1:
        c = y[0]
        return IntPoly._raw(tuple(c * d for d in x))
    if len(x) * len(y) <= _SCHOOLBOOK_LIMIT:
        return IntPoly._raw(_normalize(_mul_schoolbook(x, y)))
    return IntPoly._raw(_normalize(_mul_kronecker(x, y)))


def _mul_kronecker(x: Sequence[int], y: Sequence[int]) -> list:
    mx = max(abs(c) for c in x)
    my = max(abs(c) for c in y)
    bits = mx.bit_length() + my.bit_length() + min(len(x), len(y)).bit_length() + 2
    width = (bits + 7) // 8
    prod = _pack_signed(x, width) * _pack_signed(y, width)
    return _unpack_signed(prod, width)


def divrem(a: IntPoly, d: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Euclidean division by a divisor whose leading coefficient is +1 or -1."""
    dc = d.coeffs
    if not dc:
        raise DivisionByZero("division by the zero polynomial")
    lead = dc[-1]
    if lead not in (1, -1):
        raise NonUnitLeadingCoefficient(f"leading coefficient {lead} is not a unit")
    dd = len(dc) - 1
    r = list(a.coeffs)
    if len(r) <= dd:
        return ZERO, a
    # only the nonzero lower terms of d take part in the elimination
    terms = [(i, c) for i, c in enumerate(dc[:-1]) if c]
    nq = len(r) - dd
    quot = [0] * nq
    for top in range(len(r) - 1, dd - 1, -1):
        c = r[top]
        if not c:
            continue
        if lead == -1:
            c = -c
        base = top - dd
        quot[base] = c
        for i, di in terms:
            r[base + i] -= c * di
    return IntPoly._raw(_normalize(quot)), IntPoly._raw(_normalize(r[:dd]))


def evaluate_int(a: IntPoly, x: int) -> int:
    """Horner evaluation at an integer point."""
    if x == 1:
        return sum(a.coeffs)
    acc = 0
    for c in reversed(a.coeffs):
        acc = acc * x + c
    return acc


def reduce_coeffs_mod(a: IntPoly, m: int) -> IntPoly:
    """Reduce every coefficient to its least nonnegative residue mod ``m``."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    return IntPoly([c % m for c in a.coeffs])


# ---------------------------------------------------------------------------
# text formats


def serialize(a: IntPoly) -> str:
    return "[" + ",".join(str(c) for c in a.coeffs) + "]"


_TOKEN = re.compile(r'\s*(?:(\[)|(\])|(,)|(-?\d+)|"(-?\d+)")')


def parse(text: str) -> IntPoly:
    """Parse ``[1,0,1]`` (bare or quoted decimal integers) into a polynomial."""
    pos = 0
    n = len(text)

    def token():
        nonlocal pos
        m = _TOKEN.match(text, pos)
        if m is None:
            while pos < n and text[pos].isspace():
                pos += 1
            raise ParseError("unexpected character" if pos < n else "unexpected end of input", pos)
        start = m.start(m.lastindex)
        pos = m.end()
        return m.lastindex, m.group(m.lastindex), start

    kind, _, start = token()
    if kind != 1:
        raise ParseError("expected '['", start)
    coeffs = []
    kind, val, start = token()
    if kind != 2:
        while True:
            if kind not in (4, 5):
                raise ParseError("expected an integer", start)
            coeffs.append(int(val))
            kind, val, start = token()
            if kind == 2:
                break
            if kind != 3:
                raise ParseError("expected ',' or ']'", start)
            kind, val, start = token()
    rest = text[pos:]
    if rest.strip():
        raise ParseError("trailing characters", pos + len(rest) - len(rest.lstrip()))
    return IntPoly(coeffs)


def pretty(a: IntPoly, var: str = "q") -> str:
    """Human-readable form, ascending terms: ``1 - 2*q + q^3``."""
    if not a.coeffs:
        return "0"
    parts = []
    for e, c in enumerate(a.coeffs):
        if not c:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            power = var if e == 1 else f"{var}^{e}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)
