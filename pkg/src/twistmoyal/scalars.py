"""Exact scalars in Q(i, sqrt 2).

Coordinate changes between (x1, x2) and (a, abar) bring in factors of i and
1/sqrt(2).  Everything the engine stores lives in the field Q(i)(sqrt 2), so a
scalar is kept as four rationals::

    re + im*i + (re2 + im2*i) * sqrt(2)
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot build an exact rational from {x!r}")


def _cmul(a, b, c, d):
    # (a + bi)(c + di)
    return a * c - b * d, a * d + b * c


class Number:
    """An element of Q(i, sqrt 2); immutable and hashable."""

    __slots__ = ("re", "im", "re2", "im2", "_hash")

    def __init__(self, re=0, im=0, re2=0, im2=0):
        self.re = _frac(re)
        self.im = _frac(im)
        self.re2 = _frac(re2)
        self.im2 = _frac(im2)
        self._hash = None

    # -- construction -----------------------------------------------------

    @classmethod
    def coerce(cls, x) -> Number:
        if isinstance(x, Number):
            return x
        if isinstance(x, complex):
            raise TypeError("floating complex values are not exact")
        return cls(_frac(x))

    @property
    def parts(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.re, self.im, self.re2, self.im2)

    def is_zero(self) -> bool:
        return not (self.re or self.im or self.re2 or self.im2)

    def is_rational(self) -> bool:
        return not (self.im or self.re2 or self.im2)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Number):
            try:
                other = Number.coerce(other)
            except TypeError:
                return NotImplemented
        return Number(self.re + other.re, self.im + other.im,
                      self.re2 + other.re2, self.im2 + other.im2)

    __radd__ = __add__

    def __neg__(self):
        return Number(-self.re, -self.im, -self.re2, -self.im2)

    def __sub__(self, other):
        if not isinstance(other, Number):
            try:
                other = Number.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Number):
            try:
                other = Number.coerce(other)
            except TypeError:
                return NotImplemented
        if self.is_rational():
            r = self.re
            return Number(r * other.re, r * other.im, r * other.re2, r * other.im2)
        if other.is_rational():
            r = other.re
            return Number(r * self.re, r * self.im, r * self.re2, r * self.im2)
        # (x1 + y1 s)(x2 + y2 s) with s^2 = 2
        x1 = (self.re, self.im)
        y1 = (self.re2, self.im2)
        x2 = (other.re, other.im)
        y2 = (other.re2, other.im2)
        xx = _cmul(*x1, *x2)
        yy = _cmul(*y1, *y2)
        xy = _cmul(*x1, *y2)
        yx = _cmul(*y1, *x2)
        return Number(xx[0] + 2 * yy[0], xx[1] + 2 * yy[1],
                      xy[0] + yx[0], xy[1] + yx[1])

    __rmul__ = __mul__

    def inverse(self) -> Number:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return Number(1 / self.re)
        # 1/(x + y s) = (x - y s) / (x^2 - 2 y^2)
        x = (self.re, self.im)
        y = (self.re2, self.im2)
        xx = _cmul(*x, *x)
        yy = _cmul(*y, *y)
        nr, ni = xx[0] - 2 * yy[0], xx[1] - 2 * yy[1]
        den = nr * nr + ni * ni
        inv = (nr / den, -ni / den)
        conj = Number(self.re, self.im, -self.re2, -self.im2)
        return conj * Number(inv[0], inv[1])

    def __truediv__(self, other):
        if not isinstance(other, Number):
            try:
                other = Number.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Number.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> Number:
        """Complex conjugation (sqrt 2 is real)."""
        return Number(self.re, -self.im, self.re2, -self.im2)

    # -- comparison / conversion -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Number):
            return self.parts == other.parts
        try:
            return self.parts == Number.coerce(other).parts
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.parts)
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self):
        s = math.sqrt(2.0)
        return complex(float(self.re) + s * float(self.re2),
                       float(self.im) + s * float(self.im2))

    def __repr__(self):
        return f"Number({self})"

    def __str__(self):
        return format_number(self)


ZERO = Number(0)
ONE = Number(1)
I = Number(0, 1)
SQRT2 = Number(0, 0, 1)
INV_SQRT2 = Number(0, 0, Fraction(1, 2))


def _fmt_frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_number(x: Number) -> str:
    """Canonical text: ``3/2`` for rationals, otherwise a parenthesized sum of
    the parts ``q``, ``q*i``, ``q*r2``, ``q*i*r2``."""
    if x.is_rational():
        return _fmt_frac(x.re)
    pieces = []
    for value, suffix in zip(x.parts, ("", "*i", "*r2", "*i*r2")):
        if value:
            pieces.append(_fmt_frac(value) + suffix)
    return "(" + " + ".join(pieces) + ")"


def parse_number(text: str) -> Number:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    parts = [_ZERO, _ZERO, _ZERO, _ZERO]
    for piece in text.split("+"):
        piece = piece.strip()
        if not piece:
            continue
        factors = piece.split("*")
        value = Fraction(factors[0])
        flags = set(factors[1:])
        if not flags <= {"i", "r2"}:
            raise ValueError(f"bad scalar factor in {piece!r}")
        idx = (1 if "i" in flags else 0) + (2 if "r2" in flags else 0)
        parts[idx] += value
    return Number(*parts)
