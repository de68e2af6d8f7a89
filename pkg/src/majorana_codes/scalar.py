"""Exact complex-rational numbers (Gaussian rationals)."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Union

ScalarLike = Union["Scalar", int, Fraction]


class Scalar:
    """``re + im*i`` with both parts :class:`fractions.Fraction`."""

    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction | str = 0, im: int | Fraction | str = 0) -> None:
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, value: ScalarLike | complex) -> Scalar:
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Rational)):
            return cls(Fraction(value))
        if isinstance(value, complex):
            raise TypeError("floating-point complex values are not exact")
        raise TypeError(f"cannot convert {value!r} to Scalar")

    @classmethod
    def i_power(cls, k: int) -> Scalar:
        return _I_POWERS[k % 4]

    def times_i_power(self, k: int) -> Scalar:
        """Multiply by ``i**k`` without rational arithmetic."""
        k %= 4
        if k == 0:
            return self
        if k == 1:
            return Scalar(-self.im, self.re)
        if k == 2:
            return Scalar(-self.re, -self.im)
        return Scalar(self.im, -self.re)

    def conjugate(self) -> Scalar:
        return Scalar(self.re, -self.im)

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other: ScalarLike) -> Scalar:
        o = Scalar.coerce(other)
        return Scalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> Scalar:
        o = Scalar.coerce(other)
        return Scalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: ScalarLike) -> Scalar:
        return Scalar.coerce(other) - self

    def __neg__(self) -> Scalar:
        return Scalar(-self.re, -self.im)

    def __mul__(self, other: ScalarLike) -> Scalar:
        o = Scalar.coerce(other)
        if not o.im:
            return Scalar(self.re * o.re, self.im * o.re)
        return Scalar(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> Scalar:
        o = Scalar.coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("Scalar division by zero")
        den = o.re * o.re + o.im * o.im
        num = self * o.conjugate()
        return Scalar(num.re / den, num.im / den)

    def __rtruediv__(self, other: ScalarLike) -> Scalar:
        return Scalar.coerce(other) / self

    def __pow__(self, n: int) -> Scalar:
        if n < 0:
            return Scalar(1) / (self ** -n)
        result = Scalar(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"Scalar({self})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"

    def signed_str(self) -> str:
        """Both parts with explicit signs, e.g. ``+1/2-3*i``."""
        return f"{_signed(self.re)}{_signed(self.im)}*i"

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def decimal_str(self, digits: int = 12) -> str:
        if not self.im:
            return f"{float(self.re):.{digits}g}"
        return f"{float(self.re):.{digits}g}{float(self.im):+.{digits}g}j"


def _signed(q: Fraction) -> str:
    return f"+{q}" if q >= 0 else str(q)


_I_POWERS = (Scalar(1), Scalar(0, 1), Scalar(-1), Scalar(0, -1))

_RAT = r"[+-]?\d+(?:/\d+)?"


def parse_scalar(text: str) -> Scalar:
    """Parse ``3/2``, ``-1/2*i``, ``1+1/2*i``, ``+1/2-3*i`` or ``i``."""
    s = text.strip().replace(" ", "")
    m = re.fullmatch(rf"(?P<re>{_RAT})(?P<im>[+-](?:\d+(?:/\d+)?)?)\*?i", s)
    if m:
        return Scalar(Fraction(m["re"]), _imag_part(m["im"]))
    m = re.fullmatch(rf"(?P<im>[+-]?(?:\d+(?:/\d+)?)?)\*?i", s)
    if m:
        return Scalar(0, _imag_part(m["im"]))
    if re.fullmatch(_RAT, s):
        return Scalar(Fraction(s))
    raise ValueError(f"not an exact scalar: {text!r}")


def _imag_part(text: str) -> Fraction:
    if text in ("", "+"):
        return Fraction(1)
    if text == "-":
        return Fraction(-1)
    return Fraction(text)
