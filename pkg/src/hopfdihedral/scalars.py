"""Gaussian rationals Q[i] with complex conjugation, and the deformation parameter.

>>> Scalar(0, 1) * Scalar(0, 1)
Scalar(-1)
>>> Scalar(1, 1) / Scalar(1, -1)
Scalar(0, 1)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt


_ZF = Fraction(0)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"not a rational: {x!r}")


class Scalar:
    """An element re + im*i of Q[i]. Immutable and hashable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "Scalar":
        # skips validation; both parts must already be Fractions
        s = object.__new__(cls)
        object.__setattr__(s, "re", re)
        object.__setattr__(s, "im", im)
        return s

    @staticmethod
    def coerce(x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, complex):
            raise TypeError("floating complex numbers are not exact")
        return Scalar(x)

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        o = Scalar.coerce(other)
        return Scalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __sub__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        o = Scalar.coerce(other)
        return Scalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        if other is ONE:
            return self
        if self is ONE and isinstance(other, Scalar):
            return other
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        o = Scalar.coerce(other)
        if not self.im and not o.im:
            return Scalar._raw(self.re * o.re, _ZF)
        return Scalar._raw(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("division by the zero scalar")
        if not self.im:
            return Scalar(1 / self.re)
        n = self.norm()
        return Scalar(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return self * Scalar.coerce(other).inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out, base = Scalar(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conj(self) -> "Scalar":
        return Scalar(self.re, -self.im) if self.im else self

    # comparison and hashing
    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im)) if self.im else hash(self.re)

    def is_real(self) -> bool:
        return not self.im

    def is_positive_real(self) -> bool:
        return not self.im and self.re > 0

    def __repr__(self):
        if self.im:
            return f"Scalar({self.re}, {self.im})"
        return f"Scalar({self.re})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im} i"
        sign = "-" if self.im < 0 else "+"
        return f"{self.re} {sign} {abs(self.im)} i"


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


_RAT = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse "p/r" or "p" into a Fraction."""
    m = _RAT.match(text)
    if not m:
        raise ValueError(f"not a rational: {text!r}")
    num, den = m.group(1), m.group(2) or "1"
    if int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den))


def parse_scalar(text: str) -> Scalar:
    """Parse "p/r + p'/r' i", "p/r", or "p'/r' i" into a Scalar."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    if not s.endswith("i"):
        return Scalar(parse_rational(s))
    body = s[:-1]
    # split off the imaginary coefficient at the last sign not in front
    cut = max(body.rfind("+"), body.rfind("-"))
    if cut <= 0:
        re_part, im_part = "0", body
    else:
        re_part, im_part = body[:cut], body[cut:]
    if im_part in ("", "+"):
        im_part = "1"
    elif im_part == "-":
        im_part = "-1"
    return Scalar(parse_rational(re_part), parse_rational(im_part))


def rational_sqrt(x: Fraction):
    """Exact square root of a non-negative rational, or None."""
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class QParam:
    """A validated rational deformation parameter.

    root is sqrt(1+q^2) and root_inv is sqrt(1+q^-2) = root/|q|, present
    only when requested.
    """

    q: Fraction
    root: Fraction | None = None
    root_inv: Fraction | None = None

    @property
    def s(self) -> Scalar:
        return Scalar(self.q)

    def as_text(self) -> str:
        return str(self.q)


def make_qparam(q, need_root: bool = False) -> QParam:
    q = _frac(q) if not isinstance(q, str) else parse_rational(q)
    if q == 0:
        raise ValueError("q must be nonzero")
    if q ** 4 == 1:
        raise ValueError("q^4 must differ from 1")
    if not need_root:
        return QParam(q)
    r = rational_sqrt(1 + q * q)
    if r is None:
        raise ValueError(
            f"1+q^2 is not a rational square for q={q}; admissible values are the "
            "Pythagorean family q = a/b with a^2+b^2 a perfect square (e.g. 3/4, 5/12)"
        )
    return QParam(q, r, r / abs(q))
