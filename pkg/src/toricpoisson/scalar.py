"""Exact Gaussian rationals ``a + b*i`` with ``a, b`` in Q."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

__all__ = ["Scalar", "ZERO", "ONE", "I", "as_scalar", "parse_scalar"]


class Scalar:
    """An element of Q(i).

    Both parts are :class:`fractions.Fraction`, so they are always held in
    lowest terms and arithmetic never rounds.
    """

    __slots__ = ("re", "im", "_hash")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)
        self._hash = None

    @classmethod
    def _make(cls, re: Fraction, im: Fraction) -> "Scalar":
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        obj._hash = None
        return obj

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return Scalar._make(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return Scalar._make(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return Scalar._make(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.re, self.im, o.re, o.im
        if not b and not d:
            return Scalar._make(a * c, b)
        return Scalar._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __neg__(self):
        return Scalar._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def inverse(self) -> "Scalar":
        a, b = self.re, self.im
        if not b:
            if not a:
                raise ZeroDivisionError("Scalar division by zero")
            return Scalar._make(1 / a, b)
        norm = a * a + b * b
        return Scalar._make(a / norm, -b / norm)

    def conjugate(self) -> "Scalar":
        return Scalar._make(self.re, -self.im)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / hashing -----------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            if isinstance(other, complex):
                return complex(self) == other
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.re) if not self.im else hash((self.re, self.im))
            self._hash = h
        return h

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    @property
    def is_real(self) -> bool:
        return not self.im

    def denominator_lcm(self) -> int:
        a, b = self.re.denominator, self.im.denominator
        return a * b // _gcd(a, b)

    # -- text ---------------------------------------------------------------

    def __str__(self):
        re_s = _frac_str(self.re)
        if not self.im:
            return re_s
        mag = abs(self.im)
        im_s = "i" if mag == 1 else _frac_str(mag) + "i"
        if not self.re:
            return ("-" if self.im < 0 else "") + im_s
        return re_s + ("-" if self.im < 0 else "+") + im_s

    def __repr__(self):
        return f"Scalar('{self}')"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _frac_str(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _coerce(x):
    if type(x) is Scalar:
        return x
    if isinstance(x, (int, Rational)):
        return Scalar._make(Fraction(x), Fraction(0))
    return NotImplemented


def as_scalar(x) -> Scalar:
    """Convert ints, Fractions, Scalars, or scalar strings to :class:`Scalar`."""
    if isinstance(x, str):
        return parse_scalar(x)
    s = _coerce(x)
    if s is NotImplemented:
        raise TypeError(f"cannot convert {x!r} to an exact Scalar")
    return s


_RAT = r"\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"""^(?:
        (?P<re>[+-]?{_RAT})(?:(?P<isign>[+-])(?P<im>{_RAT})?i)?
      | (?P<ionly>[+-]?)(?P<imonly>{_RAT})?i
    )$""",
    re.VERBOSE,
)


def parse_scalar(text: str) -> Scalar:
    """Parse ``"p/q"``, ``"p/q+r/si"``, ``"2i"``, ``"1-i"`` and similar forms."""
    s = re.sub(r"\s*([+-])\s*", r"\1", text.strip())
    m = _SCALAR_RE.match(s)
    if m is None:
        raise ValueError(f"malformed scalar {text!r}")
    try:
        if m.group("re") is not None:
            re_part = Fraction(m.group("re"))
            im_part = Fraction(0)
            if m.group("isign"):
                im_part = Fraction(m.group("im") or 1)
                if m.group("isign") == "-":
                    im_part = -im_part
            return Scalar._make(re_part, im_part)
        im_part = Fraction(m.group("imonly") or 1)
        if m.group("ionly") == "-":
            im_part = -im_part
        return Scalar._make(Fraction(0), im_part)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in scalar {text!r}") from None


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)
