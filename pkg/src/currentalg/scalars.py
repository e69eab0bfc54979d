"""Exact scalars for the two supported base fields.

Field tags are plain strings: ``"Q"`` (rationals, backed by
:class:`fractions.Fraction`) and ``"Qi"`` (Gaussian rationals a + b*i).
No floating point is accepted anywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Q = "Q"
QI = "Qi"
FIELDS = (Q, QI)


class ScalarError(ValueError):
    """Bad scalar value or field mismatch."""


class GaussianRational:
    """a + b*i with exact rational a, b.  Treated as immutable.

    Interoperates with int and Fraction in arithmetic, so generic code
    (elimination, polynomial gcd, ...) runs unchanged over both fields.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, float) or isinstance(im, float):
            raise ScalarError("floating point is not allowed")
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _lift(x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        # Agree with Fraction/int hashing when the value is real.
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        im = f"{self.im}i" if abs(self.im) != 1 else ("i" if self.im > 0 else "-i")
        if self.re == 0:
            return im
        sign = "+" if self.im > 0 else ""
        return f"{self.re}{sign}{im}"


Scalar = Union[Fraction, GaussianRational]

I = GaussianRational(0, 1)


def zero(field: str) -> Scalar:
    return Fraction(0) if field == Q else GaussianRational(0)


def one(field: str) -> Scalar:
    return Fraction(1) if field == Q else GaussianRational(1)


def coerce(field: str, value) -> Scalar:
    """Coerce ``value`` into the given field, rejecting lossy conversions."""
    if field not in FIELDS:
        raise ScalarError(f"unknown field tag {field!r}")
    if isinstance(value, float):
        raise ScalarError("floating point is not allowed")
    if field == Q:
        if isinstance(value, GaussianRational):
            if value.im != 0:
                raise ScalarError("field Q forbids nonzero imaginary parts")
            return value.re
        return Fraction(value)
    if isinstance(value, GaussianRational):
        return value
    return GaussianRational(Fraction(value))


def coerce_vector(field: str, values) -> tuple:
    return tuple(coerce(field, v) for v in values)


_IMAG_RE = re.compile(
    r"""^(?P<re>[+-]?\d+(?:/\d+)?)?
         (?P<im>[+-](?:\d+(?:/\d+)?)?|(?:\d+(?:/\d+)?))?i$""",
    re.VERBOSE,
)

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def _strict_fraction(text: str) -> Fraction:
    """Parse "p/q" with integer p, q only; no decimals or exponents."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise ScalarError(f"malformed rational {text!r} (want p or p/q)")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError as exc:
        raise ScalarError(f"malformed rational {text!r} (zero denominator)") from exc


def parse_scalar_text(field: str, text: str) -> Scalar:
    """Parse "p/q" or, over Qi, forms like "1/2-1/3i", "i", "-2i"."""
    s = text.strip().replace(" ", "")
    if "i" not in s:
        return coerce(field, _strict_fraction(s))
    if field != QI:
        raise ScalarError(f"imaginary value {text!r} needs field Qi")
    m = _IMAG_RE.match(s)
    if not m:
        raise ScalarError(f"malformed Gaussian rational {text!r}")
    re_part = m.group("re")
    im_part = m.group("im")
    if im_part is None:
        # whole (possibly signed) coefficient belongs to i: "3i", "-1/2i", "i"
        im_part, re_part = re_part, None
        if im_part is None:
            im_part = "1"
    if im_part in ("+", "-", ""):
        im_part += "1"
    return GaussianRational(
        _strict_fraction(re_part) if re_part else 0,
        _strict_fraction(im_part.lstrip("+")),
    )


def scalar_to_json(field: str, value: Scalar):
    """Canonical JSON form: "p/q" over Q, {"re": ..., "im": ...} over Qi."""
    value = coerce(field, value)
    if field == Q:
        return str(value)
    return {"re": str(value.re), "im": str(value.im)}


def scalar_from_json(field: str, obj) -> Scalar:
    if isinstance(obj, str):
        return coerce(field, _strict_fraction(obj))
    if isinstance(obj, dict):
        if field != QI:
            raise ScalarError("re/im coefficient object requires field Qi")
        unknown = set(obj) - {"re", "im"}
        if unknown:
            raise ScalarError(f"unknown coefficient keys {sorted(unknown)}")
        return GaussianRational(
            _strict_fraction(obj.get("re", "0")),
            _strict_fraction(obj.get("im", "0")),
        )
    raise ScalarError(f"coefficient must be a string or re/im object, got {obj!r}")
