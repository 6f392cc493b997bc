"""Exact scalars over Q and over the Gaussian rationals Q(i)."""

from __future__ import annotations

import enum
from fractions import Fraction
from numbers import Rational
from typing import Any, Mapping, Union

from .errors import DomainError, FieldMismatchError, ScalarParseError


class Field(enum.Enum):
    RATIONAL = "rational"
    GAUSSIAN_RATIONAL = "gaussian_rational"

    @staticmethod
    def join(a: "Field", b: "Field") -> "Field":
        if a is Field.GAUSSIAN_RATIONAL or b is Field.GAUSSIAN_RATIONAL:
            return Field.GAUSSIAN_RATIONAL
        return Field.RATIONAL


class Scalar:
    """An immutable field element ``re + im*i`` with reduced rational parts.

    ``Fraction`` keeps both parts in lowest terms with a positive
    denominator, so equality is structural.  A RATIONAL scalar never carries
    an imaginary part.  Mixed arithmetic promotes to GAUSSIAN_RATIONAL;
    plain ``int`` and ``Fraction`` operands are treated as rationals.
    """

    __slots__ = ("re", "im", "field")

    re: Fraction
    im: Fraction
    field: Field

    def __init__(self, re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0,
                 field: Field | None = None):
        if not isinstance(re, Rational) or not isinstance(im, Rational):
            raise TypeError(f"scalar parts must be exact rationals, got {re!r}, {im!r}")
        re = Fraction(re)
        im = Fraction(im)
        if field is None:
            field = Field.GAUSSIAN_RATIONAL if im else Field.RATIONAL
        elif field is Field.RATIONAL and im:
            raise FieldMismatchError(f"rational scalar cannot have imaginary part {im}")
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def __reduce__(self):
        return (Scalar, (self.re, self.im, self.field))

    @classmethod
    def coerce(cls, value: Any, field: Field | None = None) -> "Scalar":
        """Convert ``value`` to a Scalar, optionally lifting it into ``field``."""
        if isinstance(value, Scalar):
            s = value
        elif isinstance(value, Rational) and not isinstance(value, bool):
            s = cls(value)
        else:
            raise TypeError(f"cannot interpret {value!r} as an exact scalar")
        if field is not None and s.field is not field:
            s = s.in_field(field)
        return s

    def in_field(self, field: Field) -> "Scalar":
        if field is self.field:
            return self
        return Scalar(self.re, self.im, field)

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero

    def _other(self, other) -> "Scalar | None":
        if isinstance(other, Scalar):
            return other
        if isinstance(other, Rational) and not isinstance(other, bool):
            return Scalar(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Scalar(self.re + o.re, self.im + o.im, Field.join(self.field, o.field))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.re, -self.im, self.field)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Scalar(self.re - o.re, self.im - o.im, Field.join(self.field, o.field))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        field = Field.join(self.field, o.field)
        if not self.im and not o.im:
            return Scalar(self.re * o.re, 0, field)
        return Scalar(self.re * o.re - self.im * o.im,
                      self.re * o.im + self.im * o.re, field)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero scalar")
        if not self.im:
            return Scalar(1 / self.re, 0, self.field)
        norm = self.re * self.re + self.im * self.im
        return Scalar(self.re / norm, -self.im / norm, self.field)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im, self.field)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im and self.field is other.field
        if isinstance(other, Rational) and not isinstance(other, bool):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        # agrees with hash(Fraction) so that Scalar(q) == q implies equal hashes
        return hash(self.re) if not self.im else hash((self.re, self.im))

    def __repr__(self):
        if self.field is Field.RATIONAL:
            return f"Scalar({format_rational(self.re)})"
        return f"Scalar({format_rational(self.re)}, {format_rational(self.im)}, GAUSSIAN_RATIONAL)"

    def __str__(self):
        if self.field is Field.RATIONAL or not self.im:
            return format_rational(self.re)
        if not self.re:
            return f"{format_rational(self.im)}i"
        sign = "-" if self.im < 0 else "+"
        return f"{format_rational(self.re)}{sign}{format_rational(abs(self.im))}i"


ZERO = Scalar(0)
ONE = Scalar(1)


def zero(field: Field = Field.RATIONAL) -> Scalar:
    return Scalar(0, 0, field)


def one(field: Field = Field.RATIONAL) -> Scalar:
    return Scalar(1, 0, field)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``INT[/POSINT]`` where ``INT`` is an optionally signed digit run.

    Whitespace is not accepted.  Errors carry the offset of the first
    offending character.
    """
    if not isinstance(text, str):
        raise ScalarParseError(repr(text), 0, "expected a string literal")
    pos = 0
    if pos < len(text) and text[pos] in "+-":
        pos += 1
    start = pos
    while pos < len(text) and text[pos].isascii() and text[pos].isdigit():
        pos += 1
    if pos == start:
        raise ScalarParseError(text, pos, "expected digit")
    num = int(text[:pos])
    if pos == len(text):
        return Fraction(num)
    if text[pos] != "/":
        raise ScalarParseError(text, pos, "expected '/' or end of literal")
    pos += 1
    start = pos
    while pos < len(text) and text[pos].isascii() and text[pos].isdigit():
        pos += 1
    if pos == start:
        raise ScalarParseError(text, pos, "expected unsigned denominator digits")
    if pos != len(text):
        raise ScalarParseError(text, pos, "unexpected trailing characters")
    den = int(text[start:])
    if den == 0:
        raise DomainError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def scalar_parse(text: str | Mapping[str, str], field: Field) -> Scalar:
    """Parse a scalar literal in the textual form used by problem files.

    Rationals are strings such as ``"7"`` or ``"-3/4"``.  Gaussian rationals
    are objects ``{"re": "2", "im": "-11"}``; a bare string is accepted as a
    purely real Gaussian rational.
    """
    if field is Field.RATIONAL:
        if not isinstance(text, str):
            raise ScalarParseError(repr(text), 0, "rational literal must be a string")
        return Scalar(parse_rational(text))
    if isinstance(text, str):
        return Scalar(parse_rational(text), 0, field)
    if isinstance(text, Mapping):
        extra = set(text) - {"re", "im"}
        if extra:
            raise ScalarParseError(repr(dict(text)), 0, f"unexpected keys {sorted(extra)}")
        return Scalar(parse_rational(text.get("re", "0")),
                      parse_rational(text.get("im", "0")), field)
    raise ScalarParseError(repr(text), 0, "gaussian literal must be an object or string")


def scalar_format(s: Scalar) -> str | dict[str, str]:
    """Inverse of :func:`scalar_parse` for the scalar's own field."""
    if s.field is Field.RATIONAL:
        return format_rational(s.re)
    return {"re": format_rational(s.re), "im": format_rational(s.im)}
