# Copyright 2026 The biext Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# Lint as: python3
""" Exact scalars: rationals and elements of an imaginary quadratic field Q(w), w^2 = -d."""
import re
from dataclasses import dataclass
from typing import Union

from sympy import QQ, factorint

from ..exceptions import FieldMismatchError, ScalarParseError


# Canonical rationals (coprime numerator / positive denominator) are sympy's QQ elements.
Rational = QQ.dtype

_RAT = r"\d+(?:/\d+)?"
_REAL_LITERAL = re.compile(rf"^([+-]?)({_RAT})$")
_IMAG_LITERAL = re.compile(rf"^([+-]?)(?:({_RAT})\*)?w$")
_FULL_LITERAL = re.compile(rf"^([+-]?)({_RAT})([+-])(?:({_RAT})\*)?w$")


def _is_squarefree(n: int) -> bool:
    return all(e == 1 for e in factorint(n).values())


@dataclass(frozen=True)
class FieldContext:
    """
    The imaginary quadratic field Q(w) with w^2 = -d shared by every object of a computation.

    Args:
        d (`int`, *optional*, defaults to `1`):
            A positive squarefree integer.
    """

    d: int = 1

    def __post_init__(self):
        if isinstance(self.d, bool) or not isinstance(self.d, int):
            raise ScalarParseError(f"Field parameter d must be an integer, got {self.d!r}")
        if self.d < 1 or not _is_squarefree(self.d):
            raise ScalarParseError(f"Field parameter d must be a positive squarefree integer, got {self.d}")

    @property
    def w(self) -> "KScalar":
        return KScalar(QQ(0), QQ(1), self.d)

    def scalar(self, value: "ScalarLike") -> "KScalar":
        """Coerce an int, a rational or a scalar of this field into a `KScalar`."""
        return to_kscalar(value, self.d)

    def parse(self, text: str) -> "KScalar":
        return parse_kscalar(text, self)

    def check(self, other: "FieldContext") -> None:
        if self.d != other.d:
            raise FieldMismatchError(f"Cannot combine objects over Q(sqrt(-{self.d})) and Q(sqrt(-{other.d}))")

    def to_dict(self) -> dict:
        return {"d": self.d}


def as_rational(value: Union[int, "Rational", "KScalar"]) -> "Rational":
    """Return `value` as a sympy rational, failing on scalars with a nonzero w-part."""
    if isinstance(value, KScalar):
        if value.im != 0:
            raise ValueError(f"{format_scalar(value)} is not rational")
        return value.re
    if isinstance(value, bool):
        raise TypeError("Booleans are not scalars")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Rational):
        return value
    raise TypeError(f"Cannot read {value!r} as an exact rational")


def is_rational_scalar(value) -> bool:
    if isinstance(value, KScalar):
        return value.im == 0
    return isinstance(value, (int, Rational))


@dataclass(frozen=True, eq=False)
class KScalar:
    """
    An element `re + im*w` of Q(w), w^2 = -d.

    Arithmetic accepts ints and rationals on either side. Scalars of two different fields can only be combined
    when one of them is rational.
    """

    re: Rational
    im: Rational
    d: int

    def __post_init__(self):
        object.__setattr__(self, "re", as_rational(self.re))
        object.__setattr__(self, "im", as_rational(self.im))

    def _coerce(self, other) -> "KScalar":
        if isinstance(other, KScalar):
            if other.d != self.d and other.im != 0 and self.im != 0:
                raise FieldMismatchError(f"Cannot combine scalars of Q(sqrt(-{self.d})) and Q(sqrt(-{other.d}))")
            return other
        return KScalar(as_rational(other), QQ(0), self.d)

    def _field(self, other: "KScalar") -> int:
        # A rational operand does not pin the field.
        return self.d if self.im != 0 or other.im == 0 else other.d

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return KScalar(self.re + o.re, self.im + o.im, self._field(o))

    __radd__ = __add__

    def __neg__(self):
        return KScalar(-self.re, -self.im, self.d)

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return KScalar(self.re - o.re, self.im - o.im, self._field(o))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        d = self._field(o)
        return KScalar(self.re * o.re - d * self.im * o.im, self.re * o.im + self.im * o.re, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        if isinstance(other, KScalar):
            return self.re == other.re and self.im == other.im and (self.im == 0 or self.d == other.d)
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im, self.d))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __repr__(self):
        return f"KScalar({format_scalar(self)!r}, d={self.d})"

    def conj(self) -> "KScalar":
        return KScalar(self.re, -self.im, self.d)

    def norm(self) -> Rational:
        return self.re * self.re + self.d * self.im * self.im

    def inverse(self) -> "KScalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("Division by the zero scalar")
        return KScalar(self.re / n, -self.im / n, self.d)

    @property
    def is_rational(self) -> bool:
        return self.im == 0


ScalarLike = Union[int, Rational, KScalar]


def to_kscalar(value: ScalarLike, d: int) -> KScalar:
    if isinstance(value, KScalar):
        if value.d != d and value.im != 0:
            raise FieldMismatchError(f"Scalar {format_scalar(value)} lives in Q(sqrt(-{value.d})), not Q(sqrt(-{d}))")
        return value if value.d == d else KScalar(value.re, value.im, d)
    return KScalar(as_rational(value), QQ(0), d)


def conj(value: ScalarLike) -> ScalarLike:
    if isinstance(value, KScalar):
        return value.conj()
    return value


def _parse_rat(sign: str, text: str) -> Rational:
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ScalarParseError(f"Zero denominator in {text!r}")
    value = QQ(int(num), int(den) if den else 1)
    return -value if sign == "-" else value


def parse_rational(text: str) -> Rational:
    """
    Parse a rational literal `p` or `p/q`.

    Args:
        text (`str`):
            The literal, optionally signed; whitespace is ignored.

    Returns:
        value (`Rational`): the canonical rational.
    """
    if not isinstance(text, str):
        raise ScalarParseError(f"Scalar literals must be strings, got {text!r}")
    match = _REAL_LITERAL.match("".join(text.split()))
    if match is None:
        raise ScalarParseError(f"Malformed rational literal {text!r}")
    return _parse_rat(match.group(1), match.group(2))


def parse_kscalar(text: Union[str, int], context: FieldContext) -> KScalar:
    """
    Parse a field literal: `a`, `b*w`, `w`, `a+b*w`, `a-b*w` with `a`, `b` rational literals.

    Integers are accepted as the rational literal they denote.
    """
    if isinstance(text, int) and not isinstance(text, bool):
        return KScalar(QQ(text), QQ(0), context.d)
    if not isinstance(text, str):
        raise ScalarParseError(f"Scalar literals must be strings, got {text!r}")
    compact = "".join(text.split())
    match = _REAL_LITERAL.match(compact)
    if match:
        return KScalar(_parse_rat(match.group(1), match.group(2)), QQ(0), context.d)
    match = _IMAG_LITERAL.match(compact)
    if match:
        im = _parse_rat(match.group(1), match.group(2) or "1")
        return KScalar(QQ(0), im, context.d)
    match = _FULL_LITERAL.match(compact)
    if match:
        re_part = _parse_rat(match.group(1), match.group(2))
        im = _parse_rat(match.group(3), match.group(4) or "1")
        return KScalar(re_part, im, context.d)
    raise ScalarParseError(f"Malformed scalar literal {text!r}")


def _format_rat(value: Rational) -> str:
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_scalar(value: ScalarLike) -> str:
    """Render a scalar with the literal grammar accepted by `parse_kscalar`."""
    if not isinstance(value, KScalar):
        return _format_rat(value)
    if value.im == 0:
        return _format_rat(value.re)
    magnitude = abs(value.im)
    imag = "w" if magnitude == 1 else f"{_format_rat(magnitude)}*w"
    sign = "-" if value.im < 0 else "+"
    if value.re == 0:
        return imag if sign == "+" else f"-{imag}"
    return f"{_format_rat(value.re)}{sign}{imag}"
