"""Exact scalars: dyadic rationals and plain ``Fraction`` rationals."""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import total_ordering
from typing import Union

from coopkit.exceptions import InvalidModelError
from coopkit.utils.validators import validate_dyadic

Number = Union[int, Fraction, "Dyadic"]


@total_ordering
@dataclass(frozen=True, eq=False)
class Dyadic:
    """numerator / 2**exponent, normalised so the numerator is odd or the exponent is 0"""

    numerator: int
    exponent: int = 0

    def __post_init__(self):
        if self.exponent < 0:
            raise InvalidModelError(f"negative dyadic exponent {self.exponent}")
        n, e = self.numerator, self.exponent
        while e > 0 and n % 2 == 0:
            n //= 2
            e -= 1
        if n == 0:
            e = 0
        object.__setattr__(self, "numerator", n)
        object.__setattr__(self, "exponent", e)

    @classmethod
    def of(cls, value: Number) -> "Dyadic":
        if isinstance(value, Dyadic):
            return value
        value = Fraction(value)
        if not validate_dyadic(value):
            raise InvalidModelError(f"{value} is not a dyadic rational")
        return cls(value.numerator, value.denominator.bit_length() - 1)

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def _coerce(self, other) -> "Dyadic":
        if isinstance(other, Dyadic):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Dyadic.of(other)
        return NotImplemented

    def _aligned(self, other: "Dyadic"):
        e = max(self.exponent, other.exponent)
        return self.numerator << (e - self.exponent), other.numerator << (e - other.exponent), e

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, e = self._aligned(other)
        return Dyadic(a + b, e)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, e = self._aligned(other)
        return Dyadic(a - b, e)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Dyadic(-self.numerator, self.exponent)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return Dyadic(self.numerator * other, self.exponent)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Dyadic(self.numerator * other.numerator, self.exponent + other.exponent)

    __rmul__ = __mul__

    def half(self) -> "Dyadic":
        return Dyadic(self.numerator, self.exponent + 1)

    def __eq__(self, other):
        if isinstance(other, Dyadic):
            return self.numerator == other.numerator and self.exponent == other.exponent
        if isinstance(other, (int, Fraction)):
            return self.to_fraction() == other
        return NotImplemented

    def __lt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, _ = self._aligned(other)
        return a < b

    def __hash__(self):
        return hash(self.to_fraction())

    def __repr__(self):
        return f"Dyadic({self.numerator}, {self.exponent})"

    def __str__(self):
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/{1 << self.exponent}"


class ScalarKind(str, Enum):
    DYADIC = "dyadic"
    RATIONAL = "rational"

    def make(self, value: Number):
        """Convert to this kind's value type"""
        if self is ScalarKind.DYADIC:
            return Dyadic.of(value)
        if isinstance(value, Dyadic):
            return value.to_fraction()
        return Fraction(value)

    def half(self, value):
        if self is ScalarKind.DYADIC:
            return value.half()
        return value / 2


def to_fraction(value: Number) -> Fraction:
    if isinstance(value, Dyadic):
        return value.to_fraction()
    return Fraction(value)
