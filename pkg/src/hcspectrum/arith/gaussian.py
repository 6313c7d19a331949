from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

from ..errors import ArithmeticDomainError

ScalarLike = Union[int, Fraction, "GaussianRational"]


@dataclass(frozen=True, slots=True, eq=False)
class GaussianRational:
    """An element re + im*i of Q(i), both parts kept as reduced fractions."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, value: object) -> "GaussianRational | None":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Rational)) and not isinstance(value, bool):
            return cls(Fraction(value))
        return None

    @classmethod
    def i(cls) -> "GaussianRational":
        return cls(Fraction(0), Fraction(1))

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> "GaussianRational":
        if not self.im:
            return self
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def sign(self) -> int:
        """Sign of a real value; complex values have no sign."""
        if self.im:
            raise ArithmeticDomainError(f"{self} is not real", "not_real")
        return (self.re > 0) - (self.re < 0)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other: object) -> "GaussianRational":
        rhs = GaussianRational.coerce(other)
        if rhs is None:
            return NotImplemented
        return GaussianRational(self.re + rhs.re, self.im + rhs.im)

    __radd__ = __add__

    def __sub__(self, other: object) -> "GaussianRational":
        rhs = GaussianRational.coerce(other)
        if rhs is None:
            return NotImplemented
        return GaussianRational(self.re - rhs.re, self.im - rhs.im)

    def __rsub__(self, other: object) -> "GaussianRational":
        lhs = GaussianRational.coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> "GaussianRational":
        rhs = GaussianRational.coerce(other)
        if rhs is None:
            return NotImplemented
        if not self.im and not rhs.im:
            return GaussianRational(self.re * rhs.re)
        return GaussianRational(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        if not self:
            raise ArithmeticDomainError("division by zero in Q(i)", "zero_division")
        if not self.im:
            return GaussianRational(1 / self.re)
        n = self.norm()
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other: object) -> "GaussianRational":
        rhs = GaussianRational.coerce(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inverse()

    def __rtruediv__(self, other: object) -> "GaussianRational":
        lhs = GaussianRational.coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs * self.inverse()

    def __pow__(self, exponent: int) -> "GaussianRational":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = GaussianRational(Fraction(1))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        rhs = GaussianRational.coerce(other)
        if rhs is None:
            return NotImplemented
        return self.re == rhs.re and self.im == rhs.im

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({self})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        sign = "-" if self.im < 0 else "+"
        return f"{self.re} {sign} {abs(self.im)}*i"


ZERO = GaussianRational()
ONE = GaussianRational(Fraction(1))


def as_gaussian(value: ScalarLike) -> GaussianRational:
    coerced = GaussianRational.coerce(value)
    if coerced is None:
        raise TypeError(f"cannot use {type(value).__name__} as a Q(i) scalar")
    return coerced
