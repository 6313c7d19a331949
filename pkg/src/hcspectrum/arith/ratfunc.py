from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..errors import ArithmeticDomainError, ConfigError
from .gaussian import ZERO, GaussianRational, ScalarLike
from .poly import Poly, poly_gcd

Order = Union[int, float]


@dataclass(frozen=True, slots=True, eq=False)
class RatFunc:
    """Reduced quotient num/den in Q(i)(z): den is monic and coprime to num."""

    num: Poly
    den: Poly = Poly.constant(1)

    def __post_init__(self) -> None:
        num, den = self.num, self.den
        if den.is_zero:
            raise ArithmeticDomainError("rational function with zero denominator", "zero_division")
        if num.is_zero:
            den = Poly.constant(1)
        elif den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
        lead = den.leading
        if lead != 1:
            inv = lead.inverse()
            num, den = num.scale(inv), den.scale(inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def coerce(cls, value: object) -> "RatFunc | None":
        if isinstance(value, RatFunc):
            return value
        poly = Poly.coerce(value)
        if poly is None:
            return None
        return cls(poly)

    @classmethod
    def constant(cls, value: ScalarLike) -> "RatFunc":
        return cls(Poly.constant(value))

    @classmethod
    def z(cls) -> "RatFunc":
        return cls(Poly.z())

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    @property
    def is_constant(self) -> bool:
        return self.is_polynomial and self.num.is_constant

    def constant_value(self) -> GaussianRational:
        if not self.is_constant:
            raise ArithmeticDomainError(f"{self} is not constant", "not_constant")
        return self.num.coefficient(0)

    def as_poly(self) -> Poly:
        if not self.is_polynomial:
            raise ArithmeticDomainError(f"{self} has a pole", "not_polynomial")
        return self.num

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other: object) -> bool:
        rhs = RatFunc.coerce(other)
        if rhs is None:
            return NotImplemented
        return self.num == rhs.num and self.den == rhs.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __add__(self, other: object) -> "RatFunc":
        rhs = RatFunc.coerce(other)
        if rhs is None:
            return NotImplemented
        if self.den == rhs.den:
            return RatFunc(self.num + rhs.num, self.den)
        return RatFunc(self.num * rhs.den + rhs.num * self.den, self.den * rhs.den)

    __radd__ = __add__

    def __sub__(self, other: object) -> "RatFunc":
        rhs = RatFunc.coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "RatFunc":
        lhs = RatFunc.coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> "RatFunc":
        rhs = RatFunc.coerce(other)
        if rhs is None:
            return NotImplemented
        return RatFunc(self.num * rhs.num, self.den * rhs.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero:
            raise ArithmeticDomainError("division by the zero rational function", "zero_division")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other: object) -> "RatFunc":
        rhs = RatFunc.coerce(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inverse()

    def __rtruediv__(self, other: object) -> "RatFunc":
        lhs = RatFunc.coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs * self.inverse()

    def __pow__(self, exponent: int) -> "RatFunc":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RatFunc(self.num**exponent, self.den**exponent)

    def evaluate(self, point: ScalarLike) -> GaussianRational:
        value = self.den.evaluate(point)
        if not value:
            raise ArithmeticDomainError(f"{self} has a pole at {point}", "pole")
        return self.num.evaluate(point) / value

    def __repr__(self) -> str:
        return f"RatFunc({self})"

    def __str__(self) -> str:
        if self.is_polynomial:
            return str(self.num)
        return f"({self.num})/({self.den})"


@dataclass(frozen=True, slots=True, order=True)
class RationalPoint:
    """An exact point x on the real axis."""

    x: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))

    @classmethod
    def parse(cls, text: str) -> "RationalPoint":
        try:
            return cls(Fraction(text.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigError(f"not an exact rational: {text!r}") from exc

    @property
    def sign(self) -> int:
        return (self.x > 0) - (self.x < 0)

    def __str__(self) -> str:
        return str(self.x)


@dataclass(frozen=True, slots=True)
class RationalInterval:
    lo: Fraction
    hi: Fraction
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi or (self.lo == self.hi and (self.lo_open or self.hi_open)):
            raise ConfigError(f"empty range [{self.lo}, {self.hi}]")

    def __contains__(self, point: object) -> bool:
        x = point.x if isinstance(point, RationalPoint) else Fraction(point)  # type: ignore[arg-type]
        above = x > self.lo if self.lo_open else x >= self.lo
        below = x < self.hi if self.hi_open else x <= self.hi
        return above and below

    def subdivide(self, count: int) -> list[RationalPoint]:
        """``count`` equally spaced exact points from lo to hi inclusive."""
        step = (self.hi - self.lo) / (count - 1)
        return [RationalPoint(self.lo + i * step) for i in range(count)]


def sigma(q: RatFunc) -> RatFunc:
    """The real structure q(z) -> conj(q(conj(z))): conjugate every coefficient."""
    return RatFunc(q.num.conjugate(), q.den.conjugate())


def ord_at(q: RatFunc, point: RationalPoint) -> Order:
    if q.is_zero:
        return math.inf
    top, _ = q.num.vanishing_order(point.x)
    bottom, _ = q.den.vanishing_order(point.x)
    return top - bottom


def eval_shifted(q: RatFunc, point: RationalPoint, n: int) -> GaussianRational:
    """Value at x of (z - x)**(-n) * q; requires ord_at(q, x) >= n."""
    if q.is_zero:
        return ZERO
    top, top_value = q.num.vanishing_order(point.x)
    bottom, bottom_value = q.den.vanishing_order(point.x)
    order = top - bottom
    if order < n:
        raise ArithmeticDomainError(
            f"(z - {point})^{-n} * ({q}) has a pole at {point}: filtration level {n} exceeds order {order}",
            "inconsistent_level",
        )
    if order > n:
        return ZERO
    return top_value / bottom_value
