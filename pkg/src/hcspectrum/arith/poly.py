from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors import ArithmeticDomainError
from .gaussian import ONE, ZERO, GaussianRational, ScalarLike, as_gaussian


def _strip(coeffs: Sequence[GaussianRational]) -> tuple[GaussianRational, ...]:
    end = len(coeffs)
    while end and not coeffs[end - 1]:
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True, slots=True, eq=False)
class Poly:
    """Dense polynomial in z over Q(i); ``coeffs[d]`` multiplies z**d.

    The zero polynomial has no coefficients and degree -1.
    """

    coeffs: tuple[GaussianRational, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _strip([as_gaussian(c) for c in self.coeffs]))

    @classmethod
    def from_values(cls, values: Iterable[ScalarLike]) -> "Poly":
        return cls(tuple(as_gaussian(v) for v in values))

    @classmethod
    def constant(cls, value: ScalarLike) -> "Poly":
        return cls((as_gaussian(value),))

    @classmethod
    def monomial(cls, degree: int, coeff: ScalarLike = 1) -> "Poly":
        return cls((ZERO,) * degree + (as_gaussian(coeff),))

    @classmethod
    def z(cls) -> "Poly":
        return cls.monomial(1)

    @classmethod
    def coerce(cls, value: object) -> "Poly | None":
        if isinstance(value, Poly):
            return value
        scalar = GaussianRational.coerce(value)
        if scalar is None:
            return None
        return cls((scalar,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> GaussianRational:
        return self.coeffs[-1] if self.coeffs else ZERO

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return self.degree <= 0

    @property
    def is_real(self) -> bool:
        return all(c.is_real for c in self.coeffs)

    def coefficient(self, degree: int) -> GaussianRational:
        return self.coeffs[degree] if 0 <= degree < len(self.coeffs) else ZERO

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        rhs = Poly.coerce(other)
        if rhs is None:
            return NotImplemented
        return self.coeffs == rhs.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __add__(self, other: object) -> "Poly":
        rhs = Poly.coerce(other)
        if rhs is None:
            return NotImplemented
        size = max(len(self.coeffs), len(rhs.coeffs))
        return Poly(tuple(self.coefficient(d) + rhs.coefficient(d) for d in range(size)))

    __radd__ = __add__

    def __sub__(self, other: object) -> "Poly":
        rhs = Poly.coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "Poly":
        lhs = Poly.coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> "Poly":
        rhs = Poly.coerce(other)
        if rhs is None:
            return NotImplemented
        if self.is_zero or rhs.is_zero:
            return Poly()
        out = [ZERO] * (len(self.coeffs) + len(rhs.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(rhs.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ArithmeticDomainError("negative power of a polynomial", "negative_power")
        result = Poly((ONE,))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: ScalarLike) -> "Poly":
        f = as_gaussian(factor)
        return Poly(tuple(c * f for c in self.coeffs))

    def __divmod__(self, other: object) -> tuple["Poly", "Poly"]:
        divisor = Poly.coerce(other)
        if divisor is None:
            return NotImplemented
        if divisor.is_zero:
            raise ArithmeticDomainError("division by the zero polynomial", "zero_division")
        rem = list(self.coeffs)
        span = len(divisor.coeffs)
        if len(rem) < span:
            return Poly(), self
        inv_lead = divisor.leading.inverse()
        quot = [ZERO] * (len(rem) - span + 1)
        for i in range(len(rem) - span, -1, -1):
            q = rem[i + span - 1] * inv_lead
            quot[i] = q
            if q:
                for j, d in enumerate(divisor.coeffs):
                    rem[i + j] = rem[i + j] - q * d
        return Poly(tuple(quot)), Poly(tuple(rem[: span - 1]))

    def __floordiv__(self, other: object) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: object) -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(self.leading.inverse())

    def conjugate(self) -> "Poly":
        return Poly(tuple(c.conjugate() for c in self.coeffs))

    def real_part(self) -> "Poly":
        return Poly(tuple(GaussianRational(c.re) for c in self.coeffs))

    def imag_part(self) -> "Poly":
        return Poly(tuple(GaussianRational(c.im) for c in self.coeffs))

    def derivative(self) -> "Poly":
        return Poly(tuple(c * d for d, c in enumerate(self.coeffs) if d))

    def evaluate(self, point: ScalarLike) -> GaussianRational:
        x = as_gaussian(point)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divide_linear(self, point: ScalarLike) -> tuple["Poly", GaussianRational]:
        """Synthetic division by (z - point): returns (quotient, remainder)."""
        if self.is_zero:
            return Poly(), ZERO
        x = as_gaussian(point)
        acc = ZERO
        quot: list[GaussianRational] = []
        for c in reversed(self.coeffs):
            acc = acc * x + c
            quot.append(acc)
        remainder = quot.pop()
        return Poly(tuple(reversed(quot))), remainder

    def vanishing_order(self, point: ScalarLike) -> tuple[int, GaussianRational]:
        """Multiplicity n of (z - point) and the value at ``point`` of self/(z - point)**n."""
        if self.is_zero:
            raise ArithmeticDomainError("the zero polynomial vanishes to infinite order", "zero_polynomial")
        order = 0
        current = self
        while True:
            quotient, remainder = current.divide_linear(point)
            if remainder:
                return order, remainder
            order += 1
            current = quotient

    def squarefree(self) -> "Poly":
        if self.is_zero:
            raise ArithmeticDomainError("square-free part of the zero polynomial", "zero_polynomial")
        return (self // poly_gcd(self, self.derivative())).monic()

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms: list[str] = []
        for degree in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[degree]
            if not c:
                continue
            body = str(c)
            if c.re and c.im:
                body = f"({body})"
            if degree == 0:
                terms.append(body)
                continue
            power = "z" if degree == 1 else f"z^{degree}"
            if c == 1:
                terms.append(power)
            elif c == -1:
                terms.append(f"-{power}")
            else:
                terms.append(f"{body}*{power}")
        return " + ".join(terms).replace("+ -", "- ")


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by Euclid's algorithm; gcd(0, 0) is 0."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()
