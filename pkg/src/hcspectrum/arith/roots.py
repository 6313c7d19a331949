from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy

from ..errors import ArithmeticDomainError
from .poly import Poly, poly_gcd
from .ratfunc import RationalPoint

_Z = sympy.Symbol("z")


@dataclass(frozen=True, slots=True)
class RationalRoot:
    point: RationalPoint
    multiplicity: int


@dataclass(frozen=True, slots=True)
class RootReport:
    roots: tuple[RationalRoot, ...]
    remainder: Poly

    @property
    def points(self) -> tuple[RationalPoint, ...]:
        return tuple(root.point for root in self.roots)


def _to_fraction(value: sympy.Expr) -> Fraction:
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def _to_sympy(poly: Poly) -> sympy.Poly:
    expr = sum(
        (sympy.Rational(c.re.numerator, c.re.denominator) * _Z**d for d, c in enumerate(poly.coeffs)),
        sympy.Integer(0),
    )
    return sympy.Poly(expr, _Z, domain=sympy.QQ)


def rational_roots(p: Poly) -> RootReport:
    """Real rational roots of p with multiplicities, plus the rest of its square-free part.

    A real point is a root of p exactly when it is a common root of Re(p) and
    Im(p), so the search runs on their gcd, factored over Q.
    """
    if p.is_zero:
        raise ArithmeticDomainError("the zero polynomial has no root list", "zero_polynomial")
    real_core = poly_gcd(p.real_part(), p.imag_part())
    found: list[RationalRoot] = []
    if real_core.degree > 0:
        _, factors = _to_sympy(real_core).factor_list()
        for factor, multiplicity in factors:
            if factor.degree() != 1:
                continue
            a, b = factor.all_coeffs()
            root = -_to_fraction(b) / _to_fraction(a)
            found.append(RationalRoot(RationalPoint(root), int(multiplicity)))
    found.sort(key=lambda r: r.point)

    remainder = p.squarefree()
    for root in found:
        remainder, rest = remainder.divide_linear(root.point.x)
        if rest:
            raise ArithmeticDomainError(f"{root.point} is not a root of {p}", "root_mismatch")
    return RootReport(roots=tuple(found), remainder=remainder.monic())
