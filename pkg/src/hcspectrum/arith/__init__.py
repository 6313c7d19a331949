"""Exact arithmetic over Q(i): scalars, polynomials and rational functions in z."""

from .gaussian import GaussianRational
from .poly import Poly, poly_gcd
from .ratfunc import RatFunc, RationalInterval, RationalPoint, eval_shifted, ord_at, sigma
from .roots import RationalRoot, RootReport, rational_roots

__all__ = [
    "GaussianRational",
    "Poly",
    "RatFunc",
    "RationalInterval",
    "RationalPoint",
    "RationalRoot",
    "RootReport",
    "eval_shifted",
    "ord_at",
    "poly_gcd",
    "rational_roots",
    "sigma",
]
