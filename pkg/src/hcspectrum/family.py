from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from math import isqrt
from typing import Dict, List, Literal, Optional, Tuple

from .arith import GaussianRational, Poly, RatFunc, RationalPoint
from .errors import CasimirError, ScalarCasimirError, WindowError, WindowOverflowError

LOGGER = logging.getLogger(__name__)

QUARTER_Z = RatFunc(Poly.monomial(1, GaussianRational(1) / 4))


class Generator(str, Enum):
    H = "H"
    E = "E"
    F = "F"


@dataclass(frozen=True, slots=True)
class WeightWindow:
    """Even weights -bound, -bound+2, ..., bound."""

    bound: int

    def __post_init__(self) -> None:
        if self.bound < 2 or self.bound % 2:
            raise WindowError(f"window bound must be an even integer >= 2, got {self.bound}")

    @property
    def weights(self) -> Tuple[int, ...]:
        return tuple(range(-self.bound, self.bound + 1, 2))

    @property
    def interior(self) -> Tuple[int, ...]:
        return tuple(range(-self.bound + 2, self.bound - 1, 2))

    def __contains__(self, k: object) -> bool:
        return isinstance(k, int) and -self.bound <= k <= self.bound and k % 2 == 0


@dataclass(frozen=True, slots=True)
class FamilyModule:
    """Even-weight family with basis f_k: Ef_k = A_k f_{k+2}, Ff_{k+2} = B_k f_k."""

    casimir: RatFunc
    window: WeightWindow
    A: Dict[int, Poly]
    B: Dict[int, Poly]

    def restrict(self, bound: int) -> "FamilyModule":
        if bound > self.window.bound:
            raise WindowOverflowError(f"cannot restrict window {self.window.bound} to larger window {bound}")
        window = WeightWindow(bound)
        return replace(
            self,
            window=window,
            A={k: self.A[k] for k in window.weights},
            B={k: self.B[k] for k in window.weights},
        )

    def with_coefficient(self, kind: Literal["A", "B"], k: int, value: Poly) -> "FamilyModule":
        maps = {"A": dict(self.A), "B": dict(self.B)}
        maps[kind][k] = value
        return replace(self, A=maps["A"], B=maps["B"])


@dataclass(slots=True)
class RelationCheck:
    relation: str
    weight: int
    ok: bool


@dataclass(slots=True)
class RelationReport:
    checks: List[RelationCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)

    @property
    def failures(self) -> List[RelationCheck]:
        return [check for check in self.checks if not check.ok]

    @property
    def first_failure(self) -> Optional[RelationCheck]:
        failures = self.failures
        return failures[0] if failures else None


def _constant_obstruction(casimir: RatFunc) -> Optional[int]:
    """The even k with casimir == k^2 + 2k, if any."""
    if not casimir.is_constant:
        return None
    value = casimir.constant_value()
    if not value.is_real or value.re.denominator != 1:
        return None
    shifted = value.re.numerator + 1
    if shifted < 0:
        return None
    root = isqrt(shifted)
    if root * root != shifted or root % 2 == 0:
        return None
    return root - 1


def coefficient_maps(casimir: RatFunc, window: WeightWindow) -> Tuple[Dict[int, Poly], Dict[int, Poly]]:
    """A, B solving k^2 + 2k + (4/z) A_k B_k = c with A_k = 1 (k >= 0), B_k = 1 (k < 0)."""
    A: Dict[int, Poly] = {}
    B: Dict[int, Poly] = {}
    one = Poly.constant(1)
    for k in window.weights:
        solved = (QUARTER_Z * (casimir - (k * k + 2 * k))).as_poly()
        if k >= 0:
            A[k], B[k] = one, solved
        else:
            A[k], B[k] = solved, one
    return A, B


def validate_casimir(casimir: RatFunc) -> None:
    den = casimir.den
    if den != Poly.monomial(den.degree):
        raise CasimirError(
            f"Casimir {casimir} must be regular away from z = 0 (denominator {den})",
            "invalid_casimir",
        )
    if den.degree >= 2:
        raise CasimirError(f"Casimir {casimir} has a pole of order {den.degree} at z = 0", "pole_too_deep")
    k = _constant_obstruction(casimir)
    if k is not None:
        raise CasimirError(
            f"Casimir {casimir} equals k^2 + 2k for k = {k}: family is not generically irreducible",
            "not_generically_irreducible",
        )


def build_family(casimir: RatFunc, bound: int) -> FamilyModule:
    window = WeightWindow(bound)
    validate_casimir(casimir)
    A, B = coefficient_maps(casimir, window)
    LOGGER.info("Built family for Casimir %s on window [-%d, %d]", casimir, bound, bound)
    return FamilyModule(casimir=casimir, window=window, A=A, B=B)


def act(family: FamilyModule, generator: Generator, k: int) -> Tuple[int, Poly]:
    """Image of f_k under a generator as (target weight, coefficient)."""
    window = family.window
    if k not in window:
        raise WindowOverflowError(f"weight {k} lies outside window [-{window.bound}, {window.bound}]")
    if generator is Generator.H:
        return k, Poly.constant(k)
    target = k + 2 if generator is Generator.E else k - 2
    if target not in window:
        raise WindowOverflowError(
            f"{generator.value} f_{k} leaves window [-{window.bound}, {window.bound}]; enlarge the window"
        )
    if generator is Generator.E:
        return target, family.A[k]
    return target, family.B[target]


def _apply_word(family: FamilyModule, word: str, k: int) -> Tuple[int, Poly]:
    weight, coeff = k, Poly.constant(1)
    for letter in reversed(word):
        weight, step = act(family, Generator(letter), weight)
        coeff = coeff * step
    return weight, coeff


def _bracket(family: FamilyModule, left: str, right: str, k: int) -> Tuple[int, Poly]:
    w1, c1 = _apply_word(family, left + right, k)
    w2, c2 = _apply_word(family, right + left, k)
    if w1 != w2:  # pragma: no cover - weights always agree
        raise WindowError(f"bracket [{left},{right}] mixes weights {w1} and {w2}")
    return w1, c1 - c2


def verify_relations(family: FamilyModule) -> RelationReport:
    """Check [H,E] = 2E, [H,F] = -2F and [E,F] = zH on every interior weight."""
    report = RelationReport()
    z = Poly.z()
    for k in family.window.interior:
        _, he = _bracket(family, "H", "E", k)
        _, e = act(family, Generator.E, k)
        report.checks.append(RelationCheck("[H,E]=2E", k, he == e.scale(2)))

        _, hf = _bracket(family, "H", "F", k)
        _, f = act(family, Generator.F, k)
        report.checks.append(RelationCheck("[H,F]=-2F", k, hf == f.scale(-2)))

        _, ef = _bracket(family, "E", "F", k)
        report.checks.append(RelationCheck("[E,F]=zH", k, ef == z.scale(k)))
    if not report.ok:
        LOGGER.warning("Relation check failed first at %s", report.first_failure)
    return report


def casimir_scalar(family: FamilyModule) -> RatFunc:
    """Scalar by which C = H^2 + 2H + (4/z) FE acts, checked on every window weight."""
    four_over_z = RatFunc(Poly.constant(4), Poly.z())
    scalars: Dict[int, RatFunc] = {}
    for k in family.window.weights:
        fe = RatFunc(family.A[k] * family.B[k])
        scalars[k] = four_over_z * fe + (k * k + 2 * k)
    distinct = set(scalars.values())
    if len(distinct) != 1:
        raise ScalarCasimirError(
            "not a family with scalar Casimir: "
            + ", ".join(f"k={k}: {value}" for k, value in sorted(scalars.items()))
        )
    return distinct.pop()


def is_generically_irreducible(family: FamilyModule) -> bool:
    return all(not (family.A[k] * family.B[k]).is_zero for k in family.window.weights)


def casimir_at(family: FamilyModule, point: RationalPoint) -> Optional[GaussianRational]:
    """Value c(x), or None where c has its pole."""
    if not family.casimir.den.evaluate(point.x):
        return None
    return family.casimir.evaluate(point.x)
