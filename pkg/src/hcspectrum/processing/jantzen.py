from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from ..arith import GaussianRational, Poly, RationalInterval, RationalPoint, eval_shifted, ord_at, rational_roots
from ..duality import Intertwiner
from ..errors import LevelError
from ..family import FamilyModule, casimir_at

LOGGER = logging.getLogger(__name__)


class Verdict(str, Enum):
    POSITIVE_DEFINITE = "positive_definite"
    NEGATIVE_DEFINITE = "negative_definite"
    INDEFINITE = "indefinite"


class RealForm(str, Enum):
    SU11 = "SU11"
    CARTAN_MOTION = "CartanMotion"
    SU2 = "SU2"


def real_form_for(point: RationalPoint) -> RealForm:
    if point.x > 0:
        return RealForm.SU11
    if point.x < 0:
        return RealForm.SU2
    return RealForm.CARTAN_MOTION


def is_unitary(verdict: Verdict) -> bool:
    return verdict is not Verdict.INDEFINITE


def definiteness(values: List[GaussianRational]) -> Verdict:
    if any(not v.is_real for v in values):
        return Verdict.INDEFINITE
    signs = {v.sign() for v in values}
    if signs == {1}:
        return Verdict.POSITIVE_DEFINITE
    if signs == {-1}:
        return Verdict.NEGATIVE_DEFINITE
    return Verdict.INDEFINITE


@dataclass(frozen=True, slots=True)
class JantzenAnalysis:
    point: RationalPoint
    window: int
    orders: Dict[int, int]
    layers: Dict[int, Tuple[int, ...]]
    form_values: Dict[int, GaussianRational]
    verdicts: Dict[int, Verdict]
    real_form: RealForm
    casimir_value: Optional[GaussianRational] = None
    shift: int = 0

    @property
    def levels(self) -> List[int]:
        return sorted(self.layers)

    def filtration(self, n: int) -> Tuple[int, ...]:
        """Weights spanning the n-th filtration step, i.e. all layers at level >= n."""
        return tuple(sorted(k for k, order in self.orders.items() if order >= n))


def assemble_analysis(
    point: RationalPoint,
    window: int,
    raw_orders: Dict[int, int],
    raw_values: Dict[int, GaussianRational],
    casimir_value: Optional[GaussianRational],
) -> JantzenAnalysis:
    """Normalize orders to start at level 0 and group weights into graded layers."""
    shift = min(raw_orders.values())
    orders = {k: raw_orders[k] - shift for k in sorted(raw_orders)}
    grouped: Dict[int, List[int]] = defaultdict(list)
    for k, level in orders.items():
        grouped[level].append(k)
    layers = {level: tuple(sorted(ks)) for level, ks in sorted(grouped.items())}
    form_values = {k: raw_values[k] for k in orders}
    verdicts = {level: definiteness([form_values[k] for k in ks]) for level, ks in layers.items()}
    return JantzenAnalysis(
        point=point,
        window=window,
        orders=orders,
        layers=layers,
        form_values=form_values,
        verdicts=verdicts,
        real_form=real_form_for(point),
        casimir_value=casimir_value,
        shift=shift,
    )


def analyze_at(
    family: FamilyModule,
    phi: Intertwiner,
    point: RationalPoint,
    coordinate_scale: Fraction = Fraction(1),
) -> JantzenAnalysis:
    """Jantzen filtration of the fiber at x for the coordinate p = s (z - x).

    Orders are ord_x(phi_k); the level-n form on f_k is the value at x of
    p^(-n) phi_k, with n the unnormalized order.
    """
    scale = Fraction(coordinate_scale)
    raw_orders: Dict[int, int] = {}
    raw_values: Dict[int, GaussianRational] = {}
    for k in family.window.weights:
        value = phi.phi[k]
        order = int(ord_at(value, point))
        raw_orders[k] = order
        raw_values[k] = eval_shifted(value, point, order) * (scale ** -order)
    analysis = assemble_analysis(point, family.window.bound, raw_orders, raw_values, casimir_at(family, point))
    LOGGER.debug("x=%s levels=%s verdicts=%s", point, analysis.levels, analysis.verdicts)
    return analysis


def layer_module(analysis: JantzenAnalysis, n: int) -> Tuple[int, ...]:
    try:
        return analysis.layers[n]
    except KeyError:
        raise LevelError(f"no Jantzen layer at level {n} for x = {analysis.point}") from None


@dataclass(frozen=True, slots=True)
class DistinguishedPoints:
    points: Tuple[RationalPoint, ...]
    unanalyzed: Tuple[Poly, ...] = ()

    def __iter__(self) -> Iterator[RationalPoint]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, point: object) -> bool:
        return point in self.points


def distinguished_points(family: FamilyModule, phi: Intertwiner, interval: RationalInterval) -> DistinguishedPoints:
    """Rational x in the interval where some phi_k gains a zero or pole.

    Every phi_k is a product of the step factors, so their numerators and
    denominators (the B_k for k >= 0 and A_k for k < 0 after normalization)
    carry all candidate points.
    """
    found: set[RationalPoint] = set()
    leftovers: Dict[Poly, None] = {}
    for k, step in phi.steps.items():
        if k not in family.window:
            continue
        for part in (step.num, step.den):
            if part.is_constant:
                continue
            report = rational_roots(part)
            found.update(p for p in report.points if p in interval)
            if report.remainder.degree > 0:
                leftovers[report.remainder] = None
    if leftovers:
        LOGGER.warning(
            "Left %d factor(s) without rational roots unanalyzed: %s",
            len(leftovers),
            ", ".join(str(p) for p in leftovers),
        )
    points = tuple(sorted(found))
    LOGGER.info("Found %d distinguished point(s) in [%s, %s]", len(points), interval.lo, interval.hi)
    return DistinguishedPoints(points=points, unanalyzed=tuple(leftovers))
