from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional


@dataclass(slots=True)
class LayerReport:
    level: int
    weights: List[int]
    verdict: str
    label: Optional[str]
    form_values: List[str]

    @property
    def unitary(self) -> bool:
        return self.verdict != "indefinite"


@dataclass(slots=True)
class PointReport:
    x: Fraction
    real_form: str
    distinguished: bool
    layers: List[LayerReport] = field(default_factory=list)

    @property
    def unitary_layers(self) -> List[LayerReport]:
        return [layer for layer in self.layers if layer.unitary]


@dataclass(slots=True)
class SpectrumReport:
    config: Dict[str, Any]
    points: List[PointReport] = field(default_factory=list)
    unanalyzed_factors: List[str] = field(default_factory=list)

    @property
    def distinguished_points(self) -> List[PointReport]:
        return [point for point in self.points if point.distinguished]

    def point_at(self, x: Fraction) -> PointReport:
        for point in self.points:
            if point.x == x:
                return point
        raise KeyError(str(x))
