from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .jantzen import JantzenAnalysis, RealForm, Verdict, is_unitary, layer_module

TRIVIAL_LABEL = "trivial representation"


@dataclass(frozen=True, slots=True)
class LayerClassification:
    level: int
    weights: Tuple[int, ...]
    verdict: Verdict
    label: Optional[str]

    @property
    def unitary(self) -> bool:
        return is_unitary(self.verdict)


def _split_series_label(analysis: JantzenAnalysis, weights: Tuple[int, ...]) -> str:
    window = set(range(-analysis.window, analysis.window + 1, 2))
    full = tuple(sorted(window))
    if weights == full:
        value = analysis.casimir_value
        if value is None or not value.is_real:
            return "spherical unitary representation"
        if value.re <= -1:
            return f"spherical unitary principal series, Casimir {value}"
        if value.re < 0:
            return f"spherical complementary series, Casimir {value}"
        return f"spherical unitary representation, Casimir {value}"
    if weights == (0,):
        return TRIVIAL_LABEL
    positive = [k for k in weights if k > 0]
    negative = [k for k in weights if k < 0]
    if positive and negative and 0 not in weights:
        gap = min(min(positive), -max(negative))
        tail = {k for k in window if abs(k) >= gap}
        if set(weights) == tail:
            return f"discrete series pair, lowest |weight| {gap}"
    if positive and not negative:
        return f"holomorphic discrete series, lowest weight {min(positive)}"
    if negative and not positive:
        return f"antiholomorphic discrete series, highest weight {max(negative)}"
    return "unitary representation"


def representation_label(analysis: JantzenAnalysis, weights: Tuple[int, ...]) -> str:
    if analysis.real_form is RealForm.SU2:
        return f"SU(2) highest weight {max(weights)}"
    if analysis.real_form is RealForm.CARTAN_MOTION:
        if 0 in weights:
            return "motion-group spherical representation"
        return "motion-group representation"
    return _split_series_label(analysis, weights)


def classify_layer(analysis: JantzenAnalysis, n: int) -> LayerClassification:
    """Definiteness of the level-n form and, when definite, the unitary representation it carries."""
    weights = layer_module(analysis, n)
    verdict = analysis.verdicts[n]
    label = representation_label(analysis, weights) if is_unitary(verdict) else None
    return LayerClassification(level=n, weights=weights, verdict=verdict, label=label)


def classify_all(analysis: JantzenAnalysis) -> list[LayerClassification]:
    return [classify_layer(analysis, n) for n in analysis.levels]
