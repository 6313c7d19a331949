from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import List, Tuple

from .arith import RatFunc, RationalPoint
from .config import AnalyzeSettings, SweepSettings
from .duality import Intertwiner, intertwiner, self_dual_condition
from .errors import SelfDualityError
from .family import FamilyModule, build_family
from .ingest.expression import parse_casimir
from .models import LayerReport, PointReport, SpectrumReport
from .processing.jantzen import JantzenAnalysis, analyze_at, distinguished_points
from .processing.labels import classify_all

LOGGER = logging.getLogger(__name__)


def prepare_family(casimir_expr: str, window: int) -> Tuple[FamilyModule, Intertwiner]:
    casimir: RatFunc = parse_casimir(casimir_expr)
    family = build_family(casimir, window)
    if not self_dual_condition(family):
        raise SelfDualityError(f"Casimir {casimir} is not real-valued on the real axis; no hermitian forms exist")
    return family, intertwiner(family)


def point_report(analysis: JantzenAnalysis, distinguished: bool) -> PointReport:
    layers = [
        LayerReport(
            level=layer.level,
            weights=list(layer.weights),
            verdict=layer.verdict.value,
            label=layer.label,
            form_values=[str(analysis.form_values[k]) for k in layer.weights],
        )
        for layer in classify_all(analysis)
    ]
    return PointReport(
        x=analysis.point.x,
        real_form=analysis.real_form.value,
        distinguished=distinguished,
        layers=layers,
    )


def _analyze_task(task: Tuple[FamilyModule, Intertwiner, RationalPoint, bool]) -> PointReport:
    family, phi, point, distinguished = task
    return point_report(analyze_at(family, phi, point), distinguished)


def sweep_points(settings: SweepSettings, distinguished: List[RationalPoint]) -> List[Tuple[RationalPoint, bool]]:
    """Grid plus distinguished points (and x = 0 when in range), sorted; exact duplicates merged."""
    interval = settings.interval
    marked = set(distinguished)
    candidates = set(interval.subdivide(settings.grid))
    zero = RationalPoint(0)
    if zero in interval:
        candidates.add(zero)
    merged = candidates & marked
    if merged:
        LOGGER.warning("Merged %d grid point(s) into distinguished points", len(merged))
    return sorted(((p, p in marked) for p in candidates | marked), key=lambda item: item[0])


def sweep(settings: SweepSettings) -> SpectrumReport:
    family, phi = prepare_family(settings.casimir, settings.window)
    found = distinguished_points(family, phi, settings.interval)
    points = sweep_points(settings, list(found))
    tasks = [(family, phi, point, flag) for point, flag in points]
    if settings.workers > 1:
        with ProcessPoolExecutor(max_workers=settings.workers) as pool:
            reports = list(pool.map(_analyze_task, tasks))
    else:
        reports = [_analyze_task(task) for task in tasks]
    LOGGER.info("Sweep analyzed %d point(s), %d distinguished", len(reports), len(found))
    return SpectrumReport(
        config=settings.echo(),
        points=reports,
        unanalyzed_factors=[str(p) for p in found.unanalyzed],
    )


def analyze(settings: AnalyzeSettings) -> PointReport:
    family, phi = prepare_family(settings.casimir, settings.window)
    point = settings.point
    analysis = analyze_at(family, phi, point)
    nontrivial = len(analysis.layers) > 1
    return point_report(analysis, nontrivial)
