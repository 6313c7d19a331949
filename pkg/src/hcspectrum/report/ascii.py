from __future__ import annotations

from typing import List

from ..models import PointReport, SpectrumReport
from ..processing.labels import TRIVIAL_LABEL

UNITARY_MARK = "#"
TRIVIAL_MARK = "o"
EMPTY_MARK = "."


def _window(report: SpectrumReport) -> int:
    window = report.config.get("window")
    if window:
        return int(window)
    weights = [abs(k) for point in report.points for layer in point.layers for k in layer.weights]
    return max(weights, default=0)


def _mark(point: PointReport, k: int) -> str:
    for layer in point.unitary_layers:
        if k in layer.weights:
            return TRIVIAL_MARK if layer.label == TRIVIAL_LABEL else UNITARY_MARK
    return EMPTY_MARK


def render_ascii(report: SpectrumReport) -> bytes:
    """Weight rows (top = +W) against sweep columns in increasing x."""
    window = _window(report)
    points = report.points
    lines: List[str] = [
        f"Unitary Jantzen quotients, Casimir {report.config.get('casimir', '?')}, window [-{window}, {window}]",
        "",
    ]
    for k in range(window, -window - 1, -2):
        lines.append(f"{k:>5} |" + "".join(_mark(point, k) for point in points))
    lines.append("      +" + "-" * len(points))
    lines.append("       " + "".join("^" if point.distinguished else " " for point in points))
    lines.append("")
    lines.append(f"{UNITARY_MARK} unitary weight   {TRIVIAL_MARK} trivial representation   ^ distinguished point")
    lines.append("")
    for column, point in enumerate(points):
        flag = "  distinguished" if point.distinguished else ""
        lines.append(f"{column:>5}  x = {point.x}  {point.real_form}{flag}")
    return ("\n".join(lines).rstrip() + "\n").encode("utf-8")
