from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Dict, List

from jinja2 import Environment, FileSystemLoader, select_autoescape

from ..models import PointReport, SpectrumReport
from ..processing.labels import TRIVIAL_LABEL

TEMPLATE_DIR = Path(__file__).parent / "templates"

WIDTH = 960
HEIGHT = 540
MARGIN = {"left": 64, "right": 24, "top": 44, "bottom": 48}


def _env() -> Environment:
    loader = FileSystemLoader(TEMPLATE_DIR)
    return Environment(loader=loader, autoescape=select_autoescape(["svg.j2"]), trim_blocks=True, lstrip_blocks=True)


class _Frame:
    """Maps exact (x, k) pairs to pixel positions; floats only enter here."""

    def __init__(self, lo: Fraction, hi: Fraction, window: int) -> None:
        self.lo, self.hi, self.window = lo, hi, window
        self.left = MARGIN["left"]
        self.right = WIDTH - MARGIN["right"]
        self.top = MARGIN["top"]
        self.bottom = HEIGHT - MARGIN["bottom"]

    def px(self, x: Fraction) -> float:
        span = self.hi - self.lo or Fraction(1)
        return round(self.left + float((x - self.lo) / span) * (self.right - self.left), 2)

    def py(self, k: int) -> float:
        span = 2 * self.window or 1
        return round(self.top + (self.window - k) / span * (self.bottom - self.top), 2)


def _unitary_weights(point: PointReport) -> List[int]:
    return sorted(k for layer in point.unitary_layers for k in layer.weights)


def _markers(frame: _Frame, points: List[PointReport]) -> List[Dict]:
    markers = []
    for point in points:
        for layer in point.unitary_layers:
            trivial = layer.label == TRIVIAL_LABEL
            for k in layer.weights:
                markers.append(
                    {
                        "x": str(point.x),
                        "k": k,
                        "px": frame.px(point.x),
                        "py": frame.py(k),
                        "r": 3.5 if point.distinguished or trivial else 2.0,
                        "distinguished": point.distinguished,
                        "trivial": trivial,
                    }
                )
    return markers


def _segments(frame: _Frame, points: List[PointReport]) -> List[Dict]:
    segments = []
    for point in points:
        if not point.distinguished:
            continue
        for layer in point.unitary_layers:
            if len(layer.weights) < 2:
                continue
            segments.append(
                {
                    "x": str(point.x),
                    "px": frame.px(point.x),
                    "y1": frame.py(max(layer.weights)),
                    "y2": frame.py(min(layer.weights)),
                }
            )
    return segments


def _bands(frame: _Frame, points: List[PointReport]) -> List[Dict]:
    """Horizontal strokes joining neighbouring non-distinguished points with equal unitary weights."""
    regular = [point for point in points if not point.distinguished]
    bands = []
    for left, right in zip(regular, regular[1:]):
        weights = _unitary_weights(left)
        if not weights or weights != _unitary_weights(right):
            continue
        for k in weights:
            bands.append({"x1": frame.px(left.x), "x2": frame.px(right.x), "y": frame.py(k)})
    return bands


def render_svg(report: SpectrumReport) -> bytes:
    config = report.config
    lo, hi = (Fraction(v) for v in config.get("range", ["0", "1"]))
    window = int(config.get("window", 2))
    frame = _Frame(lo, hi, window)
    x_ticks = [{"px": frame.px(x), "label": str(x)} for x in sorted({lo, hi} | ({Fraction(0)} if lo < 0 < hi else set()))]
    y_ticks = [{"py": frame.py(k), "label": str(k)} for k in sorted({-window, 0, window})]
    template = _env().get_template("spectrum.svg.j2")
    text = template.render(
        width=WIDTH,
        height=HEIGHT,
        left=frame.left,
        right=frame.right,
        top=frame.top,
        bottom=frame.bottom,
        casimir=config.get("casimir", ""),
        window=window,
        x_ticks=x_ticks,
        y_ticks=y_ticks,
        bands=_bands(frame, report.points),
        segments=_segments(frame, report.points),
        markers=_markers(frame, report.points),
    )
    return text.encode("utf-8")
