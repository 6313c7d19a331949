"""Report rendering helpers."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional

from ..errors import OutputError
from ..models import SpectrumReport
from .ascii import render_ascii
from .csv import render_csv
from .json_report import load_report, render_json
from .svg import render_svg

LOGGER = logging.getLogger(__name__)

RENDERERS: Dict[str, Callable[[SpectrumReport], bytes]] = {
    "json": render_json,
    "ascii": render_ascii,
    "svg": render_svg,
    "csv": render_csv,
}
SUFFIXES = {"json": ".json", "ascii": ".txt", "svg": ".svg", "csv": ".csv"}


def render(report: SpectrumReport, fmt: str) -> bytes:
    try:
        renderer = RENDERERS[fmt]
    except KeyError:
        raise OutputError(f"unknown report format {fmt!r}", "unknown_format") from None
    return renderer(report)


def output_paths(out: Path, formats: Iterable[str]) -> Dict[str, Path]:
    """One format writes to ``out`` itself; several share its stem with per-format suffixes."""
    formats = list(formats)
    if len(formats) == 1:
        return {formats[0]: out}
    return {fmt: out.with_suffix(SUFFIXES[fmt]) for fmt in formats}


def write_outputs(report: SpectrumReport, formats: Iterable[str], out: Optional[Path]) -> List[Path]:
    formats = list(formats)
    if out is None:
        return []
    written: List[Path] = []
    for fmt, path in output_paths(out, formats).items():
        payload = render(report, fmt)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_bytes(payload)
        except OSError as exc:
            raise OutputError(f"cannot write {fmt} report to {path}: {exc}") from exc
        LOGGER.info("Wrote %s report to %s", fmt, path)
        written.append(path)
    return written


__all__ = ["load_report", "render", "write_outputs", "output_paths", "RENDERERS"]
