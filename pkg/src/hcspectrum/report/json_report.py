from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict

from ..models import LayerReport, PointReport, SpectrumReport


def _layer_payload(layer: LayerReport) -> Dict[str, Any]:
    return {
        "level": layer.level,
        "weights": list(layer.weights),
        "verdict": layer.verdict,
        "label": layer.label,
        "form_values": list(layer.form_values),
    }


def _point_payload(point: PointReport) -> Dict[str, Any]:
    return {
        "x": str(point.x),
        "real_form": point.real_form,
        "distinguished": point.distinguished,
        "layers": [_layer_payload(layer) for layer in point.layers],
    }


def point_to_dict(point: PointReport) -> Dict[str, Any]:
    return _point_payload(point)


def report_to_dict(report: SpectrumReport) -> Dict[str, Any]:
    return {
        "config": report.config,
        "points": [_point_payload(point) for point in report.points],
        "unanalyzed_factors": list(report.unanalyzed_factors),
    }


def render_json(report: SpectrumReport) -> bytes:
    return (json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def _point_from_dict(payload: Dict[str, Any]) -> PointReport:
    return PointReport(
        x=Fraction(payload["x"]),
        real_form=payload["real_form"],
        distinguished=bool(payload["distinguished"]),
        layers=[
            LayerReport(
                level=int(layer["level"]),
                weights=[int(k) for k in layer["weights"]],
                verdict=layer["verdict"],
                label=layer["label"],
                form_values=[str(v) for v in layer["form_values"]],
            )
            for layer in payload["layers"]
        ],
    )


def load_report(text: str | bytes) -> SpectrumReport:
    """Inverse of render_json."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    payload = json.loads(text)
    return SpectrumReport(
        config=payload["config"],
        points=[_point_from_dict(point) for point in payload.get("points", [])],
        unanalyzed_factors=list(payload.get("unanalyzed_factors", [])),
    )
