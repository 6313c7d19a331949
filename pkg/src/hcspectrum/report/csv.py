from __future__ import annotations

from typing import List

import pandas as pd

from ..models import SpectrumReport

COLUMNS = [
    "x",
    "real_form",
    "distinguished",
    "level",
    "weight",
    "verdict",
    "label",
    "form_value",
]


def _rows(report: SpectrumReport) -> List[dict]:
    rows = []
    for point in report.points:
        for layer in point.layers:
            for k, value in zip(layer.weights, layer.form_values):
                rows.append(
                    {
                        "x": str(point.x),
                        "real_form": point.real_form,
                        "distinguished": point.distinguished,
                        "level": layer.level,
                        "weight": k,
                        "verdict": layer.verdict,
                        "label": layer.label or "",
                        "form_value": value,
                    }
                )
    return rows


def report_frame(report: SpectrumReport) -> pd.DataFrame:
    return pd.DataFrame(_rows(report), columns=COLUMNS)


def render_csv(report: SpectrumReport) -> bytes:
    return report_frame(report).to_csv(index=False).encode("utf-8")
