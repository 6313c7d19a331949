import json
import logging

import pytest
from click.testing import CliRunner

from hcspectrum import cli
from hcspectrum.report import load_report


@pytest.fixture(autouse=True)
def restore_root_logger(monkeypatch):
    for key in ("HC_CASIMIR", "HC_WINDOW", "HC_OUT", "HC_FORMATS", "HC_LOG_LEVEL"):
        monkeypatch.delenv(key, raising=False)
    root = logging.getLogger()
    saved = (root.level, list(root.handlers))
    yield
    root.handlers[:] = saved[1]
    root.setLevel(saved[0])


def invoke(*args):
    return CliRunner().invoke(cli.main, list(args))


def test_analyze_prints_point_json():
    result = invoke("analyze", "--preset", "fig1", "--window", "8", "--at=-1/9")
    assert result.exit_code == 0, result.output
    payload = json.loads(result.output)
    assert payload["x"] == "-1/9"
    assert payload["real_form"] == "SU2"
    assert payload["distinguished"] is True
    assert [layer["weights"] for layer in payload["layers"]] == [[-2, 0, 2], [-8, -6, -4, 4, 6, 8]]
    assert payload["layers"][1]["verdict"] == "indefinite"


def test_sweep_writes_requested_formats(tmp_path):
    out = tmp_path / "fig2"
    result = invoke(
        "sweep", "--preset", "fig2", "--window", "8", "--grid", "7",
        "--format", "json", "--format", "svg", "--out", str(out), "--logs-dir", str(tmp_path / "logs"),
    )
    assert result.exit_code == 0, result.output
    report = load_report((tmp_path / "fig2.json").read_bytes())
    assert report.config["casimir"] == "(1-z)/z"
    assert len(report.distinguished_points) == 4
    assert (tmp_path / "fig2.svg").read_text().startswith("<?xml")
    assert (tmp_path / "logs" / "hc_spectrum.log").exists()


def test_sweep_to_stdout():
    result = invoke("sweep", "--casimir", "-(1+z)/z", "--window", "6", "--grid", "3", "--log-level", "ERROR")
    assert result.exit_code == 0, result.output
    payload = json.loads(result.output)
    assert payload["config"]["range"] == ["-6/5", "1"]
    assert [point["x"] for point in payload["points"]][:2] == ["-6/5", "-1"]


@pytest.mark.parametrize(
    "args, fragment",
    [
        (["analyze", "--casimir", "z/(z", "--at", "1"], "offset 4"),
        (["analyze", "--casimir", "1/z^2", "--at", "1"], "pole of order 2"),
        (["analyze", "--casimir", "8", "--at", "1"], "not generically irreducible"),
        (["sweep", "--preset", "fig1", "--window", "7"], "window"),
        (["sweep", "--preset", "fig1", "--grid", "1"], "grid"),
        (["analyze", "--preset", "fig1"], "--at"),
    ],
)
def test_validation_errors_exit_with_two(args, fragment):
    result = invoke(*args)
    assert result.exit_code == 2
    assert "error:" in result.output
    assert fragment in result.output


def test_internal_errors_exit_with_one(monkeypatch):
    def boom(settings):
        raise RuntimeError("unexpected")

    monkeypatch.setattr(cli, "analyze", boom)
    result = invoke("analyze", "--preset", "fig1", "--at", "1")
    assert result.exit_code == 1
