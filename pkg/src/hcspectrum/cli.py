from __future__ import annotations

import json
import logging
import sys
from typing import Callable

import click

from .config import PRESETS, load_analyze_settings, load_sweep_settings
from .errors import ExpressionError, SpectrumError
from .pipeline import analyze, sweep
from .report import render, write_outputs
from .report.json_report import point_to_dict
from .util.logging import setup_logging

LOGGER = logging.getLogger(__name__)

EXIT_VALIDATION = 2
EXIT_INTERNAL = 1


def _run(action: Callable[[], None]) -> None:
    try:
        action()
    except ExpressionError as exc:
        click.echo(f"error: {exc.display()}", err=True)
        sys.exit(EXIT_VALIDATION)
    except SpectrumError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)
    except Exception:
        LOGGER.exception("hc_spectrum failed")
        sys.exit(EXIT_INTERNAL)


def _family_options(func: Callable) -> Callable:
    func = click.option("--log-level", type=str, help="Logging level (default WARNING)")(func)
    func = click.option("--logs-dir", type=click.Path(path_type=str), help="Directory for the rotating log file")(func)
    func = click.option("--preset", type=click.Choice(sorted(PRESETS)), help="Casimir and range of a studied family")(func)
    func = click.option("--window", type=int, help="Weight window bound W (even)")(func)
    func = click.option("--casimir", type=str, help="Casimir c(z), e.g. '-(1+z)/z'")(func)
    return func


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main() -> None:
    """Jantzen filtrations and unitary quotients of SU(1,1)/SU(2) contraction families."""


@main.command("analyze")
@_family_options
@click.option("--at", type=str, help="Rational point x, e.g. -1/9")
def analyze_command(**kwargs) -> None:
    """Analyze the fiber of the family at one rational point."""

    def action() -> None:
        settings = load_analyze_settings(kwargs)
        setup_logging(settings.logs_dir, settings.level)
        report = analyze(settings)
        click.echo(json.dumps(point_to_dict(report), indent=2, ensure_ascii=False))

    _run(action)


@main.command("sweep")
@_family_options
@click.option("--range", "range_", nargs=2, type=str, help="Closed interval A B of x values")
@click.option("--grid", type=int, help="Number of equally spaced grid points")
@click.option(
    "--format",
    "formats",
    type=click.Choice(["json", "ascii", "svg", "csv"], case_sensitive=False),
    multiple=True,
    help="Output format (repeatable)",
)
@click.option("--out", type=click.Path(path_type=str), help="Output path; stdout when omitted")
@click.option("--workers", type=int, help="Processes analyzing points in parallel")
def sweep_command(range_, **kwargs) -> None:
    """Sweep x over a range and render the unitary spectrum."""

    def action() -> None:
        settings = load_sweep_settings({**kwargs, "range": range_})
        setup_logging(settings.logs_dir, settings.level)
        report = sweep(settings)
        if settings.out is None:
            for fmt in settings.formats:
                click.echo(render(report, fmt).decode("utf-8"), nl=False)
            return
        for path in write_outputs(report, settings.formats, settings.out):
            click.echo(str(path))

    _run(action)


if __name__ == "__main__":  # pragma: no cover
    main()
