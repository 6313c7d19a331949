from __future__ import annotations

import logging
import os
from fractions import Fraction
from pathlib import Path
from typing import Any, List, Literal, Optional

from dotenv import find_dotenv, load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from .arith import RationalInterval, RationalPoint
from .errors import ConfigError

Format = Literal["json", "ascii", "svg", "csv"]

DEFAULT_WINDOW = 40
DEFAULT_GRID = 49
DEFAULT_RANGE = ("-6/5", "1")

PRESETS: dict[str, dict[str, Any]] = {
    "fig1": {"casimir": "-(1+z)/z", "range": ("-6/5", "1")},
    "fig2": {"casimir": "(1-z)/z", "range": ("-1", "2")},
}


def _parse_fraction(value: str) -> Fraction:
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"{value!r} is not an exact rational (use integers, decimals or p/q)") from exc


class FamilySettings(BaseModel):
    casimir: str
    window: int = Field(default=DEFAULT_WINDOW)
    logs_dir: Optional[Path] = None
    log_level: str = Field(default="WARNING")

    @field_validator("window")
    @classmethod
    def _window_even(cls, value: int) -> int:
        if value < 2 or value % 2:
            raise ValueError("window must be an even integer >= 2")
        return value

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"unknown log level {value!r}")
        return level

    @property
    def level(self) -> int:
        return logging.getLevelName(self.log_level)


class AnalyzeSettings(FamilySettings):
    at: str

    @field_validator("at")
    @classmethod
    def _rational_point(cls, value: str) -> str:
        _parse_fraction(value)
        return value

    @property
    def point(self) -> RationalPoint:
        return RationalPoint(_parse_fraction(self.at))


class SweepSettings(FamilySettings):
    range_lo: str = Field(default=DEFAULT_RANGE[0])
    range_hi: str = Field(default=DEFAULT_RANGE[1])
    grid: int = Field(default=DEFAULT_GRID)
    formats: List[Format] = Field(default_factory=lambda: ["json"])
    out: Optional[Path] = None
    workers: int = Field(default=1)

    @field_validator("range_lo", "range_hi")
    @classmethod
    def _rational_bound(cls, value: str) -> str:
        _parse_fraction(value)
        return value

    @field_validator("grid")
    @classmethod
    def _grid_size(cls, value: int) -> int:
        if value < 2:
            raise ValueError("grid must contain at least 2 points")
        return value

    @field_validator("workers")
    @classmethod
    def _positive_workers(cls, value: int) -> int:
        if value < 1:
            raise ValueError("workers must be >= 1")
        return value

    @model_validator(mode="after")
    def _nonempty_range(self) -> "SweepSettings":
        if _parse_fraction(self.range_lo) >= _parse_fraction(self.range_hi):
            raise ValueError(f"range [{self.range_lo}, {self.range_hi}] is empty")
        return self

    @property
    def interval(self) -> RationalInterval:
        return RationalInterval(_parse_fraction(self.range_lo), _parse_fraction(self.range_hi))

    def echo(self) -> dict[str, Any]:
        interval = self.interval
        return {
            "casimir": self.casimir,
            "window": self.window,
            "range": [str(interval.lo), str(interval.hi)],
            "grid": self.grid,
            "formats": list(self.formats),
        }


def _env_int(key: str, default: int) -> int:
    value = os.getenv(key)
    if value is None or value.strip() == "":
        return default
    try:
        return int(value)
    except ValueError as exc:
        raise ConfigError(f"{key} must be an integer, got {value!r}") from exc


def _env_list(key: str, default: List[str]) -> List[str]:
    value = os.getenv(key)
    if value is None or value.strip() == "":
        return default
    return [item.strip().lower() for item in value.split(",") if item.strip()]


def _cli_or_env(cli_args: dict[str, Any], name: str, env_key: str, default: Any = None) -> Any:
    value = cli_args.get(name)
    if value is not None and value != ():
        return value
    return os.getenv(env_key, default)


def _common(cli_args: dict[str, Any]) -> dict[str, Any]:
    preset = PRESETS.get(cli_args.get("preset") or "", {})
    casimir = _cli_or_env(cli_args, "casimir", "HC_CASIMIR", preset.get("casimir"))
    if casimir is None:
        raise ConfigError("no Casimir given: pass --casimir, --preset or set HC_CASIMIR")
    logs_dir = _cli_or_env(cli_args, "logs_dir", "HC_LOGS_DIR")
    window = cli_args.get("window")
    return {
        "casimir": casimir,
        "window": window if window is not None else _env_int("HC_WINDOW", DEFAULT_WINDOW),
        "logs_dir": Path(logs_dir).expanduser() if logs_dir else None,
        "log_level": _cli_or_env(cli_args, "log_level", "HC_LOG_LEVEL", "WARNING"),
    }


def _validated(model: type[BaseModel], data: dict[str, Any]) -> Any:
    try:
        return model(**data)
    except ValidationError as exc:
        raise ConfigError(f"Invalid configuration: {exc}") from exc


def load_analyze_settings(cli_args: dict[str, Any] | None = None) -> AnalyzeSettings:
    load_dotenv(find_dotenv(usecwd=True))
    cli_args = cli_args or {}
    data = _common(cli_args)
    at = cli_args.get("at")
    if at is None:
        raise ConfigError("no point given: pass --at")
    data["at"] = at
    return _validated(AnalyzeSettings, data)


def load_sweep_settings(cli_args: dict[str, Any] | None = None) -> SweepSettings:
    load_dotenv(find_dotenv(usecwd=True))
    cli_args = cli_args or {}
    data = _common(cli_args)
    preset = PRESETS.get(cli_args.get("preset") or "", {})
    default_range = preset.get("range", DEFAULT_RANGE)
    cli_range = cli_args.get("range")
    if cli_range:
        lo, hi = cli_range
    else:
        lo = os.getenv("HC_RANGE_LO", default_range[0])
        hi = os.getenv("HC_RANGE_HI", default_range[1])
    grid = cli_args.get("grid")
    workers = cli_args.get("workers")
    formats = cli_args.get("formats") or _env_list("HC_FORMATS", ["json"])
    out = _cli_or_env(cli_args, "out", "HC_OUT")
    data.update(
        {
            "range_lo": lo,
            "range_hi": hi,
            "grid": grid if grid is not None else _env_int("HC_GRID", DEFAULT_GRID),
            "formats": [fmt.lower() for fmt in formats],
            "out": Path(out).expanduser() if out else None,
            "workers": workers if workers is not None else _env_int("HC_WORKERS", 1),
        }
    )
    return _validated(SweepSettings, data)
