from __future__ import annotations


class SpectrumError(Exception):
    """Base class for every user-facing failure raised by hcspectrum."""

    code = "spectrum_error"

    def __init__(self, message: str, code: str | None = None) -> None:
        self.code = code or self.code
        self.message = message
        super().__init__(message)


class ArithmeticDomainError(SpectrumError):
    code = "arithmetic_domain"


class CasimirError(SpectrumError):
    code = "invalid_casimir"


class WindowError(SpectrumError):
    code = "invalid_window"


class WindowOverflowError(WindowError):
    code = "window_overflow"


class ScalarCasimirError(SpectrumError):
    code = "not_scalar_casimir"


class SelfDualityError(SpectrumError):
    code = "not_self_dual"


class LevelError(SpectrumError):
    code = "missing_level"


class OracleSizeError(SpectrumError):
    code = "oracle_window_too_large"


class ConfigError(SpectrumError):
    code = "invalid_config"


class OutputError(SpectrumError):
    code = "unwritable_output"


class ExpressionError(SpectrumError):
    code = "syntax_error"

    def __init__(self, source: str, position: int, message: str, code: str | None = None) -> None:
        self.source = source
        self.position = position
        super().__init__(f"{message} at offset {position}", code)

    def display(self) -> str:
        """Render the offending expression with a caret under the error offset."""
        return f"{self.message}:\n  {self.source}\n  {' ' * self.position}^"
