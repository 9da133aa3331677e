"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations

from typing import Any, Sequence, Tuple


class NuLgiError(Exception):
    """Base class for all errors raised by :mod:`nu_lgi`."""


class InvalidArgumentError(NuLgiError, ValueError):
    """Raised when an input is malformed, non-finite or out of range."""


class RejectedCoefficientsError(NuLgiError, ValueError):
    """Raised when a Kossakowski matrix fails the positivity bound."""

    def __init__(self, message: str, report: Any = None) -> None:
        super().__init__(message)
        self.report = report


class NumericalError(NuLgiError, ArithmeticError):
    """Raised when a non-finite intermediate value appears."""


class ConfigError(NuLgiError, ValueError):
    """Raised when a configuration file cannot be parsed or validated."""

    def __init__(self, message: str, *, line: int | None = None, field: str | None = None) -> None:
        self.line = line
        self.field = field
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class ScanRowError(NuLgiError):
    """A single grid point failed; carries the coordinates of the failing row."""

    def __init__(self, coordinates: Sequence[Tuple[str, float]], cause: BaseException) -> None:
        self.coordinates = tuple(coordinates)
        self.cause = cause
        where = ", ".join(f"{name}={value!r}" for name, value in self.coordinates)
        super().__init__(f"scan row failed at {where}: {cause}")

    def with_outer(self, name: str, value: float) -> "ScanRowError":
        """Return a copy with an outer coordinate prepended (2-D scans)."""

        return ScanRowError(((name, value),) + self.coordinates, self.cause)


__all__ = [
    "NuLgiError",
    "InvalidArgumentError",
    "RejectedCoefficientsError",
    "NumericalError",
    "ConfigError",
    "ScanRowError",
]
