"""Utilities for converting free-form quantities into natural units (hbar = c = 1, eV)."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Any, Mapping


_VALUE_RE = re.compile(
    r"(?P<value>[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)?\s*\*?\s*(?P<unit>[A-Za-z°/\^0-9-]+)?"
)


def _normalize_unit(token: str) -> str:
    token = token.strip().lower()
    token = token.replace("degrees", "deg").replace("degree", "deg").replace("°", "deg")
    token = token.replace("radians", "rad").replace("radian", "rad")
    token = token.replace(" ", "")
    return token


@dataclass(frozen=True)
class NormalizedValue:
    """A numeric value converted to a canonical unit."""

    value: float
    unit: str
    assumed_unit: bool
    source: Any


class UnitConversionError(ValueError):
    """Raised when a quantity cannot be converted."""


def _extract_amount_and_unit(value: Any) -> tuple[float, str | None]:
    if isinstance(value, bool):
        raise UnitConversionError(f"Unsupported quantity type: {type(value)!r}")
    if isinstance(value, (int, float)):
        return float(value), None
    if isinstance(value, str):
        text = value.strip()
        match = _VALUE_RE.fullmatch(text) if text else None
        if match is None or (match.group("value") is None and match.group("unit") is None):
            raise UnitConversionError(f"Could not parse quantity from '{value}'.")
        number = match.group("value")
        unit = match.group("unit")
        if number is None:
            # a bare unit such as "pi" means one of it
            return 1.0, unit
        return float(number), unit
    raise UnitConversionError(f"Unsupported quantity type: {type(value)!r}")


def _convert(
    value: Any,
    *,
    table: Mapping[str, float],
    default_unit: str,
    canonical_unit: str,
    case_sensitive: bool = False,
) -> NormalizedValue:
    amount, raw_unit = _extract_amount_and_unit(value)
    token = raw_unit or default_unit
    unit_key = token.strip() if case_sensitive else _normalize_unit(token)
    if unit_key not in table:
        raise UnitConversionError(f"Unit '{raw_unit}' is not supported; expected one of {sorted(table)}.")
    converted = amount * table[unit_key]
    if not math.isfinite(converted):
        raise UnitConversionError(f"Quantity '{value}' is not finite.")
    return NormalizedValue(
        value=converted,
        unit=canonical_unit,
        assumed_unit=raw_unit is None,
        source=value,
    )


_ANGLE_UNITS = {
    "rad": 1.0,
    "pi": math.pi,
    "deg": math.pi / 180.0,
}

# prefixes are case sensitive: meV and MeV differ by nine orders of magnitude
_ENERGY_UNITS = {
    "eV": 1.0,
    "meV": 1e-3,
    "keV": 1e3,
    "MeV": 1e6,
    "GeV": 1e9,
}

_MASS_SQUARED_UNITS = {
    "eV^2": 1.0,
    "eV2": 1.0,
    "meV^2": 1e-6,
    "meV2": 1e-6,
}

_INVERSE_ENERGY_UNITS = {
    "1/ev": 1.0,
    "/ev": 1.0,
    "ev^-1": 1.0,
}


def angle_to_rad(value: Any, *, default_unit: str = "rad") -> NormalizedValue:
    return _convert(value, table=_ANGLE_UNITS, default_unit=default_unit, canonical_unit="rad")


def energy_to_ev(value: Any, *, default_unit: str = "eV") -> NormalizedValue:
    return _convert(value, table=_ENERGY_UNITS, default_unit=default_unit, canonical_unit="eV", case_sensitive=True)


def mass_squared_to_ev2(value: Any, *, default_unit: str = "eV^2") -> NormalizedValue:
    return _convert(
        value, table=_MASS_SQUARED_UNITS, default_unit=default_unit, canonical_unit="eV^2", case_sensitive=True
    )


def time_to_inverse_ev(value: Any, *, default_unit: str = "1/ev") -> NormalizedValue:
    return _convert(value, table=_INVERSE_ENERGY_UNITS, default_unit=default_unit, canonical_unit="1/eV")


__all__ = [
    "NormalizedValue",
    "UnitConversionError",
    "angle_to_rad",
    "energy_to_ev",
    "mass_squared_to_ev2",
    "time_to_inverse_ev",
]
