"""Run configuration: flat INI-like files parsed into a validated :class:`RunConfig`.

Grammar::

    [section]
    key = value        # whole-line comments start with '#' or ';'

Sections are ``physics``, ``kossakowski``, ``protocol``, ``scan`` and
``output``. Unknown sections or keys, duplicate keys and malformed lines are
errors carrying the 1-based line number.
"""

from __future__ import annotations

import logging
import math
from typing import Any, Callable, Dict, Iterable, List, Literal, Mapping, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from . import units
from .auditor import validate_kossakowski
from .errors import ConfigError, InvalidArgumentError
from .model import (
    DEFAULT_DM2,
    DEFAULT_ENERGY,
    DEFAULT_TAU,
    DEFAULT_THETA,
    TWO_PI,
    KossakowskiCoefficients,
    OscillationParams,
)
from .scan import GridSpec, ScanBase, ScanSpec

logger = logging.getLogger(__name__)

DEFAULT_V_CC = 2.0

_FROZEN = ConfigDict(extra="forbid", frozen=True)


def parse_grid(text: str) -> GridSpec:
    """``start:stop:count`` with bounds that may use ``pi`` (``0:2pi:65``)."""

    return GridSpec.parse(text, convert=lambda token: units.angle_to_rad(token).value)


class PhysicsSection(BaseModel):
    model_config = _FROZEN

    theta: float = DEFAULT_THETA
    dm2: float = DEFAULT_DM2
    energy: float = DEFAULT_ENERGY
    v_cc: float = DEFAULT_V_CC
    phi: float = 0.0

    @model_validator(mode="after")
    def _check_ranges(self) -> "PhysicsSection":
        try:
            self.to_params()
        except InvalidArgumentError as exc:
            raise ValueError(str(exc)) from exc
        return self

    def to_params(self) -> OscillationParams:
        return OscillationParams(theta=self.theta, dm2=self.dm2, energy=self.energy, v_cc=self.v_cc, phi=self.phi)


class KossakowskiSection(BaseModel):
    model_config = _FROZEN

    c11: float = 0.0
    c22: float = 0.0
    c33: float = 0.0
    c12: float = 0.0
    c13: float = 0.0
    c23: float = 0.0

    @model_validator(mode="after")
    def _check_positivity(self) -> "KossakowskiSection":
        report = validate_kossakowski(self.to_coefficients(), check_psd=False)
        if not report.passed:
            raise ValueError("; ".join(v.describe() for v in report.violations))
        return self

    def to_coefficients(self) -> KossakowskiCoefficients:
        return KossakowskiCoefficients(**self.model_dump())


class ProtocolSection(BaseModel):
    model_config = _FROZEN

    tau: float = Field(default=DEFAULT_TAU, gt=0.0)

    @field_validator("tau")
    @classmethod
    def _finite_tau(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("tau must be finite")
        return value


class ScanSection(BaseModel):
    model_config = _FROZEN

    grid: Optional[str] = None
    mode: Literal["k3_pair", "delta_k3"] = "delta_k3"
    phi_envelope: bool = False
    envelope_count: int = Field(default=64, ge=1)
    workers: int = Field(default=1, ge=1)
    outer: Optional[Literal["phi", "v_cc", "c12", "tau", "energy"]] = None
    inner: Optional[Literal["phi", "v_cc", "c12", "tau", "energy"]] = None
    inner_grid: Optional[str] = None

    @field_validator("grid", "inner_grid")
    @classmethod
    def _valid_grid(cls, value: Optional[str]) -> Optional[str]:
        if value is not None:
            try:
                parse_grid(value)
            except (InvalidArgumentError, units.UnitConversionError) as exc:
                raise ValueError(str(exc)) from exc
        return value


class OutputSection(BaseModel):
    model_config = _FROZEN

    csv: Optional[str] = None
    svg: Optional[str] = None
    precision: int = Field(default=12, ge=1, le=17)
    columns: Optional[str] = None

    def column_list(self, mode: str) -> Tuple[str, ...]:
        if self.columns:
            return tuple(part.strip() for part in self.columns.split(",") if part.strip())
        return ("delta_k3",) if mode == "delta_k3" else ("k3_majorana",)


class RunConfig(BaseModel):
    """Fully validated run configuration; defaults are the solar-sector values."""

    model_config = _FROZEN

    physics: PhysicsSection = Field(default_factory=PhysicsSection)
    kossakowski: KossakowskiSection = Field(default_factory=KossakowskiSection)
    protocol: ProtocolSection = Field(default_factory=ProtocolSection)
    scan: ScanSection = Field(default_factory=ScanSection)
    output: OutputSection = Field(default_factory=OutputSection)
    notes: Tuple[str, ...] = ()

    def params(self) -> OscillationParams:
        return self.physics.to_params()

    def coefficients(self) -> KossakowskiCoefficients:
        return self.kossakowski.to_coefficients()

    def scan_base(self) -> ScanBase:
        return ScanBase(params=self.params(), coefficients=self.coefficients(), tau=self.protocol.tau)

    def default_grid(self, parameter: str) -> GridSpec:
        if parameter == "phi":
            return GridSpec(0.0, TWO_PI, 65)
        if parameter == "v_cc":
            return GridSpec(0.1, 10.0, 200)
        if parameter == "c12":
            bound = 0.5 * (self.kossakowski.c11 + self.kossakowski.c22)
            if bound <= 0.0:
                raise InvalidArgumentError("c12 scan needs c11 + c22 > 0 or an explicit grid")
            return GridSpec(0.0, bound, 21)
        if parameter == "tau":
            return GridSpec(0.01, 1.0, 100)
        if parameter == "energy":
            return GridSpec(0.5, 10.0, 20)
        raise InvalidArgumentError(f"unknown scan parameter {parameter!r}")

    def scan_spec(self, parameter: str, grid: str | None = None) -> ScanSpec:
        """Build a 1-D spec; the phase envelope only applies to non-phase scans."""

        text = grid if grid is not None else self.scan.grid
        return ScanSpec(
            parameter=parameter,  # type: ignore[arg-type]
            grid=parse_grid(text) if text is not None else self.default_grid(parameter),
            base=self.scan_base(),
            mode=self.scan.mode,
            phi_envelope=self.scan.phi_envelope and parameter != "phi",
            envelope_count=self.scan.envelope_count,
            workers=self.scan.workers,
        )


# ---------------------------------------------------------------------------- parsing

Converter = Callable[[str, str, List[str]], Any]


def _quantity(converter: Callable[..., units.NormalizedValue]) -> Converter:
    def convert(raw: str, field: str, notes: List[str]) -> float:
        try:
            normalized = converter(raw)
        except units.UnitConversionError as exc:
            raise ConfigError(str(exc), field=field) from exc
        if normalized.assumed_unit:
            notes.append(f"Assumed {normalized.unit} for {field} (input={normalized.source!r}).")
        return normalized.value

    return convert


def _text(raw: str, field: str, notes: List[str]) -> str:
    return raw


def _integer(raw: str, field: str, notes: List[str]) -> int:
    try:
        return int(raw)
    except ValueError as exc:
        raise ConfigError(f"expected an integer, got {raw!r}", field=field) from exc


_TRUE = {"true", "yes", "on", "1"}
_FALSE = {"false", "no", "off", "0"}


def _boolean(raw: str, field: str, notes: List[str]) -> bool:
    token = raw.lower()
    if token in _TRUE:
        return True
    if token in _FALSE:
        return False
    raise ConfigError(f"expected true or false, got {raw!r}", field=field)


_ANGLE = _quantity(units.angle_to_rad)
_ENERGY = _quantity(units.energy_to_ev)

_FIELDS: Dict[str, Dict[str, Converter]] = {
    "physics": {
        "theta": _ANGLE,
        "dm2": _quantity(units.mass_squared_to_ev2),
        "energy": _ENERGY,
        "v_cc": _ENERGY,
        "phi": _ANGLE,
    },
    "kossakowski": {name: _ENERGY for name in ("c11", "c22", "c33", "c12", "c13", "c23")},
    "protocol": {"tau": _quantity(units.time_to_inverse_ev)},
    "scan": {
        "grid": _text,
        "mode": _text,
        "phi_envelope": _boolean,
        "envelope_count": _integer,
        "workers": _integer,
        "outer": _text,
        "inner": _text,
        "inner_grid": _text,
    },
    "output": {"csv": _text, "svg": _text, "precision": _integer, "columns": _text},
}

_ALIASES = {("kossakowski", "c21"): "c12", ("kossakowski", "c31"): "c13", ("kossakowski", "c32"): "c23"}


class ConfigParser:
    """Turns config text plus ``section.key=value`` overrides into a :class:`RunConfig`."""

    def __init__(self) -> None:
        self._values: Dict[Tuple[str, str], Any] = {}
        self._lines: Dict[Tuple[str, str], int | None] = {}
        self._spelling: Dict[Tuple[str, str], str] = {}
        self._notes: List[str] = []

    def parse(self, text: str, overrides: Iterable[str] = ()) -> RunConfig:
        self._values.clear()
        self._lines.clear()
        self._spelling.clear()
        self._notes = []

        self._read_text(text)
        for override in overrides:
            self._apply_override(override)
        config = self._build()
        for note in config.notes:
            logger.info(note)
        return config

    # ------------------------------------------------------------------ helpers
    def _read_text(self, text: str) -> None:
        section: str | None = None
        for number, raw_line in enumerate(text.splitlines(), start=1):
            line = raw_line.strip()
            if not line or line.startswith(("#", ";")):
                continue
            if line.startswith("["):
                if not line.endswith("]"):
                    raise ConfigError(f"malformed section header {line!r}", line=number)
                section = line[1:-1].strip().lower()
                if section not in _FIELDS:
                    raise ConfigError(f"unknown section [{section}]; expected one of {sorted(_FIELDS)}", line=number)
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ConfigError(f"expected 'key = value', got {line!r}", line=number)
            if section is None:
                raise ConfigError("key outside of any section", line=number)
            self._store(section, key.strip().lower(), value.strip(), line=number, allow_replace=False)

    def _apply_override(self, override: str) -> None:
        target, sep, value = override.partition("=")
        section, dot, key = target.strip().lower().partition(".")
        if not sep or not dot:
            raise ConfigError(f"override must look like section.key=value, got {override!r}")
        if section not in _FIELDS:
            raise ConfigError(f"unknown section [{section}] in override {override!r}")
        self._store(section, key.strip(), value.strip(), line=None, allow_replace=True)

    def _store(self, section: str, key: str, raw: str, *, line: int | None, allow_replace: bool) -> None:
        canonical = _ALIASES.get((section, key), key)
        field = f"{section}.{key}"
        if canonical not in _FIELDS[section]:
            raise ConfigError(f"unknown key {key!r} in [{section}]", line=line, field=field)
        if not raw:
            raise ConfigError(f"empty value for {key!r}", line=line, field=field)
        try:
            value = _FIELDS[section][canonical](raw, field, self._notes)
        except ConfigError as exc:
            raise ConfigError(str(exc), line=line, field=field) from exc

        slot = (section, canonical)
        if slot in self._values and not allow_replace:
            previous = self._spelling[slot]
            if previous == key or self._values[slot] != value:
                detail = "duplicate key" if previous == key else f"conflicting values for {previous} and {key}"
                raise ConfigError(f"{detail} in [{section}]", line=line, field=field)
        self._values[slot] = value
        self._lines[slot] = line
        self._spelling[slot] = key

    def _build(self) -> RunConfig:
        payload: Dict[str, Dict[str, Any]] = {}
        for (section, key), value in self._values.items():
            payload.setdefault(section, {})[key] = value
        try:
            return RunConfig.model_validate({**payload, "notes": tuple(self._notes)})
        except ValidationError as exc:
            raise self._translate(exc) from exc

    def _translate(self, exc: ValidationError) -> ConfigError:
        error = exc.errors()[0]
        location = tuple(str(part) for part in error["loc"])
        field = ".".join(location)
        line = self._lines.get(location[:2]) if len(location) >= 2 else None
        if line is None and location and location[0] == "kossakowski":
            lines = [n for (section, _), n in self._lines.items() if section == "kossakowski" and n is not None]
            line = min(lines) if lines else None
        message = str(error["msg"]).removeprefix("Value error, ")
        return ConfigError(f"{field}: {message}", line=line, field=field)


def parse_config(text: str, overrides: Iterable[str] = ()) -> RunConfig:
    return ConfigParser().parse(text, overrides)


def _format_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def format_config(config: RunConfig) -> str:
    """Serialise back to the config grammar; parsing the output reproduces *config*."""

    lines: List[str] = []
    for section in ("physics", "kossakowski", "protocol", "scan", "output"):
        values: Mapping[str, Any] = getattr(config, section).model_dump()
        lines.append(f"[{section}]")
        for key, value in values.items():
            if value is None:
                continue
            lines.append(f"{key} = {_format_value(value)}")
        lines.append("")
    return "\n".join(lines)


__all__ = [
    "DEFAULT_V_CC",
    "PhysicsSection",
    "KossakowskiSection",
    "ProtocolSection",
    "ScanSection",
    "OutputSection",
    "RunConfig",
    "ConfigParser",
    "parse_config",
    "parse_grid",
    "format_config",
]
