"""Scan specifications, rows and results."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Dict, List, Literal, Tuple

from ..errors import InvalidArgumentError
from ..model import DEFAULT_TAU, KossakowskiCoefficients, OscillationParams

Parameter = Literal["phi", "v_cc", "c12", "tau", "energy"]
Mode = Literal["k3_pair", "delta_k3"]

PARAMETERS: Tuple[str, ...] = ("phi", "v_cc", "c12", "tau", "energy")
MODES: Tuple[str, ...] = ("k3_pair", "delta_k3")


@dataclass(frozen=True)
class GridSpec:
    """Closed uniform grid with ``count >= 2`` points."""

    start: float
    stop: float
    count: int

    def __post_init__(self) -> None:
        start, stop = float(self.start), float(self.stop)
        if not (math.isfinite(start) and math.isfinite(stop)):
            raise InvalidArgumentError(f"grid bounds must be finite, got {start!r}:{stop!r}")
        if isinstance(self.count, bool) or int(self.count) != self.count:
            raise InvalidArgumentError(f"grid count must be an integer, got {self.count!r}")
        if self.count < 2:
            raise InvalidArgumentError(f"grid count must be at least 2, got {self.count!r}")
        if not start < stop:
            raise InvalidArgumentError(f"grid start must be below stop, got {start!r}:{stop!r}")
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "stop", stop)
        object.__setattr__(self, "count", int(self.count))

    def points(self) -> List[float]:
        span = self.stop - self.start
        last = self.count - 1
        return [self.start + i * span / last for i in range(self.count)]

    @property
    def step(self) -> float:
        return (self.stop - self.start) / (self.count - 1)

    @classmethod
    def parse(cls, text: str, convert: Callable[[str], float] = float) -> "GridSpec":
        """Parse ``start:stop:count``; *convert* handles the two bounds."""

        parts = [part.strip() for part in str(text).split(":")]
        if len(parts) != 3:
            raise InvalidArgumentError(f"grid must look like start:stop:count, got {text!r}")
        try:
            start, stop = convert(parts[0]), convert(parts[1])
            count = int(parts[2])
        except (TypeError, ValueError) as exc:
            raise InvalidArgumentError(f"malformed grid {text!r}: {exc}") from exc
        return cls(start, stop, count)

    def format(self) -> str:
        return f"{self.start!r}:{self.stop!r}:{self.count}"


@dataclass(frozen=True)
class ScanBase:
    """Fixed inputs shared by every row of a scan."""

    params: OscillationParams = field(default_factory=OscillationParams)
    coefficients: KossakowskiCoefficients = field(default_factory=KossakowskiCoefficients)
    tau: float = DEFAULT_TAU

    def __post_init__(self) -> None:
        tau = float(self.tau)
        if not (math.isfinite(tau) and tau > 0.0):
            raise InvalidArgumentError(f"tau must be positive and finite, got {tau!r}")
        object.__setattr__(self, "tau", tau)

    def at(self, parameter: str, value: float) -> "ScanBase":
        """Return a copy with *parameter* set to *value*."""

        if parameter == "phi":
            return replace(self, params=self.params.with_phi(value))
        if parameter in ("v_cc", "energy"):
            return replace(self, params=self.params.replace(**{parameter: value}))
        if parameter == "c12":
            return replace(self, coefficients=self.coefficients.replace(c12=value))
        if parameter == "tau":
            return replace(self, tau=value)
        raise InvalidArgumentError(f"unknown scan parameter {parameter!r}")


@dataclass(frozen=True)
class ScanSpec:
    """A 1-D sweep.

    ``mode`` picks the primary figure of merit: ``delta_k3`` ranks rows by
    ``|delta K3|``, ``k3_pair`` by the Majorana K3. With ``phi_envelope`` the
    Majorana phase of each row is replaced by the maximiser of that figure
    over a ``envelope_count``-point phase grid.
    """

    parameter: Parameter
    grid: GridSpec
    base: ScanBase = field(default_factory=ScanBase)
    mode: Mode = "delta_k3"
    phi_envelope: bool = False
    envelope_count: int = 64
    workers: int = 1

    def __post_init__(self) -> None:
        if self.parameter not in PARAMETERS:
            raise InvalidArgumentError(f"scan parameter must be one of {PARAMETERS}, got {self.parameter!r}")
        if self.mode not in MODES:
            raise InvalidArgumentError(f"scan mode must be one of {MODES}, got {self.mode!r}")
        if self.phi_envelope and self.parameter == "phi":
            raise InvalidArgumentError("a phase envelope cannot be combined with a phase scan")
        if self.envelope_count < 1:
            raise InvalidArgumentError(f"envelope_count must be positive, got {self.envelope_count!r}")
        if isinstance(self.workers, bool) or self.workers < 1:
            raise InvalidArgumentError(f"workers must be a positive integer, got {self.workers!r}")

    @property
    def objective(self) -> str:
        return "abs_delta" if self.mode == "delta_k3" else "k3"

    def replace(self, **changes: Any) -> "ScanSpec":
        return replace(self, **changes)

    def describe(self) -> Dict[str, Any]:
        """Flat parameter echo used for output metadata."""

        info: Dict[str, Any] = {
            "parameter": self.parameter,
            "grid": self.grid.format(),
            "mode": self.mode,
            "phi_envelope": self.phi_envelope,
        }
        if self.phi_envelope:
            info["envelope_count"] = self.envelope_count
        info.update(self.base.params.to_dict())
        info.update(self.base.coefficients.to_dict())
        info["tau"] = self.base.tau
        return info


@dataclass(frozen=True)
class ScanRow:
    param_value: float
    k3_dirac: float
    k3_majorana: float
    delta_k3: float
    violated_dirac: bool
    violated_majorana: bool
    phi: float


@dataclass(frozen=True)
class CorrelationRow(ScanRow):
    """Scan row with the Majorana correlators and their Dirac-minus-Majorana differences."""

    c21: float
    c32: float
    c31: float
    dc21: float
    dc32: float
    dc31: float


@dataclass(frozen=True)
class Argmax:
    param_value: float
    value: float


@dataclass(frozen=True)
class ScanResult:
    spec: ScanSpec
    rows: Tuple[ScanRow, ...]
    argmax_abs_delta: Argmax | None = None
    argmax_k3: Argmax | None = None
    correlators: bool = False
    outer: Tuple[str, float] | None = None

    def column(self, name: str) -> List[float]:
        return [float(getattr(row, name)) for row in self.rows]

    @property
    def param_values(self) -> List[float]:
        return [row.param_value for row in self.rows]

    def primary_argmax(self) -> Argmax | None:
        return self.argmax_abs_delta if self.spec.mode == "delta_k3" else self.argmax_k3


__all__ = [
    "PARAMETERS",
    "MODES",
    "GridSpec",
    "ScanBase",
    "ScanSpec",
    "ScanRow",
    "CorrelationRow",
    "Argmax",
    "ScanResult",
]
