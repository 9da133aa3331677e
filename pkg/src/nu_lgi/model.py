"""Physical inputs: oscillation parameters and Kossakowski coefficients."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, replace
from typing import Any, Dict

import numpy as np
import numpy.typing as npt

from .errors import InvalidArgumentError

TWO_PI = 2.0 * math.pi

# solar-sector values used as defaults throughout
DEFAULT_THETA = 0.187 * math.pi
DEFAULT_DM2 = 7.54e-5
DEFAULT_ENERGY = 1.0
DEFAULT_TAU = 0.1


def _finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise InvalidArgumentError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class OscillationParams:
    """Two-flavour oscillation inputs in natural units.

    ``phi == 0`` is the Dirac case; any other value is a Majorana phase.
    The closed range ``[0, 2*pi]`` is accepted so inclusive phase grids work.
    """

    theta: float = DEFAULT_THETA  # mixing angle, rad
    dm2: float = DEFAULT_DM2  # mass-squared splitting, eV^2
    energy: float = DEFAULT_ENERGY  # average neutrino energy, eV
    v_cc: float = 0.0  # charged-current potential, eV
    phi: float = 0.0  # Majorana phase, rad

    def __post_init__(self) -> None:
        for name in ("theta", "dm2", "energy", "v_cc", "phi"):
            object.__setattr__(self, name, _finite(name, getattr(self, name)))
        if self.energy <= 0.0:
            raise InvalidArgumentError(f"energy must be positive, got {self.energy!r}")
        if self.dm2 < 0.0:
            raise InvalidArgumentError(f"dm2 must be non-negative, got {self.dm2!r}")
        if self.v_cc < 0.0:
            raise InvalidArgumentError(f"v_cc must be non-negative, got {self.v_cc!r}")
        if not 0.0 <= self.theta <= math.pi / 2.0:
            raise InvalidArgumentError(f"theta must lie in [0, pi/2], got {self.theta!r}")
        if not 0.0 <= self.phi <= TWO_PI:
            raise InvalidArgumentError(f"phi must lie in [0, 2*pi], got {self.phi!r}")

    @property
    def is_dirac(self) -> bool:
        return self.phi == 0.0

    def with_phi(self, phi: float) -> "OscillationParams":
        return replace(self, phi=phi)

    def dirac(self) -> "OscillationParams":
        return replace(self, phi=0.0)

    def replace(self, **changes: Any) -> "OscillationParams":
        return replace(self, **changes)

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> "OscillationParams":
        return cls(**{key: payload[key] for key in ("theta", "dm2", "energy", "v_cc", "phi") if key in payload})


_PAIRS = ((1, 2), (1, 3), (2, 3))


@dataclass(frozen=True)
class KossakowskiCoefficients:
    """Symmetric real 3x3 matrix ``[c_ij]`` over the spatial Pauli block (eV).

    Construction checks finiteness only; positivity is the auditor's job so
    that rejected matrices can still be represented and reported.
    """

    c11: float = 0.0
    c22: float = 0.0
    c33: float = 0.0
    c12: float = 0.0
    c13: float = 0.0
    c23: float = 0.0

    def __post_init__(self) -> None:
        for name in ("c11", "c22", "c33", "c12", "c13", "c23"):
            object.__setattr__(self, name, _finite(name, getattr(self, name)))

    def get(self, i: int, j: int) -> float:
        """Return ``c_ij`` with 1-based indices, symmetric in ``i`` and ``j``."""

        if not (1 <= i <= 3 and 1 <= j <= 3):
            raise InvalidArgumentError(f"indices must lie in 1..3, got ({i}, {j})")
        lo, hi = min(i, j), max(i, j)
        return getattr(self, f"c{lo}{hi}")

    def as_matrix(self) -> npt.NDArray[np.float64]:
        matrix = np.array(
            [
                [self.c11, self.c12, self.c13],
                [self.c12, self.c22, self.c23],
                [self.c13, self.c23, self.c33],
            ],
            dtype=float,
        )
        matrix.setflags(write=False)
        return matrix

    @property
    def is_diagonal(self) -> bool:
        return self.c12 == 0.0 and self.c13 == 0.0 and self.c23 == 0.0

    @property
    def is_zero(self) -> bool:
        return self.is_diagonal and self.c11 == 0.0 and self.c22 == 0.0 and self.c33 == 0.0

    @staticmethod
    def pairs() -> tuple[tuple[int, int], ...]:
        return _PAIRS

    @classmethod
    def from_matrix(cls, matrix: Any, *, atol: float = 0.0) -> "KossakowskiCoefficients":
        """Build from a 3x3 array; asymmetric input is an argument error."""

        array = np.asarray(matrix, dtype=float)
        if array.shape != (3, 3):
            raise InvalidArgumentError(f"Kossakowski matrix must be 3x3, got shape {array.shape}")
        if not np.all(np.isfinite(array)):
            raise InvalidArgumentError("Kossakowski matrix has non-finite entries")
        if not np.allclose(array, array.T, rtol=0.0, atol=atol):
            raise InvalidArgumentError("Kossakowski matrix must be symmetric (c_ij == c_ji)")
        return cls(
            c11=array[0, 0],
            c22=array[1, 1],
            c33=array[2, 2],
            c12=array[0, 1],
            c13=array[0, 2],
            c23=array[1, 2],
        )

    @classmethod
    def isotropic(cls, g: float) -> "KossakowskiCoefficients":
        return cls(c11=g, c22=g, c33=g)

    @classmethod
    def with_coupling(cls, g: float, c12: float | None = None) -> "KossakowskiCoefficients":
        """Equal diagonal ``g`` plus an off-diagonal ``c12`` (defaults to ``g``)."""

        return cls(c11=g, c22=g, c33=g, c12=g if c12 is None else c12)

    def replace(self, **changes: Any) -> "KossakowskiCoefficients":
        return replace(self, **changes)

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> "KossakowskiCoefficients":
        return cls(**{key: payload[key] for key in ("c11", "c22", "c33", "c12", "c13", "c23") if key in payload})


__all__ = [
    "OscillationParams",
    "KossakowskiCoefficients",
    "TWO_PI",
    "DEFAULT_THETA",
    "DEFAULT_DM2",
    "DEFAULT_ENERGY",
    "DEFAULT_TAU",
]
