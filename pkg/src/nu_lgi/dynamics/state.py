"""Bloch-vector state containers."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, List

import numpy as np

from ..linalg4 import Vec4, as_vec4


@dataclass(frozen=True, eq=False)
class BlochVector:
    """Coefficients ``(a0, a1, a2, a3)`` of ``A = sum a_i sigma_i``."""

    a: Vec4

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", as_vec4(self.a))

    @classmethod
    def of(cls, value: Any) -> "BlochVector":
        return value if isinstance(value, cls) else cls(value)

    @classmethod
    def sigma_z(cls) -> "BlochVector":
        """The flavour observable ``Q(0) = sigma_z``."""

        return cls(np.array([0.0, 0.0, 0.0, 1.0]))

    @property
    def a0(self) -> float:
        return float(self.a[0])

    @property
    def a1(self) -> float:
        return float(self.a[1])

    @property
    def a2(self) -> float:
        return float(self.a[2])

    @property
    def a3(self) -> float:
        return float(self.a[3])

    @property
    def spatial_norm(self) -> float:
        return math.sqrt(self.a1 * self.a1 + self.a2 * self.a2 + self.a3 * self.a3)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.a0, self.a1, self.a2, self.a3)


@dataclass
class Trajectory:
    times: List[float] = field(default_factory=list)
    states: List[BlochVector] = field(default_factory=list)

    def append(self, t: float, state: BlochVector) -> None:
        self.times.append(t)
        self.states.append(state)

    def spatial_norms(self) -> List[float]:
        return [state.spatial_norm for state in self.states]

    def __len__(self) -> int:
        return len(self.times)


__all__ = ["BlochVector", "Trajectory"]
