"""Leggett-Garg correlators, the K3 parameter and the Dirac-Majorana difference."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any, Literal, Tuple

from .dynamics import BlochVector, evolve
from .errors import InvalidArgumentError
from .generator import build_effective_generator
from .linalg4 import dot
from .model import TWO_PI, KossakowskiCoefficients, OscillationParams

logger = logging.getLogger(__name__)

# absolute slack on the macrorealist bound K3 <= 1
VIOLATION_SLACK = 1e-12

Objective = Literal["abs_delta", "k3"]


@dataclass(frozen=True)
class TimeTriple:
    """Measurement times ``t1 < t2 < t3`` in 1/eV."""

    t1: float
    t2: float
    t3: float

    def __post_init__(self) -> None:
        values = tuple(float(t) for t in (self.t1, self.t2, self.t3))
        if not all(math.isfinite(t) for t in values):
            raise InvalidArgumentError(f"times must be finite, got {values!r}")
        if values[0] < 0.0:
            raise InvalidArgumentError(f"times must be non-negative, got {values!r}")
        if not values[0] < values[1] < values[2]:
            raise InvalidArgumentError(f"times must satisfy t1 < t2 < t3, got {values!r}")
        for name, value in zip(("t1", "t2", "t3"), values):
            object.__setattr__(self, name, value)

    @classmethod
    def from_spacing(cls, tau: float) -> "TimeTriple":
        """Equal spacing anchored at zero: ``(0, tau, 2 tau)``."""

        tau = float(tau)
        if not (math.isfinite(tau) and tau > 0.0):
            raise InvalidArgumentError(f"tau must be positive and finite, got {tau!r}")
        return cls(0.0, tau, 2.0 * tau)


@dataclass(frozen=True)
class CorrelatorSet:
    c21: float
    c32: float
    c31: float

    @property
    def k3(self) -> float:
        return self.c21 + self.c32 - self.c31


@dataclass(frozen=True)
class K3Result:
    c21: float
    c32: float
    c31: float
    k3: float
    violated: bool

    @classmethod
    def from_correlators(cls, correlators: CorrelatorSet) -> "K3Result":
        value = correlators.k3
        return cls(
            c21=correlators.c21,
            c32=correlators.c32,
            c31=correlators.c31,
            k3=value,
            violated=value > 1.0 + VIOLATION_SLACK,
        )

    @property
    def correlators(self) -> CorrelatorSet:
        return CorrelatorSet(self.c21, self.c32, self.c31)


@dataclass(frozen=True)
class PhaseOptimum:
    phi: float
    value: float


def correlation(G: Any, q0: Any, ti: float, tj: float) -> float:
    """Two-time correlator ``q(ti) . q(tj)`` over all four components."""

    ti, tj = float(ti), float(tj)
    if not (0.0 <= ti <= tj):
        raise InvalidArgumentError(f"correlation needs 0 <= ti <= tj, got ti={ti!r}, tj={tj!r}")
    q0 = BlochVector.of(q0)
    return dot(evolve(G, q0, ti), evolve(G, q0, tj))


def correlators(G: Any, q0: Any, times: TimeTriple) -> CorrelatorSet:
    q0 = BlochVector.of(q0)
    q1, q2, q3 = (evolve(G, q0, t) for t in (times.t1, times.t2, times.t3))
    return CorrelatorSet(c21=dot(q1, q2), c32=dot(q2, q3), c31=dot(q1, q3))


def k3(G: Any, q0: Any, times: TimeTriple) -> K3Result:
    """``K3 = C21 + C32 - C31`` at the three given times."""

    return K3Result.from_correlators(correlators(G, q0, times))


def lgi_violated(r: K3Result | float) -> bool:
    """True iff K3 exceeds the upper macrorealist bound 1 (with slack)."""

    value = float(getattr(r, "k3", r))
    return value > 1.0 + VIOLATION_SLACK


def _k3_at(p: OscillationParams, k: KossakowskiCoefficients, times: TimeTriple) -> K3Result:
    return k3(build_effective_generator(p, k), BlochVector.sigma_z(), times)


def k3_pair(p: OscillationParams, k: KossakowskiCoefficients, times: TimeTriple) -> Tuple[K3Result, K3Result]:
    """Return ``(dirac, majorana)`` K3 results; the Dirac one re-evaluates at phi = 0."""

    dirac = _k3_at(p.dirac(), k, times)
    majorana = dirac if p.is_dirac else _k3_at(p, k, times)
    return dirac, majorana


def delta_k3(p: OscillationParams, k: KossakowskiCoefficients, tau: float) -> float:
    """``K3(phi=0) - K3(phi)`` at times ``(0, tau, 2 tau)`` starting from sigma_z."""

    dirac, majorana = k3_pair(p, k, TimeTriple.from_spacing(tau))
    return dirac.k3 - majorana.k3


def phi_grid(count: int) -> list[float]:
    """Half-open phase grid ``2 pi i / count``."""

    if count < 1:
        raise InvalidArgumentError(f"phase grid needs at least one point, got {count!r}")
    return [TWO_PI * i / count for i in range(count)]


def phi_envelope(
    p: OscillationParams,
    k: KossakowskiCoefficients,
    tau: float,
    objective: Objective = "abs_delta",
    count: int = 64,
) -> PhaseOptimum:
    """Maximise over the phase grid either ``|delta K3|`` or the Majorana K3.

    Ties resolve to the smallest phase.
    """

    if objective not in ("abs_delta", "k3"):
        raise InvalidArgumentError(f"unknown objective {objective!r}")
    times = TimeTriple.from_spacing(tau)
    dirac = _k3_at(p.dirac(), k, times)
    best: PhaseOptimum | None = None
    for phi in phi_grid(count):
        majorana = dirac if phi == 0.0 else _k3_at(p.with_phi(phi), k, times)
        value = abs(dirac.k3 - majorana.k3) if objective == "abs_delta" else majorana.k3
        if best is None or value > best.value:
            best = PhaseOptimum(phi=phi, value=value)
    assert best is not None
    logger.debug("phase envelope (%s) at v_cc=%g: phi=%g value=%g", objective, p.v_cc, best.phi, best.value)
    return best


__all__ = [
    "VIOLATION_SLACK",
    "TimeTriple",
    "CorrelatorSet",
    "K3Result",
    "PhaseOptimum",
    "correlation",
    "correlators",
    "k3",
    "lgi_violated",
    "k3_pair",
    "delta_k3",
    "phi_grid",
    "phi_envelope",
]
