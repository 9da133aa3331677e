"""Time evolution of Bloch vectors under a constant generator.

Two independent paths are provided: the matrix exponential (:func:`evolve`)
and a fixed-step classical Runge-Kutta integrator (:func:`evolve_rk4`).
Times are forward only and measured in 1/eV.
"""

from __future__ import annotations

import logging
import math
from typing import Any, Iterable

import numpy as np

from ..errors import InvalidArgumentError, NumericalError
from ..generator import Generator4
from ..linalg4 import as_mat4, inf_norm, mat_exp, mat_vec
from .state import BlochVector, Trajectory

logger = logging.getLogger(__name__)

DEFAULT_MAX_STEP_NORM = 0.005


def _forward_time(t: Any) -> float:
    t = float(t)
    if not math.isfinite(t):
        raise InvalidArgumentError(f"time must be finite, got {t!r}")
    if t < 0.0:
        raise InvalidArgumentError(f"time must be non-negative, got {t!r}")
    return t


def evolve(G: Any, q0: Any, t: float) -> BlochVector:
    """Return ``exp(G t) q0``."""

    t = _forward_time(t)
    q0 = BlochVector.of(q0)
    if t == 0.0:
        return q0
    return BlochVector(mat_vec(mat_exp(G, t), q0))


def rk4_steps_for(G: Any, t: float, max_step_norm: float = DEFAULT_MAX_STEP_NORM) -> int:
    """Smallest step count with ``(t / steps) * ||G||_inf <= max_step_norm``."""

    if not max_step_norm > 0.0:
        raise InvalidArgumentError(f"max_step_norm must be positive, got {max_step_norm!r}")
    t = _forward_time(t)
    scale = t * inf_norm(G)
    return max(1, math.ceil(scale / max_step_norm))


def evolve_rk4(G: Any, q0: Any, t: float, steps: int | None = None) -> BlochVector:
    """Integrate ``dA/dt = G A`` with classical fourth-order Runge-Kutta.

    ``steps`` defaults to :func:`rk4_steps_for`.
    """

    t = _forward_time(t)
    matrix = as_mat4(G)
    if steps is None:
        steps = rk4_steps_for(matrix, t)
    if isinstance(steps, bool) or not isinstance(steps, (int, np.integer)) or steps < 1:
        raise InvalidArgumentError(f"steps must be a positive integer, got {steps!r}")

    state = np.array(BlochVector.of(q0).a, dtype=float)
    dt = t / steps
    for _ in range(int(steps)):
        k1 = matrix @ state
        k2 = matrix @ (state + 0.5 * dt * k1)
        k3 = matrix @ (state + 0.5 * dt * k2)
        k4 = matrix @ (state + dt * k3)
        state = state + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)

    if not np.all(np.isfinite(state)):
        raise NumericalError(f"RK4 integration diverged at t={t!r} with {steps} steps")
    logger.debug("RK4 integration to t=%g used %d steps", t, steps)
    return BlochVector(state)


def trajectory(G: Any, q0: Any, times: Iterable[float]) -> Trajectory:
    """Evaluate :func:`evolve` at each of *times* (in the order given)."""

    q0 = BlochVector.of(q0)
    log = Trajectory()
    for t in times:
        log.append(float(t), evolve(G, q0, t))
    return log


def schrodinger_dual(G: Any) -> Generator4:
    """Return the state-picture generator ``G^T``.

    The antisymmetric part changes sign and the symmetric dissipator is kept,
    so ``dot(exp(G t) q, r) == dot(q, exp(G^T t) r)``.
    """

    if isinstance(G, Generator4):
        label = f"{G.label} (state picture)" if G.label else "state picture"
        return Generator4(G.matrix.T, params=G.params, coefficients=G.coefficients, label=label)
    return Generator4(as_mat4(G).T, label="state picture")


__all__ = [
    "DEFAULT_MAX_STEP_NORM",
    "evolve",
    "evolve_rk4",
    "rk4_steps_for",
    "trajectory",
    "schrodinger_dual",
]
