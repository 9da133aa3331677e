"""Bloch-vector dynamics: exponential propagation and an RK4 cross-check."""

from .state import BlochVector, Trajectory
from .propagator import (
    DEFAULT_MAX_STEP_NORM,
    evolve,
    evolve_rk4,
    rk4_steps_for,
    schrodinger_dual,
    trajectory,
)

__all__ = [
    "BlochVector",
    "Trajectory",
    "DEFAULT_MAX_STEP_NORM",
    "evolve",
    "evolve_rk4",
    "rk4_steps_for",
    "schrodinger_dual",
    "trajectory",
]
