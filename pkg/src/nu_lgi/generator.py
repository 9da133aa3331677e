"""Bloch-space generator ``H_eff = H + D`` built from physical inputs."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .auditor import validate_kossakowski
from .errors import InvalidArgumentError, NumericalError, RejectedCoefficientsError
from .linalg4 import Mat4, as_mat4
from .model import KossakowskiCoefficients, OscillationParams


@dataclass(frozen=True, eq=False)
class Generator4:
    """A 4x4 generator together with the inputs it was built from."""

    matrix: Mat4
    params: OscillationParams | None = None
    coefficients: KossakowskiCoefficients | None = None
    label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "matrix", as_mat4(self.matrix))


def build_hamiltonian_part(p: OscillationParams) -> Mat4:
    """Unitary part: antisymmetric, entries only in the spatial block.

    ``H12 = -dm2/(2E) + V cos 2theta``, ``H13 = -V sin(phi) sin 2theta``,
    ``H23 = V cos(phi) sin 2theta``.
    """

    if not isinstance(p, OscillationParams):
        raise InvalidArgumentError(f"expected OscillationParams, got {type(p).__name__}")
    sin2, cos2 = math.sin(2.0 * p.theta), math.cos(2.0 * p.theta)
    h12 = -p.dm2 / (2.0 * p.energy) + p.v_cc * cos2
    h13 = -p.v_cc * math.sin(p.phi) * sin2
    h23 = p.v_cc * math.cos(p.phi) * sin2
    matrix = np.zeros((4, 4))
    matrix[1, 2], matrix[2, 1] = h12, -h12
    matrix[1, 3], matrix[3, 1] = h13, -h13
    matrix[2, 3], matrix[3, 2] = h23, -h23
    return _finite_part(matrix, "Hamiltonian", p)


def _finite_part(matrix: np.ndarray, name: str, source: object) -> Mat4:
    if not np.all(np.isfinite(matrix)):
        raise NumericalError(f"{name} has non-finite entries for {source!r}")
    return as_mat4(matrix)


def _dissipator_inner(k: KossakowskiCoefficients) -> np.ndarray:
    # tr(c) * 1 - c: diagonal (c22 + c33, c11 + c33, c11 + c22), off-diagonal -c_ij
    c = np.asarray(k.as_matrix())
    return np.trace(c) * np.eye(3) - c


def build_dissipator(k: KossakowskiCoefficients) -> Mat4:
    """Dissipative part: ``-2`` times the inner coefficient block, zero row/column 0.

    Raises :class:`RejectedCoefficientsError` when *k* fails the positivity bound.
    """

    report = validate_kossakowski(k, check_psd=False)
    if not report.passed:
        raise RejectedCoefficientsError(f"Kossakowski coefficients rejected: {report.summary()}", report)
    matrix = np.zeros((4, 4))
    with np.errstate(over="ignore", invalid="ignore"):
        matrix[1:, 1:] = -2.0 * _dissipator_inner(k)
    return _finite_part(matrix, "dissipator", k)


def build_effective_generator(p: OscillationParams, k: KossakowskiCoefficients) -> Generator4:
    h = build_hamiltonian_part(p)
    d = build_dissipator(k)
    label = f"phi={p.phi:.6g} v_cc={p.v_cc:.6g}"
    with np.errstate(over="ignore", invalid="ignore"):
        total = h + d
    return Generator4(matrix=_finite_part(total, "generator", p), params=p, coefficients=k, label=label)


def h3_null_v_cc(theta: float, dm2: float, energy: float) -> float:
    """Return the potential ``V = dm2 / (2 E cos 2theta)`` that zeroes ``H12``.

    Only defined for ``theta < pi/4``.
    """

    cos2 = math.cos(2.0 * theta)
    if not cos2 > 0.0:
        raise InvalidArgumentError(f"no non-negative potential zeroes H12 for theta={theta!r}")
    if energy <= 0.0:
        raise InvalidArgumentError(f"energy must be positive, got {energy!r}")
    return dm2 / (2.0 * energy * cos2)


__all__ = [
    "Generator4",
    "build_hamiltonian_part",
    "build_dissipator",
    "build_effective_generator",
    "h3_null_v_cc",
]
