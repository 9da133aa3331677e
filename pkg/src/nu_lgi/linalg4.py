"""Dense real 4x4 kernel used by all dynamics.

Index convention (shared by every module): component 0 is the identity
coefficient, components 1, 2, 3 are the sigma_x, sigma_y, sigma_z
coefficients. Matrices are row-major ``numpy`` arrays of shape (4, 4) and
``M[i, j]`` multiplies component ``j`` into component ``i``. Generator
entries carry units of eV (hbar = 1), times are in 1/eV.

Arrays returned from this module are read-only so values can be shared
freely between threads.
"""

from __future__ import annotations

import math
from typing import Any

import numpy as np
import numpy.typing as npt
from scipy.linalg import expm

from .errors import InvalidArgumentError, NumericalError

Mat4 = npt.NDArray[np.float64]
Vec4 = npt.NDArray[np.float64]

_IDENTITY = np.eye(4)
_IDENTITY.setflags(write=False)


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def as_mat4(value: Any) -> Mat4:
    """Return *value* as a finite, read-only float64 (4, 4) array."""

    matrix = np.array(getattr(value, "matrix", value), dtype=float)
    if matrix.shape != (4, 4):
        raise InvalidArgumentError(f"expected a 4x4 matrix, got shape {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise InvalidArgumentError("matrix has non-finite entries")
    return _frozen(matrix)


def as_vec4(value: Any) -> Vec4:
    """Return *value* as a finite, read-only float64 vector of length 4."""

    vector = np.array(getattr(value, "a", value), dtype=float)
    if vector.shape != (4,):
        raise InvalidArgumentError(f"expected a 4-vector, got shape {vector.shape}")
    if not np.all(np.isfinite(vector)):
        raise InvalidArgumentError("vector has non-finite components")
    return _frozen(vector)


def mat_exp(m: Any, t: float) -> Mat4:
    """Return ``exp(m * t)``.

    Uses scipy's scaling-and-squaring Pade approximant. ``t == 0`` returns the
    identity without touching the matrix entries.
    """

    matrix = as_mat4(m)
    t = float(t)
    if not math.isfinite(t):
        raise InvalidArgumentError(f"time must be finite, got {t!r}")
    if t == 0.0:
        return _IDENTITY
    result = expm(matrix * t)
    if not np.all(np.isfinite(result)):
        raise NumericalError(f"matrix exponential overflowed at t={t!r}")
    return _frozen(np.asarray(result, dtype=float))


def mat_vec(m: Any, v: Any) -> Vec4:
    return _frozen(as_mat4(m) @ as_vec4(v))


def mat_mul(a: Any, b: Any) -> Mat4:
    return _frozen(as_mat4(a) @ as_mat4(b))


def dot(u: Any, v: Any) -> float:
    """Sum over all four components, identity coefficient included."""

    return float(as_vec4(u) @ as_vec4(v))


def inf_norm(m: Any) -> float:
    """Maximum absolute row sum."""

    return float(np.max(np.sum(np.abs(as_mat4(m)), axis=1)))


__all__ = [
    "Mat4",
    "Vec4",
    "as_mat4",
    "as_vec4",
    "mat_exp",
    "mat_vec",
    "mat_mul",
    "dot",
    "inf_norm",
]
