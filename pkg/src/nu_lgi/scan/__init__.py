"""Parameter sweeps over the Leggett-Garg figures of merit."""

from .spec import (
    MODES,
    PARAMETERS,
    Argmax,
    CorrelationRow,
    GridSpec,
    ScanBase,
    ScanResult,
    ScanRow,
    ScanSpec,
)
from .engine import SurfacePoint, correlation_scan, refine_argmax, run_scan, run_scan_2d, surface_argmax
from .metrics import argmax_abs_delta, argmax_k3, summarize

__all__ = [
    "MODES",
    "PARAMETERS",
    "Argmax",
    "CorrelationRow",
    "GridSpec",
    "ScanBase",
    "ScanResult",
    "ScanRow",
    "ScanSpec",
    "SurfacePoint",
    "correlation_scan",
    "refine_argmax",
    "run_scan",
    "run_scan_2d",
    "surface_argmax",
    "argmax_abs_delta",
    "argmax_k3",
    "summarize",
]
