"""Leggett-Garg K3 and Dirac-Majorana discrimination for dissipative neutrino oscillations."""

from . import units
from .version import __version__
from .errors import (
    NuLgiError,
    InvalidArgumentError,
    RejectedCoefficientsError,
    NumericalError,
    ConfigError,
    ScanRowError,
)
from .model import OscillationParams, KossakowskiCoefficients
from .auditor import KossakowskiAuditor, ValidationReport, validate_kossakowski
from .generator import (
    Generator4,
    build_hamiltonian_part,
    build_dissipator,
    build_effective_generator,
    h3_null_v_cc,
)
from .dynamics import BlochVector, evolve, evolve_rk4, schrodinger_dual
from .leggett_garg import TimeTriple, K3Result, correlation, k3, k3_pair, delta_k3, lgi_violated, phi_envelope
from .scan import GridSpec, ScanBase, ScanSpec, ScanResult, run_scan, run_scan_2d, correlation_scan
from .config import RunConfig, parse_config, format_config
from .pipeline import SweepPipeline

__all__ = [
    "__version__",
    "units",
    "NuLgiError",
    "InvalidArgumentError",
    "RejectedCoefficientsError",
    "NumericalError",
    "ConfigError",
    "ScanRowError",
    "OscillationParams",
    "KossakowskiCoefficients",
    "KossakowskiAuditor",
    "ValidationReport",
    "validate_kossakowski",
    "Generator4",
    "build_hamiltonian_part",
    "build_dissipator",
    "build_effective_generator",
    "h3_null_v_cc",
    "BlochVector",
    "evolve",
    "evolve_rk4",
    "schrodinger_dual",
    "TimeTriple",
    "K3Result",
    "correlation",
    "k3",
    "k3_pair",
    "delta_k3",
    "lgi_violated",
    "phi_envelope",
    "GridSpec",
    "ScanBase",
    "ScanSpec",
    "ScanResult",
    "run_scan",
    "run_scan_2d",
    "correlation_scan",
    "RunConfig",
    "parse_config",
    "format_config",
    "SweepPipeline",
]
