"""Kossakowski auditor: positivity checks on the dissipator coefficients."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, List, Tuple

import numpy as np

from .model import KossakowskiCoefficients


@dataclass(frozen=True)
class Violation:
    """One failed bound. ``pair == (i, i)`` marks a negative diagonal entry."""

    pair: Tuple[int, int]
    value: float
    bound: float

    def describe(self) -> str:
        i, j = self.pair
        if i == j:
            return f"c{i}{i} = {self.value:g} is negative"
        return f"|c{i}{j}| = {abs(self.value):g} exceeds bound {self.bound:g} = (c{i}{i} + c{j}{j})/2"


@dataclass
class ValidationReport:
    """Outcome of auditing a coefficient set."""

    passed: bool
    violations: List[Violation] = field(default_factory=list)
    boundary_pairs: List[Tuple[int, int]] = field(default_factory=list)
    observations: List[str] = field(default_factory=list)
    psd: bool | None = None
    min_eigenvalue: float | None = None

    @property
    def on_boundary(self) -> bool:
        return self.passed and bool(self.boundary_pairs)

    def summary(self) -> str:
        if not self.passed:
            details = "; ".join(v.describe() for v in self.violations)
            return f"fail ({details})"
        return "pass (boundary)" if self.on_boundary else "pass"


class KossakowskiAuditor:
    """Rule-based checker for ``|c_ij| <= (c_ii + c_jj) / 2`` and ``c_ii >= 0``.

    Equality at the bound passes. The positive-semidefinite check is advisory
    only: it is reported but never turns a pass into a failure.
    """

    def __init__(self, *, check_psd: bool = True, psd_tolerance: float = 1e-12) -> None:
        self.check_psd = check_psd
        self.psd_tolerance = psd_tolerance

    def audit(self, k: Any) -> ValidationReport:
        coefficients = self._coerce(k)
        report = ValidationReport(passed=True)
        self._check_diagonal(coefficients, report)
        self._check_pairs(coefficients, report)
        if self.check_psd:
            self._check_semidefinite(coefficients, report)
        report.passed = not report.violations
        if not report.observations:
            report.observations.append("Coefficients satisfy the positivity bound.")
        return report

    # ------------------------------------------------------------------ helpers
    @staticmethod
    def _coerce(k: Any) -> KossakowskiCoefficients:
        if isinstance(k, KossakowskiCoefficients):
            return k
        return KossakowskiCoefficients.from_matrix(k)

    @staticmethod
    def _check_diagonal(k: KossakowskiCoefficients, report: ValidationReport) -> None:
        for i in (1, 2, 3):
            value = k.get(i, i)
            if value < 0.0:
                report.violations.append(Violation(pair=(i, i), value=value, bound=0.0))
                report.observations.append(f"Diagonal coefficient c{i}{i} is negative.")

    @staticmethod
    def _check_pairs(k: KossakowskiCoefficients, report: ValidationReport) -> None:
        for i, j in k.pairs():
            value = k.get(i, j)
            bound = 0.5 * (k.get(i, i) + k.get(j, j))
            if abs(value) > bound:
                violation = Violation(pair=(i, j), value=value, bound=bound)
                report.violations.append(violation)
                report.observations.append(violation.describe())
            elif abs(value) == bound and value != 0.0:
                report.boundary_pairs.append((i, j))
                report.observations.append(f"|c{i}{j}| sits exactly on its bound {bound:g}.")

    def _check_semidefinite(self, k: KossakowskiCoefficients, report: ValidationReport) -> None:
        eigenvalues = np.linalg.eigvalsh(k.as_matrix())
        report.min_eigenvalue = float(eigenvalues[0])
        report.psd = bool(eigenvalues[0] >= -self.psd_tolerance)
        if not report.psd:
            report.observations.append(
                f"Coefficient matrix is not positive semidefinite (smallest eigenvalue {eigenvalues[0]:.3g})."
            )


def validate_kossakowski(k: Any, *, check_psd: bool = True) -> ValidationReport:
    """Audit *k* (coefficients or a symmetric 3x3 array).

    Raises :class:`InvalidArgumentError` for asymmetric input, which is kept
    distinct from a failed report.
    """

    if not isinstance(k, KossakowskiCoefficients):
        k = KossakowskiCoefficients.from_matrix(k)
    return KossakowskiAuditor(check_psd=check_psd).audit(k)


__all__ = ["Violation", "ValidationReport", "KossakowskiAuditor", "validate_kossakowski"]
