"""Deterministic 1-D and 2-D parameter sweeps and their optima."""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from scipy.optimize import minimize_scalar

from ..errors import InvalidArgumentError, NuLgiError, NumericalError, ScanRowError
from ..leggett_garg import TimeTriple, k3_pair, phi_envelope
from .metrics import argmax_abs_delta, argmax_k3
from .spec import Argmax, CorrelationRow, ScanResult, ScanRow, ScanSpec

logger = logging.getLogger(__name__)


def _evaluate_row(spec: ScanSpec, value: float, *, with_correlators: bool = False) -> ScanRow:
    base = spec.base.at(spec.parameter, value)
    params, coefficients = base.params, base.coefficients
    if spec.phi_envelope:
        optimum = phi_envelope(params, coefficients, base.tau, spec.objective, spec.envelope_count)
        params = params.with_phi(optimum.phi)

    dirac, majorana = k3_pair(params, coefficients, TimeTriple.from_spacing(base.tau))
    values = (dirac.c21, dirac.c32, dirac.c31, majorana.c21, majorana.c32, majorana.c31)
    if not all(math.isfinite(v) for v in values):
        raise NumericalError(f"non-finite correlator at {spec.parameter}={value!r}")

    common = dict(
        param_value=value,
        k3_dirac=dirac.k3,
        k3_majorana=majorana.k3,
        delta_k3=dirac.k3 - majorana.k3,
        violated_dirac=dirac.violated,
        violated_majorana=majorana.violated,
        phi=params.phi,
    )
    if not with_correlators:
        return ScanRow(**common)
    return CorrelationRow(
        **common,
        c21=majorana.c21,
        c32=majorana.c32,
        c31=majorana.c31,
        dc21=dirac.c21 - majorana.c21,
        dc32=dirac.c32 - majorana.c32,
        dc31=dirac.c31 - majorana.c31,
    )


def _guarded(spec: ScanSpec, value: float, with_correlators: bool) -> ScanRow:
    try:
        return _evaluate_row(spec, value, with_correlators=with_correlators)
    except (NuLgiError, ArithmeticError, ValueError) as exc:
        raise ScanRowError(((spec.parameter, value),), exc) from exc


def _run_rows(spec: ScanSpec, with_correlators: bool) -> List[ScanRow]:
    points = spec.grid.points()
    if spec.workers == 1 or len(points) == 1:
        return [_guarded(spec, value, with_correlators) for value in points]

    rows: List[ScanRow | None] = [None] * len(points)
    with ThreadPoolExecutor(max_workers=spec.workers) as executor:
        futures = [executor.submit(_guarded, spec, value, with_correlators) for value in points]
        # collect in grid order so the first failing row is the one reported
        for index, future in enumerate(futures):
            try:
                rows[index] = future.result()
            except ScanRowError:
                for pending in futures[index + 1 :]:
                    pending.cancel()
                raise
    return [row for row in rows if row is not None]


def _finish(
    spec: ScanSpec,
    rows: Sequence[ScanRow],
    *,
    correlators: bool = False,
    outer: Tuple[str, float] | None = None,
) -> ScanResult:
    return ScanResult(
        spec=spec,
        rows=tuple(rows),
        argmax_abs_delta=argmax_abs_delta(rows),
        argmax_k3=argmax_k3(rows),
        correlators=correlators,
        outer=outer,
    )


def run_scan(spec: ScanSpec) -> ScanResult:
    """Evaluate one row per grid point, in grid order."""

    logger.info("Scanning %s over %s (%s, workers=%d)", spec.parameter, spec.grid.format(), spec.mode, spec.workers)
    rows = _run_rows(spec, with_correlators=False)
    return _finish(spec, rows)


def correlation_scan(spec: ScanSpec) -> ScanResult:
    """Like :func:`run_scan` with per-pair correlators and their differences."""

    logger.info("Correlator scan of %s over %s", spec.parameter, spec.grid.format())
    rows = _run_rows(spec, with_correlators=True)
    return _finish(spec, rows, correlators=True)


def run_scan_2d(spec_outer: ScanSpec, spec_inner: ScanSpec, *, with_correlators: bool = False) -> List[ScanResult]:
    """Outer-major sweep: one inner scan per outer grid point.

    The outer spec supplies the shared base inputs; the inner spec supplies
    its grid, mode, phase-envelope setting and worker count.
    """

    if spec_outer.parameter == spec_inner.parameter:
        raise InvalidArgumentError(f"2-D scan needs distinct parameters, got {spec_outer.parameter!r} twice")
    if spec_outer.parameter == "phi" and spec_inner.phi_envelope:
        raise InvalidArgumentError("a phase envelope cannot be combined with a phase scan")

    results: List[ScanResult] = []
    for value in spec_outer.grid.points():
        try:
            inner = spec_inner.replace(base=spec_outer.base.at(spec_outer.parameter, value))
            rows = _run_rows(inner, with_correlators)
        except ScanRowError as exc:
            raise exc.with_outer(spec_outer.parameter, value) from exc.cause
        except (NuLgiError, ValueError) as exc:
            raise ScanRowError(((spec_outer.parameter, value),), exc) from exc
        results.append(_finish(inner, rows, correlators=with_correlators, outer=(spec_outer.parameter, value)))
    logger.info("2-D scan finished: %d x %d", spec_outer.grid.count, spec_inner.grid.count)
    return results


def _objective_value(row: ScanRow, objective: str) -> float:
    if objective == "abs_delta":
        return abs(row.delta_k3)
    if objective == "k3":
        return row.k3_majorana
    raise InvalidArgumentError(f"unknown objective {objective!r}")


def refine_argmax(
    spec: ScanSpec,
    result: ScanResult,
    objective: str | None = None,
    *,
    xatol: float = 1e-9,
) -> Argmax:
    """Polish the grid optimum with a bounded scalar search between its neighbours.

    The returned value is never below the grid optimum.
    """

    objective = objective or spec.objective
    if objective not in ("abs_delta", "k3"):
        raise InvalidArgumentError(f"unknown objective {objective!r}")
    grid_best = argmax_abs_delta(result.rows) if objective == "abs_delta" else argmax_k3(result.rows)
    if grid_best is None:
        raise InvalidArgumentError("cannot refine an empty scan")

    points = spec.grid.points()
    index = min(range(len(points)), key=lambda i: abs(points[i] - grid_best.param_value))
    lo, hi = points[max(index - 1, 0)], points[min(index + 1, len(points) - 1)]

    def negative(x: float) -> float:
        return -_objective_value(_guarded(spec, float(x), False), objective)

    outcome = minimize_scalar(negative, bounds=(lo, hi), method="bounded", options={"xatol": xatol})
    refined = Argmax(param_value=float(outcome.x), value=-float(outcome.fun))
    logger.debug("Refined %s optimum: grid %s -> %s", objective, grid_best, refined)
    return refined if refined.value >= grid_best.value else grid_best


@dataclass(frozen=True)
class SurfacePoint:
    outer: float
    inner: float
    value: float


def surface_argmax(results: Sequence[ScanResult], objective: str = "k3") -> SurfacePoint | None:
    """Optimum over a 2-D scan; ties keep the first point in outer-major order."""

    best: SurfacePoint | None = None
    for result in results:
        outer_value = result.outer[1] if result.outer is not None else math.nan
        for row in result.rows:
            value = _objective_value(row, objective)
            if best is None or value > best.value:
                best = SurfacePoint(outer=outer_value, inner=row.param_value, value=value)
    return best


__all__ = [
    "run_scan",
    "run_scan_2d",
    "correlation_scan",
    "refine_argmax",
    "surface_argmax",
    "SurfacePoint",
]
