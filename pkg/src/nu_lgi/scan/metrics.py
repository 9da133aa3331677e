"""Scan-level summaries: optima of the figure-of-merit columns."""

from __future__ import annotations

from typing import Callable, Dict, Sequence

from .spec import Argmax, ScanRow


def _argmax(rows: Sequence[ScanRow], key: Callable[[ScanRow], float]) -> Argmax | None:
    # strict comparison keeps the first (smallest) parameter value on ties
    best: Argmax | None = None
    for row in rows:
        value = key(row)
        if best is None or value > best.value:
            best = Argmax(param_value=row.param_value, value=value)
    return best


def argmax_abs_delta(rows: Sequence[ScanRow]) -> Argmax | None:
    return _argmax(rows, lambda row: abs(row.delta_k3))


def argmax_k3(rows: Sequence[ScanRow]) -> Argmax | None:
    """Optimum of the Majorana K3 column."""

    return _argmax(rows, lambda row: row.k3_majorana)


def summarize(rows: Sequence[ScanRow]) -> Dict[str, float | int | None]:
    """Flat summary used by output metadata and the summary script."""

    delta = argmax_abs_delta(rows)
    k3 = argmax_k3(rows)
    return {
        "rows": len(rows),
        "argmax_abs_delta_param": None if delta is None else delta.param_value,
        "argmax_abs_delta_value": None if delta is None else delta.value,
        "argmax_k3_param": None if k3 is None else k3.param_value,
        "argmax_k3_value": None if k3 is None else k3.value,
        "violations_dirac": sum(1 for row in rows if row.violated_dirac),
        "violations_majorana": sum(1 for row in rows if row.violated_majorana),
    }


__all__ = ["argmax_abs_delta", "argmax_k3", "summarize"]
