"""CSV emission for scan results.

Metadata precedes the header as ``# key=value`` comment lines. Numbers use
``precision`` significant digits (17 reproduces doubles exactly), booleans
are written ``true``/``false`` and lines end with LF.
"""

from __future__ import annotations

import csv
import io
from typing import Any, Dict, List, Mapping, Sequence

from ..errors import InvalidArgumentError
from ..scan import ScanResult, ScanRow, surface_argmax
from ..version import TOOL_NAME, __version__

BASE_COLUMNS = ("param", "k3_dirac", "k3_majorana", "delta_k3", "violated_dirac", "violated_majorana")
CORRELATOR_COLUMNS = ("C21", "C32", "C31", "dC21", "dC32", "dC31")
ENVELOPE_COLUMN = "phi_opt"

_ROW_ATTRIBUTES = {
    "param": "param_value",
    "C21": "c21",
    "C32": "c32",
    "C31": "c31",
    "dC21": "dc21",
    "dC32": "dc32",
    "dC31": "dc31",
    ENVELOPE_COLUMN: "phi",
}


def format_number(value: float, precision: int) -> str:
    return f"{float(value):.{precision}g}"


def _format_cell(value: Any, precision: int) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return format_number(value, precision)


def _format_meta(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def columns_for(result: ScanResult) -> List[str]:
    columns = list(BASE_COLUMNS)
    if result.correlators:
        columns.extend(CORRELATOR_COLUMNS)
    if result.spec.phi_envelope:
        columns.append(ENVELOPE_COLUMN)
    return columns


def _row_cells(row: ScanRow, columns: Sequence[str], precision: int) -> List[str]:
    return [_format_cell(getattr(row, _ROW_ATTRIBUTES.get(name, name)), precision) for name in columns]


def _check_precision(precision: int) -> int:
    if isinstance(precision, bool) or not 1 <= int(precision) <= 17:
        raise InvalidArgumentError(f"precision must lie in 1..17, got {precision!r}")
    return int(precision)


def result_metadata(result: ScanResult, extra: Mapping[str, Any] | None = None) -> Dict[str, Any]:
    meta: Dict[str, Any] = {"tool": f"{TOOL_NAME} {__version__}"}
    if extra:
        meta.update(extra)
    meta.update(result.spec.describe())
    meta["time_anchoring"] = "(0, tau, 2*tau)"
    if result.outer is not None:
        meta[f"outer_{result.outer[0]}"] = result.outer[1]
    if result.spec.phi_envelope:
        meta["phi_envelope_note"] = (
            f"majorana phase per row maximises {result.spec.objective} "
            f"over a {result.spec.envelope_count}-point phase grid"
        )
    for name, argmax in (("argmax_abs_delta", result.argmax_abs_delta), ("argmax_k3", result.argmax_k3)):
        meta[name] = "none" if argmax is None else f"{argmax.param_value!r},{argmax.value!r}"
    meta["argmax_ties"] = "smallest parameter value"
    return meta


def _write_metadata(buffer: io.StringIO, meta: Mapping[str, Any]) -> None:
    for key, value in meta.items():
        buffer.write(f"# {key}={_format_meta(value)}\n")


def emit_csv(result: ScanResult, precision: int = 12, *, metadata: Mapping[str, Any] | None = None) -> str:
    """Render *result* as CSV text."""

    precision = _check_precision(precision)
    columns = columns_for(result)
    buffer = io.StringIO()
    meta = result_metadata(result, metadata)
    meta["precision"] = precision
    _write_metadata(buffer, meta)
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in result.rows:
        writer.writerow(_row_cells(row, columns, precision))
    return buffer.getvalue()


def emit_surface_csv(
    results: Sequence[ScanResult],
    outer_parameter: str,
    precision: int = 12,
    *,
    metadata: Mapping[str, Any] | None = None,
) -> str:
    """Render a 2-D scan as one CSV with a leading ``outer`` column."""

    precision = _check_precision(precision)
    buffer = io.StringIO()
    meta: Dict[str, Any] = {"tool": f"{TOOL_NAME} {__version__}"}
    if metadata:
        meta.update(metadata)
    meta["outer_parameter"] = outer_parameter
    meta["precision"] = precision
    if results:
        meta.update({f"inner_{key}": value for key, value in results[0].spec.describe().items()})
        meta["time_anchoring"] = "(0, tau, 2*tau)"
        for objective in ("abs_delta", "k3"):
            best = surface_argmax(results, objective)
            if best is not None:
                meta[f"surface_argmax_{objective}"] = f"{best.outer!r},{best.inner!r},{best.value!r}"
        meta["argmax_ties"] = "first point in outer-major order"
    _write_metadata(buffer, meta)

    columns = columns_for(results[0]) if results else list(BASE_COLUMNS)
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["outer", *columns])
    for result in results:
        outer_value = format_number(result.outer[1], precision) if result.outer is not None else ""
        for row in result.rows:
            writer.writerow([outer_value, *_row_cells(row, columns, precision)])
    return buffer.getvalue()


def read_csv_rows(text: str) -> List[Dict[str, str]]:
    """Parse CSV text produced by :func:`emit_csv`, skipping metadata lines."""

    lines = [line for line in text.splitlines() if not line.startswith("#")]
    return list(csv.DictReader(lines))


def read_metadata(text: str) -> Dict[str, str]:
    meta: Dict[str, str] = {}
    for line in text.splitlines():
        if not line.startswith("# "):
            continue
        key, _, value = line[2:].partition("=")
        meta[key] = value
    return meta


__all__ = [
    "BASE_COLUMNS",
    "CORRELATOR_COLUMNS",
    "ENVELOPE_COLUMN",
    "columns_for",
    "emit_csv",
    "emit_surface_csv",
    "format_number",
    "read_csv_rows",
    "read_metadata",
    "result_metadata",
]
