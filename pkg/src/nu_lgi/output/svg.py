"""Static SVG line plots of scan columns."""

from __future__ import annotations

import html
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..errors import InvalidArgumentError
from ..scan import ScanResult

WIDTH = 720
HEIGHT = 420
PAD_LEFT = 70
PAD_RIGHT = 170
PAD_TOP = 40
PAD_BOTTOM = 50
TICKS = 5

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf")

_COLUMN_ATTRIBUTES = {"C21": "c21", "C32": "c32", "C31": "c31", "dC21": "dc21", "dC32": "dc32", "dC31": "dc31"}


@dataclass(frozen=True)
class Series:
    label: str
    points: Tuple[Tuple[float, float], ...]


def _ensure_range(lo: float, hi: float) -> Tuple[float, float]:
    # only a degenerate range is padded, so a constant series sits at mid-height
    if lo == hi:
        epsilon = 1.0 if lo == 0.0 else abs(lo) * 0.01
        return lo - epsilon, hi + epsilon
    return lo, hi


def _series_for(result: ScanResult, column: str, label_prefix: str) -> Series:
    attribute = _COLUMN_ATTRIBUTES.get(column, column)
    try:
        ys = [float(getattr(row, attribute)) for row in result.rows]
    except AttributeError as exc:
        raise InvalidArgumentError(f"unknown column {column!r}") from exc
    label = f"{label_prefix} {column}".strip()
    return Series(label=label, points=tuple(zip(result.param_values, ys)))


def _outer_label(result: ScanResult) -> str:
    if result.outer is None:
        return ""
    name, value = result.outer
    return f"{name}={value:.4g}"


def build_series(results: Sequence[ScanResult], columns: Sequence[str]) -> List[Series]:
    series: List[Series] = []
    for result in results:
        if len(result.rows) < 2:
            raise InvalidArgumentError(f"an SVG plot needs at least 2 rows, got {len(result.rows)}")
        prefix = _outer_label(result) if len(results) > 1 else ""
        for column in columns:
            series.append(_series_for(result, column, prefix))
    return series


def emit_svg(
    result: ScanResult | Sequence[ScanResult],
    columns: Sequence[str] = ("delta_k3",),
    *,
    title: str | None = None,
) -> str:
    """One polyline per (result, column), linear axes with ticks and a legend."""

    results = [result] if isinstance(result, ScanResult) else list(result)
    if not results:
        raise InvalidArgumentError("an SVG plot needs at least one scan result")
    if not columns:
        raise InvalidArgumentError("an SVG plot needs at least one column")
    series = build_series(results, columns)

    xs = [x for s in series for x, _ in s.points]
    ys = [y for s in series for _, y in s.points]
    x_lo, x_hi = _ensure_range(min(xs), max(xs))
    y_lo, y_hi = _ensure_range(min(ys), max(ys))
    box_left, box_right = PAD_LEFT, WIDTH - PAD_RIGHT
    box_top, box_bottom = PAD_TOP, HEIGHT - PAD_BOTTOM

    def project(x: float, y: float) -> Tuple[float, float]:
        px = box_left + (x - x_lo) / (x_hi - x_lo) * (box_right - box_left)
        py = box_bottom - (y - y_lo) / (y_hi - y_lo) * (box_bottom - box_top)
        return px, py

    parameter = results[0].spec.parameter
    heading = title if title is not None else f"{', '.join(columns)} vs {parameter}"
    out: List[str] = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>',
        f'<text x="{box_left}" y="24" font-family="sans-serif" font-size="14">{html.escape(heading)}</text>',
        f'<line x1="{box_left}" y1="{box_bottom}" x2="{box_right}" y2="{box_bottom}" stroke="#333333"/>',
        f'<line x1="{box_left}" y1="{box_top}" x2="{box_left}" y2="{box_bottom}" stroke="#333333"/>',
    ]

    for i in range(TICKS):
        fraction = i / (TICKS - 1)
        x_value = x_lo + fraction * (x_hi - x_lo)
        y_value = y_lo + fraction * (y_hi - y_lo)
        px, _ = project(x_value, y_lo)
        _, py = project(x_lo, y_value)
        out.append(f'<line x1="{px:.2f}" y1="{box_bottom}" x2="{px:.2f}" y2="{box_bottom + 5}" stroke="#333333"/>')
        out.append(
            f'<text x="{px:.2f}" y="{box_bottom + 18}" font-family="sans-serif" font-size="10" '
            f'text-anchor="middle">{x_value:.3g}</text>'
        )
        out.append(f'<line x1="{box_left - 5}" y1="{py:.2f}" x2="{box_left}" y2="{py:.2f}" stroke="#333333"/>')
        out.append(
            f'<text x="{box_left - 8}" y="{py + 3:.2f}" font-family="sans-serif" font-size="10" '
            f'text-anchor="end">{y_value:.3g}</text>'
        )
    out.append(
        f'<text x="{(box_left + box_right) / 2:.2f}" y="{HEIGHT - 12}" font-family="sans-serif" '
        f'font-size="12" text-anchor="middle">{html.escape(parameter)}</text>'
    )

    for index, s in enumerate(series):
        colour = PALETTE[index % len(PALETTE)]
        vertices = " ".join("{:.2f},{:.2f}".format(*project(x, y)) for x, y in s.points)
        out.append(f'<polyline points="{vertices}" fill="none" stroke="{colour}" stroke-width="1.5"/>')
        legend_y = box_top + 14 * index
        out.append(
            f'<line x1="{box_right + 12}" y1="{legend_y:.2f}" x2="{box_right + 32}" y2="{legend_y:.2f}" '
            f'stroke="{colour}" stroke-width="2"/>'
        )
        out.append(
            f'<text x="{box_right + 36}" y="{legend_y + 4:.2f}" font-family="sans-serif" '
            f'font-size="10">{html.escape(s.label)}</text>'
        )

    out.append("</svg>")
    return "\n".join(out) + "\n"


__all__ = ["Series", "build_series", "emit_svg"]
