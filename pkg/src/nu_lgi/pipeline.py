"""End-to-end sweep pipeline: config -> scan spec -> scan -> CSV/SVG."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from .config import RunConfig
from .output import atomic_write, emit_csv, emit_surface_csv, emit_svg
from .scan import ScanResult, correlation_scan, run_scan, run_scan_2d

logger = logging.getLogger(__name__)


@dataclass
class SweepOutcome:
    kind: str
    results: List[ScanResult]
    csv_text: str
    svg_text: Optional[str] = None
    csv_path: Optional[Path] = None
    svg_path: Optional[Path] = None

    @property
    def result(self) -> ScanResult:
        return self.results[0]


@dataclass
class SweepPipeline:
    """Runs the sweeps described by a :class:`RunConfig` and renders their output."""

    config: RunConfig = field(default_factory=RunConfig)
    metadata: Dict[str, Any] = field(default_factory=dict)
    render_svg: bool | None = None

    def __post_init__(self) -> None:
        if self.render_svg is None:
            self.render_svg = self.config.output.svg is not None
        self.columns = self.config.output.column_list(self.config.scan.mode)
        if self.render_svg:
            self.metadata = {**self.metadata, "columns": ",".join(self.columns)}

    def scan(self, parameter: str, grid: str | None = None) -> SweepOutcome:
        spec = self.config.scan_spec(parameter, grid)
        result = run_scan(spec)
        return self._single("scan", result)

    def correlators(self, parameter: str, grid: str | None = None) -> SweepOutcome:
        spec = self.config.scan_spec(parameter, grid)
        result = correlation_scan(spec)
        return self._single("correlators", result)

    def surface(
        self,
        outer: str | None = None,
        inner: str | None = None,
        outer_grid: str | None = None,
        inner_grid: str | None = None,
    ) -> SweepOutcome:
        outer = outer or self.config.scan.outer or "v_cc"
        inner = inner or self.config.scan.inner or "phi"
        inner_grid = inner_grid or self.config.scan.inner_grid
        outer_spec = self.config.scan_spec(outer, outer_grid)
        inner_spec = self.config.scan_spec(
            inner,
            inner_grid if inner_grid is not None else self.config.default_grid(inner).format(),
        )
        results = run_scan_2d(outer_spec, inner_spec)
        csv_text = emit_surface_csv(results, outer, self.config.output.precision, metadata=self.metadata)
        svg_text = emit_svg(results, self.columns) if self.render_svg else None
        return SweepOutcome(kind="surface", results=results, csv_text=csv_text, svg_text=svg_text)

    def write(self, outcome: SweepOutcome, csv_path: str | None = None, svg_path: str | None = None) -> SweepOutcome:
        """Atomically write the rendered outputs to the given or configured paths."""

        csv_target = csv_path or self.config.output.csv
        svg_target = svg_path or self.config.output.svg
        if csv_target is not None:
            outcome.csv_path = atomic_write(csv_target, outcome.csv_text)
        if svg_target is not None and outcome.svg_text is not None:
            outcome.svg_path = atomic_write(svg_target, outcome.svg_text)
        return outcome

    # ------------------------------------------------------------------ helpers
    def _single(self, kind: str, result: ScanResult) -> SweepOutcome:
        csv_text = emit_csv(result, self.config.output.precision, metadata=self.metadata)
        svg_text = emit_svg(result, self.columns) if self.render_svg else None
        best = result.primary_argmax()
        if best is not None:
            logger.info("%s scan of %s: optimum at %g (%g)", kind, result.spec.parameter, best.param_value, best.value)
        return SweepOutcome(kind=kind, results=[result], csv_text=csv_text, svg_text=svg_text)


__all__ = ["SweepOutcome", "SweepPipeline"]
