"""Regenerate the figure sweeps (CSV + SVG) into results/."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Iterable

from nu_lgi.config import parse_config
from nu_lgi.pipeline import SweepOutcome, SweepPipeline

CONFIG_DIR = Path(__file__).resolve().parent.parent / "configs"
RESULTS_DIR = Path("results")


def _pipeline(config_name: str, overrides: Iterable[str] = ()) -> SweepPipeline:
    text = (CONFIG_DIR / config_name).read_text(encoding="utf-8")
    config = parse_config(text, overrides)
    return SweepPipeline(config, metadata={"script": "reproduce_figures", "config": config_name}, render_svg=True)


def _save(name: str, pipeline: SweepPipeline, outcome: SweepOutcome) -> dict:
    pipeline.write(outcome, str(RESULTS_DIR / f"{name}.csv"), str(RESULTS_DIR / f"{name}.svg"))
    entry: dict = {"name": name, "kind": outcome.kind, "csv": str(outcome.csv_path)}
    if outcome.kind == "surface":
        entry["outer_values"] = [r.outer[1] for r in outcome.results if r.outer is not None]
        return entry
    result = outcome.result
    for label, argmax in (("argmax_abs_delta", result.argmax_abs_delta), ("argmax_k3", result.argmax_k3)):
        entry[label] = None if argmax is None else {"param": argmax.param_value, "value": argmax.value}
    return entry


def main() -> None:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    RESULTS_DIR.mkdir(parents=True, exist_ok=True)
    summary = []

    # delta K3 against phi, one curve per coupling c12
    pipeline = _pipeline("fig1.cfg", ["scan.grid=0:0.1:5", "scan.inner_grid=0:2pi:65"])
    summary.append(_save("fig1_delta_vs_phi_by_c12", pipeline, pipeline.surface(outer="c12", inner="phi")))

    # delta K3 against phi, one curve per matter potential
    pipeline = _pipeline("fig2.cfg", ["scan.grid=0:8:5"])
    summary.append(_save("fig2_delta_vs_phi_by_vcc", pipeline, pipeline.surface(outer="v_cc", inner="phi")))

    # phase envelope of |delta K3| against the matter potential
    pipeline = _pipeline("fig2.cfg", ["scan.grid=0.1:10:200", "scan.phi_envelope=true"])
    summary.append(_save("fig2_envelope_vs_vcc", pipeline, pipeline.scan("v_cc")))

    # K3 against the matter potential for weak dissipation
    pipeline = _pipeline("fig3.cfg", ["output.columns=k3_dirac,k3_majorana"])
    summary.append(_save("fig3_k3_vs_vcc", pipeline, pipeline.scan("v_cc")))

    # correlators and their Dirac-Majorana differences
    pipeline = _pipeline("fig3.cfg", ["output.columns=C21,C32,C31"])
    summary.append(_save("fig4_correlators_vs_vcc", pipeline, pipeline.correlators("v_cc")))
    pipeline = _pipeline("fig3.cfg", ["scan.mode=delta_k3", "output.columns=dC21,dC32,dC31"])
    summary.append(_save("fig5_correlator_differences_vs_vcc", pipeline, pipeline.correlators("v_cc")))

    out_path = RESULTS_DIR / "figures.json"
    out_path.write_text(json.dumps(summary, indent=2), encoding="utf-8")
    print(f"Wrote {out_path} with {len(summary)} entries.")
    for entry in summary:
        print(f"- {entry['name']}: {entry['csv']}")


if __name__ == "__main__":  # pragma: no cover - manual script
    main()
