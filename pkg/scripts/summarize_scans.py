"""Collect the argmax metadata of every scan CSV under results/ into one JSON file."""

from __future__ import annotations

import json
import sys
from pathlib import Path

from nu_lgi.output import read_csv_rows, read_metadata

RESULTS_DIR = Path("results")
SUMMARY_KEYS = ("subcommand", "parameter", "grid", "mode", "phi_envelope", "argmax_abs_delta", "argmax_k3")


def summarize_file(path: Path) -> dict:
    text = path.read_text(encoding="utf-8")
    meta = read_metadata(text)
    rows = read_csv_rows(text)
    entry = {key: meta[key] for key in SUMMARY_KEYS if key in meta}
    entry["rows"] = len(rows)
    entry["violations_majorana"] = sum(1 for row in rows if row.get("violated_majorana") == "true")
    return entry


def main(argv: list[str] | None = None) -> None:
    directory = Path(argv[0]) if argv else RESULTS_DIR
    summary = {path.name: summarize_file(path) for path in sorted(directory.glob("*.csv"))}
    out_path = directory / "scan_summary.json"
    out_path.write_text(json.dumps(summary, indent=2), encoding="utf-8")
    print(f"Wrote {out_path} with {len(summary)} scans.")
    for name, stats in summary.items():
        print(name, stats)


if __name__ == "__main__":
    main(sys.argv[1:])
