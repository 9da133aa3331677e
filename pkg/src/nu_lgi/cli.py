"""Command-line front end.

Exit codes: 0 success, 2 configuration or validation error, 3 numerical
failure, 1 for I/O failures while writing output.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Sequence

from .auditor import validate_kossakowski
from .config import RunConfig, parse_config
from .errors import ConfigError, InvalidArgumentError, NumericalError, RejectedCoefficientsError, ScanRowError
from .pipeline import SweepOutcome, SweepPipeline
from .scan import PARAMETERS
from .units import UnitConversionError
from .version import TOOL_NAME, __version__

EXIT_OK = 0
EXIT_IO = 1
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

_SCAN_COMMANDS = {
    "scan-phi": "phi",
    "scan-vcc": "v_cc",
    "scan-coupling": "c12",
    "scan-tau": "tau",
    "scan-energy": "energy",
}


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="configuration file ([physics], [kossakowski], ...)")
    common.add_argument(
        "--set",
        dest="overrides",
        action="append",
        default=[],
        metavar="SECTION.KEY=VALUE",
        help="override a configuration key (repeatable, last wins)",
    )
    common.add_argument("-v", "--verbose", action="store_true", help="log progress at DEBUG level")
    return common


def _output_options() -> argparse.ArgumentParser:
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--grid", metavar="START:STOP:COUNT", help="scan grid (bounds may use pi)")
    output.add_argument("--out", metavar="PATH", help="CSV output path (stdout when omitted)")
    output.add_argument("--svg", metavar="PATH", help="optional SVG plot path")
    output.add_argument("--precision", type=int, help="significant digits in CSV (1-17)")
    output.add_argument("--workers", type=int, help="threads used to evaluate rows")
    output.add_argument("--mode", choices=("k3_pair", "delta_k3"), help="figure of merit")
    output.add_argument("--phi-envelope", action="store_true", default=None, help="maximise over the phase per row")
    return output


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=TOOL_NAME,
        description="Leggett-Garg K3 and Dirac-Majorana delta K3 sweeps for dissipative neutrino oscillations.",
    )
    parser.add_argument("--version", action="version", version=f"{TOOL_NAME} {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)
    common, output = _common_options(), _output_options()

    for name, parameter in _SCAN_COMMANDS.items():
        commands.add_parser(name, parents=[common, output], help=f"sweep {parameter}")

    surface = commands.add_parser("scan-2d", parents=[common, output], help="outer x inner sweep")
    surface.add_argument("--outer", choices=PARAMETERS, help="outer parameter (default v_cc)")
    surface.add_argument("--inner", choices=PARAMETERS, help="inner parameter (default phi)")
    surface.add_argument("--inner-grid", metavar="START:STOP:COUNT", help="inner scan grid")

    correlators = commands.add_parser("correlators", parents=[common, output], help="per-pair correlator sweep")
    correlators.add_argument("--parameter", choices=PARAMETERS, default="v_cc", help="swept parameter")

    commands.add_parser("validate", parents=[common], help="check the Kossakowski coefficients")
    return parser


def _flag_overrides(args: argparse.Namespace) -> List[str]:
    overrides = list(args.overrides)
    flags = (
        ("grid", "scan.grid"),
        ("out", "output.csv"),
        ("svg", "output.svg"),
        ("precision", "output.precision"),
        ("workers", "scan.workers"),
        ("mode", "scan.mode"),
        ("outer", "scan.outer"),
        ("inner", "scan.inner"),
        ("inner_grid", "scan.inner_grid"),
    )
    for attribute, key in flags:
        value = getattr(args, attribute, None)
        if value is not None:
            overrides.append(f"{key}={value}")
    if getattr(args, "phi_envelope", None):
        overrides.append("scan.phi_envelope=true")
    return overrides


def load_config(args: argparse.Namespace) -> RunConfig:
    text = ""
    if args.config is not None:
        try:
            text = args.config.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise ConfigError(f"cannot read config file {args.config}: {exc}") from exc
    return parse_config(text, _flag_overrides(args))


def _run_validate(config: RunConfig) -> int:
    report = validate_kossakowski(config.coefficients())
    print(f"Kossakowski: {report.summary()}")
    if report.psd is False:
        print(f"Kossakowski advisory: not positive semidefinite (smallest eigenvalue {report.min_eigenvalue:.6g})")
    return EXIT_OK if report.passed else EXIT_CONFIG


def _emit(pipeline: SweepPipeline, outcome: SweepOutcome) -> None:
    pipeline.write(outcome)
    if outcome.csv_path is None:
        sys.stdout.write(outcome.csv_text)


def _dispatch(args: argparse.Namespace) -> int:
    config = load_config(args)
    if args.command == "validate":
        return _run_validate(config)

    pipeline = SweepPipeline(config, metadata={"subcommand": args.command})
    if args.command in _SCAN_COMMANDS:
        outcome = pipeline.scan(_SCAN_COMMANDS[args.command])
    elif args.command == "correlators":
        outcome = pipeline.correlators(args.parameter)
    else:
        outcome = pipeline.surface()
    _emit(pipeline, outcome)
    return EXIT_OK


def _is_numerical(exc: BaseException) -> bool:
    if isinstance(exc, ScanRowError):
        return isinstance(exc.cause, ArithmeticError)
    return isinstance(exc, ArithmeticError)


def run_cli(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return the exit code."""

    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return int(exc.code or 0)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return _dispatch(args)
    except (NumericalError, ScanRowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL if _is_numerical(exc) else EXIT_CONFIG
    except (ConfigError, InvalidArgumentError, RejectedCoefficientsError, UnitConversionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
