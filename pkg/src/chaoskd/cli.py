"""Command-line interface.

Exit codes: 0 success, 1 usage error (bad flags, unknown subcommand or
preset), 2 runtime error (missing or malformed files, invariant
violations, IO failures).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import ConfigError, load_config
from .harness import run_experiment
from .presets import PRESET_NAMES
from .session import simulate_session
from .spectrum import power_spectrum
from .traceio import read_trace_column, write_spectrum_csv, write_trace_csv

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUNTIME = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage problems; we reserve 2 for
    # runtime errors, so route usage failures through our own exception.
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _seed_u64(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}")
    if not (0 <= value < 2**64):
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _build_parser() -> _Parser:
    parser = _Parser(prog="chaoskd", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="run a session from a JSON config")
    sim.add_argument("--config", required=True, help="session config JSON file")
    sim.add_argument("--seed", type=_seed_u64, default=None, help="override the config seed")
    sim.add_argument("--out", required=True, help="output trace CSV path")

    exp = sub.add_parser("experiment", help="run a named preset")
    exp.add_argument("preset", choices=PRESET_NAMES)
    exp.add_argument("--seed", type=_seed_u64, required=True)
    exp.add_argument("--out-dir", default=".", help="directory for trace/report files")

    ana = sub.add_parser("analyze", help="post-process a trace")
    ana_sub = ana.add_subparsers(dest="analysis", required=True)
    spec = ana_sub.add_parser("spectrum", help="DFT magnitudes of one trace column")
    spec.add_argument("--in", dest="infile", required=True, help="trace CSV path")
    spec.add_argument("--column", default="s1_a", help="trace column to transform")
    spec.add_argument("--out", required=True, help="output spectrum CSV path")
    spec.add_argument(
        "--no-detrend",
        action="store_true",
        help="keep the mean (DC bin) instead of removing it before the DFT",
    )
    return parser


def _cmd_simulate(args: argparse.Namespace) -> int:
    cfg = load_config(args.config, seed_override=args.seed)
    trace = simulate_session(cfg)
    out = Path(args.out)
    if out.parent != Path(""):
        out.parent.mkdir(parents=True, exist_ok=True)
    write_trace_csv(out, trace)
    print(f"wrote {len(trace)} slots to {out}")
    return EXIT_OK


def _cmd_experiment(args: argparse.Namespace) -> int:
    metrics = run_experiment(args.preset, args.seed, args.out_dir)
    headline = metrics["strong"] if "strong" in metrics else metrics["main"]
    print(
        f"{args.preset} seed={args.seed}: ber={headline.ber_report.ber:.4f} "
        f"qp_score={headline.qp_score:.4g} -> {args.out_dir}"
    )
    return EXIT_OK


def _cmd_analyze_spectrum(args: argparse.Namespace) -> int:
    series = read_trace_column(args.infile, args.column)
    spec = power_spectrum(series, detrend=not args.no_detrend)
    write_spectrum_csv(args.out, spec)
    print(f"wrote {spec.n}-bin spectrum of {args.column!r} to {args.out}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"chaoskd: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    try:
        if args.command == "simulate":
            return _cmd_simulate(args)
        if args.command == "experiment":
            return _cmd_experiment(args)
        return _cmd_analyze_spectrum(args)
    except (ConfigError, ValueError, OSError) as exc:
        print(f"chaoskd: error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    raise SystemExit(main())
