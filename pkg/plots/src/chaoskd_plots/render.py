"""Render figure files from chaoskd CSV outputs.

Two plot kinds, driven entirely by the documented CSV schemas (no access
to simulator internals):

* overlay  — one trace CSV: S1 of both parties versus slot number over a
             slot window, Alice as plus markers, Bob as open circles.
* spectrum — one or two spectrum CSVs: magnitude versus frequency
             fraction, log magnitude axis.

Exit codes: 0 success, 1 usage error, 2 runtime error (missing file or
column, empty window).
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

TRACE_REQUIRED = ("slot", "s1_a", "s1_b")
SPECTRUM_REQUIRED = ("bin", "frequency_fraction", "magnitude")


class DataError(Exception):
    """Input file is missing, lacks a required column, or selects nothing."""


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def read_columns(path: str | Path, required: tuple[str, ...]) -> dict[str, np.ndarray]:
    path = Path(path)
    if not path.exists():
        raise DataError(f"input file not found: {path}")
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        have = reader.fieldnames or []
        for column in required:
            if column not in have:
                raise DataError(
                    f"column {column!r} not present in {path} (have: {', '.join(have)})"
                )
        rows = [[float(row[c]) for c in required] for row in reader]
    if not rows:
        raise DataError(f"no data rows in {path}")
    matrix = np.asarray(rows)
    return {c: matrix[:, i] for i, c in enumerate(required)}


def render_overlay(trace_csv: str | Path, out: str | Path, window: tuple[int, int] | None) -> None:
    data = read_columns(trace_csv, TRACE_REQUIRED)
    slots = data["slot"]
    if window is not None:
        lo, hi = window
        mask = (slots >= lo) & (slots <= hi)
        if not mask.any():
            raise DataError(
                f"empty window: no slots in [{lo}, {hi}] (trace covers "
                f"{int(slots.min())}..{int(slots.max())})"
            )
    else:
        mask = np.ones(slots.shape, dtype=bool)

    fig, ax = plt.subplots(figsize=(9, 4))
    ax.plot(slots[mask], data["s1_a"][mask], "+", color="tab:blue", label="$S_1$ Alice")
    ax.plot(
        slots[mask],
        data["s1_b"][mask],
        "o",
        markerfacecolor="none",
        color="tab:red",
        label="$S_1$ Bob",
    )
    ax.set_xlabel("slot n")
    ax.set_ylabel("$S_1$")
    ax.legend(loc="upper right")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(out)
    plt.close(fig)


def render_spectrum(spectrum_csvs: list[str | Path], out: str | Path) -> None:
    fig, ax = plt.subplots(figsize=(9, 4))
    for path in spectrum_csvs:
        data = read_columns(path, SPECTRUM_REQUIRED)
        n = data["bin"].size
        half = slice(1, n // 2 + 1)  # positive frequencies, DC dropped
        magnitude = np.maximum(data["magnitude"][half], 1e-300)
        ax.semilogy(data["frequency_fraction"][half], magnitude, label=Path(path).stem)
    ax.set_xlabel("frequency fraction k/N")
    ax.set_ylabel("|DFT| magnitude")
    ax.legend(loc="upper right")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(out)
    plt.close(fig)


def _build_parser() -> _Parser:
    parser = _Parser(prog="chaoskd-plots", description=__doc__)
    parser.add_argument("--kind", choices=("overlay", "spectrum"), required=True)
    parser.add_argument(
        "--in",
        dest="inputs",
        action="append",
        required=True,
        help="input CSV; repeat the flag to compare two spectra",
    )
    parser.add_argument("--out", required=True, help="output image (.png or .svg)")
    parser.add_argument(
        "--window",
        nargs=2,
        type=int,
        metavar=("START", "END"),
        help="inclusive slot window for overlay plots",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.kind == "overlay" and len(args.inputs) != 1:
            raise _UsageError("overlay takes exactly one --in trace")
        if args.kind == "spectrum" and not 1 <= len(args.inputs) <= 2:
            raise _UsageError("spectrum takes one or two --in files")
        if args.kind == "spectrum" and args.window is not None:
            raise _UsageError("--window only applies to overlay plots")
    except _UsageError as exc:
        print(f"chaoskd-plots: error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    try:
        if args.kind == "overlay":
            window = tuple(args.window) if args.window is not None else None
            render_overlay(args.inputs[0], args.out, window)
        else:
            render_spectrum(args.inputs, args.out)
    except (DataError, OSError, ValueError) as exc:
        print(f"chaoskd-plots: error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
