"""CSV emission and ingestion for traces and spectra.

Floats are written with 17 significant digits so that a round-trip through
text reproduces the exact binary values and identically-seeded runs emit
byte-identical files.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Sequence

import numpy as np

from .session import SlotRecord
from .spectrum import Spectrum

TRACE_COLUMNS = (
    "slot",
    "v_a",
    "v_b",
    "s1_a",
    "s1_b",
    "q_a",
    "q_b",
    "det_a",
    "det_b",
    "bit_a",
    "bit_b",
)

SPECTRUM_COLUMNS = ("bin", "frequency_fraction", "magnitude")


def _g17(x: float) -> str:
    return format(x, ".17g")


def write_trace_csv(path: str | Path, trace: Sequence[SlotRecord]) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(",".join(TRACE_COLUMNS) + "\n")
        for r in trace:
            fh.write(
                f"{r.slot},{_g17(r.v_a)},{_g17(r.v_b)},{_g17(r.s1_a)},{_g17(r.s1_b)},"
                f"{_g17(r.q_a)},{_g17(r.q_b)},{int(r.det_a)},{int(r.det_b)},"
                f"{r.bit_a},{r.bit_b}\n"
            )


def read_trace_column(path: str | Path, column: str) -> np.ndarray:
    """One numeric column of a trace CSV, by header name."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"trace file not found: {path}")
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or column not in reader.fieldnames:
            raise ValueError(
                f"column {column!r} not present in {path} "
                f"(have: {', '.join(reader.fieldnames or [])})"
            )
        return np.array([float(row[column]) for row in reader])


def write_spectrum_csv(path: str | Path, spec: Spectrum) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(",".join(SPECTRUM_COLUMNS) + "\n")
        for k, magnitude in enumerate(spec.magnitudes):
            fh.write(f"{k},{_g17(k / spec.n)},{_g17(float(magnitude))}\n")
