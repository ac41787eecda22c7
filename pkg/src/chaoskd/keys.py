"""Key extraction: threshold discretization of S1 series and bit-agreement
statistics."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

# A key is an ordered sequence of 0/1 ints, one per contributing slot.
KeyBits = list


@dataclass(frozen=True)
class BerReport:
    """Bit error rate between two equal-length keys."""

    n_bits: int
    n_errors: int
    ber: float


def discretize(s1_series: Iterable[float], s_th: float = 0.0) -> KeyBits:
    """Threshold an S1 series into bits: 0 when S1 < s_th, else 1.

    Equality with the threshold yields bit 1.
    """
    return [0 if s1 < s_th else 1 for s1 in s1_series]


def ber(a: Sequence[int], b: Sequence[int]) -> BerReport:
    """Fraction of positions where the two keys disagree."""
    if len(a) != len(b):
        raise ValueError(f"key length mismatch: {len(a)} vs {len(b)}")
    if len(a) == 0:
        raise ValueError("cannot compute a bit error rate over empty keys")
    n_errors = sum(1 for x, y in zip(a, b) if x != y)
    return BerReport(n_bits=len(a), n_errors=n_errors, ber=n_errors / len(a))
