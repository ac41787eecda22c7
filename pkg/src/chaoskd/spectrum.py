"""Spectral analysis of S1 traces and the quasi-periodicity attack score.

A strong-pulse attack drives the voltage map out of broadband chaos into
near-cyclic hopping between a handful of levels, which shows up as narrow
peaks in the discrete Fourier transform of S1. The score below quantifies
how peaked a spectrum is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Full two-sided DFT magnitudes of a real series of length ``n``.

    Bin k holds |X[k]| for X[k] = sum_m x[m] exp(-2j*pi*k*m/n) (standard
    unnormalized DFT); frequency fraction of bin k is k/n, with bins above
    n//2 aliasing to negative frequencies.
    """

    magnitudes: np.ndarray
    n: int


def dft(series: np.ndarray) -> np.ndarray:
    """Unnormalized complex DFT of a real or complex series."""
    return np.fft.fft(np.asarray(series))


def power_spectrum(series, detrend: bool = True) -> Spectrum:
    """DFT magnitudes of ``series``, mean-removed by default.

    Detrending keeps the chaos-versus-periodicity comparison from being
    dominated by the DC bin; disable it to get the plain transform.
    """
    x = np.asarray(series, dtype=float)
    if x.ndim != 1:
        raise ValueError("series must be one-dimensional")
    if x.size < 2:
        raise ValueError(f"series too short for a spectrum: length {x.size} < 2")
    if detrend:
        x = x - x.mean()
    return Spectrum(magnitudes=np.abs(dft(x)), n=x.size)


def quasiperiodicity_score(spec: Spectrum) -> float:
    """Peak-to-median power ratio over the positive-frequency half.

    The DC bin is excluded; for even lengths the Nyquist bin is included.
    Broadband chaos gives a small ratio (the max/median of roughly
    exponential bin powers); a quasi-periodic signal concentrates power in
    a few bins and scores orders of magnitude higher. Always >= 1; +inf
    when the median power is exactly zero but a peak exists.
    """
    half = spec.magnitudes[1 : spec.n // 2 + 1]
    if half.size == 0:
        raise ValueError("spectrum has no positive-frequency bins")
    power = half * half
    peak = float(power.max())
    if peak == 0.0:
        raise ValueError("degenerate all-zero spectrum has no peak structure")
    median = float(np.median(power))
    if median == 0.0:
        return math.inf
    return peak / median
