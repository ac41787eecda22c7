"""Single optoelectronic oscillator: polarization field chain, chaotic
voltage map and Stokes-parameter readout.

The oscillator is slot-indexed: one pulse per slot, one map application per
slot. All functions here are pure and operate on plain floats, so they are
safe to call from any number of threads.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field


@dataclass(frozen=True)
class OeoParams:
    """Physical constants of one oscillator.

    gain_k:   feedback gain (volts per photon-number unit)
    alpha_sq: laser mean photon number |alpha|^2 (dimensionless)
    phi:      modulator phase offset (radians)
    v_pi:     half-wave voltage (volts)
    epsilon:  polarimeter constant (dimensionless)
    tau:      slot period, carried for bookkeeping only; the simulation is
              slot-indexed and never multiplies by tau
    """

    gain_k: float
    alpha_sq: float
    phi: float
    v_pi: float
    epsilon: float = 0.01
    tau: float = 1.0

    def __post_init__(self) -> None:
        if not (self.v_pi > 0):
            raise ValueError("v_pi must be > 0")
        if not (self.alpha_sq >= 0):
            raise ValueError("alpha_sq must be >= 0")
        if not (self.epsilon > 0):
            raise ValueError("epsilon must be > 0")
        if not (self.gain_k >= 0):
            raise ValueError("gain_k must be >= 0")
        amplitude = self.gain_k * self.alpha_sq
        if not math.isfinite(amplitude):
            raise ValueError("gain_k * alpha_sq must be finite")

    @property
    def map_amplitude(self) -> float:
        """Peak of the voltage map, gain_k * alpha_sq."""
        return self.gain_k * self.alpha_sq


@dataclass
class OeoState:
    """Evolving state of one oscillator: modulator voltage and slot index."""

    v_in: float
    slot: int = 0

    def __post_init__(self) -> None:
        if not math.isfinite(self.v_in):
            raise ValueError("v_in must be finite")
        if self.slot < 0:
            raise ValueError("slot must be >= 0")


@dataclass(frozen=True)
class JonesField:
    """Complex amplitudes of the horizontal and vertical polarization modes."""

    h: complex
    v: complex

    @property
    def intensity(self) -> float:
        return abs(self.h) ** 2 + abs(self.v) ** 2


@dataclass(frozen=True)
class FieldChain:
    """The six fields along the oscillator loop, in propagation order."""

    e1: JonesField
    e2: JonesField
    e3: JonesField
    e4: JonesField
    e5: JonesField
    e6: JonesField


def modulator_angle(params: OeoParams, v_in: float) -> float:
    """Phase added by the modulator at drive voltage ``v_in``.

    theta = pi * v_in / (2 * v_pi) + phi. No range reduction is applied;
    the trig functions downstream handle large arguments.
    """
    return math.pi * v_in / (2.0 * params.v_pi) + params.phi


def field_chain(params: OeoParams, v_in: float) -> FieldChain:
    """Fields at the six marked positions of the loop for one pulse.

    The laser amplitude alpha is taken as the real non-negative
    sqrt(alpha_sq); a global phase would drop out of every observable used.
    """
    alpha = math.sqrt(params.alpha_sq)
    theta = modulator_angle(params, v_in)
    s, c = math.sin(theta), math.cos(theta)
    root2 = math.sqrt(2.0)

    e1 = JonesField(complex(alpha, 0.0), complex(alpha, 0.0))
    e2 = JonesField(alpha * cmath.exp(1j * theta), alpha * cmath.exp(-1j * theta))
    e3 = JonesField(1j * root2 * alpha * s, complex(root2 * alpha * c, 0.0))
    e4 = JonesField(1j * alpha * s, complex(alpha * c, 0.0))
    e5 = JonesField(complex(-alpha * s, 0.0), 1j * alpha * c)
    e6 = JonesField(0j, 1j * alpha * c)
    return FieldChain(e1, e2, e3, e4, e5, e6)


def free_step(params: OeoParams, v_in: float) -> float:
    """One free-running application of the voltage map.

    v(t+tau) = gain_k * alpha_sq * sin^2(theta(v)). Bounded in
    [0, gain_k * alpha_sq] for any finite input.
    """
    s = math.sin(modulator_angle(params, v_in))
    return params.gain_k * params.alpha_sq * s * s


def reset_step(params: OeoParams) -> float:
    """Voltage after a slot in which the station's detector fired.

    The switch closure replaces the map output with the constant
    gain_k * alpha_sq, independent of the current voltage.
    """
    return params.gain_k * params.alpha_sq


def stokes_s1(params: OeoParams, v_in: float) -> float:
    """Stokes parameter S1 of the station output at drive voltage ``v_in``.

    S1 = -epsilon * alpha_sq * cos(pi * v_in / v_pi + 2 * phi), the
    difference of horizontal and vertical intensities scaled by the
    polarimeter constant. Range is [-epsilon*alpha_sq, +epsilon*alpha_sq].
    """
    arg = math.pi * v_in / params.v_pi + 2.0 * params.phi
    return -params.epsilon * params.alpha_sq * math.cos(arg)


def iterate_free(params: OeoParams, v0: float, n: int) -> list[float]:
    """Voltage trajectory [v0, f(v0), ..., f^n(v0)] of length n + 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = [v0]
    v = v0
    for _ in range(n):
        v = free_step(params, v)
        out.append(v)
    return out
