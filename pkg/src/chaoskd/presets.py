"""Named experiment presets.

Every preset fully determines a session configuration except the seed.
Detector probabilities and channel transmission are fixed at 1 in all
presets, so each link's mu value carries the whole p*t_c*mu product the
detection law depends on.

Two calibrated constants:

* KEY_THRESHOLD splits the stationary S1 distribution of the nominal
  free-running oscillator evenly (measured once over 10^6 iterations; the
  distribution is not symmetric about zero, its median sits near +0.316).
  A balanced split keeps unsynchronized bit strings at the coin-flip error
  rate and is the natural operating point for key extraction.

* The strong-pulse presets use a one-slot propagation delay. The
  detection law compares the local polarization against the remote one a
  slot earlier, and under a saturated detection probability that drives
  both oscillators onto a deterministic reset-reset-free cycle: the
  narrow-peak quasi-periodic signature the spectral monitor looks for.
  With a strictly zero delay a saturated attack either freezes both
  voltages or locks the oscillators into ordinary chaos, and no narrow
  peaks can form.
"""

from __future__ import annotations

import math

from .attacks import ExtraLoss, EveModel, InterceptResend, NoEve, StrongPulse
from .channel import LinkParams
from .oeo import OeoParams
from .session import PartyConfig, SessionConfig

GAIN_NOMINAL = 0.0133
GAIN_MISMATCHED = 0.0132
ALPHA_SQ = 100.0
POLARIMETER_EPSILON = 0.01
N_SLOTS = 40_000
WARMUP_SLOTS = 100
V_INIT_A = 0.1
V_INIT_B = 0.2

# Median of the stationary S1 distribution of the nominal oscillator
# (gain_k*alpha_sq = 1.33, phi = pi/4, v_pi = 1), frozen from a calibration
# run; stable to +/-4e-4 across initial conditions.
KEY_THRESHOLD = 0.3163

STRONG_PULSE_MU = 1000.0
EVE_LOSS_FACTOR = 0.5

PRESET_NAMES = (
    "fig3-sync",
    "fig4-mismatch",
    "no-sync",
    "fig5-spectrum",
    "eve-intercept",
    "eve-loss",
    "eve-strong-pulse",
)


def _oeo(gain_k: float) -> OeoParams:
    return OeoParams(
        gain_k=gain_k,
        alpha_sq=ALPHA_SQ,
        phi=math.pi / 4,
        v_pi=1.0,
        epsilon=POLARIMETER_EPSILON,
        tau=1.0,
    )


def _session(
    seed: int,
    mu: float,
    gain_b: float = GAIN_NOMINAL,
    eve: EveModel = NoEve(),
    delay_slots: int = 0,
) -> SessionConfig:
    return SessionConfig(
        alice=PartyConfig(oeo=_oeo(GAIN_NOMINAL), v_init=V_INIT_A),
        bob=PartyConfig(oeo=_oeo(gain_b), v_init=V_INIT_B),
        link=LinkParams(
            det_prob_a=1.0,
            det_prob_b=1.0,
            transmission=1.0,
            mu_a=mu,
            mu_b=mu,
            delay_slots=delay_slots,
        ),
        n_slots=N_SLOTS,
        warmup_slots=WARMUP_SLOTS,
        seed=seed,
        eve=eve,
        s_th=KEY_THRESHOLD,
    )


def preset_configs(name: str, seed: int) -> dict[str, SessionConfig]:
    """Session configuration(s) of a named preset.

    Single-run presets return {"main": cfg}; fig5-spectrum returns a
    {"baseline", "strong"} pair sharing the same oscillators and link,
    differing only in the strong-pulse attack.
    """
    if name == "fig3-sync":
        return {"main": _session(seed, mu=0.03)}
    if name == "fig4-mismatch":
        return {"main": _session(seed, mu=0.83, gain_b=GAIN_MISMATCHED)}
    if name == "no-sync":
        return {"main": _session(seed, mu=0.0)}
    if name == "eve-intercept":
        return {"main": _session(seed, mu=0.03, eve=InterceptResend())}
    if name == "eve-loss":
        return {"main": _session(seed, mu=0.03, eve=ExtraLoss(EVE_LOSS_FACTOR))}
    if name == "eve-strong-pulse":
        return {
            "main": _session(
                seed, mu=0.03, eve=StrongPulse(STRONG_PULSE_MU), delay_slots=1
            )
        }
    if name == "fig5-spectrum":
        return {
            "baseline": _session(seed, mu=0.73, delay_slots=1),
            "strong": _session(
                seed, mu=0.73, eve=StrongPulse(STRONG_PULSE_MU), delay_slots=1
            ),
        }
    raise ValueError(f"unknown preset: {name!r} (choose from {', '.join(PRESET_NAMES)})")
