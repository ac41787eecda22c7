"""Quantum channel constants and the single-photon detection probability.

Re-exported by :mod:`chaoskd.session`; kept separate so the attack models
can build on the same detection law without an import cycle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class LinkParams:
    """Channel and detector constants for the two-party link.

    det_prob_a / det_prob_b: probability that the station's single-photon
        detector produces a usable electrical signal when a photon arrives.
    transmission: channel transmission coefficient t_c.
    mu_a / mu_b: mean photon number of the attenuated pulse leaving Alice
        (Bob); nominally below one photon per pulse.
    delay_slots: propagation delay in whole slots (0 means the remote
        voltage of the same slot index is compared).
    """

    det_prob_a: float
    det_prob_b: float
    transmission: float
    mu_a: float
    mu_b: float
    delay_slots: int = 0

    def __post_init__(self) -> None:
        if not (0.0 <= self.det_prob_a <= 1.0):
            raise ValueError("det_prob_a must be within [0, 1]")
        if not (0.0 <= self.det_prob_b <= 1.0):
            raise ValueError("det_prob_b must be within [0, 1]")
        if not (0.0 <= self.transmission <= 1.0):
            raise ValueError("transmission must be within [0, 1]")
        if not (self.mu_a >= 0):
            raise ValueError("mu_a must be >= 0")
        if not (self.mu_b >= 0):
            raise ValueError("mu_b must be >= 0")
        if self.delay_slots < 0:
            raise ValueError("delay_slots must be >= 0")


def detection_probability(
    p_det: float,
    t_c: float,
    mu: float,
    theta_local: float,
    theta_remote: float,
) -> float:
    """Probability that a station's single-photon detector fires this slot.

    Evaluates p_det * t_c * mu * (1 - [sin(tl)sin(tr) + cos(tl)cos(tr)]^2)
    and clamps the result into [0, 1]. The bracketed product form is the
    model definition; its closed form p*t*mu*sin^2(tl - tr) is reserved for
    the test oracle. The clamp matters only when the p*t*mu product is
    inflated far above one (strong-pulse conditions); the law itself is an
    approximation valid for weak pulses.
    """
    bracket = math.sin(theta_local) * math.sin(theta_remote) + math.cos(
        theta_local
    ) * math.cos(theta_remote)
    q = p_det * t_c * mu * (1.0 - bracket * bracket)
    return min(max(q, 0.0), 1.0)
