"""Eavesdropper models for the synchronization channel and the stations'
strong-pulse (Trojan) monitor.

Each attack is a small tagged type; :func:`effective_detection` maps a model
onto the detection law of :mod:`chaoskd.channel`. Exactly one model is
active per session.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .channel import LinkParams, detection_probability

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class NoEve:
    """No eavesdropper present."""


@dataclass(frozen=True)
class ExtraLoss:
    """Eve siphons light by inserting extra loss; scales t_c by loss_factor."""

    loss_factor: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.loss_factor <= 1.0):
            raise ValueError("loss_factor must be within [0, 1]")


@dataclass(frozen=True)
class InterceptResend:
    """Eve measures each pulse and resends one in a polarization of her own.

    Not knowing the chaotic polarization, her resent state is modeled as a
    fresh uniform angle on [0, 2*pi), per slot and per direction.
    """


@dataclass(frozen=True)
class StrongPulse:
    """Eve floods the stations with strong pulses of mean photon number
    injected_mu, forcing frequent detections."""

    injected_mu: float

    def __post_init__(self) -> None:
        if not (self.injected_mu >= 0):
            raise ValueError("injected_mu must be >= 0")


EveModel = Union[NoEve, ExtraLoss, InterceptResend, StrongPulse]


@dataclass(frozen=True)
class TrojanMonitorConfig:
    """Alarm threshold of the power monitor on the unused polarizer port."""

    mu_alarm_threshold: float

    def __post_init__(self) -> None:
        if not (self.mu_alarm_threshold > 0):
            raise ValueError("mu_alarm_threshold must be > 0")


def effective_detection(
    eve: EveModel,
    link: LinkParams,
    p_det: float,
    mu: float,
    theta_local: float,
    theta_remote: float,
    rng: np.random.Generator,
) -> float:
    """Detection probability for one direction with the attack applied.

    NoEve passes through unchanged; ExtraLoss scales the channel
    transmission; InterceptResend replaces the remote polarization angle by
    a fresh uniform draw from ``rng``; StrongPulse replaces the pulse mean
    photon number by the injected one (the clamp inside the detection law
    then caps the probability at 1).
    """
    if isinstance(eve, NoEve):
        return detection_probability(p_det, link.transmission, mu, theta_local, theta_remote)
    if isinstance(eve, ExtraLoss):
        return detection_probability(
            p_det, eve.loss_factor * link.transmission, mu, theta_local, theta_remote
        )
    if isinstance(eve, InterceptResend):
        resent = float(rng.uniform(0.0, _TWO_PI))
        return detection_probability(p_det, link.transmission, mu, theta_local, resent)
    if isinstance(eve, StrongPulse):
        return detection_probability(
            p_det, link.transmission, eve.injected_mu, theta_local, theta_remote
        )
    raise TypeError(f"unknown eavesdropper model: {eve!r}")


def incoming_mean_photons(eve: EveModel, link: LinkParams, toward: str) -> float:
    """Ground-truth mean photon number arriving at a station's input.

    ``toward`` is "a" (pulses travelling to Alice, i.e. leaving Bob) or
    "b". This is what the Trojan monitor physically sees: the nominal
    attenuated pulse after channel transmission, further weakened by an
    extra-loss attack, or Eve's injected pulse under a strong-pulse attack.
    An intercept-resend Eve mimics the nominal pulse strength.
    """
    if toward == "a":
        nominal = link.transmission * link.mu_b
    elif toward == "b":
        nominal = link.transmission * link.mu_a
    else:
        raise ValueError("toward must be 'a' or 'b'")
    if isinstance(eve, ExtraLoss):
        return eve.loss_factor * nominal
    if isinstance(eve, StrongPulse):
        return link.transmission * eve.injected_mu
    return nominal


def trojan_monitor(cfg: TrojanMonitorConfig, incoming_mu: float) -> bool:
    """Alarm iff the arriving pulse strength strictly exceeds the threshold."""
    if incoming_mu < 0:
        raise ValueError("incoming_mu must be >= 0")
    return incoming_mu > cfg.mu_alarm_threshold
