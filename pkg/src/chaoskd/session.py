"""Two-party slot-synchronous simulation.

Each slot, both stations exchange attenuated pulses; a station whose
single-photon detector fires closes its electrical switch for exactly one
slot, replacing the chaotic voltage map by the constant reset value for the
update out of that slot. Detection draws are independent Bernoulli events
driven by per-purpose RNG streams derived from the session seed, so adding
or removing an eavesdropper never perturbs the stations' own draws.

Stream ids (fixed, documented): 1 Alice detections, 2 Bob detections,
3 Eve toward Alice, 4 Eve toward Bob, 5 Alice initial voltage, 6 Bob
initial voltage. Detection draws are generated as one block per party at
session start; Eve's resend angles are drawn lazily, one per direction per
slot in which a detection is possible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .attacks import EveModel, NoEve, effective_detection
from .channel import LinkParams, detection_probability
from .keys import BerReport, ber
from .oeo import OeoParams, free_step, modulator_angle, reset_step, stokes_s1

__all__ = [
    "PartyConfig",
    "LinkParams",
    "SessionConfig",
    "SlotRecord",
    "detection_probability",
    "simulate_session",
    "sync_error_series",
    "trace_keys",
    "trace_ber",
    "s1_series",
]

_MAX_SEED = 2**64

_STREAM_ALICE_DETECT = 1
_STREAM_BOB_DETECT = 2
_STREAM_EVE_TO_ALICE = 3
_STREAM_EVE_TO_BOB = 4
_STREAM_ALICE_INIT = 5
_STREAM_BOB_INIT = 6


def _stream(seed: int, stream_id: int) -> np.random.Generator:
    """Independent PCG64 stream with a fixed offset from the master seed."""
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(stream_id,)))
    )


@dataclass(frozen=True)
class PartyConfig:
    """One station: oscillator constants plus its initial modulator voltage.

    v_init None requests a seeded uniform draw over [0, v_pi), standing in
    for the electronic start-up noise of a real device.
    """

    oeo: OeoParams
    v_init: float | None = None

    def __post_init__(self) -> None:
        if self.v_init is not None and not math.isfinite(self.v_init):
            raise ValueError("v_init must be finite")


@dataclass(frozen=True)
class SessionConfig:
    alice: PartyConfig
    bob: PartyConfig
    link: LinkParams
    n_slots: int
    warmup_slots: int
    seed: int
    eve: EveModel = field(default_factory=NoEve)
    s_th: float = 0.0
    include_warmup_in_key: bool = True

    def __post_init__(self) -> None:
        if self.n_slots < 0:
            raise ValueError("n_slots must be >= 0")
        if self.warmup_slots < 0:
            raise ValueError("warmup_slots must be >= 0")
        if self.warmup_slots > self.n_slots:
            raise ValueError("warmup_slots must not exceed n_slots")
        if not (0 <= self.seed < _MAX_SEED):
            raise ValueError("seed must be an unsigned 64-bit integer")
        if not math.isfinite(self.s_th):
            raise ValueError("s_th must be finite")


@dataclass(slots=True)
class SlotRecord:
    """Per-slot trace row; voltages and S1 are the values *entering* the
    slot, before any detection-driven update."""

    slot: int
    v_a: float
    v_b: float
    s1_a: float
    s1_b: float
    q_a: float
    q_b: float
    det_a: bool
    det_b: bool
    bit_a: int
    bit_b: int


def _initial_voltage(party: PartyConfig, seed: int, stream_id: int) -> float:
    if party.v_init is not None:
        return party.v_init
    return float(_stream(seed, stream_id).uniform(0.0, party.oeo.v_pi))


def simulate_session(cfg: SessionConfig) -> list[SlotRecord]:
    """Run one session and return its full per-slot trace.

    Per slot: record voltages, S1 values and threshold bits; for slots past
    the warmup (and past the propagation delay, so a pulse has actually
    arrived) draw both detections independently, comparing each station's
    current polarization angle against the remote angle delay_slots
    earlier; finally update each voltage with the reset map if that
    station's detector fired, else with the free-running map.

    Deterministic: identical configurations (seed included) produce
    bit-identical traces.
    """
    pa, pb = cfg.alice.oeo, cfg.bob.oeo
    link, eve, s_th = cfg.link, cfg.eve, cfg.s_th
    n, warmup, delay = cfg.n_slots, cfg.warmup_slots, link.delay_slots

    v_a = _initial_voltage(cfg.alice, cfg.seed, _STREAM_ALICE_INIT)
    v_b = _initial_voltage(cfg.bob, cfg.seed, _STREAM_BOB_INIT)

    u_a = _stream(cfg.seed, _STREAM_ALICE_DETECT).random(n).tolist()
    u_b = _stream(cfg.seed, _STREAM_BOB_DETECT).random(n).tolist()
    rng_eve_a = _stream(cfg.seed, _STREAM_EVE_TO_ALICE)
    rng_eve_b = _stream(cfg.seed, _STREAM_EVE_TO_BOB)

    v_a_hist: list[float] = []
    v_b_hist: list[float] = []
    records: list[SlotRecord] = []
    active_from = max(warmup, delay)

    for slot in range(n):
        v_a_hist.append(v_a)
        v_b_hist.append(v_b)
        theta_a = modulator_angle(pa, v_a)
        theta_b = modulator_angle(pb, v_b)
        s1_a = stokes_s1(pa, v_a)
        s1_b = stokes_s1(pb, v_b)

        if slot >= active_from:
            if delay == 0:
                remote_for_a, remote_for_b = theta_b, theta_a
            else:
                remote_for_a = modulator_angle(pb, v_b_hist[slot - delay])
                remote_for_b = modulator_angle(pa, v_a_hist[slot - delay])
            q_a = effective_detection(
                eve, link, link.det_prob_a, link.mu_b, theta_a, remote_for_a, rng_eve_a
            )
            q_b = effective_detection(
                eve, link, link.det_prob_b, link.mu_a, theta_b, remote_for_b, rng_eve_b
            )
        else:
            q_a = 0.0
            q_b = 0.0

        det_a = u_a[slot] < q_a
        det_b = u_b[slot] < q_b
        records.append(
            SlotRecord(
                slot,
                v_a,
                v_b,
                s1_a,
                s1_b,
                q_a,
                q_b,
                det_a,
                det_b,
                0 if s1_a < s_th else 1,
                0 if s1_b < s_th else 1,
            )
        )
        v_a = reset_step(pa) if det_a else free_step(pa, v_a)
        v_b = reset_step(pb) if det_b else free_step(pb, v_b)
    return records


def sync_error_series(trace: Sequence[SlotRecord]) -> np.ndarray:
    """Per-slot synchronization error |s1_a - s1_b|."""
    if len(trace) == 0:
        raise ValueError("trace is empty")
    return np.array([abs(r.s1_a - r.s1_b) for r in trace])


def s1_series(trace: Sequence[SlotRecord], party: str) -> np.ndarray:
    """S1 column of the trace for party 'a' or 'b'."""
    if party == "a":
        return np.array([r.s1_a for r in trace])
    if party == "b":
        return np.array([r.s1_b for r in trace])
    raise ValueError("party must be 'a' or 'b'")


def trace_keys(trace: Sequence[SlotRecord], skip: int = 0) -> tuple[list[int], list[int]]:
    """Both parties' bit strings, optionally skipping the first ``skip`` slots."""
    rows = trace[skip:]
    return [r.bit_a for r in rows], [r.bit_b for r in rows]


def trace_ber(trace: Sequence[SlotRecord], cfg: SessionConfig) -> BerReport:
    """Bit error rate of the session key per the config's warmup policy."""
    skip = 0 if cfg.include_warmup_in_key else cfg.warmup_slots
    bits_a, bits_b = trace_keys(trace, skip)
    return ber(bits_a, bits_b)
