"""Shared run cache: sessions are deterministic per config, so traces are
computed once and reused across test modules."""

from __future__ import annotations

import pytest

from chaoskd.session import SessionConfig, SlotRecord, s1_series, simulate_session, trace_ber
from chaoskd.spectrum import power_spectrum, quasiperiodicity_score


class RunBank:
    def __init__(self) -> None:
        self._traces: dict[SessionConfig, list[SlotRecord]] = {}

    def trace(self, cfg: SessionConfig) -> list[SlotRecord]:
        if cfg not in self._traces:
            self._traces[cfg] = simulate_session(cfg)
        return self._traces[cfg]

    def ber(self, cfg: SessionConfig) -> float:
        return trace_ber(self.trace(cfg), cfg).ber

    def qp_score(self, cfg: SessionConfig) -> float:
        series = s1_series(self.trace(cfg), "a")[cfg.warmup_slots :]
        return quasiperiodicity_score(power_spectrum(series))


@pytest.fixture(scope="session")
def bank() -> RunBank:
    return RunBank()
