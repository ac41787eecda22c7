"""JSON session configuration: loading with per-field validation and the
inverse serialization.

The document mirrors SessionConfig field names in snake_case; angles are
radians, voltages volts. Unknown keys are rejected, every invariant
violation is reported with the dotted path of the offending field.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any, Mapping

from .attacks import ExtraLoss, EveModel, InterceptResend, NoEve, StrongPulse
from .channel import LinkParams
from .oeo import OeoParams
from .session import PartyConfig, SessionConfig


class ConfigError(ValueError):
    """A configuration file is missing, malformed or violates an invariant."""


def _reject_unknown(d: Mapping[str, Any], allowed: set[str], path: str) -> None:
    for key in d:
        if key not in allowed:
            raise ConfigError(f"unknown key {key!r} in {path or 'top-level config'}")


def _number(d: Mapping[str, Any], key: str, path: str, default=None) -> float:
    if key not in d:
        if default is not None:
            return default
        raise ConfigError(f"missing required key {_join(path, key)!r}")
    value = d[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{_join(path, key)} must be a number")
    return float(value)


def _integer(d: Mapping[str, Any], key: str, path: str, default=None) -> int:
    if key not in d:
        if default is not None:
            return default
        raise ConfigError(f"missing required key {_join(path, key)!r}")
    value = d[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{_join(path, key)} must be an integer")
    return value


def _join(path: str, key: str) -> str:
    return f"{path}.{key}" if path else key


def _wrap(path: str, exc: ValueError) -> ConfigError:
    # Dataclass validators word their messages as "<field> must ...", so a
    # dotted prefix yields the full field path.
    return ConfigError(f"{_join(path, str(exc))}" if path else str(exc))


def _oeo_from_dict(d: Any, path: str) -> OeoParams:
    if not isinstance(d, Mapping):
        raise ConfigError(f"{path} must be an object")
    _reject_unknown(d, {"gain_k", "alpha_sq", "phi", "v_pi", "epsilon", "tau"}, path)
    try:
        return OeoParams(
            gain_k=_number(d, "gain_k", path),
            alpha_sq=_number(d, "alpha_sq", path),
            phi=_number(d, "phi", path),
            v_pi=_number(d, "v_pi", path),
            epsilon=_number(d, "epsilon", path, default=0.01),
            tau=_number(d, "tau", path, default=1.0),
        )
    except ConfigError:
        raise
    except ValueError as exc:
        raise _wrap(path, exc) from exc


def _party_from_dict(d: Any, path: str) -> PartyConfig:
    if not isinstance(d, Mapping):
        raise ConfigError(f"{path} must be an object")
    _reject_unknown(d, {"oeo", "v_init"}, path)
    if "oeo" not in d:
        raise ConfigError(f"missing required key {_join(path, 'oeo')!r}")
    v_init = d.get("v_init")
    if v_init is not None:
        if isinstance(v_init, bool) or not isinstance(v_init, (int, float)):
            raise ConfigError(f"{_join(path, 'v_init')} must be a number or null")
        v_init = float(v_init)
    try:
        return PartyConfig(oeo=_oeo_from_dict(d["oeo"], _join(path, "oeo")), v_init=v_init)
    except ConfigError:
        raise
    except ValueError as exc:
        raise _wrap(path, exc) from exc


def _link_from_dict(d: Any, path: str) -> LinkParams:
    if not isinstance(d, Mapping):
        raise ConfigError(f"{path} must be an object")
    _reject_unknown(
        d,
        {"det_prob_a", "det_prob_b", "transmission", "mu_a", "mu_b", "delay_slots"},
        path,
    )
    try:
        return LinkParams(
            det_prob_a=_number(d, "det_prob_a", path),
            det_prob_b=_number(d, "det_prob_b", path),
            transmission=_number(d, "transmission", path),
            mu_a=_number(d, "mu_a", path),
            mu_b=_number(d, "mu_b", path),
            delay_slots=_integer(d, "delay_slots", path, default=0),
        )
    except ConfigError:
        raise
    except ValueError as exc:
        raise _wrap(path, exc) from exc


_EVE_KINDS = {"none", "extra_loss", "intercept_resend", "strong_pulse"}


def _eve_from_dict(d: Any, path: str) -> EveModel:
    if not isinstance(d, Mapping):
        raise ConfigError(f"{path} must be an object")
    kind = d.get("kind")
    if kind not in _EVE_KINDS:
        raise ConfigError(
            f"{_join(path, 'kind')} must be one of {sorted(_EVE_KINDS)}, got {kind!r}"
        )
    try:
        if kind == "none":
            _reject_unknown(d, {"kind"}, path)
            return NoEve()
        if kind == "extra_loss":
            _reject_unknown(d, {"kind", "loss_factor"}, path)
            return ExtraLoss(loss_factor=_number(d, "loss_factor", path))
        if kind == "intercept_resend":
            _reject_unknown(d, {"kind"}, path)
            return InterceptResend()
        _reject_unknown(d, {"kind", "injected_mu"}, path)
        return StrongPulse(injected_mu=_number(d, "injected_mu", path))
    except ConfigError:
        raise
    except ValueError as exc:
        raise _wrap(path, exc) from exc


_TOP_KEYS = {
    "alice",
    "bob",
    "link",
    "n_slots",
    "warmup_slots",
    "seed",
    "eve",
    "s_th",
    "include_warmup_in_key",
}


def session_from_dict(d: Any, seed_override: int | None = None) -> SessionConfig:
    """Build a validated SessionConfig from a parsed JSON document."""
    if not isinstance(d, Mapping):
        raise ConfigError("top-level config must be an object")
    _reject_unknown(d, _TOP_KEYS, "")
    for required in ("alice", "bob", "link"):
        if required not in d:
            raise ConfigError(f"missing required key {required!r}")

    if seed_override is not None:
        seed = seed_override
    elif "seed" in d and d["seed"] is not None:
        seed = _integer(d, "seed", "")
    else:
        raise ConfigError("missing required key 'seed' (or pass a seed explicitly)")

    s_th = _number(d, "s_th", "", default=0.0)
    include_warmup = d.get("include_warmup_in_key", True)
    if not isinstance(include_warmup, bool):
        raise ConfigError("include_warmup_in_key must be a boolean")

    try:
        return SessionConfig(
            alice=_party_from_dict(d["alice"], "alice"),
            bob=_party_from_dict(d["bob"], "bob"),
            link=_link_from_dict(d["link"], "link"),
            n_slots=_integer(d, "n_slots", ""),
            warmup_slots=_integer(d, "warmup_slots", ""),
            seed=seed,
            eve=_eve_from_dict(d.get("eve", {"kind": "none"}), "eve"),
            s_th=s_th,
            include_warmup_in_key=include_warmup,
        )
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def session_to_dict(cfg: SessionConfig) -> dict[str, Any]:
    """Serialize a SessionConfig into the JSON document shape."""

    def oeo_dict(p: OeoParams) -> dict[str, Any]:
        return {
            "gain_k": p.gain_k,
            "alpha_sq": p.alpha_sq,
            "phi": p.phi,
            "v_pi": p.v_pi,
            "epsilon": p.epsilon,
            "tau": p.tau,
        }

    eve: dict[str, Any]
    if isinstance(cfg.eve, NoEve):
        eve = {"kind": "none"}
    elif isinstance(cfg.eve, ExtraLoss):
        eve = {"kind": "extra_loss", "loss_factor": cfg.eve.loss_factor}
    elif isinstance(cfg.eve, InterceptResend):
        eve = {"kind": "intercept_resend"}
    elif isinstance(cfg.eve, StrongPulse):
        eve = {"kind": "strong_pulse", "injected_mu": cfg.eve.injected_mu}
    else:
        raise TypeError(f"unknown eavesdropper model: {cfg.eve!r}")

    return {
        "alice": {"oeo": oeo_dict(cfg.alice.oeo), "v_init": cfg.alice.v_init},
        "bob": {"oeo": oeo_dict(cfg.bob.oeo), "v_init": cfg.bob.v_init},
        "link": {
            "det_prob_a": cfg.link.det_prob_a,
            "det_prob_b": cfg.link.det_prob_b,
            "transmission": cfg.link.transmission,
            "mu_a": cfg.link.mu_a,
            "mu_b": cfg.link.mu_b,
            "delay_slots": cfg.link.delay_slots,
        },
        "n_slots": cfg.n_slots,
        "warmup_slots": cfg.warmup_slots,
        "seed": cfg.seed,
        "eve": eve,
        "s_th": cfg.s_th,
        "include_warmup_in_key": cfg.include_warmup_in_key,
    }


def load_config(path: str | Path, seed_override: int | None = None) -> SessionConfig:
    """Load and validate a session config file."""
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"config not found: {path}")
    try:
        document = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {path}: {exc}") from exc
    return session_from_dict(document, seed_override=seed_override)


def save_config(cfg: SessionConfig, path: str | Path) -> None:
    Path(path).write_text(json.dumps(session_to_dict(cfg), indent=2) + "\n")
