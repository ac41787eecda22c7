"""Monte-Carlo simulator of key distribution between two chaotic
optoelectronic oscillators synchronized by stochastically detected weak
light pulses."""

from .attacks import (
    EveModel,
    ExtraLoss,
    InterceptResend,
    NoEve,
    StrongPulse,
    TrojanMonitorConfig,
    effective_detection,
    incoming_mean_photons,
    trojan_monitor,
)
from .channel import LinkParams, detection_probability
from .config import ConfigError, load_config, save_config, session_from_dict, session_to_dict
from .harness import SessionMetrics, run_experiment, session_metrics
from .keys import BerReport, discretize, ber
from .oeo import (
    FieldChain,
    JonesField,
    OeoParams,
    OeoState,
    field_chain,
    free_step,
    iterate_free,
    modulator_angle,
    reset_step,
    stokes_s1,
)
from .presets import PRESET_NAMES, preset_configs
from .session import (
    PartyConfig,
    SessionConfig,
    SlotRecord,
    s1_series,
    simulate_session,
    sync_error_series,
    trace_ber,
    trace_keys,
)
from .spectrum import Spectrum, dft, power_spectrum, quasiperiodicity_score

__version__ = "0.1.0"
