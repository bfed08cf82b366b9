"""Grant-free NOMA random-access simulator with AoI instrumentation.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from ._aoisim import (
    ExplorationKind,
    ExplorationPolicy,
    GridAction,
    GridStats,
    MetricsReport,
    QTable,
    Scheme,
    SimConfig,
    SlotOutcome,
    compute_power_levels,
    decode_slot,
    derive_run_seed,
    feedback_bits,
    lemma1_avg_aoi,
    min_slots_required,
    q_update,
    reward_from_bit,
    run_simulation,
    sweep_devices,
    theorem1_bound,
)

__all__ = [
    "ExplorationKind",
    "ExplorationPolicy",
    "GridAction",
    "GridStats",
    "MetricsReport",
    "QTable",
    "Scheme",
    "SimConfig",
    "SlotOutcome",
    "compute_power_levels",
    "decode_slot",
    "derive_run_seed",
    "feedback_bits",
    "lemma1_avg_aoi",
    "min_slots_required",
    "q_update",
    "reward_from_bit",
    "run_simulation",
    "sweep_devices",
    "theorem1_bound",
]
