"""Ruin-theoretic duty-cycle sharing between LTE-U and WiFi.

The pipeline: model leftover WiFi airtime as an insurance-style surplus
process, compute its finite-horizon ruin probability, grant LTE-U the duty
cycle ``(1 - psi) * T`` (optionally zeroed above a distress cutoff), split
that airtime across cellular users by water-filling, and compare the scheme
against pure-WiFi / equal-sharing / LTE-dominant baselines in a frame-level
simulator driven from a JSON scenario file.
"""

__version__ = "0.1.0"

from ._kernels import BACKEND
from .allocation import (
    AllocationResult,
    ChannelUserGains,
    snr_utility,
    sum_rate,
    water_fill,
)
from .duty import (
    ChanceCheckReport,
    CollisionModel,
    DutyCyclePolicy,
    DutyCycleResult,
    FrameConfig,
    PolicyKind,
    duty_cycle_from_surplus,
    lte_duty_cycle,
    verify_chance_constraint,
)
from .errors import ConfigError, NumericalError
from .ruin import (
    RuinEstimate,
    SurplusParams,
    SurplusPath,
    effective_claim_rate,
    ruin_probability_exact,
    ruin_probability_mc,
    simulate_surplus_path,
)
from .sim import (
    CollisionDraw,
    FrameOutcome,
    PathLossModel,
    RadioConfig,
    Scheme,
    Topology,
    TopologyConfig,
    TrafficConfig,
    generate_topology,
    link_budget,
    path_gain,
    sample_collisions,
    simulate_long_frame,
)

__all__ = [
    "BACKEND",
    "__version__",
    # ruin
    "SurplusParams",
    "SurplusPath",
    "RuinEstimate",
    "effective_claim_rate",
    "ruin_probability_exact",
    "simulate_surplus_path",
    "ruin_probability_mc",
    # duty
    "FrameConfig",
    "PolicyKind",
    "DutyCyclePolicy",
    "CollisionModel",
    "ChanceCheckReport",
    "DutyCycleResult",
    "lte_duty_cycle",
    "duty_cycle_from_surplus",
    "verify_chance_constraint",
    # allocation
    "ChannelUserGains",
    "AllocationResult",
    "snr_utility",
    "water_fill",
    "sum_rate",
    # sim
    "Scheme",
    "TopologyConfig",
    "Topology",
    "PathLossModel",
    "TrafficConfig",
    "RadioConfig",
    "CollisionDraw",
    "FrameOutcome",
    "generate_topology",
    "path_gain",
    "sample_collisions",
    "link_budget",
    "simulate_long_frame",
    # errors
    "ConfigError",
    "NumericalError",
]
