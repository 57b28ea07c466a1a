"""Duty-cycle policy: turn WiFi ruin risk into an LTE-U airtime share.

A long frame of ``N`` short slots (each ``delta`` seconds, ``T = N*delta``)
is split between WiFi and LTE-U.  The policy computes the ruin probability
``psi`` of the WiFi surplus process and grants LTE-U the duty cycle

    alpha* = (1 - psi) * T                      (linear policy)
    alpha* = (1 - psi) * T if psi <= cutoff     (thresholded policy,
             else 0                              cutoff defaults to 0.4)

:func:`verify_chance_constraint` closes the loop: it checks empirically, via
a compound-Poisson collision model, that a given LTE-U allocation still
leaves the reserved WiFi slots available with at least probability ``xi``.
The policy itself never uses ``xi``; the check is a post-hoc audit, not an
equivalence claim.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from . import _kernels
from .ruin import SurplusParams, effective_claim_rate, ruin_probability_exact

__all__ = [
    "FrameConfig",
    "PolicyKind",
    "DutyCyclePolicy",
    "CollisionModel",
    "ChanceCheckReport",
    "DutyCycleResult",
    "lte_duty_cycle",
    "duty_cycle_from_surplus",
    "verify_chance_constraint",
]

# Knuth Poisson sampling multiplies uniforms against exp(-lam); keep lam sane.
_LAMBDA_MAX = 500.0


@dataclass(frozen=True)
class FrameConfig:
    """Long-frame structure: ``n_short`` slots of ``delta`` seconds each.

    ``r_reserved`` slots are set aside for WiFi; the premium of the surplus
    process is ``r_reserved * delta`` seconds per period.
    """

    n_short: int = 10
    delta: float = 0.001
    r_reserved: int = 1

    def __post_init__(self):
        if not (isinstance(self.n_short, int) and self.n_short >= 1):
            raise ValueError(f"n_short must be a positive integer, got {self.n_short}")
        if not (math.isfinite(self.delta) and self.delta > 0.0):
            raise ValueError(f"delta must be > 0, got {self.delta}")
        if not (isinstance(self.r_reserved, int) and 0 <= self.r_reserved <= self.n_short):
            raise ValueError(
                f"r_reserved must be an integer in [0, n_short], got {self.r_reserved}"
            )

    @property
    def total_duration(self) -> float:
        """Long-frame duration ``T = n_short * delta`` (seconds)."""
        return self.n_short * self.delta


class PolicyKind(Enum):
    LINEAR = "linear"
    THRESHOLDED_LINEAR = "thresholded_linear"


@dataclass(frozen=True)
class DutyCyclePolicy:
    """How the ruin probability maps to the LTE-U duty cycle."""

    kind: PolicyKind = PolicyKind.LINEAR
    psi_cutoff: float = 0.4

    def __post_init__(self):
        if not (math.isfinite(self.psi_cutoff) and 0.0 <= self.psi_cutoff <= 1.0):
            raise ValueError(f"psi_cutoff must be in [0, 1], got {self.psi_cutoff}")


@dataclass(frozen=True)
class CollisionModel:
    """Compound-Poisson WiFi collision model for one channel.

    ``lambda_k`` is the expected number of collisions per long frame;
    ``mu`` is the rate (1/s) of each collision's exponential duration.
    """

    lambda_k: float
    mu: float

    def __post_init__(self):
        if not (math.isfinite(self.lambda_k) and 0.0 < self.lambda_k <= _LAMBDA_MAX):
            raise ValueError(
                f"lambda_k must be in (0, {_LAMBDA_MAX}], got {self.lambda_k}"
            )
        if not (math.isfinite(self.mu) and self.mu > 0.0):
            raise ValueError(f"mu must be > 0, got {self.mu}")


@dataclass(frozen=True)
class ChanceCheckReport:
    """Outcome of the empirical WiFi-sufficiency check."""

    satisfied: bool
    empirical_prob: float
    xi: float
    trials: int


class DutyCycleResult(NamedTuple):
    alpha_star: float
    psi: float


def lte_duty_cycle(psi: float, frame: FrameConfig, policy: DutyCyclePolicy) -> float:
    """LTE-U duty cycle (seconds) granted for a given ruin probability.

    Linear: ``(1 - psi) * T``.  Thresholded: the same below the cutoff, zero
    above it (no LTE-U access when WiFi is already in distress).
    """
    if not (math.isfinite(psi) and 0.0 <= psi <= 1.0):
        raise ValueError(f"psi must be in [0, 1], got {psi}")
    if policy.kind is PolicyKind.THRESHOLDED_LINEAR and psi > policy.psi_cutoff:
        return 0.0
    return (1.0 - psi) * frame.total_duration


def duty_cycle_from_surplus(
    frame: FrameConfig,
    mu: float,
    alpha_seed: float = 0.0,
    policy: DutyCyclePolicy = DutyCyclePolicy(),
    units: str = "seconds",
    fixed_point: bool = False,
    max_iterations: int = 100,
) -> DutyCycleResult:
    """Compute the ruin probability of the frame's surplus process and apply the policy.

    The surplus process starts with the whole long frame as capital, earns
    the reserved slot time per period, and runs for one period per short
    frame.  ``alpha_seed`` is the LTE-U duty cycle whose claim-inflating
    effect is being evaluated; by default 0, i.e. the ruin probability of
    pure-WiFi claims.

    The claim rate feeds back on the policy output (the granted duty cycle
    enlarges the claim rate, which changes the ruin probability).  One-shot
    mode evaluates at ``alpha_seed`` only.  With ``fixed_point=True`` the
    map ``alpha -> policy(psi(mu + alpha))`` is iterated from ``alpha_seed``
    until successive iterates differ by at most ``1e-9 * T``; the map is
    nondecreasing in alpha, so the iterates are monotone and converge.

    Args:
        frame: Long-frame structure; ``r_reserved`` must be >= 1 so the
            premium is positive.
        mu: Collision-duration rate (1/s).
        alpha_seed: Duty cycle entering the claim rate, in [0, T] seconds.
        policy: Mapping from psi to the granted duty cycle.
        units: "seconds" measures capital and premium in seconds
            (``u = N*delta``, ``c = r*delta``); "slots" keeps them as raw
            slot counts (``u = N``, ``c = r``) while ``mu`` and
            ``alpha_seed`` stay as given, preserving the unit-mixing
            formulation this model was originally stated in.

    Returns:
        ``(alpha_star, psi)``: the granted LTE-U duty cycle (seconds) and
        the ruin probability it was derived from.
    """
    if units not in ("seconds", "slots"):
        raise ValueError(f"units must be 'seconds' or 'slots', got {units!r}")
    if frame.r_reserved < 1:
        raise ValueError(
            "duty_cycle_from_surplus needs r_reserved >= 1; "
            "a zero premium makes the surplus process degenerate"
        )
    t_total = frame.total_duration
    if not (math.isfinite(alpha_seed) and 0.0 <= alpha_seed <= t_total):
        raise ValueError(f"alpha_seed must be in [0, T={t_total}], got {alpha_seed}")

    if units == "seconds":
        capital = frame.n_short * frame.delta
        premium = frame.r_reserved * frame.delta
    else:
        capital = float(frame.n_short)
        premium = float(frame.r_reserved)

    def evaluate(alpha: float) -> DutyCycleResult:
        params = SurplusParams(
            initial_capital=capital,
            premium=premium,
            claim_rate=effective_claim_rate(mu, alpha),
            horizon=frame.n_short,
        )
        psi = ruin_probability_exact(params)
        return DutyCycleResult(lte_duty_cycle(psi, frame, policy), psi)

    result = evaluate(alpha_seed)
    if not fixed_point:
        return result

    alpha = alpha_seed
    tolerance = 1e-9 * t_total
    for _ in range(max_iterations):
        result = evaluate(alpha)
        if abs(result.alpha_star - alpha) <= tolerance:
            break
        alpha = result.alpha_star
    return result


def verify_chance_constraint(
    alpha_total: float,
    frame: FrameConfig,
    collision_model: CollisionModel,
    xi: float,
    trials: int,
    seed: int,
) -> ChanceCheckReport:
    """Empirically audit that an LTE-U allocation leaves enough WiFi airtime.

    Estimates, over ``trials`` seeded draws of the compound-Poisson collision
    time ``X_t``, the probability that

        X_t + alpha_total <= (n_short - r_reserved) * delta

    i.e. collisions plus the LTE-U share fit inside the non-reserved part of
    the long frame.  Satisfied when that probability reaches ``xi``.

    Draws are coupled across calls with the same seed (identical ``X_t``
    stream), so the empirical probability is non-increasing in
    ``alpha_total`` by construction.
    """
    t_total = frame.total_duration
    if not (math.isfinite(alpha_total) and 0.0 <= alpha_total <= t_total):
        raise ValueError(f"alpha_total must be in [0, T={t_total}], got {alpha_total}")
    if not (math.isfinite(xi) and 0.0 < xi < 1.0):
        raise ValueError(f"xi must be in (0, 1), got {xi}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")

    threshold = (frame.n_short - frame.r_reserved) * frame.delta
    ok = _kernels.chance_mc_count(
        alpha_total, threshold, collision_model.lambda_k, collision_model.mu,
        trials, seed,
    )
    empirical = ok / trials
    return ChanceCheckReport(
        satisfied=empirical >= xi, empirical_prob=empirical, xi=xi, trials=trials
    )
