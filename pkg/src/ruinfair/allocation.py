"""Per-user bandwidth sharing of the LTE-U duty cycle (one channel at a time).

Given the duty cycle ``alpha*`` granted on a channel, the cell splits the
bandwidth-time budget ``B * alpha*`` across users to maximize

    alpha* * sum_i log(1 + y_i * gamma_i),    y_i >= 0,  sum_i y_i <= B * alpha*

where ``gamma_i = log(1 + P_i * g_i / sigma^2)`` is the user's SNR utility.
The problem is concave with a water-filling optimum: every served user sits
at the common water level, ``y_i = alpha*/nu - 1/gamma_i`` clipped at zero.
Logs are natural throughout (utilities in nats); rescaling the log base only
scales the objective and moves no argmax.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NumericalError

__all__ = [
    "ChannelUserGains",
    "AllocationResult",
    "snr_utility",
    "water_fill",
    "sum_rate",
]

_BISECT_WIDTH = 1e-12
_BISECT_MAX_ITER = 200


def snr_utility(power: float, gain: float, noise: float) -> float:
    """Log SNR utility ``ln(1 + power * gain / noise)`` in nats."""
    if not (math.isfinite(noise) and noise > 0.0):
        raise ValueError(f"noise must be > 0, got {noise}")
    if not (math.isfinite(power) and power > 0.0):
        raise ValueError(f"power must be > 0, got {power}")
    if not (math.isfinite(gain) and gain >= 0.0):
        raise ValueError(f"gain must be >= 0, got {gain}")
    return math.log1p(power * gain / noise)


@dataclass(frozen=True)
class ChannelUserGains:
    """Link budget for all users on all channels.

    ``gamma[i, k]`` must equal ``ln(1 + power[i] * gain[i, k] / noise)``;
    build instances through :meth:`from_link_budget` to guarantee it.
    """

    gamma: np.ndarray
    power: np.ndarray
    gain: np.ndarray
    noise: float

    def __post_init__(self):
        gamma = np.asarray(self.gamma, dtype=float)
        power = np.asarray(self.power, dtype=float)
        gain = np.asarray(self.gain, dtype=float)
        if gamma.ndim != 2 or gain.shape != gamma.shape:
            raise ValueError(
                f"gamma and gain must both be [users x channels], got "
                f"{gamma.shape} and {gain.shape}"
            )
        if power.shape != (gamma.shape[0],):
            raise ValueError(
                f"power must have one entry per user, got shape {power.shape}"
            )
        if not (np.all(np.isfinite(gamma)) and np.all(gamma >= 0.0)):
            raise ValueError("gamma entries must be finite and >= 0")
        if not np.all(power > 0.0):
            raise ValueError("power entries must be > 0")
        if not (math.isfinite(self.noise) and self.noise > 0.0):
            raise ValueError(f"noise must be > 0, got {self.noise}")
        expected = np.log1p(power[:, None] * gain / self.noise)
        if not np.allclose(gamma, expected, rtol=1e-12, atol=1e-15):
            raise ValueError("gamma is inconsistent with power, gain and noise")
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "power", power)
        object.__setattr__(self, "gain", gain)

    @classmethod
    def from_link_budget(
        cls, power: np.ndarray, gain: np.ndarray, noise: float
    ) -> "ChannelUserGains":
        power = np.asarray(power, dtype=float)
        gain = np.asarray(gain, dtype=float)
        gamma = np.log1p(power[:, None] * gain / noise)
        return cls(gamma=gamma, power=power, gain=gain, noise=noise)


@dataclass(frozen=True)
class AllocationResult:
    """Water-filling outcome for one channel.

    Attributes:
        y: Bandwidth-time share per user (zero for users below the level).
        water_level: Budget-constraint multiplier nu; ``inf`` when nothing
            is allocated (zero duty cycle or no usable user).
        sum_rate: Objective value ``alpha* * sum_i ln(1 + y_i * gamma_i)``.
        budget: Total share actually consumed, ``sum(y)``.
    """

    y: np.ndarray
    water_level: float
    sum_rate: float
    budget: float


def sum_rate(alpha_star: float, y, gammas) -> float:
    """Objective value ``alpha* * sum_i ln(1 + y_i * gamma_i)``."""
    y = np.asarray(y, dtype=float)
    gammas = np.asarray(gammas, dtype=float)
    if y.shape != gammas.shape:
        raise ValueError(f"y and gammas must match, got {y.shape} vs {gammas.shape}")
    if not (math.isfinite(alpha_star) and alpha_star >= 0.0):
        raise ValueError(f"alpha_star must be >= 0, got {alpha_star}")
    if np.any(y < 0.0) or np.any(gammas < 0.0):
        raise ValueError("y and gammas must be nonnegative")
    if alpha_star == 0.0:
        return 0.0
    return alpha_star * float(np.sum(np.log1p(y * gammas)))


def _share_total(nu: float, alpha_star: float, inv_gamma: np.ndarray) -> float:
    return float(np.sum(np.maximum(0.0, alpha_star / nu - inv_gamma)))


def water_fill(alpha_star: float, bandwidth: float, gammas) -> AllocationResult:
    """Split the budget ``bandwidth * alpha_star`` across users by water-filling.

    The water level is located by bisection on nu (the share total is
    continuous and decreasing in nu), then snapped to the closed form for
    the active user set so the budget binds to machine precision:

        nu = |A| * alpha* / (bandwidth * alpha* + sum_{i in A} 1/gamma_i)

    Zero duty cycle, or no user with positive utility, yields an all-zero
    allocation with an infinite water level.

    Raises:
        NumericalError: If no bracket for nu can be established (cannot
            happen for finite positive inputs; guarded anyway).
    """
    gammas = np.asarray(gammas, dtype=float)
    if gammas.ndim != 1 or gammas.size == 0:
        raise ValueError("gammas must be a non-empty vector")
    if np.any(~np.isfinite(gammas)) or np.any(gammas < 0.0):
        raise ValueError("gammas must be finite and >= 0")
    if not (math.isfinite(alpha_star) and alpha_star >= 0.0):
        raise ValueError(f"alpha_star must be >= 0, got {alpha_star}")
    if not (math.isfinite(bandwidth) and bandwidth > 0.0):
        raise ValueError(f"bandwidth must be > 0, got {bandwidth}")

    if alpha_star == 0.0 or not np.any(gammas > 0.0):
        y = np.zeros_like(gammas)
        return AllocationResult(y=y, water_level=math.inf, sum_rate=0.0, budget=0.0)

    budget = bandwidth * alpha_star
    inv_gamma = np.full_like(gammas, np.inf)
    usable = gammas > 0.0
    inv_gamma[usable] = 1.0 / gammas[usable]

    # Bracket: at nu = alpha*·gamma_max the best user gets exactly zero, so
    # the share total is 0 <= budget; halve downward until it covers budget.
    hi = alpha_star * float(np.max(gammas))
    lo = hi
    for _ in range(4000):
        if _share_total(lo, alpha_star, inv_gamma) >= budget:
            break
        lo *= 0.5
    else:
        raise NumericalError("failed to bracket the water level")

    for _ in range(_BISECT_MAX_ITER):
        if hi - lo <= _BISECT_WIDTH:
            break
        mid = 0.5 * (lo + hi)
        if _share_total(mid, alpha_star, inv_gamma) >= budget:
            lo = mid
        else:
            hi = mid

    # Snap to the exact solution of the active set the bisection identified;
    # re-derive the set until stable (at most a couple of passes).
    nu = 0.5 * (lo + hi)
    for _ in range(gammas.size + 1):
        active = alpha_star / nu > inv_gamma
        if not np.any(active):
            raise NumericalError("water level collapsed to an empty active set")
        nu_next = (
            int(np.count_nonzero(active))
            * alpha_star
            / (budget + float(np.sum(inv_gamma[active])))
        )
        if nu_next == nu:
            break
        nu = nu_next

    y = np.maximum(0.0, alpha_star / nu - inv_gamma)
    y[~usable] = 0.0
    consumed = float(np.sum(y))
    if not math.isclose(consumed, budget, rel_tol=1e-9):
        raise NumericalError(
            f"water-filling budget mismatch: consumed {consumed}, budget {budget}"
        )
    return AllocationResult(
        y=y,
        water_level=nu,
        sum_rate=sum_rate(alpha_star, y, gammas),
        budget=consumed,
    )
