"""Pure-Python Monte Carlo kernels (fallback backend).

Mirrors ``_fast.pyx`` operation for operation.  Every floating-point step is
an IEEE-754 double op shared with the compiled kernel (same libm ``log`` /
``exp``), so both backends return bit-identical results for identical
arguments; ``tests/test_kernels.py`` pins that equivalence.
"""

from __future__ import annotations

from ..prng import SplitMix64, substream_seed

BACKEND = "pure"

__all__ = ["BACKEND", "ruin_mc_count", "surplus_path_values", "chance_mc_count"]


def _path_ruins(u: float, c: float, mu_prime: float, n: int, seed: int) -> bool:
    rng = SplitMix64(seed)
    claims = 0.0
    for s in range(1, n + 1):
        claims += rng.exponential(mu_prime)
        if u + s * c - claims < 0.0:
            return True
    return False


def ruin_mc_count(
    u: float, c: float, mu_prime: float, n: int, trials: int, seed: int
) -> int:
    """Number of surplus paths (out of ``trials``) that go negative by period n."""
    ruined = 0
    for t in range(trials):
        if _path_ruins(u, c, mu_prime, n, substream_seed(seed, t)):
            ruined += 1
    return ruined


def surplus_path_values(
    u: float, c: float, mu_prime: float, n: int, seed: int
) -> list[float]:
    """Surplus after each period: ``[u, u + c - Z1, u + 2c - Z1 - Z2, ...]``.

    The path keeps accruing premiums and claims past a ruin event; callers
    detect ruin as the first negative entry.
    """
    rng = SplitMix64(seed)
    values = [u]
    claims = 0.0
    for s in range(1, n + 1):
        claims += rng.exponential(mu_prime)
        values.append(u + s * c - claims)
    return values


def chance_mc_count(
    alpha_total: float,
    threshold: float,
    lam: float,
    mu: float,
    trials: int,
    seed: int,
) -> int:
    """Trials in which total collision time + ``alpha_total`` fits under ``threshold``.

    Collision time per trial is a compound draw: a Poisson(``lam``) count of
    collisions, each with an exponential(``mu``) duration.
    """
    ok = 0
    for t in range(trials):
        rng = SplitMix64(substream_seed(seed, t))
        total = 0.0
        for _ in range(rng.poisson(lam)):
            total += rng.exponential(mu)
        if total + alpha_total <= threshold:
            ok += 1
    return ok
