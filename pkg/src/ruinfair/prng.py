"""Portable seeded random source used by every stochastic routine.

The generator is SplitMix64 (Vigna, 2015; public domain): a 64-bit counter
advanced by the golden-gamma constant, finalized by two xor-multiply mixing
rounds.  It was chosen over ``numpy.random`` because the whole algorithm fits
in a dozen lines and can be re-implemented exactly in any language, which
keeps Monte Carlo results reproducible bit-for-bit across the compiled and
pure-Python backends (and across future ports).

Derived quantities are pinned to fixed recipes so that two implementations
consuming the same uniform stream produce identical samples:

* uniform in [0, 1): the top 53 bits of the next output, ``(z >> 11) * 2**-53``
* exponential(rate): inverse CDF, ``-log(1 - u) / rate``
* Poisson(lam): Knuth's product-of-uniforms method (exact, O(lam) draws)

Substreams for parallel / per-trial work are derived in O(1): the seed of
substream ``i`` is the ``(i+1)``-th raw output of a SplitMix64 stream seeded
with the master seed.  Trials are therefore independent of evaluation order.
"""

from __future__ import annotations

import math

__all__ = ["SplitMix64", "substream_seed"]

_MASK64 = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15
_INV_2_53 = 2.0 ** -53

# Knuth's Poisson sampler multiplies uniforms against exp(-lam), which
# underflows to 0.0 near lam = 745; stay well clear of that edge.
_POISSON_LAM_MAX = 500.0


def _mix64(z: int) -> int:
    """SplitMix64 output finalizer (murmur-style avalanche)."""
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
    return z ^ (z >> 31)


def substream_seed(seed: int, index: int) -> int:
    """Seed for the ``index``-th substream of a master ``seed``.

    Equals the ``(index+1)``-th raw output of ``SplitMix64(seed)``, computed
    without stepping: the underlying state is just ``seed + (index+1)*gamma``.
    """
    if index < 0:
        raise ValueError(f"substream index must be >= 0, got {index}")
    return _mix64((seed + (index + 1) * _GOLDEN) & _MASK64)


class SplitMix64:
    """Minimal deterministic RNG; one instance per logical sample stream."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return _mix64(self._state)

    def uniform(self) -> float:
        """Uniform double in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * _INV_2_53

    def exponential(self, rate: float) -> float:
        """Exponential variate with the given rate (mean ``1/rate``)."""
        if not (math.isfinite(rate) and rate > 0.0):
            raise ValueError(f"exponential rate must be positive and finite, got {rate}")
        return -math.log(1.0 - self.uniform()) / rate

    def poisson(self, lam: float) -> int:
        """Poisson count with mean ``lam`` (Knuth's method)."""
        if not 0.0 <= lam <= _POISSON_LAM_MAX:
            raise ValueError(
                f"poisson mean must be in [0, {_POISSON_LAM_MAX}], got {lam}"
            )
        limit = math.exp(-lam)
        k = 0
        p = self.uniform()
        while p > limit:
            k += 1
            p *= self.uniform()
        return k
