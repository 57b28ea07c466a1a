# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Monte Carlo kernels (hot-loop backend).

Same algorithms and IEEE-754 double arithmetic as ``_pure.py`` (including
the SplitMix64 stream and the inverse-CDF / Knuth samplers), so results are
bit-identical across backends.  Only the loops are lowered to C.
"""

from libc.math cimport exp, log
from libc.stdint cimport uint64_t

cdef extern from *:
    """
    #include <stdint.h>
    #define RF_GOLDEN   UINT64_C(0x9E3779B97F4A7C15)
    #define RF_MIX1     UINT64_C(0xBF58476D1CE4E5B9)
    #define RF_MIX2     UINT64_C(0x94D049BB133111EB)
    #define RF_INV_2_53 (1.0 / 9007199254740992.0)
    """
    uint64_t RF_GOLDEN
    uint64_t RF_MIX1
    uint64_t RF_MIX2
    double RF_INV_2_53

BACKEND = "cython"

__all__ = ["BACKEND", "ruin_mc_count", "surplus_path_values", "chance_mc_count"]


cdef inline uint64_t _mix64(uint64_t z) nogil:
    z = (z ^ (z >> 30)) * RF_MIX1
    z = (z ^ (z >> 27)) * RF_MIX2
    return z ^ (z >> 31)


cdef inline uint64_t _substream_seed(uint64_t seed, uint64_t index) nogil:
    return _mix64(seed + (index + 1) * RF_GOLDEN)


cdef inline uint64_t _next_u64(uint64_t* state) nogil:
    state[0] += RF_GOLDEN
    return _mix64(state[0])


cdef inline double _uniform(uint64_t* state) nogil:
    return <double>(_next_u64(state) >> 11) * RF_INV_2_53


cdef inline double _exponential(uint64_t* state, double rate) nogil:
    return -log(1.0 - _uniform(state)) / rate


cdef inline long _poisson(uint64_t* state, double lam) nogil:
    cdef double limit = exp(-lam)
    cdef long k = 0
    cdef double p = _uniform(state)
    while p > limit:
        k += 1
        p *= _uniform(state)
    return k


cdef inline bint _path_ruins(double u, double c, double mu_prime, long n,
                             uint64_t seed) nogil:
    cdef uint64_t state = seed
    cdef double claims = 0.0
    cdef long s
    for s in range(1, n + 1):
        claims += _exponential(&state, mu_prime)
        if u + s * c - claims < 0.0:
            return True
    return False


def ruin_mc_count(double u, double c, double mu_prime, long n, long trials,
                  seed) -> int:
    """Number of surplus paths (out of ``trials``) that go negative by period n."""
    cdef uint64_t master = <uint64_t>(seed & 0xFFFFFFFFFFFFFFFF)
    cdef long ruined = 0
    cdef long t
    with nogil:
        for t in range(trials):
            if _path_ruins(u, c, mu_prime, n, _substream_seed(master, t)):
                ruined += 1
    return ruined


def surplus_path_values(double u, double c, double mu_prime, long n,
                        seed) -> list:
    """Surplus after each period; claims keep accruing past any ruin event."""
    cdef uint64_t state = <uint64_t>(seed & 0xFFFFFFFFFFFFFFFF)
    cdef double claims = 0.0
    cdef long s
    values = [u]
    for s in range(1, n + 1):
        claims += _exponential(&state, mu_prime)
        values.append(u + s * c - claims)
    return values


def chance_mc_count(double alpha_total, double threshold, double lam,
                    double mu, long trials, seed) -> int:
    """Trials in which compound Poisson collision time + alpha fits under threshold."""
    cdef uint64_t master = <uint64_t>(seed & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t state
    cdef long ok = 0
    cdef long t, i, count
    cdef double total
    with nogil:
        for t in range(trials):
            state = _substream_seed(master, t)
            total = 0.0
            count = _poisson(&state, lam)
            for i in range(count):
                total += _exponential(&state, mu)
            if total + alpha_total <= threshold:
                ok += 1
    return ok
