"""Backend equivalence: the compiled and pure kernels must agree bit-for-bit."""

import pytest

from ruinfair import _kernels
from ruinfair._kernels import _pure
from ruinfair.prng import SplitMix64, substream_seed

_fast = pytest.importorskip(
    "ruinfair._kernels._fast", reason="compiled kernel extension not built"
)

SEEDS = [0, 1, 42, 2**63 + 5, -17, 987654321]


@pytest.mark.parametrize("seed", SEEDS)
def test_surplus_path_bit_identical(seed):
    args = (0.5, 1.0, 1.2, 25)
    assert _pure.surplus_path_values(*args, seed) == _fast.surplus_path_values(*args, seed)


@pytest.mark.parametrize("seed", SEEDS)
def test_ruin_count_bit_identical(seed):
    args = (0.3, 0.8, 1.5, 12, 3000)
    assert _pure.ruin_mc_count(*args, seed) == _fast.ruin_mc_count(*args, seed)


@pytest.mark.parametrize("seed", SEEDS)
def test_chance_count_bit_identical(seed):
    args = (0.004, 0.009, 1.5, 400.0, 3000)
    assert _pure.chance_mc_count(*args, seed) == _fast.chance_mc_count(*args, seed)


def test_selected_backend_exposes_kernel_surface():
    assert _kernels.BACKEND in ("pure", "cython")
    assert callable(_kernels.ruin_mc_count)
    assert callable(_kernels.surplus_path_values)
    assert callable(_kernels.chance_mc_count)


@pytest.mark.parametrize("impl", [_pure, _fast], ids=["pure", "cython"])
def test_ruin_count_matches_per_trial_paths(impl):
    """The batched count is exactly the sum over per-trial path simulations."""
    u, c, rate, n, trials, seed = 0.4, 0.9, 1.3, 8, 400, 77
    expected = 0
    for t in range(trials):
        values = impl.surplus_path_values(u, c, rate, n, substream_seed(seed, t))
        expected += any(v < 0.0 for v in values[1:])
    assert impl.ruin_mc_count(u, c, rate, n, trials, seed) == expected


@pytest.mark.parametrize("impl", [_pure, _fast], ids=["pure", "cython"])
def test_chance_count_matches_manual_loop(impl):
    """The kernel replays the documented draw recipe: Poisson count, then durations."""
    alpha, threshold, lam, mu, trials, seed = 0.003, 0.009, 1.2, 350.0, 500, 5
    expected = 0
    for t in range(trials):
        rng = SplitMix64(substream_seed(seed, t))
        total = sum(rng.exponential(mu) for _ in range(rng.poisson(lam)))
        expected += total + alpha <= threshold
    assert impl.chance_mc_count(alpha, threshold, lam, mu, trials, seed) == expected


@pytest.mark.parametrize("impl", [_pure, _fast], ids=["pure", "cython"])
def test_path_values_follow_premium_and_claims(impl):
    """values[s] = u + s*c - (sum of the first s exponential draws)."""
    u, c, rate, n, seed = 2.0, 0.5, 0.8, 10, 31
    values = impl.surplus_path_values(u, c, rate, n, seed)
    rng = SplitMix64(seed)
    claims = 0.0
    assert values[0] == u
    for s in range(1, n + 1):
        claims += rng.exponential(rate)
        assert values[s] == u + s * c - claims
