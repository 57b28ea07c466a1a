#!/usr/bin/env python3
"""Benchmark the compiled Monte Carlo kernels against the pure-Python twin.

Both backends produce bit-identical results (asserted here before timing);
the only difference is speed.  Usage:

    python benchmarks/bench_backends.py [--trials N] [--repeat R]
"""

import argparse
import time

from ruinfair._kernels import _pure


def _load_fast():
    try:
        from ruinfair._kernels import _fast
    except ImportError:
        return None
    return _fast


CASES = [
    (
        "ruin_mc_count (u=0.01, c=0.001, rate=450, n=10)",
        "ruin_mc_count",
        (0.01, 0.001, 450.0, 10),
    ),
    (
        "ruin_mc_count (u=5, c=2, rate=0.5, n=20)",
        "ruin_mc_count",
        (5.0, 2.0, 0.5, 20),
    ),
    (
        "chance_mc_count (alpha=4ms, thr=9ms, lam=1, mu=450)",
        "chance_mc_count",
        (0.004, 0.009, 1.0, 450.0),
    ),
]


def _time(fn, args, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        started = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - started)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=100_000)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    fast = _load_fast()
    if fast is None:
        print("compiled backend not built; timing the pure backend only")

    name_width = max(len(name) for name, _, _ in CASES)
    header = f"{'case':<{name_width}}  {'pure':>10}"
    if fast is not None:
        header += f"  {'cython':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))

    for name, kernel, kernel_args in CASES:
        call_args = (*kernel_args, args.trials, 42)
        pure_time, pure_result = _time(getattr(_pure, kernel), call_args, args.repeat)
        line = f"{name:<{name_width}}  {pure_time:>9.3f}s"
        if fast is not None:
            fast_time, fast_result = _time(getattr(fast, kernel), call_args, args.repeat)
            assert fast_result == pure_result, "backends disagree"
            line += f"  {fast_time:>9.4f}s  {pure_time / fast_time:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
