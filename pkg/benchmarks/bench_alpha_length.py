"""Benchmark the run-detection kernel: numba scan vs pure-numpy fallback.

Run directly:

    python benchmarks/bench_alpha_length.py

The numba path is compiled once before timing. Running with IAA_NO_NUMBA=1
shows what the package falls back to when numba is unavailable.
"""

import time

import numpy as np

from intervalagreement import _kernels


def best_of(fn, *args, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    n = 4_000_000
    xs = np.linspace(0.0, 100.0, n)
    rng = np.random.default_rng(0)
    mus = np.clip(np.exp(-((xs - 50.0) ** 2) / 200.0) + rng.normal(0, 0.02, n), 0.0, 1.0)
    alphas = np.linspace(0.05, 1.0, 20)

    print(f"grid points : {n:,}")
    print(f"thresholds  : {alphas.size}")
    print(f"numba       : {'enabled' if _kernels.NUMBA_ENABLED else 'disabled'}")
    print()

    t_np = best_of(_kernels._run_lengths_multi_numpy, xs, mus, alphas)
    print(f"numpy fallback : {t_np * 1e3:8.1f} ms")

    if _kernels.NUMBA_ENABLED:
        _kernels._run_lengths_multi_scan(xs[:64], mus[:64], alphas)  # compile
        t_nb = best_of(_kernels._run_lengths_multi_scan, xs, mus, alphas)
        print(f"numba scan     : {t_nb * 1e3:8.1f} ms")
        print(f"speedup        : {t_np / t_nb:8.2f}x")
        a = _kernels._run_lengths_multi_scan(xs, mus, alphas)
        b = _kernels._run_lengths_multi_numpy(xs, mus, alphas)
        print(f"max |diff|     : {np.abs(a - b).max():.3e}")


if __name__ == "__main__":
    main()
