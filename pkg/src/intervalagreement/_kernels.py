"""Run-detection kernels behind the sampled alpha-cut length estimator.

The scan walks a discretised membership grid, opens a run at the first point
at or above the threshold, closes it at the last such point, and sums run
lengths. It is the hot inner loop of every sampled-path computation, so it is
compiled with numba when available. Set ``IAA_NO_NUMBA=1`` to force the
vectorised pure-numpy fallback (used automatically when numba is missing);
both paths are equivalent and covered by parity tests.
"""

from __future__ import annotations

import os

import numpy as np

_flag = os.environ.get("IAA_NO_NUMBA", "").strip().lower()
NUMBA_DISABLED = _flag in {"1", "true", "yes", "on"}

try:
    if NUMBA_DISABLED:
        raise ImportError
    from numba import njit

    NUMBA_ENABLED = True
except ImportError:
    NUMBA_ENABLED = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda func: func


@njit(cache=True)
def _run_length_scan(xs, mus, alpha):
    # Threshold scan: open a run when mu climbs to >= alpha, close it at the
    # previous grid point when mu drops below, and at the final point if the
    # run is still open. Single-point runs contribute zero length.
    total = 0.0
    left = 0.0
    open_run = False
    n = xs.shape[0]
    for i in range(n):
        if mus[i] < alpha:
            if open_run:
                total += xs[i - 1] - left
            open_run = False
        else:
            if not open_run:
                left = xs[i]
            open_run = True
    if open_run:
        total += xs[n - 1] - left
    return total


@njit(cache=True)
def _run_lengths_multi_scan(xs, mus, alphas):
    out = np.empty(alphas.shape[0], dtype=np.float64)
    for j in range(alphas.shape[0]):
        out[j] = _run_length_scan(xs, mus, alphas[j])
    return out


def run_bounds(mus: np.ndarray, alpha: float) -> tuple[np.ndarray, np.ndarray]:
    """Index pairs (first, last) of each maximal run with mu >= alpha."""
    mask = mus >= alpha
    if not mask.any():
        empty = np.empty(0, dtype=np.int64)
        return empty, empty
    padded = np.concatenate([[False], mask, [False]])
    edges = np.flatnonzero(padded[1:] != padded[:-1])
    return edges[0::2], edges[1::2] - 1


def _run_length_numpy(xs, mus, alpha):
    starts, ends = run_bounds(mus, alpha)
    return float(np.sum(xs[ends] - xs[starts]))


def _run_lengths_multi_numpy(xs, mus, alphas):
    return np.array([_run_length_numpy(xs, mus, a) for a in alphas])


def alpha_run_length(xs: np.ndarray, mus: np.ndarray, alpha: float) -> float:
    """Total length of maximal grid runs where mu >= alpha."""
    if NUMBA_ENABLED:
        return float(_run_length_scan(xs, mus, alpha))
    return _run_length_numpy(xs, mus, alpha)


def alpha_run_lengths(xs: np.ndarray, mus: np.ndarray, alphas: np.ndarray) -> np.ndarray:
    """Run-length totals for a whole ladder of thresholds over one grid."""
    alphas = np.asarray(alphas, dtype=np.float64)
    if NUMBA_ENABLED:
        return _run_lengths_multi_scan(xs, mus, alphas)
    return _run_lengths_multi_numpy(xs, mus, alphas)
