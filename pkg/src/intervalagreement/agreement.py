"""Agreement ratio and Jaccard similarity over membership functions.

The ratio compares the lengths of successive agreement levels: each level i
contributes its length divided by the next lower level's length, weighted by
i/n, and the weighted mean of those ratios is the agreement. Level 1 carries
no weight of its own because agreement needs at least two overlapping
sources. A zero lower length forces the upper one to zero too (level sets
are nested), and such a term contributes 0, not 0/0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptySet, EmptySupport, InvalidCuts, TooFewSources
from .fuzzyset import DEFAULT_SAMPLES, MembershipFunction, _check_samples, alpha_lengths
from .intervals import IntervalCollection, level_lengths

__all__ = ["GammaTerm", "GammaBreakdown", "gamma_exact", "gamma_alpha", "jaccard"]


@dataclass(frozen=True)
class GammaTerm:
    """One weighted level comparison: weight * (length / prev_length)."""

    weight: float
    length: float
    prev_length: float
    ratio: float


@dataclass(frozen=True)
class GammaBreakdown:
    """Agreement ratio plus the per-level terms it was assembled from."""

    gamma: float
    terms: tuple[GammaTerm, ...]
    weight_sum: float


def _breakdown(lengths: np.ndarray, weights: np.ndarray) -> GammaBreakdown:
    """Assemble the ratio from level lengths (index 0 = lowest level)."""
    if lengths[0] == 0.0:
        raise EmptySupport("every source has zero width; no lengths to compare")
    terms = []
    for i in range(1, len(lengths)):
        ratio = lengths[i] / lengths[i - 1] if lengths[i - 1] > 0.0 else 0.0
        terms.append(
            GammaTerm(
                weight=float(weights[i]),
                length=float(lengths[i]),
                prev_length=float(lengths[i - 1]),
                ratio=float(ratio),
            )
        )
    weight_sum = float(weights[1:].sum())
    gamma = sum(t.weight * t.ratio for t in terms) / weight_sum
    return GammaBreakdown(gamma=float(gamma), terms=tuple(terms), weight_sum=weight_sum)


def gamma_exact(coll: IntervalCollection) -> GammaBreakdown:
    """Agreement ratio of an interval collection, from exact level-set lengths."""
    if coll.n < 2:
        raise TooFewSources(f"agreement needs at least 2 intervals, got {coll.n}")
    lengths = level_lengths(coll)
    weights = np.arange(1, coll.n + 1) / coll.n
    return _breakdown(lengths, weights)


def gamma_alpha(
    mf: MembershipFunction,
    cuts: int = 10,
    samples: int = DEFAULT_SAMPLES,
    method: str = "auto",
) -> GammaBreakdown:
    """Agreement ratio of an arbitrary membership function via alpha-cuts.

    Cut levels and weights are both i/cuts for i = 1..cuts, so on an
    aggregation-built step function with cuts equal to the participant count
    this reproduces gamma_exact. Pass method="sampled" to force the
    discretised scan even on step functions.
    """
    if cuts < 2:
        raise InvalidCuts(f"need at least 2 alpha cuts, got {cuts}")
    alphas = np.arange(1, cuts + 1) / cuts
    lengths = alpha_lengths(mf, alphas, samples=samples, method=method)
    return _breakdown(np.asarray(lengths), alphas)


def jaccard(
    a: MembershipFunction, b: MembershipFunction, samples: int = DEFAULT_SAMPLES
) -> float:
    """Sum of pointwise minima over sum of pointwise maxima on a shared grid.

    The grid spans the union of both evaluation windows. Raises EmptySet when
    both functions are zero everywhere on it.
    """
    _check_samples(samples)
    wa, wb = a.window(), b.window()
    lo, hi = min(wa.l, wb.l), max(wa.r, wb.r)
    xs = np.linspace(lo, hi, samples)
    mu_a = np.asarray(a.membership(xs), dtype=np.float64)
    mu_b = np.asarray(b.membership(xs), dtype=np.float64)
    denom = float(np.maximum(mu_a, mu_b).sum())
    if denom == 0.0:
        raise EmptySet("both membership functions are empty on the shared grid")
    return float(np.minimum(mu_a, mu_b).sum() / denom)
