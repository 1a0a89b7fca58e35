"""Kolmogorov-Smirnov distances and a pooled chi-square test against a pmf."""

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy import stats

from shared_lib.config import get_settings

# Slack allowed when checking that a cdf is nondecreasing
CDF_MONOTONE_TOL = 1e-12


def _sorted_samples(samples) -> np.ndarray:
    arr = np.sort(np.asarray(samples, dtype=float).ravel())
    if arr.size == 0:
        raise ValueError("samples must be nonempty")
    return arr


def _evaluate_cdf(cdf: Callable, points: np.ndarray) -> np.ndarray:
    values = np.asarray(cdf(points), dtype=float)
    if values.shape != points.shape:
        values = np.broadcast_to(values, points.shape)
    if np.any(np.isnan(values)) or np.any(values < 0) or np.any(values > 1):
        raise ValueError("cdf values must lie in [0, 1]")
    if np.any(np.diff(values) < -CDF_MONOTONE_TOL):
        raise ValueError("cdf must be nondecreasing")
    return values


def ks_distance(samples, cdf: Callable) -> float:
    """sup_x |F_n(x) - F(x)| for a continuous cdf F (vectorised callable)."""
    x = _sorted_samples(samples)
    n = x.size
    f = _evaluate_cdf(cdf, x)
    upper = np.arange(1, n + 1) / n - f
    lower = f - np.arange(n) / n
    return float(max(upper.max(), lower.max(), 0.0))


def ks_distance_discrete(samples, cdf: Callable, support=None) -> float:
    """
    sup_x |F_n(x) - F(x)| for a lattice law.

    Both functions only jump on the sample values and the support, so the
    supremum is a maximum over those points.
    """
    x = _sorted_samples(samples)
    points = np.unique(x) if support is None else np.union1d(x, np.asarray(support, dtype=float))
    f = _evaluate_cdf(cdf, points)
    ecdf = np.searchsorted(x, points, side="right") / x.size
    return float(np.max(np.abs(ecdf - f)))


def ks_two_sample(a, b) -> float:
    """Two-sample KS statistic."""
    return float(stats.ks_2samp(_sorted_samples(a), _sorted_samples(b)).statistic)


def ks_critical_value(n: int, m: Optional[int] = None, c_alpha: Optional[float] = None) -> float:
    """
    Asymptotic KS critical value c(alpha)/sqrt(n); two-sample when m is given.

    c(alpha) defaults to ``settings.ks_c_alpha`` (the 1% level).
    """
    if n < 1 or (m is not None and m < 1):
        raise ValueError("sample sizes must be >= 1")
    c = get_settings().ks_c_alpha if c_alpha is None else c_alpha
    if m is None:
        return c / math.sqrt(n)
    return c * math.sqrt((n + m) / (n * m))


@dataclass(frozen=True)
class ChiSquareResult:
    statistic: float
    pvalue: float
    dof: int
    bins: int

    def passed(self, alpha: float = 0.01) -> bool:
        return self.pvalue > alpha


def chi_square_against_pmf(samples, pmf: np.ndarray, tail: float = 0.0,
                           min_expected: float = 5.0) -> ChiSquareResult:
    """
    Pearson chi-square of integer samples against pmf[s-1] = P(X = s).

    Consecutive support points are pooled until each bin expects at least
    ``min_expected`` counts; the leftover pmf and the tail mass share the
    last bin.
    """
    values = np.asarray(samples).ravel()
    if values.size == 0:
        raise ValueError("samples must be nonempty")
    if np.any(values < 1):
        raise ValueError("samples must be >= 1")
    n = values.size
    probs, highs = [], []
    acc = 0.0
    for s, p in enumerate(np.asarray(pmf, dtype=float), start=1):
        if p <= 0:
            continue
        acc += p
        if acc * n >= min_expected:
            probs.append(acc)
            highs.append(s)
            acc = 0.0
    rest = acc + tail
    if probs and rest * n < min_expected:
        probs[-1] += rest
        highs[-1] = np.inf
    else:
        probs.append(rest)
        highs.append(np.inf)
    if len(probs) < 2:
        raise ValueError("not enough mass to form two bins")

    observed = np.bincount(np.searchsorted(np.asarray(highs), values, side="left"), minlength=len(probs))
    expected = np.asarray(probs) / np.sum(probs) * n
    result = stats.chisquare(observed, expected)
    return ChiSquareResult(
        statistic=float(result.statistic), pvalue=float(result.pvalue),
        dof=len(probs) - 1, bins=len(probs),
    )
