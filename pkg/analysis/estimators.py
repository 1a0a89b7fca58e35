"""Empirical Laplace transforms and bootstrapped moment estimates."""

import math
from typing import Optional, Sequence, Tuple

import numpy as np

from shared_lib.config import get_settings
from shared_lib.models import LaplaceEstimate, LaplaceGrid, MomentEstimate

# Cap on (resamples x samples) indices drawn at once
BOOTSTRAP_BATCH = 1 << 22


def _nonempty(samples) -> np.ndarray:
    arr = np.asarray(samples, dtype=float).ravel()
    if arr.size == 0:
        raise ValueError("samples must be nonempty")
    return arr


def _mean_and_stderr(values: np.ndarray) -> Tuple[float, float]:
    if values.size == 1:
        return float(values[0]), 0.0
    return float(values.mean()), float(values.std(ddof=1) / math.sqrt(values.size))


def empirical_laplace(samples, lam: float) -> Tuple[float, float]:
    """
    Sample mean of exp(-lambda X) and its standard error.

    Returns:
        (estimate, stderr)
    """
    arr = _nonempty(samples)
    if lam < 0:
        raise ValueError(f"lambda must be >= 0, got {lam}")
    if lam == 0:
        return 1.0, 0.0
    return _mean_and_stderr(np.exp(-lam * arr))


def empirical_laplace_grid(samples, lambdas: Sequence[float]) -> LaplaceGrid:
    """Empirical transform on an increasing lambda grid."""
    arr = _nonempty(samples)
    estimates = [empirical_laplace(arr, lam) for lam in lambdas]
    return LaplaceGrid(
        lambdas=[float(lam) for lam in lambdas],
        values=[est for est, _ in estimates],
        stderr=[se for _, se in estimates],
    )


def laplace_estimates(samples, lambdas: Sequence[float], predict=None) -> list:
    """LaplaceEstimate rows, with the limit-law value when ``predict`` is given."""
    arr = _nonempty(samples)
    rows = []
    for lam in lambdas:
        estimate, stderr = empirical_laplace(arr, lam)
        rows.append(LaplaceEstimate(
            lam=float(lam), estimate=estimate, stderr=stderr,
            predicted=None if predict is None else float(predict(lam)),
        ))
    return rows


def bootstrap_mean(values, rng: np.random.Generator, resamples: Optional[int] = None) -> Tuple[float, float, float]:
    """
    Percentile bootstrap of a sample mean.

    Above ``settings.bootstrap_max_samples`` values the resampling is skipped
    and the normal-theory interval mean +- 1.96 std/sqrt(n) is returned.

    Returns:
        (stderr, ci_low, ci_high)
    """
    arr = _nonempty(values)
    settings = get_settings()
    resamples = resamples or settings.bootstrap_resamples
    n = arr.size
    mean = float(arr.mean())
    if n == 1:
        return 0.0, mean, mean
    if n > settings.bootstrap_max_samples:
        stderr = float(arr.std(ddof=1) / math.sqrt(n))
        return stderr, mean - 1.96 * stderr, mean + 1.96 * stderr

    means = np.empty(resamples)
    batch = max(1, BOOTSTRAP_BATCH // n)
    for lo in range(0, resamples, batch):
        hi = min(resamples, lo + batch)
        idx = rng.integers(0, n, size=(hi - lo, n))
        means[lo:hi] = arr[idx].mean(axis=1)
    low, high = np.percentile(means, [2.5, 97.5])
    return float(means.std(ddof=1)), float(low), float(high)


def moment_estimate(
    samples,
    q: float,
    rng: Optional[np.random.Generator] = None,
    resamples: Optional[int] = None,
    predicted: Optional[float] = None,
) -> MomentEstimate:
    """Sample mean of X^q with a bootstrap standard error and percentile interval."""
    if q <= 0:
        raise ValueError(f"moment order must be > 0, got {q}")
    arr = _nonempty(samples)
    powered = arr ** q
    rng = rng if rng is not None else np.random.default_rng(0)
    stderr, low, high = bootstrap_mean(powered, rng, resamples)
    return MomentEstimate(
        q=q, estimate=float(powered.mean()), stderr=stderr,
        ci_low=low, ci_high=high, predicted=predicted,
    )
