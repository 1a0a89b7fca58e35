"""Scaling-exponent estimation from log-log regression of ensemble statistics."""

from typing import Optional, Sequence, Tuple

import numpy as np
from scipy import stats

from shared_lib.config import get_settings
from shared_lib.models import NuEstimate

MIN_CHECKPOINTS = 4
MIN_DECADES = 1.0

_STATISTICS = {
    "median-slope": lambda z: np.median(z, axis=-2),
    "mean-slope": lambda z: np.mean(z, axis=-2),
}


def fit_power_law(t, y) -> Tuple[float, float]:
    """
    Least-squares fit of log y = slope * log t + intercept.

    Returns:
        (slope, intercept)
    """
    t_arr = np.asarray(t, dtype=float)
    y_arr = np.asarray(y, dtype=float)
    if t_arr.size != y_arr.size or t_arr.size < 2:
        raise ValueError("need at least two (t, y) pairs of equal length")
    if np.any(t_arr <= 0) or np.any(y_arr <= 0):
        raise ValueError("power-law fit needs positive t and y")
    fit = stats.linregress(np.log(t_arr), np.log(y_arr))
    return float(fit.slope), float(fit.intercept)


def _window(times: np.ndarray, t_min: Optional[int], t_max: Optional[int]) -> np.ndarray:
    keep = np.ones(times.size, dtype=bool)
    if t_min is not None:
        keep &= times >= t_min
    if t_max is not None:
        keep &= times <= t_max
    selected = times[keep]
    if selected.size < MIN_CHECKPOINTS:
        raise ValueError(f"need >= {MIN_CHECKPOINTS} checkpoints in the fit window, got {selected.size}")
    if np.log10(selected[-1] / selected[0]) < MIN_DECADES:
        raise ValueError("fit window must span at least one decade of t")
    return keep


def estimate_nu(
    times: Sequence[int],
    z: np.ndarray,
    method: str = "median-slope",
    rng: Optional[np.random.Generator] = None,
    resamples: Optional[int] = None,
    t_min: Optional[int] = None,
    t_max: Optional[int] = None,
) -> NuEstimate:
    """
    Slope of log(statistic of z) against log t, bootstrapped over walkers.

    Args:
        times: Checkpoint times, increasing
        z: Maxima, shape (walkers, checkpoints)
        method: "median-slope" (default, robust to heavy tails) or "mean-slope"
        rng: Bootstrap generator
        resamples: Bootstrap resamples (default ``settings.bootstrap_resamples``)
        t_min, t_max: Optional fit window

    Returns:
        NuEstimate; its stderr is floored at machine epsilon
    """
    if method not in _STATISTICS:
        raise ValueError(f"unknown method {method!r}; use one of {sorted(_STATISTICS)}")
    t_arr = np.asarray(times, dtype=float)
    z_arr = np.atleast_2d(np.asarray(z, dtype=float))
    if z_arr.shape[1] != t_arr.size:
        raise ValueError("z must have one column per checkpoint")
    keep = _window(t_arr, t_min, t_max)
    t_arr, z_arr = t_arr[keep], z_arr[:, keep]
    statistic = _STATISTICS[method]

    nu_hat, _ = fit_power_law(t_arr, statistic(z_arr))

    rng = rng if rng is not None else np.random.default_rng(0)
    resamples = resamples or get_settings().bootstrap_resamples
    n = z_arr.shape[0]
    slopes = np.empty(resamples)
    log_t = np.log(t_arr)
    centred = log_t - log_t.mean()
    for b in range(resamples):
        stat = statistic(z_arr[rng.integers(0, n, size=n)])
        slopes[b] = np.dot(centred, np.log(stat)) / np.dot(centred, centred)
    stderr = max(float(slopes.std(ddof=1)) if resamples > 1 else 0.0, np.finfo(float).eps)

    return NuEstimate(
        nu_hat=nu_hat, stderr=stderr, t_min=int(t_arr[0]), t_max=int(t_arr[-1]),
        n_checkpoints=int(t_arr.size), method=method,
    )


def estimate_nu_from_table(table, **kwargs) -> NuEstimate:
    """estimate_nu on a CheckpointTable (every walker recorded at every checkpoint)."""
    times = table.times()
    z = table.z.reshape(-1, times.size).astype(float)
    return estimate_nu(times, z, **kwargs)


def estimate_nu_from_summaries(summaries, method: str = "median-slope") -> NuEstimate:
    """
    Fit from per-checkpoint summaries alone.

    Without walker-level data the standard error is the regression's own.
    """
    rows = sorted(summaries, key=lambda s: s.t)
    times = np.array([s.t for s in rows], dtype=float)
    keep = _window(times, None, None)
    values = np.array([s.median_z if method == "median-slope" else s.mean_z for s in rows])[keep]
    fit = stats.linregress(np.log(times[keep]), np.log(values))
    return NuEstimate(
        nu_hat=float(fit.slope), stderr=max(float(fit.stderr), np.finfo(float).eps),
        t_min=int(times[keep][0]), t_max=int(times[keep][-1]),
        n_checkpoints=int(keep.sum()), method=method,
    )
