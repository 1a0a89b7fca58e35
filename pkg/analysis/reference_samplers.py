"""
Samplers for the reference variables of the limit laws.

L (parameter-one Levy) is exact: L = 1/Z^2 for standard normal Z. T, the
Brownian exit time of [-1, 1], is approximated by tau_N / N^2 with tau_N the
SSRW exit time of [-N, N] from 0, drawn by inverting its exact cdf.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np

from shared_lib.config import get_settings
from simulator.models.exit_times import interval_exit_pmf

MIN_RESOLUTION = 10
# Steps of exact pmf per N^2; the residual tail is then about exp(-1.2 * this)
PMF_SPAN = 12


def sample_levy(rng: np.random.Generator, size: Optional[int] = None):
    """Draw L = 1 / Z^2, redrawing the (measure-zero) event Z = 0."""
    if size is None:
        z = 0.0
        while z == 0.0:
            z = rng.standard_normal()
        return 1.0 / (z * z)
    z = rng.standard_normal(size)
    zero = z == 0.0
    while zero.any():
        z[zero] = rng.standard_normal(int(zero.sum()))
        zero = z == 0.0
    return 1.0 / (z * z)


@lru_cache(maxsize=8)
def _exit_time_cdf(resolution: int) -> Tuple[np.ndarray, float, int]:
    """cdf of tau_N on 1..s_max, per-step tail decay, and last support point."""
    s_max = PMF_SPAN * resolution * resolution
    table = interval_exit_pmf(-resolution, resolution, 0, s_max)
    # largest eigenvalue of the killed walk on the 2N - 1 interior sites
    decay = math.cos(math.pi / (2 * resolution))
    last = s_max if (s_max - resolution) % 2 == 0 else s_max - 1
    return np.cumsum(table.pmf), decay, last


def sample_T(rng: np.random.Generator, resolution: Optional[int] = None, size: Optional[int] = None):
    """
    Draw tau_N / N^2, which converges in law to T as N grows.

    Beyond the tabulated range the survival function is extended
    geometrically with its exact asymptotic decay rate.
    """
    resolution = resolution or get_settings().t_sampler_resolution
    if resolution < MIN_RESOLUTION:
        raise ValueError(f"resolution must be >= {MIN_RESOLUTION}, got {resolution}")
    cdf, decay, last = _exit_time_cdf(resolution)
    u = rng.random(1 if size is None else size)

    steps = np.searchsorted(cdf, u, side="right") + 1.0
    beyond = u >= cdf[-1]
    if beyond.any():
        tail = max(1.0 - cdf[-1], np.finfo(float).tiny)
        remaining = np.clip((1.0 - u[beyond]) / tail, np.finfo(float).tiny, 1.0)
        blocks = np.maximum(1.0, np.ceil(np.log(remaining) / (2.0 * np.log(decay))))
        steps[beyond] = last + 2.0 * blocks
    values = steps / float(resolution) ** 2
    return float(values[0]) if size is None else values


@dataclass(frozen=True)
class ResolutionShift:
    """How far sample_T moves between a coarse and a fine resolution."""
    coarse: int
    fine: int
    mean_gap: float
    mean_se: float
    # fraction of fine draws at or below the coarse median; 1/2 without bias
    median_fraction: float
    fraction_se: float
    # lattice spacing 2/N^2 of the coarse draws, scaled by a bound on the density of T
    allowance: float


def resolution_shift(rng: np.random.Generator, coarse: int, fine: int, size: int) -> ResolutionShift:
    """
    Compare ``size`` draws of sample_T at two resolutions.

    Both mean and median of tau_N / N^2 should agree within sampling error
    when N is large enough for the limit law to have set in.
    """
    if not MIN_RESOLUTION <= coarse < fine:
        raise ValueError(f"need {MIN_RESOLUTION} <= coarse < fine, got {coarse}, {fine}")
    if size < 2:
        raise ValueError(f"size must be >= 2, got {size}")
    low = sample_T(rng, resolution=coarse, size=size)
    high = sample_T(rng, resolution=fine, size=size)
    return ResolutionShift(
        coarse=coarse,
        fine=fine,
        mean_gap=float(high.mean() - low.mean()),
        mean_se=float(math.sqrt((low.var(ddof=1) + high.var(ddof=1)) / size)),
        median_fraction=float(np.mean(high <= np.median(low))),
        fraction_se=math.sqrt(0.5 / size),
        allowance=4.0 / coarse ** 2,
    )
