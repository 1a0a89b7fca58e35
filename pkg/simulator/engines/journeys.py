"""
Samplers for the two journeys of a cycle.

A lazy journey starts one step inside the maximum z and lasts until the
walker stands on a maximum again (m steps); an active journey is the run of
n consecutive outward steps taken from the maximum.
"""

import math
from typing import Optional, Tuple, Union

import numpy as np

from shared_lib.config import get_settings

from ..models.exit_times import log_cosh
from ..models.step_model import log_step_probability, log_survival_tail
from .walks import ssrw_exit, ssrw_exit_times

MAX_RUN_CHUNK = 1 << 20


def _first_run_chunk(z: int, gamma: float) -> int:
    # runs last about z^gamma steps when gamma > 0
    if gamma <= 0:
        return 16
    return int(min(MAX_RUN_CHUNK, max(16, 2 * math.ceil(math.exp(min(gamma * math.log(z), 30.0))))))


def sample_m(
    z: int, rng: np.random.Generator, size: Optional[int] = None, max_steps: Optional[int] = None
) -> Union[int, np.ndarray]:
    """
    Exit time of a SSRW from [-z, z] started at z - 1, by path simulation.

    With ``size`` set, returns an array of independent draws. With
    ``max_steps`` set, a single draw stops at that many steps and returns it.
    """
    if z < 1:
        raise ValueError(f"z must be >= 1, got {z}")
    if size is None:
        tau, _ = ssrw_exit(-z, z, z - 1, rng, max_steps=max_steps)
        return tau
    taus, _ = ssrw_exit_times(-z, z, z - 1, size, rng)
    return taus


def _inverted_runs(z: int, gamma: float, log_u: np.ndarray, cap: int) -> Tuple[np.ndarray, np.ndarray]:
    # n = max{j : ln p(z) + ... + ln p(z+j-1) >= ln U}; the partial sums are
    # shared by every run, only the level ln U differs
    runs = np.full(log_u.size, cap, dtype=np.int64)
    truncated = np.ones(log_u.size, dtype=bool)
    alive = np.arange(log_u.size)
    chunk = _first_run_chunk(z, gamma)
    level = 0.0
    done = 0
    while alive.size and done < cap:
        width = int(min(chunk, cap - done))
        partial = level + np.cumsum(log_step_probability(np.arange(z + done, z + done + width), gamma))
        level = float(partial[-1])
        ended = log_u[alive] > level
        if ended.any():
            hit = alive[ended]
            runs[hit] = done + np.searchsorted(-partial, -log_u[hit], side="right")
            truncated[hit] = False
        done += width
        # runs whose level stays above ln U even after the whole tail never end
        forever = level - log_survival_tail(z + done, gamma) >= log_u[alive]
        alive = alive[~ended & ~forever]
        chunk = min(2 * chunk, MAX_RUN_CHUNK)
    return runs, truncated


def _run_cap(max_steps: Optional[int]) -> int:
    cap = get_settings().max_active_run if max_steps is None else max_steps
    if cap < 0:
        raise ValueError(f"max_steps must be >= 0, got {cap}")
    return cap


def sample_active_run(
    z: int, gamma: float, rng: np.random.Generator, max_steps: Optional[int] = None
) -> Tuple[int, bool]:
    """
    Length of an active run from the maximum z, capped at ``max_steps``.

    One uniform U is drawn per run and n is read off the survival
    function P(n >= j) = p(z) ... p(z+j-1). For gamma > 1 that product has
    a positive limit; a run whose U lies below it is reported at the cap as
    soon as the remaining tail cannot bring the product under U.

    Returns:
        (n, truncated): truncated is True when the cap stopped the run
    """
    if z < 1:
        raise ValueError(f"z must be >= 1, got {z}")
    runs, truncated = _inverted_runs(z, gamma, np.log1p(-rng.random(1)), _run_cap(max_steps))
    return int(runs[0]), bool(truncated[0])


def sample_active_runs(
    z: int, gamma: float, size: int, rng: np.random.Generator, max_steps: Optional[int] = None
) -> Tuple[np.ndarray, np.ndarray]:
    """
    ``size`` independent active runs from the maximum z.

    Returns:
        (n, truncated) arrays
    """
    if z < 1:
        raise ValueError(f"z must be >= 1, got {z}")
    if size < 1:
        raise ValueError(f"size must be >= 1, got {size}")
    return _inverted_runs(z, gamma, np.log1p(-rng.random(size)), _run_cap(max_steps))


def sample_n(z: int, gamma: float, rng: np.random.Generator) -> int:
    """Active-run length n(z): P(n >= j) = p(z) p(z+1) ... p(z+j-1)."""
    n, _ = sample_active_run(z, gamma, rng)
    return n


def wald_identity_check(
    theta: float, a: int, b: int, n_paths: int, rng: np.random.Generator
) -> Tuple[float, float]:
    """
    Monte Carlo mean of exp(theta w(tau)) / cosh(theta)^tau over SSRW paths.

    Paths start at 0 and stop on exiting [a, b]; the expectation is 1.

    Returns:
        (estimate, standard error)
    """
    if not math.isfinite(theta) or theta == 0:
        raise ValueError(f"theta must be finite and nonzero, got {theta}")
    if a >= 0 or b <= 0:
        raise ValueError(f"interval must satisfy a < 0 < b, got [{a}, {b}]")
    if n_paths < 1:
        raise ValueError(f"n_paths must be >= 1, got {n_paths}")
    taus, sites = ssrw_exit_times(a, b, 0, n_paths, rng)
    values = np.exp(theta * sites - taus * log_cosh(theta))
    stderr = float(values.std(ddof=1) / math.sqrt(n_paths)) if n_paths > 1 else 0.0
    return float(values.mean()), stderr
