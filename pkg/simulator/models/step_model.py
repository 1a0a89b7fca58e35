"""
Step rule at the running maximum and the scaling regimes it produces.

A walker at her maximum distance z steps outward with probability
p(z) = z^gamma / (1 + z^gamma); everywhere else she is a simple symmetric
random walk. gamma > 0 makes her bold, gamma < 0 timorous.
"""

import math
from collections import OrderedDict
from functools import lru_cache
from typing import Union

import numpy as np
from scipy.special import expit, log_expit

from shared_lib.models import LimitLaw, Regime, RegimePrediction

ArrayLike = Union[int, float, np.ndarray]


def _as_scalar(value: np.ndarray):
    return float(value) if np.ndim(value) == 0 else value


def step_probability(z: ArrayLike, gamma: float):
    """
    Probability of an outward step from the maximum z.

    Computed as expit(gamma * ln z), which equals z^gamma / (1 + z^gamma)
    without overflowing for large z^gamma.

    Raises:
        ValueError: if any z < 1 (the walk never consults p at z = 0).
    """
    z_arr = np.asarray(z)
    if z_arr.size and np.min(z_arr) < 1:
        raise ValueError(f"step probability needs z >= 1, got {np.min(z_arr)}")
    if not math.isfinite(gamma):
        raise ValueError(f"gamma must be finite, got {gamma}")
    return _as_scalar(expit(gamma * np.log(z_arr.astype(float))))


def log_step_probability(z: ArrayLike, gamma: float):
    """ln p(z), accurate where p(z) is within rounding of 1."""
    z_arr = np.asarray(z)
    if z_arr.size and np.min(z_arr) < 1:
        raise ValueError(f"step probability needs z >= 1, got {np.min(z_arr)}")
    if not math.isfinite(gamma):
        raise ValueError(f"gamma must be finite, got {gamma}")
    return _as_scalar(log_expit(gamma * np.log(z_arr.astype(float))))


def log_survival_tail(w: int, gamma: float) -> float:
    """
    Upper bound on -sum_{i >= w} ln p(i), minus the log-probability that an
    active run standing at maximum w never fails.

    Finite only for gamma > 1, where
    sum ln(1 + i^-gamma) <= w^-gamma + w^(1-gamma) / (gamma - 1).
    """
    if w < 1:
        raise ValueError(f"w must be >= 1, got {w}")
    if gamma <= 1:
        return math.inf
    return w ** -gamma + w ** (1.0 - gamma) / (gamma - 1.0)


class StepProbabilityCache:
    """
    Lookup table of p(z), indexed by z, filled page by page.

    Every page is evaluated over the same fixed z range, so an entry is
    bit-identical however far the table has grown; ensembles split across
    processes take identical decisions. Maxima below DENSE_LIMIT live in one
    contiguous array, larger ones in at most SPARSE_PAGES pages kept in
    least-recently-used order.
    """

    PAGE = 4096
    DENSE_LIMIT = 1 << 22
    SPARSE_PAGES = 256

    def __init__(self, gamma: float):
        if not math.isfinite(gamma):
            raise ValueError(f"gamma must be finite, got {gamma}")
        self.gamma = gamma
        self._table = np.empty(0)
        self._sparse: "OrderedDict[int, np.ndarray]" = OrderedDict()

    @property
    def sparse_pages(self) -> int:
        """Number of pages currently held above DENSE_LIMIT."""
        return len(self._sparse)

    def _page(self, index: int) -> np.ndarray:
        lo = index * self.PAGE
        page = step_probability(np.maximum(np.arange(lo, lo + self.PAGE), 1), self.gamma)
        if index == 0:
            page[0] = np.nan  # p(0) is never consulted
        return page

    def _grow_dense(self, size: int) -> None:
        pages = [self._table]
        count = self._table.size // self.PAGE
        while count * self.PAGE < size:
            pages.append(self._page(count))
            count += 1
        self._table = np.concatenate(pages)

    def _sparse_page(self, index: int) -> np.ndarray:
        page = self._sparse.get(index)
        if page is None:
            page = self._page(index)
            self._sparse[index] = page
            if len(self._sparse) > self.SPARSE_PAGES:
                self._sparse.popitem(last=False)
        else:
            self._sparse.move_to_end(index)
        return page

    def _lookup_sparse(self, z):
        z_arr = np.asarray(z, dtype=np.int64)
        out = np.empty(z_arr.shape)
        page_ids = z_arr // self.PAGE
        for index in np.unique(page_ids):
            page = self._sparse_page(int(index))
            mask = page_ids == index
            out[mask] = page[z_arr[mask] - index * self.PAGE]
        return float(out) if out.ndim == 0 else out

    def __call__(self, z):
        """p(z) for an integer or an integer array of maxima (all >= 1)."""
        top = int(np.max(z))
        if top < self._table.size:
            return self._table[z]
        if top < self.DENSE_LIMIT:
            self._grow_dense(min(max(top + 1, 2 * self._table.size), self.DENSE_LIMIT))
            return self._table[z]
        return self._lookup_sparse(z)


@lru_cache(maxsize=64)
def probability_cache(gamma: float) -> StepProbabilityCache:
    """Process-wide table for one gamma."""
    return StepProbabilityCache(gamma)


def predict_regime(gamma: float) -> RegimePrediction:
    """Scaling exponent, regime and limit law of z(t)/t^nu for a given gamma."""
    if not math.isfinite(gamma):
        raise ValueError(f"gamma must be finite, got {gamma}")
    if gamma < 0:
        nu = 1.0 / (2.0 - gamma)
        return RegimePrediction(
            gamma=gamma, nu=nu, regime=Regime.SUBDIFFUSIVE,
            limit_descriptor=LimitLaw.CONSTANT,
            limit_constant=(1.0 / (2.0 * nu)) ** nu,
        )
    if gamma == 0:
        return RegimePrediction(
            gamma=gamma, nu=0.5, regime=Regime.SSRW,
            limit_descriptor=LimitLaw.INVERSE_SQRT_T,
        )
    if gamma < 0.5:
        return RegimePrediction(
            gamma=gamma, nu=1.0 / (2.0 - 2.0 * gamma), regime=Regime.SUPERDIFFUSIVE,
            limit_descriptor=LimitLaw.LEVY_POWER,
        )
    if gamma == 0.5:
        return RegimePrediction(
            gamma=gamma, nu=1.0, regime=Regime.BALLISTIC_BOUNDARY,
            limit_descriptor=LimitLaw.INVERSE_4L_PLUS_1,
        )
    return RegimePrediction(
        gamma=gamma, nu=1.0, regime=Regime.BALLISTIC,
        limit_descriptor=LimitLaw.ONE, limit_constant=1.0,
    )


def active_run_survival(n: int, z: int, gamma: float) -> float:
    """P(n(z) >= n): product of p(z), p(z+1), ..., p(z+n-1)."""
    if n < 0:
        raise ValueError(f"run length must be >= 0, got {n}")
    if n == 0:
        return 1.0
    p = step_probability(np.arange(z, z + n), gamma)
    return float(np.exp(np.sum(np.log(p))))


def active_run_bounds(n: int, z: int, gamma: float) -> tuple:
    """
    Lower and upper bounds [p(z)^n, p(z+n-1)^n] on P(n(z) >= n), gamma >= 0.

    With n = floor(beta z^gamma) and 0 < gamma < 1 both bounds tend to
    exp(-beta) as z grows.
    """
    if gamma < 0:
        raise ValueError(f"bounds hold for gamma >= 0, got {gamma}")
    if n == 0:
        return 1.0, 1.0
    return step_probability(z, gamma) ** n, step_probability(z + n - 1, gamma) ** n
