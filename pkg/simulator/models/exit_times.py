"""
Exit times of the simple symmetric random walk.

Closed-form Laplace transforms (through theta(lambda) = arccosh(e^lambda)) and
an exact probability-propagation oracle for the exit-time distribution.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_banded

from shared_lib.config import get_settings

LN2 = math.log(2.0)
# Below this lambda the closed form loses digits to cancellation in 1 - e^{-2 lambda}
THETA_SERIES_CUTOFF = 1e-8


def _as_scalar(value):
    return float(value) if np.ndim(value) == 0 else value


def _check_lambda(lam) -> np.ndarray:
    lam_arr = np.asarray(lam, dtype=float)
    if np.any(np.isnan(lam_arr)) or np.any(lam_arr < 0):
        raise ValueError(f"lambda must be >= 0, got {lam}")
    return lam_arr


def theta(lam):
    """
    theta(lambda) = ln(e^lambda + sqrt(e^{2 lambda} - 1)), so cosh(theta) = e^lambda.

    Evaluated as lambda + log1p(sqrt(1 - e^{-2 lambda})), which never
    overflows; tiny lambda uses sqrt(2 lambda)(1 + lambda/6).
    """
    lam_arr = _check_lambda(lam)
    with np.errstate(invalid="ignore", divide="ignore"):
        exact = lam_arr + np.log1p(np.sqrt(-np.expm1(-2.0 * lam_arr)))
    series = np.sqrt(2.0 * lam_arr) * (1.0 + lam_arr / 6.0)
    return _as_scalar(np.where(lam_arr < THETA_SERIES_CUTOFF, series, exact))


def log_cosh(u):
    """ln cosh(u) without overflow: |u| + log1p(e^{-2|u|}) - ln 2."""
    a = np.abs(np.asarray(u, dtype=float))
    return _as_scalar(a + np.log1p(np.exp(-2.0 * a)) - LN2)


def laplace_exit_interval(lam, a: int, b: int):
    """
    E[exp(-lambda tau)] for the SSRW exit time tau of [a, b] started at 0.

    Equals cosh(theta c) / cosh(theta d) with c = (a+b)/2 and d = (b-a)/2.
    """
    if a >= 0 or b <= 0:
        raise ValueError(f"interval must satisfy a < 0 < b, got [{a}, {b}]")
    th = np.asarray(theta(lam))
    c = 0.5 * (a + b)
    d = 0.5 * (b - a)
    return _as_scalar(np.exp(log_cosh(th * c) - log_cosh(th * d)))


def laplace_m(lam, z: int):
    """Laplace transform cosh(theta (z-1)) / cosh(theta z) of the lazy exit time m(z)."""
    if z < 1:
        raise ValueError(f"z must be >= 1, got {z}")
    th = np.asarray(theta(lam))
    return _as_scalar(np.exp(log_cosh(th * (z - 1)) - log_cosh(th * z)))


# ============================================================================
# Exact exit-time distribution
# ============================================================================

@dataclass(frozen=True)
class ExitTimePmf:
    """P(tau = s) for s = 1..s_max (pmf[s-1]) and the residual mass P(tau > s_max)."""
    pmf: np.ndarray
    tail: float

    @property
    def s_max(self) -> int:
        return int(self.pmf.size)

    @property
    def support(self) -> np.ndarray:
        return np.arange(1, self.pmf.size + 1)

    def total_mass(self) -> float:
        return float(self.pmf.sum() + self.tail)

    def laplace_bounds(self, lam: float) -> tuple:
        """
        Lower and upper bounds on E[exp(-lambda tau)].

        The unresolved tail contributes between 0 and tail * e^{-lambda (s_max + 1)}.
        """
        head = float(np.sum(self.pmf * np.exp(-lam * self.support)))
        return head, head + self.tail * math.exp(-lam * (self.s_max + 1))

    def cdf(self) -> np.ndarray:
        return np.cumsum(self.pmf)


def interval_exit_pmf(lower: int, upper: int, start: int, s_max: int) -> ExitTimePmf:
    """
    Exit-time pmf of a SSRW from the open integer interval (lower, upper).

    The probability vector over the interior sites is propagated one step at
    a time from ``start``; mass stepping onto ``lower`` or ``upper`` is the
    exit probability of that step.

    Raises:
        ValueError: on a malformed interval or when the work exceeds
            ``settings.pmf_max_work``.
    """
    if not lower < start < upper:
        raise ValueError(f"start {start} must lie strictly inside ({lower}, {upper})")
    if s_max < 1:
        raise ValueError(f"s_max must be >= 1, got {s_max}")
    sites = upper - lower - 1
    limit = get_settings().pmf_max_work
    if float(sites) * float(s_max) > limit:
        raise ValueError(
            f"exit-time pmf needs {sites} x {s_max} site-steps, above pmf_max_work={limit:g}"
        )

    pmf = np.zeros(s_max)
    if sites == 1:
        pmf[0] = 1.0
        return ExitTimePmf(pmf=pmf, tail=0.0)

    cur = np.zeros(sites)
    nxt = np.zeros(sites)
    cur[start - lower - 1] = 1.0
    for s in range(s_max):
        pmf[s] = 0.5 * (cur[0] + cur[-1])
        np.add(cur[:-2], cur[2:], out=nxt[1:-1])
        nxt[0] = cur[1]
        nxt[-1] = cur[-2]
        nxt *= 0.5
        cur, nxt = nxt, cur
    return ExitTimePmf(pmf=pmf, tail=float(cur.sum()))


def exit_time_pmf(z: int, s_max: int) -> ExitTimePmf:
    """Exact pmf of m(z): exit of [-z, z] starting from z-1."""
    if z < 1:
        raise ValueError(f"z must be >= 1, got {z}")
    return interval_exit_pmf(-z, z, z - 1, s_max)


@dataclass(frozen=True)
class ExitTimeMoments:
    mean: float
    second_moment: float

    @property
    def variance(self) -> float:
        return self.second_moment - self.mean ** 2

    @property
    def std(self) -> float:
        return math.sqrt(max(self.variance, 0.0))


def exit_time_moments(z: int) -> ExitTimeMoments:
    """
    Exact first and second moments of m(z).

    With f(x) = (x+z)(z-x) the mean exit time from site x, the second moment
    g solves g(x) - (g(x-1) + g(x+1))/2 = 2 f(x) - 1 with g(+-z) = 0, a
    tridiagonal system.
    """
    if z < 1:
        raise ValueError(f"z must be >= 1, got {z}")
    x = np.arange(-z + 1, z, dtype=float)
    f = (x + z) * (z - x)
    bands = np.zeros((3, x.size))
    bands[0, 1:] = -0.5
    bands[1, :] = 1.0
    bands[2, :-1] = -0.5
    g = solve_banded((1, 1), bands, 2.0 * f - 1.0)
    start = 2 * z - 2  # index of site z-1
    return ExitTimeMoments(mean=float(f[start]), second_moment=float(g[start]))
