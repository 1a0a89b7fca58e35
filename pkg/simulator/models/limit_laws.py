"""
Limit laws of the rescaled maximum.

L is the parameter-one Levy variable (first hitting time of level 1 by a
standard Brownian motion) and T the Brownian exit time of [-1, 1].
"""

import math

import numpy as np
from scipy.special import erfc, erfcinv, gammaln

T_MEAN = 1.0
T_STD = math.sqrt(2.0 / 3.0)
LEVY_MEDIAN = 1.0 / (2.0 * float(erfcinv(0.5)) ** 2)


def _as_scalar(value):
    return float(value) if np.ndim(value) == 0 else value


def _positive(x, name: str = "x") -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if np.any(np.isnan(arr)) or np.any(arr <= 0):
        raise ValueError(f"{name} must be > 0")
    return arr


def _nonnegative_lambda(lam) -> np.ndarray:
    arr = np.asarray(lam, dtype=float)
    if np.any(np.isnan(arr)) or np.any(arr < 0):
        raise ValueError(f"lambda must be >= 0, got {lam}")
    return arr


# ============================================================================
# Levy law
# ============================================================================

def levy_pdf(x):
    """Density (2 pi x^3)^{-1/2} exp(-1/(2x))."""
    arr = _positive(x)
    return _as_scalar(np.exp(-0.5 / arr) / np.sqrt(2.0 * math.pi * arr ** 3))


def levy_cdf(x):
    """P(L <= x) = erfc(1 / sqrt(2x))."""
    arr = _positive(x)
    return _as_scalar(erfc(1.0 / np.sqrt(2.0 * arr)))


def levy_cdf_extended(x):
    """levy_cdf on the whole real line (zero for x <= 0)."""
    arr = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore"):
        values = erfc(1.0 / np.sqrt(2.0 * np.maximum(arr, np.finfo(float).tiny)))
    return _as_scalar(np.where(arr > 0, values, 0.0))


def levy_quantile(p):
    """Inverse of levy_cdf: 1 / (2 erfcinv(p)^2) for p in (0, 1)."""
    arr = np.asarray(p, dtype=float)
    if np.any(~((arr > 0) & (arr < 1))):
        raise ValueError(f"probability must lie in (0, 1), got {p}")
    return _as_scalar(0.5 / erfcinv(arr) ** 2)


# ============================================================================
# Laplace transforms and moments
# ============================================================================

def limit_laplace_L(lam):
    """E[exp(-lambda L)] = exp(-sqrt(2 lambda))."""
    arr = _nonnegative_lambda(lam)
    return _as_scalar(np.exp(-np.sqrt(2.0 * arr)))


def limit_laplace_T(lam):
    """E[exp(-lambda T)] = 1 / cosh(sqrt(2 lambda))."""
    arr = _nonnegative_lambda(lam)
    return _as_scalar(1.0 / np.cosh(np.sqrt(2.0 * arr)))


def superdiffusive_nu(gamma: float) -> float:
    if not 0.0 < gamma < 0.5:
        raise ValueError(f"gamma must lie in (0, 1/2), got {gamma}")
    return 1.0 / (2.0 - 2.0 * gamma)


def moment_prediction(q: float, gamma: float) -> float:
    """
    q-th moment of the limit (1/(2 nu))^{2 nu} L^{-nu} of z(t)/t^nu.

    Equal to (1/(2 nu^2))^{q nu} Gamma(q nu + 1/2) / Gamma(1/2).
    """
    if q <= 0:
        raise ValueError(f"moment order must be > 0, got {q}")
    nu = superdiffusive_nu(gamma)
    qn = q * nu
    return math.exp(qn * math.log(1.0 / (2.0 * nu * nu)) + gammaln(qn + 0.5) - gammaln(0.5))


# ============================================================================
# Maps between the maximum and the reference variable
# ============================================================================

def limit_transform_to_reference(z, t, gamma: float):
    """
    Reference-variable estimate implied by z at time t.

    gamma = 0: T = t / z^2. 0 < gamma < 1/2: L = t / ((2 nu)^2 z^{1/nu}).
    gamma = 1/2: L = (t/z - 1) / 4.
    """
    z_arr = np.asarray(z, dtype=float)
    t_arr = np.asarray(t, dtype=float)
    if np.any(z_arr < 1) or np.any(t_arr < z_arr):
        raise ValueError("need t >= z >= 1")
    if gamma == 0:
        return _as_scalar(t_arr / z_arr ** 2)
    if 0 < gamma < 0.5:
        nu = superdiffusive_nu(gamma)
        return _as_scalar(t_arr / ((2.0 * nu) ** 2 * z_arr ** (1.0 / nu)))
    if gamma == 0.5:
        return _as_scalar((t_arr / z_arr - 1.0) / 4.0)
    raise ValueError(f"no reference variable for gamma={gamma}; need 0 <= gamma <= 1/2")


def reference_to_limit(reference, t, gamma: float):
    """Forward limit law: the maximum at time t implied by a reference value."""
    ref = np.asarray(reference, dtype=float)
    t_arr = np.asarray(t, dtype=float)
    if gamma == 0:
        return _as_scalar(np.sqrt(t_arr / _positive(ref, "T")))
    if 0 < gamma < 0.5:
        nu = superdiffusive_nu(gamma)
        scale = (1.0 / (2.0 * nu)) ** (2.0 * nu)
        return _as_scalar(t_arr ** nu * scale * _positive(ref, "L") ** (-nu))
    if gamma == 0.5:
        if np.any(ref < 0):
            raise ValueError("L must be >= 0")
        return _as_scalar(t_arr / (4.0 * ref + 1.0))
    raise ValueError(f"no reference variable for gamma={gamma}; need 0 <= gamma <= 1/2")
