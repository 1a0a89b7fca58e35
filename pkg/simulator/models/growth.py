"""Deterministic growth of the maximum with the cycle index, and the R(k) product."""

import numpy as np

from .exit_times import log_cosh, theta


def _check_gamma(gamma: float) -> None:
    if not 0.0 <= gamma < 1.0:
        raise ValueError(f"gamma must lie in [0, 1), got {gamma}")


def deterministic_z_of_k(k, gamma: float):
    """z(k) = ((1 - gamma) k)^{1/(1 - gamma)}."""
    _check_gamma(gamma)
    k_arr = np.asarray(k, dtype=float)
    if np.any(k_arr < 1):
        raise ValueError(f"k must be >= 1, got {k}")
    alpha = 1.0 - gamma
    out = (alpha * k_arr) ** (1.0 / alpha)
    return float(out) if np.ndim(out) == 0 else out


def _growth_sequence(k: int, gamma: float) -> np.ndarray:
    return np.asarray(deterministic_z_of_k(np.arange(1, k, dtype=float), gamma))


def r_product(k: int, lam: float, gamma: float) -> float:
    """
    R(k) = prod_{i<k} (1 + e^{-2 th (z_i - 1)}) / (1 + e^{-2 th z_i}), th = theta(lambda/k^2).

    z_i follows deterministic_z_of_k. Tends to 1 for 0 < gamma < 1 and to
    2 / (1 + e^{-2 sqrt(2 lambda)}) for gamma = 0.
    """
    _check_gamma(gamma)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if lam <= 0:
        raise ValueError(f"lambda must be > 0, got {lam}")
    if k == 1:
        return 1.0
    th = theta(lam / float(k) ** 2)
    z = _growth_sequence(k, gamma)
    log_r = np.logaddexp(0.0, -2.0 * th * (z - 1.0)) - np.logaddexp(0.0, -2.0 * th * z)
    return float(np.exp(np.sum(log_r)))


def laplace_l_of_k_prediction(k: int, lam: float, gamma: float) -> float:
    """
    Predicted E[exp(-lambda L(k))], L(k) = sum of lazy times / k^2.

    Product of the lazy-time transforms cosh(th (z_i - 1)) / cosh(th z_i)
    along the deterministic growth law; it factorises as e^{-(k-1) th} R(k).
    """
    _check_gamma(gamma)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k == 1:
        return 1.0
    th = theta(lam / float(k) ** 2)
    z = _growth_sequence(k, gamma)
    return float(np.exp(np.sum(log_cosh(th * (z - 1.0)) - log_cosh(th * z))))


def moment_growth_prediction(k, gamma: float, power: float = 1.0):
    """Leading-order E[z(k)^{power (1 - gamma)}] = ((1 - gamma) k)^power."""
    _check_gamma(gamma)
    out = ((1.0 - gamma) * np.asarray(k, dtype=float)) ** power
    return float(out) if np.ndim(out) == 0 else out
