"""
Per-checkpoint ensemble summaries confronted with the limit laws.

For each checkpoint the rescaled maximum z/t^nu gets bootstrapped moments;
when 0 <= gamma <= 1/2 the reference variable implied by z (T or L) gets an
empirical Laplace table and a KS distance against its law. Cycle files get
per-k growth rows and L(k) Laplace rows instead.
"""

import math
from typing import List, Optional, Sequence

import numpy as np

from shared_lib.models import EnsembleSummary
from shared_lib.rng import BOOTSTRAP_STREAMS, VERIFY_STREAMS, stream
from shared_lib.utils import geometric_schedule
from simulator.models.growth import deterministic_z_of_k, laplace_l_of_k_prediction
from simulator.models.limit_laws import (
    levy_cdf_extended,
    limit_laplace_L,
    limit_laplace_T,
    limit_transform_to_reference,
    moment_prediction,
)
from simulator.models.step_model import predict_regime

from .estimators import empirical_laplace, laplace_estimates, moment_estimate
from .goodness_of_fit import ks_critical_value, ks_distance, ks_two_sample
from .reference_samplers import sample_T

DEFAULT_LAMBDAS = (0.5, 1.0, 2.0)
DEFAULT_QS = (1.0, 1.5, 2.0)


def reference_name(gamma: float) -> Optional[str]:
    """Reference variable whose law governs z at this gamma, if any."""
    if gamma == 0:
        return "T"
    if 0 < gamma <= 0.5:
        return "L"
    return None


def summarize_checkpoint(
    z,
    t: int,
    gamma: float,
    lambdas: Sequence[float] = DEFAULT_LAMBDAS,
    qs: Sequence[float] = DEFAULT_QS,
    seed: int = 0,
    index: int = 0,
) -> EnsembleSummary:
    """
    Summary of the maxima of all walkers at one checkpoint.

    Args:
        z: Maxima at time t, one per walker
        t: Checkpoint time
        gamma: Model parameter
        lambdas: Laplace grid for the reference variable
        qs: Moment orders of z / t^nu
        seed: Master seed the bootstrap streams derive from
        index: Checkpoint index, keeps bootstrap streams distinct
    """
    z_arr = np.asarray(z, dtype=float)
    if z_arr.size == 0:
        raise ValueError(f"no samples at t={t}")
    nu = predict_regime(gamma).nu
    scaled = z_arr / float(t) ** nu

    moments = []
    for qi, q in enumerate(qs):
        predicted = moment_prediction(q, gamma) if 0 < gamma < 0.5 else None
        rng = stream(seed, index * 64 + qi, BOOTSTRAP_STREAMS)
        moments.append(moment_estimate(scaled, q, rng=rng, predicted=predicted))

    summary = EnsembleSummary(
        t=int(t), n_samples=int(z_arr.size), nu=nu,
        median_z=float(np.median(z_arr)), mean_z=float(z_arr.mean()),
        moments=moments,
    )
    name = reference_name(gamma)
    if name is None or np.any(z_arr < 1):
        return summary

    reference = np.asarray(limit_transform_to_reference(z_arr, t, gamma), dtype=float).ravel()
    n = reference.size
    if name == "T":
        laplace = laplace_estimates(reference, lambdas, limit_laplace_T)
        draws = sample_T(stream(seed, index, VERIFY_STREAMS), size=n)
        ks = ks_two_sample(reference, draws)
        critical = ks_critical_value(n, n)
    else:
        laplace = laplace_estimates(reference, lambdas, limit_laplace_L)
        ks = ks_distance(reference, levy_cdf_extended)
        critical = ks_critical_value(n)

    summary = summary.model_copy(update={
        "reference": name, "laplace": laplace, "ks_statistic": ks, "ks_critical": critical,
    })
    return summary.attach_reference(reference)


def summarize_ensemble(
    table,
    gamma: float,
    lambdas: Sequence[float] = DEFAULT_LAMBDAS,
    qs: Sequence[float] = DEFAULT_QS,
    seed: int = 0,
) -> List[EnsembleSummary]:
    """One summary per checkpoint of a CheckpointTable."""
    return [
        summarize_checkpoint(table.at(t), int(t), gamma, lambdas, qs, seed=seed, index=i)
        for i, t in enumerate(table.times())
    ]


def growth_curve(summaries: Sequence[EnsembleSummary]) -> List[dict]:
    """Plot-ready rows: log10 t against log10 of the median and mean of z."""
    return [
        {
            "log10_t": math.log10(s.t),
            "log10_median_z": math.log10(s.median_z) if s.median_z > 0 else None,
            "log10_mean_z": math.log10(s.mean_z) if s.mean_z > 0 else None,
        }
        for s in sorted(summaries, key=lambda s: s.t)
    ]


def laplace_table(summaries: Sequence[EnsembleSummary]) -> List[dict]:
    """Plot-ready rows of empirical against limit-law Laplace values."""
    return [
        {
            "t": s.t, "reference": s.reference, "lambda": row.lam,
            "empirical": row.estimate, "stderr": row.stderr, "predicted": row.predicted,
        }
        for s in summaries for row in s.laplace
    ]


def ecdf_table(summary: EnsembleSummary, points: int = 50) -> List[dict]:
    """Empirical cdf of the reference variable next to the Levy cdf (L only)."""
    if summary.reference != "L":
        return []
    grid = np.logspace(-2, 3, points)
    empirical = summary.ecdf(grid)
    return [
        {"t": summary.t, "x": float(x), "ecdf": float(e), "levy_cdf": float(levy_cdf_extended(x))}
        for x, e in zip(grid, empirical)
    ]


# ============================================================================
# Cycle files
# ============================================================================

def _cycle_matrices(table):
    """(z_k, cumulative lazy time) as (replicas, k_max) matrices."""
    _, counts = np.unique(table.walker_id, return_counts=True)
    if counts.size == 0 or np.any(counts != counts[0]):
        raise ValueError("every replica must record the same number of cycles")
    shape = (counts.size, int(counts[0]))
    return table.z_k.reshape(shape).astype(float), np.cumsum(table.m.reshape(shape), axis=1).astype(float)


def _cycle_grid(k_max: int) -> List[int]:
    return geometric_schedule(k_max, 10 ** 0.25, 1)


def cycle_growth(table, gamma: float) -> List[dict]:
    """Median and mean z(k) over replicas next to the deterministic growth law."""
    z, _ = _cycle_matrices(table)
    predicted = 0.0 <= gamma < 1.0
    return [
        {
            "k": k,
            "median_z": float(np.median(z[:, k - 1])),
            "mean_z": float(np.mean(z[:, k - 1])),
            "predicted_z": float(deterministic_z_of_k(k, gamma)) if predicted else None,
        }
        for k in _cycle_grid(z.shape[1])
    ]


def cycle_laplace(table, gamma: float, lambdas: Sequence[float] = DEFAULT_LAMBDAS) -> List[dict]:
    """Empirical Laplace transform of L(k) against its finite-k prediction."""
    _, lazy = _cycle_matrices(table)
    predicted = 0.0 <= gamma < 1.0
    rows = []
    for k in _cycle_grid(lazy.shape[1]):
        if k < 2:
            continue
        l_k = lazy[:, k - 1] / float(k) ** 2
        for lam in lambdas:
            estimate, stderr = empirical_laplace(l_k, lam)
            rows.append({
                "k": k, "lambda": float(lam), "empirical": estimate, "stderr": stderr,
                "predicted": laplace_l_of_k_prediction(k, lam, gamma) if predicted else None,
            })
    return rows
