"""Estimators, goodness-of-fit tests and reference samplers for ensemble output."""

from .estimators import (
    empirical_laplace,
    empirical_laplace_grid,
    laplace_estimates,
    bootstrap_mean,
    moment_estimate,
)
from .goodness_of_fit import (
    ChiSquareResult,
    ks_distance,
    ks_distance_discrete,
    ks_two_sample,
    ks_critical_value,
    chi_square_against_pmf,
)
from .reference_samplers import ResolutionShift, resolution_shift, sample_levy, sample_T
from .scaling import fit_power_law, estimate_nu, estimate_nu_from_table, estimate_nu_from_summaries
from .summary import (
    reference_name,
    summarize_checkpoint,
    summarize_ensemble,
    growth_curve,
    laplace_table,
    ecdf_table,
    cycle_growth,
    cycle_laplace,
)

__all__ = [
    "empirical_laplace",
    "empirical_laplace_grid",
    "laplace_estimates",
    "bootstrap_mean",
    "moment_estimate",
    "ChiSquareResult",
    "ks_distance",
    "ks_distance_discrete",
    "ks_two_sample",
    "ks_critical_value",
    "chi_square_against_pmf",
    "sample_levy",
    "sample_T",
    "ResolutionShift",
    "resolution_shift",
    "fit_power_law",
    "estimate_nu",
    "estimate_nu_from_table",
    "estimate_nu_from_summaries",
    "reference_name",
    "summarize_checkpoint",
    "summarize_ensemble",
    "growth_curve",
    "laplace_table",
    "ecdf_table",
    "cycle_growth",
    "cycle_laplace",
]
