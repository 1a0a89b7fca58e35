"""Closed-form model core: step rule, exit times, limit laws and growth law."""

from .step_model import (
    StepProbabilityCache,
    probability_cache,
    step_probability,
    log_step_probability,
    log_survival_tail,
    predict_regime,
    active_run_survival,
    active_run_bounds,
)
from .exit_times import (
    ExitTimeMoments,
    ExitTimePmf,
    theta,
    log_cosh,
    laplace_exit_interval,
    laplace_m,
    interval_exit_pmf,
    exit_time_pmf,
    exit_time_moments,
)
from .limit_laws import (
    LEVY_MEDIAN,
    T_MEAN,
    T_STD,
    levy_pdf,
    levy_cdf,
    levy_cdf_extended,
    levy_quantile,
    limit_laplace_L,
    limit_laplace_T,
    moment_prediction,
    limit_transform_to_reference,
    reference_to_limit,
)
from .growth import (
    deterministic_z_of_k,
    r_product,
    laplace_l_of_k_prediction,
    moment_growth_prediction,
)

__all__ = [
    "StepProbabilityCache",
    "probability_cache",
    "step_probability",
    "log_step_probability",
    "log_survival_tail",
    "predict_regime",
    "active_run_survival",
    "active_run_bounds",
    "ExitTimeMoments",
    "ExitTimePmf",
    "theta",
    "log_cosh",
    "laplace_exit_interval",
    "laplace_m",
    "interval_exit_pmf",
    "exit_time_pmf",
    "exit_time_moments",
    "LEVY_MEDIAN",
    "T_MEAN",
    "T_STD",
    "levy_pdf",
    "levy_cdf",
    "levy_cdf_extended",
    "levy_quantile",
    "limit_laplace_L",
    "limit_laplace_T",
    "moment_prediction",
    "limit_transform_to_reference",
    "reference_to_limit",
    "deterministic_z_of_k",
    "r_product",
    "laplace_l_of_k_prediction",
    "moment_growth_prediction",
]
