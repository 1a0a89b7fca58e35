"""
Verification suites: analytic identities, exact oracles, journey laws,
scaling regimes and simulator equivalence.

Each suite returns a SuiteReport of named checks with the measured value, the
reference value and the allowed deviation. Statistical checks compare against
a multiple of the standard error; every tolerance is multiplied by the
budget's ``tolerance_scale``.
"""

import math
import time
from dataclasses import dataclass, fields
from typing import Callable, Dict, List, Optional

import numpy as np
from scipy import integrate, stats

from shared_lib.config import get_settings
from shared_lib.models import CheckResult, Engine, RunConfig, SuiteReport
from shared_lib.rng import BOOTSTRAP_STREAMS, VERIFY_STREAMS, WALKER_STREAMS, stream
from shared_lib.utils import geometric_schedule

from analysis.estimators import empirical_laplace, moment_estimate
from analysis.goodness_of_fit import (
    chi_square_against_pmf,
    ks_critical_value,
    ks_distance,
    ks_distance_discrete,
    ks_two_sample,
)
from analysis.reference_samplers import MIN_RESOLUTION, resolution_shift, sample_levy, sample_T
from analysis.scaling import estimate_nu
from simulator.engines.cycles import l_of_k, time_decomposition
from simulator.engines.journeys import sample_active_runs, sample_m, wald_identity_check
from simulator.ensemble import cycles_to_checkpoints, run_config, run_cycle_ensemble, run_ensemble
from simulator.io import make_header, serialize
from simulator.models.exit_times import (
    exit_time_moments,
    exit_time_pmf,
    laplace_m,
    log_cosh,
    theta,
)
from simulator.models.growth import deterministic_z_of_k, laplace_l_of_k_prediction, r_product
from simulator.models.limit_laws import (
    LEVY_MEDIAN,
    T_MEAN,
    T_STD,
    levy_cdf,
    levy_cdf_extended,
    levy_pdf,
    levy_quantile,
    limit_laplace_L,
    limit_laplace_T,
    limit_transform_to_reference,
    moment_prediction,
)
from simulator.models.step_model import active_run_bounds, active_run_survival, predict_regime

LAMBDAS = (0.5, 1.0, 2.0)
SIGMAS = 3.0
DEFAULT_REGIME_GAMMAS = (0.0, 0.25, 0.5)

# Stream ids inside the VERIFY namespace, one per sampled check
_PMF_CHI2, _MEAN_M, _WALD, _LEVY, _T, _RUNS_SSRW, _RUNS_BOLD, _T_EQUIV, _T_RESOLUTION = range(9)


@dataclass(frozen=True)
class Budget:
    """Sample sizes and horizons of a verification run."""
    samples: int
    large_samples: int
    walkers: int
    t_max: int
    k_max: int
    cycle_replicas: int
    equivalence_samples: int
    equivalence_t: int
    tolerance_scale: float = 1.0
    threads: int = 1
    seed: int = 12345

    @classmethod
    def from_settings(cls, **overrides) -> "Budget":
        """Budget from ``verify_*`` settings; non-None overrides win."""
        settings = get_settings()
        values = {
            "samples": settings.verify_samples,
            "large_samples": settings.verify_large_samples,
            "walkers": settings.verify_walkers,
            "t_max": settings.verify_t_max,
            "k_max": settings.verify_k_max,
            "cycle_replicas": settings.verify_cycle_replicas,
            "equivalence_samples": settings.verify_equivalence_samples,
            "equivalence_t": settings.verify_equivalence_t,
            "tolerance_scale": settings.verify_tolerance_scale,
            "threads": settings.default_threads,
            "seed": settings.default_seed,
        }
        known = {f.name for f in fields(cls)}
        unknown = set(overrides) - known
        if unknown:
            raise ValueError(f"unknown budget fields: {sorted(unknown)}")
        values.update({k: v for k, v in overrides.items() if v is not None})
        budget = cls(**values)
        if budget.tolerance_scale <= 0:
            raise ValueError(f"tolerance_scale must be > 0, got {budget.tolerance_scale}")
        return budget


class CheckList:
    """Collects CheckResults, scaling tolerances by one factor."""

    def __init__(self, scale: float = 1.0):
        self.scale = scale
        self.results: List[CheckResult] = []

    def within(self, name: str, measured: float, expected: float, tolerance: float, detail: str = "") -> None:
        """Pass when |measured - expected| <= tolerance * scale."""
        tol = float(tolerance) * self.scale
        measured = float(measured)
        passed = math.isfinite(measured) and abs(measured - expected) <= tol
        self.results.append(CheckResult(
            name=name, measured=measured, expected=float(expected), tolerance=tol,
            passed=passed, detail=detail,
        ))

    def below(self, name: str, measured: float, threshold: float, detail: str = "") -> None:
        """Pass when a nonnegative statistic stays under threshold * scale."""
        self.within(name, measured, 0.0, threshold, detail)

    def in_range(self, name: str, measured: float, low: float, high: float, detail: str = "") -> None:
        self.within(name, measured, 0.5 * (low + high), 0.5 * (high - low), detail)

    def holds(self, name: str, condition: bool, detail: str = "") -> None:
        """Unscaled yes/no check (1 = holds)."""
        self.results.append(CheckResult(
            name=name, measured=1.0 if condition else 0.0, expected=1.0, tolerance=0.0,
            passed=bool(condition), detail=detail,
        ))

    def at_least(self, name: str, measured: float, threshold: float, detail: str = "") -> None:
        """Unscaled lower bound (p-values)."""
        measured = float(measured)
        self.results.append(CheckResult(
            name=name, measured=measured, expected=float(threshold), tolerance=0.0,
            passed=math.isfinite(measured) and measured > threshold, detail=detail,
        ))


def _rng(budget: Budget, check_id: int) -> np.random.Generator:
    return stream(budget.seed, check_id, VERIFY_STREAMS)


def _mean_se(values) -> tuple:
    arr = np.asarray(values, dtype=float)
    return float(arr.mean()), float(arr.std(ddof=1) / math.sqrt(arr.size))


def _schedule(t_max: int) -> List[int]:
    settings = get_settings()
    return geometric_schedule(t_max, settings.checkpoint_ratio, min(settings.checkpoint_start, t_max))


def _final_cycles(table) -> tuple:
    """Per-replica final maximum and L(k) of a k-bounded cycle ensemble."""
    z_final, l_final = [], []
    for _, rows in table.groups():
        z_final.append(float(rows.z_k[-1]))
        l_final.append(l_of_k(rows))
    return np.asarray(z_final), np.asarray(l_final)


# ============================================================================
# analytic
# ============================================================================

def analytic_suite(budget: Budget, checks: CheckList, gamma: Optional[float] = None) -> None:
    lam = np.logspace(-8, math.log10(50.0), 400)
    rel = np.abs(np.cosh(theta(lam)) * np.exp(-lam) - 1.0)
    checks.below("cosh(theta(lambda)) = e^lambda", rel.max(), 1e-12,
                 "max relative error, lambda in [1e-8, 50]")

    diff = np.abs(np.asarray([laplace_m(x, 1) for x in lam]) - np.exp(-lam))
    checks.below("laplace_m(lambda, 1) = e^-lambda", diff.max(), 1e-12, "max absolute error")

    k = 1000
    th = theta(1.0 / k ** 2)
    z = np.arange(1, k, dtype=float)
    product = math.exp(float(np.sum(log_cosh(th * (z - 1.0)) - log_cosh(th * z))))
    checks.within("telescoping lazy-time product", product, 1.0 / math.cosh(th * (k - 1)), 1e-10,
                  f"k={k}, lambda=1/k^2")

    r_ssrw = r_product(100_000, 1.0, 0.0)
    checks.within("R(1e5), gamma=0", r_ssrw, 2.0 / (1.0 + math.exp(-2.0 * math.sqrt(2.0))), 1e-3, "lambda=1")
    r_bold = [r_product(10 ** e, 1.0, 0.25) for e in (3, 4, 5, 6)]
    checks.holds("R(k) > 1 and decreasing, gamma=1/4",
                 all(r > 1.0 for r in r_bold) and all(a > b for a, b in zip(r_bold, r_bold[1:])),
                 "k = 1e3..1e6: " + ", ".join(f"{r:.5f}" for r in r_bold))
    checks.within("R(1e5), gamma=1/4", r_bold[2], 1.0, 0.1, "lambda=1; finite-k correction ~0.06")
    checks.within("L(k) prediction factorisation", laplace_l_of_k_prediction(k, 1.0, 0.25),
                  math.exp(-(k - 1) * th) * r_product(k, 1.0, 0.25), 1e-10, f"k={k}, lambda=1")

    worst = 0.0
    for x in (0.5, 1.0, LEVY_MEDIAN, 10.0):
        area, _ = integrate.quad(levy_pdf, 0.0, x, limit=200)
        worst = max(worst, abs(area - levy_cdf(x)))
    checks.below("levy_cdf = integral of levy_pdf", worst, 1e-8, "x in {0.5, 1, median, 10}")
    p = np.linspace(0.01, 0.99, 99)
    checks.below("levy_cdf(levy_quantile(p)) = p", np.max(np.abs(levy_cdf(levy_quantile(p)) - p)), 1e-12)
    checks.within("Levy median", LEVY_MEDIAN, 2.198, 1e-3)

    checks.within("E[(z/t^nu)^1.5], gamma=1/4", moment_prediction(1.5, 0.25), 9.0 / 16.0, 1e-12)
    checks.within("E[(z/t^nu)^3], gamma=1/4", moment_prediction(3.0, 0.25), 243.0 / 256.0, 1e-12)

    eps = 1e-9
    jumps = [
        abs(predict_regime(-eps).nu - 0.5), abs(predict_regime(eps).nu - 0.5),
        abs(predict_regime(0.5 - eps).nu - 1.0),
    ]
    checks.below("nu continuous at gamma = 0 and 1/2", max(jumps), 1e-8)

    moments = exit_time_moments(500)
    checks.within("E[m(z)] = 2z - 1", moments.mean, 999.0, 1e-9, "z=500")
    checks.within("E[m(z)^2] / z^3 -> 8/3", moments.second_moment / 500.0 ** 3, 8.0 / 3.0, 0.05 * 8.0 / 3.0,
                  "z=500, 5%")


# ============================================================================
# oracle
# ============================================================================

def oracle_suite(budget: Budget, checks: CheckList, gamma: Optional[float] = None) -> None:
    table = exit_time_pmf(3, 400)
    worst = 0.0
    for lam in LAMBDAS:
        low, high = table.laplace_bounds(lam)
        exact = laplace_m(lam, 3)
        worst = max(worst, abs(low - exact), abs(high - exact))
    checks.below("DP pmf Laplace vs closed form", worst, 1e-8, "z=3, s_max=400, tail bound included")
    checks.within("DP pmf total mass", table.total_mass(), 1.0, 1e-12)
    small = exit_time_pmf(2, 3).pmf
    checks.below("DP pmf at z=2", np.max(np.abs(small - [0.5, 0.0, 0.25])), 1e-15, "P(m=1..3) = 1/2, 0, 1/4")

    n = budget.samples
    reference = exit_time_pmf(4, 400)
    draws = sample_m(4, _rng(budget, _PMF_CHI2), size=n)
    chi2 = chi_square_against_pmf(draws, reference.pmf, tail=reference.tail)
    checks.at_least("sample_m(4) chi-square p-value", chi2.pvalue, 0.01, f"{n} draws, {chi2.bins} bins")

    mean, se = _mean_se(sample_m(10, _rng(budget, _MEAN_M), size=n))
    checks.within("mean of sample_m(10)", mean, 19.0, SIGMAS * se, f"{n} draws, 3 SE")

    est, se = wald_identity_check(0.3, -5, 3, n, _rng(budget, _WALD))
    checks.within("Wald identity", est, 1.0, SIGMAS * se, f"theta=0.3, [-5, 3], {n} paths")

    big = budget.large_samples
    levy = sample_levy(_rng(budget, _LEVY), size=big)
    for lam in LAMBDAS:
        est, se = empirical_laplace(levy, lam)
        checks.within(f"sample_levy Laplace lambda={lam:g}", est, limit_laplace_L(lam), SIGMAS * se, f"{big} draws")
    checks.below("sample_levy KS", ks_distance(levy, levy_cdf_extended), ks_critical_value(big), "1% critical value")
    checks.within("sample_levy median", float(np.median(levy)), LEVY_MEDIAN, 0.02 * LEVY_MEDIAN, "2%")

    t_draws = sample_T(_rng(budget, _T), size=n)
    mean, se = _mean_se(t_draws)
    checks.within("sample_T mean", mean, T_MEAN, SIGMAS * se, f"N={get_settings().t_sampler_resolution}")
    sd = float(t_draws.std(ddof=1))
    sd_se = float(np.std((t_draws - mean) ** 2, ddof=1) / (2.0 * sd * math.sqrt(n)))
    checks.within("sample_T sd", sd, T_STD, SIGMAS * sd_se)
    est, _ = empirical_laplace(t_draws, 1.0)
    checks.within("sample_T Laplace lambda=1", est, limit_laplace_T(1.0), 0.01)

    fine = get_settings().t_sampler_resolution
    coarse = max(MIN_RESOLUTION, fine // 4)
    if coarse < fine:
        shift = resolution_shift(_rng(budget, _T_RESOLUTION), coarse, fine, n)
        checks.within("sample_T mean, coarse vs fine N", shift.mean_gap, 0.0, SIGMAS * shift.mean_se + shift.allowance,
                      f"N={coarse} vs N={fine}")
        checks.within("sample_T median, coarse vs fine N", shift.median_fraction, 0.5,
                      SIGMAS * shift.fraction_se + shift.allowance,
                      f"fraction of N={fine} draws below the N={coarse} median")


# ============================================================================
# journeys
# ============================================================================

def journeys_suite(budget: Budget, checks: CheckList, gamma: Optional[float] = None) -> None:
    n = budget.samples
    runs, _ = sample_active_runs(1, 0.0, n, _rng(budget, _RUNS_SSRW))
    scores = []
    for j in range(1, 11):
        p = 0.5 ** j
        scores.append(abs(np.mean(runs >= j) - p) / math.sqrt(p * (1.0 - p) / n))
    checks.below("P(n >= j) = 2^-j, gamma=0", max(scores), SIGMAS, f"max |error| / binomial SE, j <= 10, {n} draws")

    z, g = 10 ** 6, 0.25
    rng = _rng(budget, _RUNS_BOLD)
    runs, _ = sample_active_runs(z, g, n, rng)
    jittered = (runs + rng.random(n)) / z ** g
    checks.below("KS of n/z^gamma vs Exp(1)", ks_distance(jittered, stats.expon.cdf), 0.01,
                 f"z=1e6, gamma=1/4, continuity corrected, {n} draws")

    length = int(math.floor(z ** g))
    low, high = active_run_bounds(length, z, g)
    exact = active_run_survival(length, z, g)
    checks.holds("active-run survival inside its bounds", low <= exact <= high,
                 f"[{low:.5f}, {high:.5f}] contains {exact:.5f}")
    checks.within("active-run survival at n = z^gamma", exact, math.exp(-1.0), 0.05)
    empirical = float(np.mean(runs >= length))
    checks.within("empirical survival at n = z^gamma", empirical, exact,
                  SIGMAS * math.sqrt(exact * (1.0 - exact) / n))

    k, replicas = budget.k_max, budget.cycle_replicas
    ssrw = run_cycle_ensemble(0.0, replicas, budget.seed, k_max=k, threads=budget.threads)
    z_ssrw, _ = _final_cycles(ssrw)
    mean, se = _mean_se(z_ssrw)
    checks.within("E[z(k)] = k + 1, gamma=0", mean, k + 1.0, SIGMAS * se, f"k={k}, {replicas} replicas")

    bold = run_cycle_ensemble(g, replicas, budget.seed, k_max=k, threads=budget.threads)
    z_bold, _ = _final_cycles(bold)
    target = deterministic_z_of_k(k, g) / k ** (4.0 / 3.0)
    checks.within("median z(k)/k^(4/3), gamma=1/4", float(np.median(z_bold)) / k ** (4.0 / 3.0), target,
                  0.1 * target, f"k={k}, 10%")
    checks.within("E[z(k)^(3/4)] = 3k/4", float(np.mean(z_bold ** 0.75)), 0.75 * k, 0.05 * 0.75 * k,
                  f"k={k}, 5%")

    worst = max(abs(d["total"] - d["t_k"]) for d in (time_decomposition(rows) for _, rows in bold.groups()))
    checks.within("t(k) = z(k) + k^2 L(k) + k - 1", worst, 0.0, 0.0, "max over replicas")


# ============================================================================
# regimes
# ============================================================================

def _checkpoint_ensemble(gamma: float, budget: Budget):
    schedule = _schedule(budget.t_max)
    cycles = run_cycle_ensemble(gamma, budget.walkers, budget.seed, t_max=budget.t_max, threads=budget.threads)
    table = cycles_to_checkpoints(cycles, schedule)
    times = table.times()
    return times, table.z.reshape(-1, times.size).astype(float)


def _nu_hat(times, z, budget: Budget, gamma: float) -> float:
    rng = stream(budget.seed, 1000 + int(round(gamma * 1000)), VERIFY_STREAMS)
    return estimate_nu(times, z, rng=rng, resamples=200).nu_hat


def _l_of_k_checks(gamma: float, budget: Budget, checks: CheckList, label: str, limit: Callable) -> np.ndarray:
    k, replicas = budget.k_max, budget.cycle_replicas
    table = run_cycle_ensemble(gamma, replicas, budget.seed, k_max=k, threads=budget.threads)
    z_final, l_final = _final_cycles(table)
    for lam in LAMBDAS:
        est, se = empirical_laplace(l_final, lam)
        predicted = laplace_l_of_k_prediction(k, lam, gamma)
        checks.within(f"{label} L(k) Laplace lambda={lam:g}", est, predicted, SIGMAS * se + 0.02,
                      f"k={k}, finite-k prediction (limit {limit(lam):.4f}), 3 SE + 0.02")
    return z_final


def _regime_ssrw(budget: Budget, checks: CheckList) -> None:
    times, z = _checkpoint_ensemble(0.0, budget)
    t = float(times[-1])
    t_hat = limit_transform_to_reference(z[:, -1], t, 0.0)
    for lam in LAMBDAS:
        est, _ = empirical_laplace(t_hat, lam)
        checks.within(f"gamma=0 T-hat Laplace lambda={lam:g}", est, limit_laplace_T(lam), 0.02, f"t={int(t)}")
    checks.in_range("gamma=0 nu-hat", _nu_hat(times, z, budget, 0.0), 0.47, 0.53)
    _l_of_k_checks(0.0, budget, checks, "gamma=0", limit_laplace_T)


def _regime_bold(budget: Budget, checks: CheckList) -> None:
    gamma = 0.25
    nu = predict_regime(gamma).nu
    times, z = _checkpoint_ensemble(gamma, budget)
    checks.in_range("gamma=1/4 nu-hat", _nu_hat(times, z, budget, gamma), 0.61, 0.72, "target 2/3")

    predicted = moment_prediction(1.5, gamma)
    log_t = np.log(times)
    picks = sorted({int(np.argmin(np.abs(log_t - math.log(times[-1] / 10 ** d)))) for d in (2, 1, 0)})
    gaps = [abs(float(np.mean((z[:, i] / times[i] ** nu) ** 1.5)) - predicted) for i in picks]
    final = moment_estimate(z[:, -1] / times[-1] ** nu, 1.5, rng=stream(budget.seed, 2000, VERIFY_STREAMS),
                            resamples=200)
    checks.within("gamma=1/4 E[(z/t^nu)^1.5]", final.estimate, predicted, 0.15 * predicted,
                  f"t={int(times[-1])}, 15%, bootstrap SE {final.stderr:.4f}")
    checks.holds("gamma=1/4 moment gap shrinks over the last decades",
                 len(gaps) == 3 and gaps[0] > gaps[1] > gaps[2],
                 "gaps " + ", ".join(f"{g:.4f}" for g in gaps))

    z_final = _l_of_k_checks(gamma, budget, checks, "gamma=1/4", limit_laplace_L)
    k = budget.k_max
    target = (0.75) ** (4.0 / 3.0)
    checks.within("gamma=1/4 median z(k)/k^(4/3)", float(np.median(z_final)) / k ** (4.0 / 3.0), target,
                  0.1 * target, f"k={k}, 10%")


def _regime_boundary(budget: Budget, checks: CheckList) -> None:
    times, z = _checkpoint_ensemble(0.5, budget)
    t = float(times[-1])
    z_t = z[:, -1]
    l_hat = limit_transform_to_reference(z_t, t, 0.5)
    checks.below("gamma=1/2 KS of L-hat vs Levy", ks_distance(l_hat, levy_cdf_extended), 0.05, f"t={int(t)}")
    target = 1.0 / (4.0 * LEVY_MEDIAN + 1.0)
    checks.within("gamma=1/2 median z/t", float(np.median(z_t)) / t, target, 0.1 * target, "10%")


def _regime_generic(gamma: float, budget: Budget, checks: CheckList) -> None:
    times, z = _checkpoint_ensemble(gamma, budget)
    nu = predict_regime(gamma).nu
    checks.within(f"gamma={gamma:g} nu-hat", _nu_hat(times, z, budget, gamma), nu, 0.06)


def regimes_suite(budget: Budget, checks: CheckList, gamma: Optional[float] = None) -> None:
    gammas = DEFAULT_REGIME_GAMMAS if gamma is None else (gamma,)
    for g in gammas:
        if not 0.0 <= g < 1.0:
            raise ValueError(f"regimes suite needs 0 <= gamma < 1, got {g}")
    for g in gammas:
        if g == 0.0:
            _regime_ssrw(budget, checks)
        elif g == 0.25:
            _regime_bold(budget, checks)
        elif g == 0.5:
            _regime_boundary(budget, checks)
        else:
            _regime_generic(g, budget, checks)


# ============================================================================
# equivalence
# ============================================================================

def _run_text(config: RunConfig) -> str:
    return serialize(make_header(config), run_config(config), config.format)


def equivalence_suite(budget: Budget, checks: CheckList, gamma: Optional[float] = None) -> None:
    n, t = budget.equivalence_samples, budget.equivalence_t
    direct = run_ensemble(0.25, t, [t], n, budget.seed, threads=budget.threads).z.astype(float)
    cycles = cycles_to_checkpoints(
        run_cycle_ensemble(0.25, n, budget.seed + 1, t_max=t, threads=budget.threads), [t]
    ).z.astype(float)
    checks.below("direct vs cycles z(t), gamma=1/4", ks_two_sample(direct, cycles),
                 ks_critical_value(n, n), f"t={t}, {n} samples each, 1% critical value")

    same = True
    for engine, horizon in ((Engine.DIRECT, {"t_max": 1000}), (Engine.CYCLES, {"k_max": 50})):
        texts = [
            _run_text(RunConfig(
                gamma=0.25, engine=engine, n_walkers=64, checkpoints="geometric:10:10",
                master_seed=budget.seed, threads=threads, **horizon,
            ))
            for threads in (1, 2)
        ]
        same = same and texts[0] == texts[1]
    checks.holds("output independent of threads", same, "direct and cycles, threads 1 vs 2")

    t_ssrw = max(t, 100)
    ssrw = run_ensemble(0.0, t_ssrw, sorted({100, t_ssrw}), n, budget.seed + 2, threads=budget.threads)
    x = ssrw.x[ssrw.t == 100]
    support = np.arange(-100, 101, 2)

    def binomial_cdf(v):
        return stats.binom.cdf(np.floor((np.asarray(v) + 100) / 2), 100, 0.5)

    checks.below("gamma=0 x(100) vs binomial", ks_distance_discrete(x, binomial_cdf, support),
                 ks_critical_value(n), "1% critical value")

    z_ssrw = ssrw.z[ssrw.t == t_ssrw].astype(float)
    bold_mean, bold_se = _mean_se(direct)
    ssrw_mean, ssrw_se = _mean_se(z_ssrw)
    margin = SIGMAS * math.hypot(bold_se, ssrw_se)
    checks.holds("bold walker outruns SSRW", bold_mean - ssrw_mean > margin,
                 f"mean z {bold_mean:.2f} vs {ssrw_mean:.2f}, 3 SE = {margin:.2f}")

    scaled_mean, scaled_se = _mean_se(z_ssrw / math.sqrt(t_ssrw))
    inv_sqrt_t = 1.0 / np.sqrt(sample_T(_rng(budget, _T_EQUIV), size=budget.samples))
    ref_mean, ref_se = _mean_se(inv_sqrt_t)
    checks.within("E[z/sqrt(t)] = E[T^-1/2], gamma=0", scaled_mean, ref_mean,
                  SIGMAS * math.hypot(scaled_se, ref_se) + 0.02, "3 SE + 0.02 finite-t allowance")

    draws = np.concatenate([
        stream(budget.seed, i, namespace).integers(0, 2 ** 63, size=1_000_000 // 30, dtype=np.uint64)
        for namespace in (WALKER_STREAMS, BOOTSTRAP_STREAMS, VERIFY_STREAMS)
        for i in range(10)
    ])
    checks.holds("no collisions across streams", np.unique(draws).size == draws.size,
                 f"{draws.size} draws from 30 streams")


# ============================================================================
# Entry point
# ============================================================================

SUITES: Dict[str, Callable[[Budget, CheckList, Optional[float]], None]] = {
    "analytic": analytic_suite,
    "oracle": oracle_suite,
    "journeys": journeys_suite,
    "regimes": regimes_suite,
    "equivalence": equivalence_suite,
}


def run_suite(name: str, budget: Optional[Budget] = None, gamma: Optional[float] = None) -> SuiteReport:
    """
    Run one named suite.

    Raises:
        ValueError: unknown suite, or a gamma the suite cannot use.
    """
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    budget = budget or Budget.from_settings()
    checks = CheckList(budget.tolerance_scale)
    started = time.perf_counter()
    SUITES[name](budget, checks, gamma)
    return SuiteReport(suite=name, checks=checks.results, seconds=time.perf_counter() - started)
