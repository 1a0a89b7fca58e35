"""Tests for empirical Laplace transforms and bootstrapped moments."""

import math

import numpy as np
import pytest

from analysis.estimators import (
    bootstrap_mean,
    empirical_laplace,
    empirical_laplace_grid,
    laplace_estimates,
    moment_estimate,
)
from analysis.reference_samplers import sample_levy

SIGMAS = 3.0


class TestEmpiricalLaplace:

    def test_constant_samples(self):
        estimate, stderr = empirical_laplace([2.0, 2.0, 2.0], 1.0)
        assert estimate == pytest.approx(math.exp(-2.0))
        assert stderr == 0.0

    def test_exponential_samples(self):
        # E exp(-X) = 1/2 for X ~ Exp(1)
        samples = np.random.default_rng(1).exponential(size=50_000)
        estimate, stderr = empirical_laplace(samples, 1.0)
        assert abs(estimate - 0.5) < SIGMAS * stderr

    def test_zero_lambda(self):
        assert empirical_laplace([5.0, 7.0], 0.0) == (1.0, 0.0)

    def test_bad_inputs(self):
        with pytest.raises(ValueError):
            empirical_laplace([], 1.0)
        with pytest.raises(ValueError):
            empirical_laplace([1.0], -0.5)

    def test_grid_is_nonincreasing(self):
        samples = np.random.default_rng(2).exponential(size=1000)
        grid = empirical_laplace_grid(samples, [0.25, 0.5, 1.0, 2.0, 4.0])
        assert all(b <= a for a, b in zip(grid.values, grid.values[1:]))
        assert len(grid.stderr) == 5

    def test_rows_carry_prediction(self):
        samples = np.random.default_rng(3).exponential(size=20_000)
        rows = laplace_estimates(samples, [0.5, 2.0], predict=lambda lam: 1.0 / (1.0 + lam))
        for row in rows:
            assert row.predicted == pytest.approx(1.0 / (1.0 + row.lam))
            assert abs(row.estimate - row.predicted) < SIGMAS * row.stderr
        assert laplace_estimates(samples, [1.0])[0].predicted is None


class TestBootstrap:

    def test_single_value(self):
        assert bootstrap_mean([4.0], np.random.default_rng(0)) == (0.0, 4.0, 4.0)

    def test_stderr_matches_normal_theory(self):
        values = np.random.default_rng(4).normal(size=2000)
        stderr, low, high = bootstrap_mean(values, np.random.default_rng(5), resamples=2000)
        assert stderr == pytest.approx(values.std(ddof=1) / math.sqrt(values.size), rel=0.1)
        assert low < values.mean() < high

    def test_reproducible_for_a_seed(self):
        values = np.arange(100.0)
        first = bootstrap_mean(values, np.random.default_rng(6), resamples=200)
        second = bootstrap_mean(values, np.random.default_rng(6), resamples=200)
        assert first == second


class TestMomentEstimate:

    def test_constant(self):
        estimate = moment_estimate([2.0] * 10, 2.0, resamples=50)
        assert estimate.estimate == pytest.approx(4.0)
        assert estimate.stderr == pytest.approx(0.0)
        assert estimate.ci_low == pytest.approx(4.0) and estimate.ci_high == pytest.approx(4.0)

    def test_fractional_order(self):
        samples = np.random.default_rng(7).exponential(size=20_000)
        estimate = moment_estimate(samples, 0.5, rng=np.random.default_rng(8), resamples=300, predicted=1.0)
        # E X^{1/2} = Gamma(3/2) for X ~ Exp(1)
        assert abs(estimate.estimate - math.gamma(1.5)) < SIGMAS * estimate.stderr
        assert estimate.predicted == 1.0

    def test_transformed_levy_moment(self):
        # nu = 2/3, q = 3/2: E[((3/4)^{4/3} L^{-2/3})^{3/2}] = 9/16
        nu = 2.0 / 3.0
        limit = (1.0 / (2.0 * nu)) ** (2.0 * nu) * sample_levy(np.random.default_rng(9), size=10 ** 6) ** -nu
        estimate = moment_estimate(limit, 1.5, rng=np.random.default_rng(10), predicted=0.5625)
        assert abs(estimate.estimate - 0.5625) < SIGMAS * estimate.stderr
        assert estimate.predicted == 0.5625

    def test_vanishing_order_gives_one(self):
        samples = np.random.default_rng(12).exponential(size=1000)
        estimate = moment_estimate(samples, 1e-12, resamples=50)
        assert estimate.estimate == pytest.approx(1.0, abs=1e-9)

    def test_order_must_be_positive(self):
        with pytest.raises(ValueError):
            moment_estimate([1.0], 0.0)
