"""Tests for KS distances and the chi-square test against a pmf."""

import numpy as np
import pytest
from scipy import stats

from analysis.goodness_of_fit import (
    chi_square_against_pmf,
    ks_critical_value,
    ks_distance,
    ks_distance_discrete,
    ks_two_sample,
)


def exp_cdf(x):
    return 1.0 - np.exp(-np.maximum(x, 0.0))


class TestKS:

    def test_matches_scipy(self):
        samples = np.random.default_rng(1).exponential(size=500)
        expected = stats.kstest(samples, "expon").statistic
        assert ks_distance(samples, exp_cdf) == pytest.approx(expected, abs=1e-12)

    def test_degenerate_sample(self):
        # all mass at 0 against Exp(1): F_n jumps to 1 where F is 0
        assert ks_distance(np.zeros(10), exp_cdf) == pytest.approx(1.0)

    def test_good_fit_is_below_critical_value(self):
        samples = np.random.default_rng(2).exponential(size=5000)
        assert ks_distance(samples, exp_cdf) < ks_critical_value(5000)

    def test_invalid_cdf(self):
        with pytest.raises(ValueError):
            ks_distance([1.0, 2.0], lambda x: 2.0 * np.ones_like(x))
        with pytest.raises(ValueError):
            ks_distance([1.0, 2.0], lambda x: 1.0 - exp_cdf(x))
        with pytest.raises(ValueError):
            ks_distance([], exp_cdf)

    def test_two_sample(self):
        a = np.random.default_rng(3).normal(size=100)
        assert ks_two_sample(a, a.copy()) == 0.0
        assert ks_two_sample(a, a + 10.0) == pytest.approx(1.0)

    def test_discrete(self):
        n, p = 20, 0.5
        samples = np.random.default_rng(4).binomial(n, p, size=4000)
        distance = ks_distance_discrete(samples, lambda k: stats.binom.cdf(k, n, p), support=np.arange(n + 1))
        assert distance < ks_critical_value(4000)
        shifted = ks_distance_discrete(samples + 3, lambda k: stats.binom.cdf(k, n, p))
        assert shifted > 0.2

    def test_critical_values(self):
        assert ks_critical_value(100) == pytest.approx(0.1628)
        assert ks_critical_value(100, 100) == pytest.approx(1.628 * np.sqrt(0.02))
        assert ks_critical_value(100, c_alpha=1.36) == pytest.approx(0.136)
        with pytest.raises(ValueError):
            ks_critical_value(0)


class TestChiSquare:

    PMF = np.array([0.5, 0.25, 0.125, 0.0625])  # geometric(1/2) with tail 1/16

    def test_correct_law_passes(self):
        samples = np.random.default_rng(5).geometric(0.5, size=20_000)
        result = chi_square_against_pmf(samples, self.PMF, tail=0.0625)
        assert result.passed()
        assert result.bins == 5 and result.dof == 4

    def test_wrong_law_fails(self):
        samples = np.random.default_rng(6).geometric(0.3, size=20_000)
        assert not chi_square_against_pmf(samples, self.PMF, tail=0.0625).passed()

    def test_small_bins_are_pooled(self):
        samples = np.random.default_rng(7).geometric(0.5, size=40)
        result = chi_square_against_pmf(samples, self.PMF, tail=0.0625)
        assert result.bins < 5

    def test_bad_samples(self):
        with pytest.raises(ValueError):
            chi_square_against_pmf([], self.PMF)
        with pytest.raises(ValueError):
            chi_square_against_pmf([0, 1], self.PMF)
