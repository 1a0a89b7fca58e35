"""Tests for the verification suites and report rendering."""

import json
import math

import pytest

from evaluation.report import render_markdown, render_text, to_json, write_report
from evaluation.suites import SUITES, Budget, CheckList, run_suite
from shared_lib.config import get_settings
from shared_lib.models import SuiteReport

TINY = dict(
    samples=2_000, large_samples=20_000, walkers=50, t_max=2_000, k_max=20,
    cycle_replicas=50, equivalence_samples=100, equivalence_t=200,
)


class TestBudget:

    def test_defaults_come_from_settings(self):
        budget = Budget.from_settings()
        settings = get_settings()
        assert budget.samples == settings.verify_samples
        assert budget.cycle_replicas == settings.verify_cycle_replicas
        assert budget.tolerance_scale == settings.verify_tolerance_scale

    def test_overrides(self):
        budget = Budget.from_settings(samples=10, seed=None, tolerance_scale=2.0)
        assert budget.samples == 10
        assert budget.seed == get_settings().default_seed
        assert budget.tolerance_scale == 2.0

    def test_rejects_unknown_and_bad_scale(self):
        with pytest.raises(ValueError, match="unknown"):
            Budget.from_settings(horizon=5)
        with pytest.raises(ValueError):
            Budget.from_settings(tolerance_scale=0.0)


class TestCheckList:

    def test_within_scales_tolerance(self):
        checks = CheckList(scale=2.0)
        checks.within("a", 1.15, 1.0, 0.1)
        checks.within("b", 1.25, 1.0, 0.1)
        assert [c.passed for c in checks.results] == [True, False]
        assert checks.results[0].tolerance == pytest.approx(0.2)

    def test_non_finite_fails(self):
        checks = CheckList()
        checks.within("nan", math.nan, 0.0, 1.0)
        checks.at_least("p", math.nan, 0.01)
        assert not any(c.passed for c in checks.results)

    def test_below_and_range(self):
        checks = CheckList()
        checks.below("ks", 0.005, 0.01)
        checks.in_range("nu", 0.62, 0.6, 0.7)
        checks.in_range("nu out", 0.75, 0.6, 0.7)
        assert [c.passed for c in checks.results] == [True, True, False]

    def test_unscaled_checks(self):
        checks = CheckList(scale=100.0)
        checks.holds("yes", True)
        checks.holds("no", False)
        checks.at_least("p", 0.005, 0.01)
        assert [c.passed for c in checks.results] == [True, False, False]


class TestRunSuite:

    def test_analytic_passes(self):
        report = run_suite("analytic", Budget.from_settings(**TINY))
        assert report.passed, render_text([report])
        assert len(report.checks) >= 15
        assert report.seconds > 0

    def test_unknown_suite(self):
        with pytest.raises(ValueError, match="unknown suite"):
            run_suite("everything")

    @pytest.mark.parametrize("gamma", [-0.5, 1.0, 1.5])
    def test_regimes_gamma_range(self, gamma):
        with pytest.raises(ValueError):
            run_suite("regimes", Budget.from_settings(**TINY), gamma=gamma)

    def test_suite_names(self):
        assert sorted(SUITES) == ["analytic", "equivalence", "journeys", "oracle", "regimes"]

    @pytest.mark.slow
    def test_oracle_exact_checks_on_small_budget(self):
        report = run_suite("oracle", Budget.from_settings(**TINY))
        by_name = {c.name: c for c in report.checks}
        assert by_name["DP pmf total mass"].passed
        assert by_name["DP pmf at z=2"].passed
        assert by_name["DP pmf Laplace vs closed form"].passed
        assert all(math.isfinite(c.measured) for c in report.checks)

    @pytest.mark.slow
    def test_equivalence_determinism_on_small_budget(self):
        report = run_suite("equivalence", Budget.from_settings(**TINY))
        identical = [c for c in report.checks if "threads" in c.name]
        assert identical and all(c.passed for c in identical)


class TestReport:

    @pytest.fixture
    def reports(self):
        checks = CheckList()
        checks.within("first", 1.0, 1.0, 0.1, "exact")
        checks.within("second", 2.0, 1.0, 0.1)
        return [SuiteReport(suite="demo", checks=checks.results, seconds=0.5)]

    def test_text(self, reports):
        text = render_text(reports)
        assert "== demo (0.5 s) ==" in text
        assert "demo: FAIL (1 of 2 checks)" in text
        assert "exact" in text

    def test_markdown_and_json(self, reports, tmp_path):
        assert "| first | 1 | 1 | 0.1 | PASS | exact |" in render_markdown(reports)
        assert json.loads(to_json(reports))[0]["suite"] == "demo"
        md = write_report(tmp_path / "r" / "report.md", reports)
        assert md.read_text().startswith("# Verification report")
        js = write_report(tmp_path / "report.json", reports)
        assert json.loads(js.read_text())[0]["checks"][1]["passed"] is False
