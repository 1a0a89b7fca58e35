"""Tests for per-checkpoint summaries and the cycle-file analysis rows."""

import math

import numpy as np
import pytest

from analysis.summary import (
    cycle_growth,
    cycle_laplace,
    ecdf_table,
    growth_curve,
    laplace_table,
    reference_name,
    summarize_checkpoint,
    summarize_ensemble,
)
from shared_lib.config import get_settings
from shared_lib.rng import walker_stream
from simulator.engines.cycles import simulate_cycles
from simulator.engines.records import CheckpointTable, CycleTable
from simulator.ensemble import run_cycle_ensemble
from simulator.models.growth import deterministic_z_of_k
from simulator.models.limit_laws import limit_laplace_T, moment_prediction

LAMBDAS = (0.5, 1.0, 2.0)


@pytest.fixture(autouse=True)
def small_settings(monkeypatch):
    monkeypatch.setenv("T_SAMPLER_RESOLUTION", "20")
    monkeypatch.setenv("BOOTSTRAP_RESAMPLES", "100")
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


def constant_table(times=(100, 10_000), walkers=5) -> CheckpointTable:
    """Walkers whose maximum is sqrt(t) at every checkpoint."""
    times = np.asarray(times, dtype=np.int64)
    z = np.rint(np.sqrt(times)).astype(np.int64)
    return CheckpointTable(
        walker_id=np.repeat(np.arange(walkers), times.size),
        t=np.tile(times, walkers),
        z=np.tile(z, walkers),
    )


class TestReferenceName:

    @pytest.mark.parametrize("gamma, name", [(0.0, "T"), (0.25, "L"), (0.5, "L"), (0.75, None), (-1.0, None)])
    def test_names(self, gamma, name):
        assert reference_name(gamma) == name


class TestSummarizeCheckpoint:

    def test_bold_constant_sample(self):
        # nu = 2/3: L = t / ((4/3)^2 z^{3/2}) = 10^4 / (16/9 * 10^3)
        summary = summarize_checkpoint([100] * 8, 10_000, 0.25, LAMBDAS, qs=(1.0,))
        assert summary.nu == pytest.approx(2.0 / 3.0)
        assert summary.median_z == summary.mean_z == 100.0
        assert summary.reference == "L"
        moment = summary.moments[0]
        assert moment.estimate == pytest.approx(100.0 / 10_000 ** (2.0 / 3.0))
        assert moment.predicted == pytest.approx(moment_prediction(1.0, 0.25))
        reference = 10_000 / (16.0 / 9.0 * 1000.0)
        for row in summary.laplace:
            assert row.estimate == pytest.approx(math.exp(-row.lam * reference))
            assert row.stderr == 0.0
        assert summary.ecdf(reference + 1e-9) == 1.0 and summary.ecdf(reference - 1e-3) == 0.0
        assert summary.ks_critical == pytest.approx(get_settings().ks_c_alpha / math.sqrt(8))

    def test_ssrw_uses_exit_time_reference(self):
        summary = summarize_checkpoint([100] * 8, 10_000, 0.0, LAMBDAS)
        assert summary.reference == "T"
        assert [row.predicted for row in summary.laplace] == pytest.approx([limit_laplace_T(lam) for lam in LAMBDAS])
        assert summary.laplace[1].estimate == pytest.approx(math.exp(-1.0))
        assert summary.moments[0].predicted is None

    def test_no_reference_outside_zero_to_half(self):
        summary = summarize_checkpoint([50] * 4, 100, 0.75)
        assert summary.reference is None
        assert summary.laplace == [] and summary.ks_statistic is None
        assert summary.nu == 1.0

    def test_empty(self):
        with pytest.raises(ValueError):
            summarize_checkpoint([], 10, 0.25)


class TestEnsembleRows:

    def test_summaries_per_checkpoint(self):
        summaries = summarize_ensemble(constant_table(), 0.25, LAMBDAS, qs=(1.0, 2.0))
        assert [s.t for s in summaries] == [100, 10_000]
        assert all(s.n_samples == 5 for s in summaries)

        growth = growth_curve(summaries)
        assert growth[1]["log10_t"] == pytest.approx(4.0)
        assert growth[1]["log10_median_z"] == pytest.approx(2.0)

        rows = laplace_table(summaries)
        assert len(rows) == 2 * len(LAMBDAS)
        assert {row["reference"] for row in rows} == {"L"}

        ecdf = ecdf_table(summaries[-1], points=20)
        assert len(ecdf) == 20
        assert all(0.0 <= row["ecdf"] <= 1.0 for row in ecdf)

    def test_ecdf_only_for_levy_reference(self):
        summary = summarize_checkpoint([100] * 4, 10_000, 0.0)
        assert ecdf_table(summary) == []

    def test_bootstrap_is_seeded(self):
        rng = np.random.default_rng(0)
        z = rng.integers(50, 200, size=40)
        first = summarize_checkpoint(z, 10_000, 0.25, seed=3)
        second = summarize_checkpoint(z, 10_000, 0.25, seed=3)
        assert first.moments == second.moments


class TestCycleRows:

    @pytest.fixture(scope="class")
    def cycles(self) -> CycleTable:
        return run_cycle_ensemble(0.25, 30, 5, k_max=100)

    def test_growth_rows(self, cycles):
        rows = cycle_growth(cycles, 0.25)
        assert [row["k"] for row in rows] == [1, 2, 3, 6, 10, 18, 32, 56, 100]
        last = rows[-1]
        assert last["predicted_z"] == pytest.approx(deterministic_z_of_k(100, 0.25))
        assert last["median_z"] >= 100
        assert cycle_growth(cycles, 1.5)[-1]["predicted_z"] is None

    def test_laplace_rows(self, cycles):
        rows = cycle_laplace(cycles, 0.25, LAMBDAS)
        assert min(row["k"] for row in rows) == 2
        assert len(rows) == 8 * len(LAMBDAS)
        assert all(0.0 <= row["empirical"] <= 1.0 for row in rows)
        assert all(row["predicted"] is not None for row in rows)

    def test_unequal_replicas(self):
        table = CycleTable.concat([
            simulate_cycles(0.25, walker_stream(5, 0), k_max=10, walker_id=0),
            simulate_cycles(0.25, walker_stream(5, 1), k_max=12, walker_id=1),
        ])
        with pytest.raises(ValueError):
            cycle_growth(table, 0.25)
