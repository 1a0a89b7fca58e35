"""Tests for the step-by-step engine."""

import math

import numpy as np
import pytest

from shared_lib.models import WalkerState
from shared_lib.rng import walker_stream, walker_streams
from simulator.engines.direct import run_walker, simulate_block, step, trajectory

SEED = 2024


class TestStep:

    def test_first_step_is_free(self):
        state = step(WalkerState(gamma=0.25), np.random.default_rng(0))
        assert state.t == 1 and abs(state.x) == 1 and state.z == 1

    @pytest.mark.parametrize("start, target, expected", [
        (WalkerState(x=4, z=4, t=4, gamma=0.5), 5, 2.0 / 3.0),
        (WalkerState(x=-4, z=4, t=6, gamma=0.5), -5, 2.0 / 3.0),
        (WalkerState(x=2, z=5, t=8, gamma=0.5), 3, 0.5),
    ])
    def test_step_frequency(self, start, target, expected):
        rng = np.random.default_rng(41)
        draws = 20_000
        hits = sum(step(start, rng).x == target for _ in range(draws))
        se = math.sqrt(expected * (1.0 - expected) / draws)
        assert abs(hits / draws - expected) < 4.0 * se

    def test_trajectory_is_a_lattice_walk(self):
        states = trajectory(0.25, 500, walker_stream(SEED, 0))
        x = np.array([s.x for s in states])
        z = np.array([s.z for s in states])
        assert len(states) == 501
        assert np.all(np.abs(np.diff(x)) == 1)
        assert np.array_equal(z, np.maximum.accumulate(np.abs(x)))


class TestSimulateBlock:

    def test_block_matches_single_steps(self):
        checkpoints = [1, 10, 100, 300]
        records = run_walker(0.25, 300, checkpoints, walker_stream(SEED, 3), walker_id=3)
        states = trajectory(0.25, 300, walker_stream(SEED, 3))
        for record in records:
            assert record.walker_id == 3
            assert (record.z, record.x) == (states[record.t].z, states[record.t].x)

    def test_walker_does_not_depend_on_block(self):
        ids = [0, 1, 2, 3]
        together = simulate_block(0.4, 2000, [50, 2000], walker_streams(SEED, ids), ids)
        for i in ids:
            alone = simulate_block(0.4, 2000, [50, 2000], walker_streams(SEED, [i]), [i])
            mask = together.walker_id == i
            assert np.array_equal(together.z[mask], alone.z)
            assert np.array_equal(together.x[mask], alone.x)

    def test_empty_schedule_records_horizon(self):
        table = simulate_block(0.0, 50, [], walker_streams(SEED, [0]), [0])
        assert table.t.tolist() == [50]

    def test_schedule_must_fit_horizon(self):
        with pytest.raises(ValueError):
            simulate_block(0.0, 50, [51], walker_streams(SEED, [0]), [0])

    def test_streams_must_match_ids(self):
        with pytest.raises(ValueError):
            simulate_block(0.0, 50, [50], walker_streams(SEED, [0, 1]), [0])

    def test_parity_and_bounds(self):
        ids = list(range(200))
        table = simulate_block(0.0, 100, [100], walker_streams(SEED, ids), ids)
        assert np.all(table.x % 2 == 0)
        assert np.all(table.z >= np.abs(table.x))
        assert np.all(table.z <= 100)


class TestRegimes:

    def test_very_bold_walker_is_ballistic(self):
        ids = list(range(50))
        table = simulate_block(5.0, 1000, [1000], walker_streams(SEED, ids), ids)
        assert np.median(table.z) / 1000 > 0.9

    def test_timorous_walker_is_slow(self):
        ids = list(range(100))
        timorous = simulate_block(-1.0, 10_000, [10_000], walker_streams(SEED, ids), ids)
        ssrw = simulate_block(0.0, 10_000, [10_000], walker_streams(SEED, ids), ids)
        assert np.median(timorous.z) < 50
        assert np.median(timorous.z) < np.median(ssrw.z)
