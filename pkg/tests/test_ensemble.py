"""Tests for ensemble partitioning, seeding and engine dispatch."""

import numpy as np
import pytest

from shared_lib.models import RunConfig
from shared_lib.rng import walker_streams
from simulator.engines.direct import simulate_block
from simulator.engines.records import CheckpointTable, CycleTable
from simulator.ensemble import (
    cycles_to_checkpoints,
    partition,
    run_config,
    run_cycle_ensemble,
    run_ensemble,
)

SEED = 314


def _same(a, b) -> bool:
    return all(np.array_equal(getattr(a, f), getattr(b, f)) for f in ("walker_id", "t", "z"))


class TestPartition:

    def test_covers_every_walker_once(self):
        ranges = partition(103, 4)
        ids = [i for lo, hi in ranges for i in range(lo, hi)]
        assert ids == list(range(103))

    def test_never_more_parts_than_walkers(self):
        assert len(partition(3, 8)) == 3

    def test_rejects_empty_ensemble(self):
        with pytest.raises(ValueError):
            partition(0, 2)


class TestRunEnsemble:

    def test_matches_per_walker_blocks(self):
        table = run_ensemble(0.25, 500, [10, 500], 6, SEED)
        for i in range(6):
            alone = simulate_block(0.25, 500, [10, 500], walker_streams(SEED, [i]), [i])
            assert np.array_equal(table.z[table.walker_id == i], alone.z)

    def test_threads_do_not_change_output(self):
        one = run_ensemble(0.25, 800, [100, 800], 20, SEED, threads=1)
        two = run_ensemble(0.25, 800, [100, 800], 20, SEED, threads=2)
        assert _same(one, two) and np.array_equal(one.x, two.x)

    def test_progress_callback(self):
        calls = []
        run_ensemble(0.0, 50, [50], 4, SEED, threads=1, progress=lambda d, n: calls.append((d, n)))
        assert calls == [(1, 1)]


class TestCycleEnsemble:

    def test_threads_do_not_change_output(self):
        one = run_cycle_ensemble(0.25, 12, SEED, k_max=20, threads=1)
        two = run_cycle_ensemble(0.25, 12, SEED, k_max=20, threads=3)
        for name in CycleTable._COLUMNS:
            assert np.array_equal(getattr(one, name), getattr(two, name))
        assert len(one) == 12 * 20

    def test_needs_one_horizon(self):
        with pytest.raises(ValueError):
            run_cycle_ensemble(0.25, 2, SEED)

    def test_reconstructed_checkpoints(self):
        cycles = run_cycle_ensemble(0.25, 5, SEED, t_max=2000)
        table = cycles_to_checkpoints(cycles, [10, 100, 2000])
        assert table.x is None
        assert table.walker_id.tolist() == [i for i in range(5) for _ in range(3)]
        z = table.z.reshape(5, 3)
        assert np.all(np.diff(z, axis=1) >= 0)
        assert np.all(z[:, 0] <= 10)


class TestRunConfig:

    def test_direct(self):
        config = RunConfig(gamma=0.0, t_max=1000, n_walkers=3, checkpoints="geometric:10:10", master_seed=SEED)
        table = run_config(config)
        assert isinstance(table, CheckpointTable)
        assert table.times().tolist() == [10, 100, 1000]

    def test_cycles_by_time(self):
        config = RunConfig(gamma=0.25, engine="cycles", t_max=1000, n_walkers=3,
                           checkpoints="list:10,1000", master_seed=SEED)
        table = run_config(config)
        assert isinstance(table, CheckpointTable) and len(table) == 6

    def test_cycles_by_index(self):
        config = RunConfig(gamma=0.25, engine="cycles", k_max=7, n_walkers=2, master_seed=SEED)
        table = run_config(config)
        assert isinstance(table, CycleTable) and len(table) == 14
