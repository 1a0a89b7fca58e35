"""
Ensembles of walkers and cycle replicas.

Walker i always draws from ``walker_stream(master_seed, i)``; the ensemble is
split into contiguous id ranges that may run in separate processes and are
merged back in id order, so the output never depends on ``threads``.
"""

import concurrent.futures
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np

from shared_lib.models import Engine, RunConfig
from shared_lib.rng import walker_streams

from .engines.cycles import reconstruct_z, simulate_cycles
from .engines.direct import simulate_block
from .engines.records import CheckpointTable, CycleTable

ProgressCallback = Callable[[int, int], None]

# Walkers stepped together in one lockstep block
BLOCK_WALKERS = 4096


def partition(n_walkers: int, parts: int) -> List[Tuple[int, int]]:
    """Split walker ids [0, n_walkers) into at most ``parts`` contiguous ranges."""
    if n_walkers < 1:
        raise ValueError(f"n_walkers must be >= 1, got {n_walkers}")
    parts = max(1, min(parts, n_walkers))
    edges = np.linspace(0, n_walkers, parts + 1).round().astype(int)
    return [(int(lo), int(hi)) for lo, hi in zip(edges[:-1], edges[1:]) if hi > lo]


def _direct_range(gamma: float, t_max: int, checkpoints: Sequence[int],
                  master_seed: int, lo: int, hi: int) -> CheckpointTable:
    tables = []
    for start in range(lo, hi, BLOCK_WALKERS):
        ids = list(range(start, min(hi, start + BLOCK_WALKERS)))
        tables.append(simulate_block(gamma, t_max, checkpoints, walker_streams(master_seed, ids), ids))
    return CheckpointTable.concat(tables)


def _cycles_range(gamma: float, k_max: Optional[int], t_max: Optional[int],
                  master_seed: int, lo: int, hi: int) -> CycleTable:
    ids = range(lo, hi)
    return CycleTable.concat(
        simulate_cycles(gamma, rng, k_max=k_max, t_max=t_max, walker_id=i)
        for i, rng in zip(ids, walker_streams(master_seed, ids))
    )


def _execute(task: Callable, ranges: List[Tuple[int, int]], args: tuple, threads: int,
             progress: Optional[ProgressCallback]) -> list:
    results = {}
    if threads <= 1 or len(ranges) == 1:
        for idx, (lo, hi) in enumerate(ranges):
            results[idx] = task(*args, lo, hi)
            if progress:
                progress(len(results), len(ranges))
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=threads) as executor:
            futures = {executor.submit(task, *args, lo, hi): idx for idx, (lo, hi) in enumerate(ranges)}
            for future in concurrent.futures.as_completed(futures):
                results[futures[future]] = future.result()
                if progress:
                    progress(len(results), len(ranges))
    return [results[idx] for idx in sorted(results)]


def run_ensemble(
    gamma: float,
    t_max: int,
    checkpoints: Sequence[int],
    n_walkers: int,
    master_seed: int,
    threads: int = 1,
    progress: Optional[ProgressCallback] = None,
) -> CheckpointTable:
    """
    Direct simulation of ``n_walkers`` independent walkers.

    Returns:
        CheckpointTable in walker-id then time order, identical for any ``threads``
    """
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    ranges = partition(n_walkers, threads)
    args = (gamma, t_max, list(checkpoints), master_seed)
    return CheckpointTable.concat(_execute(_direct_range, ranges, args, threads, progress))


def run_cycle_ensemble(
    gamma: float,
    n_walkers: int,
    master_seed: int,
    k_max: Optional[int] = None,
    t_max: Optional[int] = None,
    threads: int = 1,
    progress: Optional[ProgressCallback] = None,
) -> CycleTable:
    """Cycle engine over ``n_walkers`` replicas, with the direct engine's seeding contract."""
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    if (k_max is None) == (t_max is None):
        raise ValueError("give exactly one of k_max / t_max")
    ranges = partition(n_walkers, threads)
    args = (gamma, k_max, t_max, master_seed)
    return CycleTable.concat(_execute(_cycles_range, ranges, args, threads, progress))


def cycles_to_checkpoints(cycles: CycleTable, checkpoints: Sequence[int]) -> CheckpointTable:
    """Reconstruct every replica's maximum at the checkpoint times (x is not tracked)."""
    times = np.unique(np.asarray(list(checkpoints), dtype=np.int64))
    ids, z_rows = [], []
    for walker_id, rows in cycles.groups():
        ids.append(walker_id)
        z_rows.append(reconstruct_z(rows, times))
    ids = np.asarray(ids, dtype=np.int64)
    return CheckpointTable(
        walker_id=np.repeat(ids, times.size),
        t=np.tile(times, ids.size),
        z=np.concatenate(z_rows).astype(np.int64),
    )


def run_config(config: RunConfig, progress: Optional[ProgressCallback] = None) -> Union[CheckpointTable, CycleTable]:
    """Run whatever a RunConfig describes."""
    if config.engine == Engine.DIRECT:
        return run_ensemble(
            config.gamma, config.t_max, config.schedule(), config.n_walkers,
            config.master_seed, threads=config.threads, progress=progress,
        )
    cycles = run_cycle_ensemble(
        config.gamma, config.n_walkers, config.master_seed,
        k_max=config.k_max, t_max=config.t_max, threads=config.threads, progress=progress,
    )
    if config.k_max is not None:
        return cycles
    return cycles_to_checkpoints(cycles, config.schedule())
