"""Simulation engines: direct stepping and journey decomposition."""

from .records import CheckpointTable, CycleTable
from .walks import random_steps, ssrw_exit, ssrw_exit_times
from .direct import step, simulate_block, run_walker, trajectory
from .journeys import sample_m, sample_n, sample_active_run, sample_active_runs, wald_identity_check
from .cycles import simulate_cycles, run_cycles, reconstruct_z, l_of_k, time_decomposition

__all__ = [
    "CheckpointTable",
    "CycleTable",
    "random_steps",
    "ssrw_exit",
    "ssrw_exit_times",
    "step",
    "simulate_block",
    "run_walker",
    "trajectory",
    "sample_m",
    "sample_n",
    "sample_active_run",
    "sample_active_runs",
    "wald_identity_check",
    "simulate_cycles",
    "run_cycles",
    "reconstruct_z",
    "l_of_k",
    "time_decomposition",
]
