"""
Journey-decomposition engine.

The walk is iterated one cycle at a time: a leaving step, a lazy journey of
m(z) steps back to a maximum, then an active run of n(z) outward steps, so

    t_{k+1} = t_k + 1 + m(z_k) + n(z_k),    z_{k+1} = z_k + n(z_k),

starting from t_1 = z_1 = 1 + n(1). Record k carries the (m, n) of the
cycle that ends at (t_k, z_k); record 1 is the initial active journey.
"""

from typing import List, Optional

import numpy as np

from shared_lib.models import CycleRecord

from .journeys import sample_active_run, sample_m
from .records import CycleTable


def simulate_cycles(
    gamma: float,
    rng: np.random.Generator,
    k_max: Optional[int] = None,
    t_max: Optional[int] = None,
    walker_id: int = 0,
) -> CycleTable:
    """
    Iterate the cycle recurrences until k_max records or time t_max.

    With t_max, the last cycle is cut at the horizon: its active run stops at
    t_max, or n = 0 when the lazy journey already reaches t_max (that journey
    is itself simulated no further than t_max). The record is flagged
    truncated, so z(t) is exact for every t <= t_max.

    Returns:
        CycleTable of one replica
    """
    if (k_max is None) == (t_max is None):
        raise ValueError("give exactly one of k_max / t_max")
    if k_max is not None and k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    if t_max is not None and t_max < 1:
        raise ValueError(f"t_max must be >= 1, got {t_max}")

    rows = []

    cap = None if t_max is None else t_max - 1
    n, truncated = sample_active_run(1, gamma, rng, max_steps=cap)
    t_k = z_k = 1 + n
    rows.append((1, t_k, z_k, 0, n, truncated))

    k = 1
    while True:
        if k_max is not None and k >= k_max:
            break
        if t_max is not None and t_k >= t_max:
            break
        m = sample_m(z_k, rng, max_steps=None if t_max is None else max(1, t_max - t_k - 1))
        lazy_end = t_k + 1 + m
        if t_max is not None and lazy_end >= t_max:
            n, truncated = 0, True
        else:
            cap = None if t_max is None else t_max - lazy_end
            n, truncated = sample_active_run(z_k, gamma, rng, max_steps=cap)
        t_k = lazy_end + n
        z_k = z_k + n
        k += 1
        rows.append((k, t_k, z_k, m, n, truncated))

    columns = np.asarray([row[:5] for row in rows], dtype=np.int64)
    initial = np.zeros(len(rows), dtype=bool)
    initial[0] = True
    return CycleTable(
        walker_id=np.full(len(rows), walker_id, dtype=np.int64),
        k=columns[:, 0],
        t_k=columns[:, 1],
        z_k=columns[:, 2],
        m=columns[:, 3],
        n=columns[:, 4],
        initial=initial,
        truncated=np.asarray([row[5] for row in rows], dtype=bool),
    )


def run_cycles(
    gamma: float,
    rng: np.random.Generator,
    k_max: Optional[int] = None,
    t_max: Optional[int] = None,
    walker_id: int = 0,
) -> List[CycleRecord]:
    """Cycle records of one replica (see ``simulate_cycles``)."""
    return simulate_cycles(gamma, rng, k_max=k_max, t_max=t_max, walker_id=walker_id).records()


def _as_table(cycles) -> CycleTable:
    if isinstance(cycles, CycleTable):
        return cycles
    return CycleTable.from_records(list(cycles))


def reconstruct_z(cycles, t):
    """
    Maximum at time(s) t rebuilt from one replica's cycles.

    Inside a cycle the maximum stays at z_{k-1} for the leaving step and the
    lazy journey (1 + m steps), then grows by one per active step:
    z(t) = z_{k-1} + max(0, t - t_{k-1} - 1 - m_k). Before t_1, z(t) = t.
    """
    table = _as_table(cycles)
    if len(table) == 0:
        raise ValueError("no cycles to reconstruct from")
    t_arr = np.asarray(t, dtype=np.int64)
    if np.any(t_arr < 1) or np.any(t_arr > table.t_k[-1]):
        raise ValueError(f"t must lie in [1, {int(table.t_k[-1])}]")
    j = np.searchsorted(table.t_k, t_arr, side="left")
    prev = np.maximum(j - 1, 0)
    later = table.z_k[prev] + np.maximum(0, t_arr - table.t_k[prev] - 1 - table.m[j])
    out = np.where(j == 0, t_arr, later)
    return int(out) if out.ndim == 0 else out


def l_of_k(cycles) -> float:
    """L(k) = (sum of the k-1 lazy exit times) / k^2 over the recorded cycles."""
    table = _as_table(cycles)
    k = len(table)
    if k < 2:
        raise ValueError(f"L(k) needs at least 2 cycles, got {k}")
    return float(table.m[1:].sum()) / float(k) ** 2


def time_decomposition(cycles) -> dict:
    """
    Split t(k) into z(k) + k^2 L(k) + (k - 1).

    The identity is exact for every recorded sequence; the returned dict holds
    the three parts and their sum next to the recorded t_k.
    """
    table = _as_table(cycles)
    k = len(table)
    lazy = float(table.m[1:].sum())
    z_k = int(table.z_k[-1])
    return {
        "k": k,
        "t_k": int(table.t_k[-1]),
        "z_k": z_k,
        "lazy_time": lazy,
        "leaving_steps": k - 1,
        "total": z_k + lazy + (k - 1),
    }
