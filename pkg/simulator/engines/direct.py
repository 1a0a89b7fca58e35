"""
Step-by-step simulation of the walk.

Away from the maximum, or at t = 0, the step is +1 when the step's uniform
draw is below 1/2 and -1 otherwise. On the maximum (|x| = z > 0) the step is
outward when the draw is below p(z). Draw j of a walker's stream always
decides step j, so a walker evolves identically whether it is stepped alone
or inside a block of walkers.
"""

from typing import List, Optional, Sequence

import numpy as np

from shared_lib.models import CheckpointRecord, WalkerState

from ..models.step_model import probability_cache
from .records import CheckpointTable

# Upper bound on the uniforms buffered per block (walkers x steps)
MAX_BUFFERED_DRAWS = 1 << 22
MAX_BLOCK_STEPS = 1 << 16


def _sigma(x: int, z: int, u: float, gamma: float) -> int:
    if z == 0 or abs(x) < z:
        return 1 if u < 0.5 else -1
    outward = 1 if x > 0 else -1
    return outward if u < probability_cache(gamma)(z) else -outward


def step(state: WalkerState, rng: np.random.Generator) -> WalkerState:
    """Advance one walker by one step."""
    sigma = _sigma(state.x, state.z, rng.random(), state.gamma)
    x = state.x + sigma
    return WalkerState(x=x, z=max(state.z, abs(x)), t=state.t + 1, gamma=state.gamma)


def _check_schedule(t_max: int, checkpoints: Sequence[int]) -> np.ndarray:
    if t_max < 1:
        raise ValueError(f"t_max must be >= 1, got {t_max}")
    times = np.unique(np.asarray(list(checkpoints), dtype=np.int64))
    if times.size and (times[0] < 1 or times[-1] > t_max):
        raise ValueError(f"checkpoints must lie in [1, {t_max}]")
    if times.size == 0:
        times = np.array([t_max], dtype=np.int64)
    return times


def simulate_block(
    gamma: float,
    t_max: int,
    checkpoints: Sequence[int],
    rngs: Sequence[np.random.Generator],
    walker_ids: Sequence[int],
) -> CheckpointTable:
    """
    Run a block of walkers in lockstep and record (z, x) at the checkpoints.

    Args:
        gamma: Model parameter
        t_max: Number of steps
        checkpoints: Recording times in [1, t_max]; empty records t_max only
        rngs: One stream per walker
        walker_ids: Walker ids matching ``rngs``

    Returns:
        CheckpointTable in walker-id then time order
    """
    if len(rngs) != len(walker_ids) or not rngs:
        raise ValueError("need one stream per walker and at least one walker")
    times = _check_schedule(t_max, checkpoints)
    cache = probability_cache(gamma)

    n = len(rngs)
    x = np.zeros(n, dtype=np.int64)
    z = np.zeros(n, dtype=np.int64)
    z_out = np.empty((n, times.size), dtype=np.int64)
    x_out = np.empty((n, times.size), dtype=np.int64)

    width = int(max(1, min(MAX_BLOCK_STEPS, MAX_BUFFERED_DRAWS // n)))
    uniforms = np.empty((n, width))
    t = 0
    next_cp = 0
    while t < t_max:
        w = int(min(width, t_max - t))
        for i, rng in enumerate(rngs):
            uniforms[i, :w] = rng.random(w)
        free = np.where(uniforms[:, :w] < 0.5, 1, -1)
        for j in range(w):
            sigma = free[:, j]
            if t > 0:
                on_max = np.flatnonzero(np.abs(x) == z)
                if on_max.size:
                    outward = np.sign(x[on_max])
                    take = uniforms[on_max, j] < cache(z[on_max])
                    sigma = sigma.copy()
                    sigma[on_max] = np.where(take, outward, -outward)
            x += sigma
            np.maximum(z, np.abs(x), out=z)
            t += 1
            if next_cp < times.size and times[next_cp] == t:
                z_out[:, next_cp] = z
                x_out[:, next_cp] = x
                next_cp += 1

    ids = np.asarray(walker_ids, dtype=np.int64)
    return CheckpointTable(
        walker_id=np.repeat(ids, times.size),
        t=np.tile(times, n),
        z=z_out.ravel(),
        x=x_out.ravel(),
    )


def run_walker(
    gamma: float,
    t_max: int,
    checkpoints: Sequence[int],
    rng: np.random.Generator,
    walker_id: int = 0,
) -> List[CheckpointRecord]:
    """Simulate one walker from the origin for t_max steps."""
    return simulate_block(gamma, t_max, checkpoints, [rng], [walker_id]).records()


def trajectory(gamma: float, t_max: int, rng: np.random.Generator,
               start: Optional[WalkerState] = None) -> List[WalkerState]:
    """Every state of one walker up to t_max, built with ``step``."""
    state = start or WalkerState(gamma=gamma)
    states = [state]
    while state.t < t_max:
        state = step(state, rng)
        states.append(state)
    return states
