"""
Simple symmetric random walk paths, simulated in chunks.

Steps come from random bytes (eight steps per byte) and positions from a
cumulative sum; a chunk that ends inside the interval is continued by a
chunk twice as long, up to MAX_CHUNK steps.
"""

from typing import Optional, Tuple

import numpy as np

MIN_CHUNK = 64
# Cap on steps materialised at once, per walk and for the lockstep helper
MAX_CHUNK = 1 << 22
MAX_BLOCK = 1 << 22


def random_steps(rng: np.random.Generator, count: int) -> np.ndarray:
    """``count`` independent +-1 steps as int8."""
    bits = np.unpackbits(np.frombuffer(rng.bytes((count + 7) // 8), dtype=np.uint8))[:count]
    return (2 * bits.astype(np.int8) - 1)


def _check_interval(lower: int, upper: int, start: int) -> None:
    if not lower < start < upper:
        raise ValueError(f"start {start} must lie strictly inside ({lower}, {upper})")


def _first_chunk(lower: int, upper: int, start: int) -> int:
    # mean exit time from start is (start - lower)(upper - start)
    mean = (start - lower) * (upper - start)
    return int(max(MIN_CHUNK, min(mean, MAX_CHUNK)))


def ssrw_exit(
    lower: int, upper: int, start: int, rng: np.random.Generator, max_steps: Optional[int] = None
) -> Tuple[int, Optional[int]]:
    """
    Exit time and exit site of one walk from the open interval (lower, upper).

    Returns:
        (tau, site) with site equal to lower or upper; (max_steps, None) when
        the walk is still inside after ``max_steps`` steps
    """
    _check_interval(lower, upper, start)
    if max_steps is not None and max_steps < 0:
        raise ValueError(f"max_steps must be >= 0, got {max_steps}")
    position = start
    elapsed = 0
    chunk = _first_chunk(lower, upper, start)
    while max_steps is None or elapsed < max_steps:
        width = chunk if max_steps is None else min(chunk, max_steps - elapsed)
        path = position + np.cumsum(random_steps(rng, width), dtype=np.int64)
        out = np.flatnonzero((path <= lower) | (path >= upper))
        if out.size:
            first = int(out[0])
            return elapsed + first + 1, int(path[first])
        position = int(path[-1])
        elapsed += width
        chunk = min(2 * chunk, MAX_CHUNK)
    return max_steps, None


def ssrw_exit_times(
    lower: int, upper: int, start: int, size: int, rng: np.random.Generator
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Exit times and sites of ``size`` independent walks, advanced in lockstep.

    Returns:
        (taus, sites) as int64 arrays
    """
    _check_interval(lower, upper, start)
    if size < 1:
        raise ValueError(f"size must be >= 1, got {size}")
    taus = np.zeros(size, dtype=np.int64)
    sites = np.zeros(size, dtype=np.int64)
    positions = np.full(size, start, dtype=np.int64)
    alive = np.arange(size)
    elapsed = 0
    chunk = _first_chunk(lower, upper, start)
    while alive.size:
        width = int(max(1, min(chunk, MAX_BLOCK // alive.size)))
        steps = random_steps(rng, alive.size * width).reshape(alive.size, width)
        paths = positions[alive, None] + np.cumsum(steps, axis=1, dtype=np.int64)
        out = (paths <= lower) | (paths >= upper)
        hit = out.any(axis=1)
        first = out.argmax(axis=1)

        done = alive[hit]
        taus[done] = elapsed + first[hit] + 1
        sites[done] = paths[hit, first[hit]]

        positions[alive[~hit]] = paths[~hit, -1]
        alive = alive[~hit]
        elapsed += width
        chunk = min(2 * chunk, MAX_CHUNK)
    return taus, sites
