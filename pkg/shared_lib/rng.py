"""
Counter-based random streams keyed by (master seed, walker id).

Every walker (or cycle replica) owns a Philox stream whose key is derived
from ``SeedSequence(master_seed, spawn_key=(namespace, stream_id))``. Draw j of the
stream depends only on (master_seed, stream_id, j), never on which process
ran the walker or in which order, so ensembles are bit-identical under any
partitioning.
"""

from typing import Iterable, List

import numpy as np

# Spawn-key namespaces so that walker streams, bootstrap streams and
# verification streams built from one master seed never coincide.
WALKER_STREAMS = 0
BOOTSTRAP_STREAMS = 1
VERIFY_STREAMS = 2


def stream(master_seed: int, stream_id: int, namespace: int = WALKER_STREAMS) -> np.random.Generator:
    """Independent generator for one stream of a master seed."""
    if stream_id < 0:
        raise ValueError(f"stream id must be >= 0, got {stream_id}")
    seq = np.random.SeedSequence(master_seed, spawn_key=(namespace, stream_id))
    return np.random.Generator(np.random.Philox(seq))


def walker_stream(master_seed: int, walker_id: int) -> np.random.Generator:
    """Generator of one walker."""
    return stream(master_seed, walker_id, WALKER_STREAMS)


def walker_streams(master_seed: int, walker_ids: Iterable[int]) -> List[np.random.Generator]:
    return [walker_stream(master_seed, int(w)) for w in walker_ids]
