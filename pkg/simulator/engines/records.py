"""Columnar containers for engine output, convertible to pydantic records."""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from shared_lib.models import CheckpointRecord, CycleRecord


@dataclass
class CheckpointTable:
    """Checkpoint rows in walker-id then time order."""
    walker_id: np.ndarray
    t: np.ndarray
    z: np.ndarray
    x: Optional[np.ndarray] = None

    def __len__(self) -> int:
        return int(self.t.size)

    def times(self) -> np.ndarray:
        return np.unique(self.t)

    def walker_ids(self) -> np.ndarray:
        return np.unique(self.walker_id)

    def at(self, t: int) -> np.ndarray:
        """z of every walker at checkpoint t, in walker-id order."""
        mask = self.t == t
        if not mask.any():
            raise ValueError(f"no checkpoint at t={t}")
        return self.z[mask]

    def records(self) -> List[CheckpointRecord]:
        xs = self.x if self.x is not None else [None] * len(self)
        return [
            CheckpointRecord(walker_id=int(w), t=int(t), z=int(z), x=None if x is None else int(x))
            for w, t, z, x in zip(self.walker_id, self.t, self.z, xs)
        ]

    @classmethod
    def from_records(cls, records: Sequence[CheckpointRecord]) -> "CheckpointTable":
        has_x = bool(records) and all(r.x is not None for r in records)
        return cls(
            walker_id=np.array([r.walker_id for r in records], dtype=np.int64),
            t=np.array([r.t for r in records], dtype=np.int64),
            z=np.array([r.z for r in records], dtype=np.int64),
            x=np.array([r.x for r in records], dtype=np.int64) if has_x else None,
        )

    @classmethod
    def concat(cls, tables: Iterable["CheckpointTable"]) -> "CheckpointTable":
        """Merge partition outputs and order rows by walker id, then time."""
        tables = list(tables)
        walker_id = np.concatenate([tb.walker_id for tb in tables])
        t = np.concatenate([tb.t for tb in tables])
        order = np.lexsort((t, walker_id))
        with_x = all(tb.x is not None for tb in tables)
        return cls(
            walker_id=walker_id[order],
            t=t[order],
            z=np.concatenate([tb.z for tb in tables])[order],
            x=np.concatenate([tb.x for tb in tables])[order] if with_x else None,
        )


@dataclass
class CycleTable:
    """Cycle rows in replica then cycle-index order."""
    walker_id: np.ndarray
    k: np.ndarray
    t_k: np.ndarray
    z_k: np.ndarray
    m: np.ndarray
    n: np.ndarray
    initial: np.ndarray
    truncated: np.ndarray

    _COLUMNS = ("walker_id", "k", "t_k", "z_k", "m", "n", "initial", "truncated")

    def __len__(self) -> int:
        return int(self.k.size)

    def groups(self) -> Iterator[Tuple[int, "CycleTable"]]:
        """(walker_id, rows) per replica; rows must be in walker-id order."""
        ids, starts = np.unique(self.walker_id, return_index=True)
        ends = np.append(starts[1:], len(self))
        for walker_id, lo, hi in zip(ids, starts, ends):
            yield int(walker_id), CycleTable(**{name: getattr(self, name)[lo:hi] for name in self._COLUMNS})

    def walker_ids(self) -> np.ndarray:
        return np.unique(self.walker_id)

    def records(self) -> List[CycleRecord]:
        return [
            CycleRecord(
                walker_id=int(w), k=int(k), t_k=int(tk), z_k=int(zk), m=int(m), n=int(n),
                initial=bool(init), truncated=bool(trunc),
            )
            for w, k, tk, zk, m, n, init, trunc in zip(
                self.walker_id, self.k, self.t_k, self.z_k, self.m, self.n,
                self.initial, self.truncated,
            )
        ]

    @classmethod
    def from_records(cls, records: Sequence[CycleRecord]) -> "CycleTable":
        columns = {
            name: np.array([getattr(r, name) for r in records],
                           dtype=bool if name in ("initial", "truncated") else np.int64)
            for name in cls._COLUMNS
        }
        return cls(**columns)

    @classmethod
    def concat(cls, tables: Iterable["CycleTable"]) -> "CycleTable":
        tables = list(tables)
        merged = {name: np.concatenate([getattr(tb, name) for tb in tables]) for name in cls._COLUMNS}
        order = np.lexsort((merged["k"], merged["walker_id"]))
        return cls(**{name: column[order] for name, column in merged.items()})
