"""Deterministic scan order for bounded integer searches.

Candidates are visited by increasing max-norm and, within a shell,
lexicographically with ``0 < -1 < 1 < -2 < 2 < ...`` in each coordinate.
Every box search in the package returns the first witness in this
order, so results do not depend on how the work is split up.
"""
from __future__ import annotations

import itertools
from typing import Iterator, Sequence

import numpy as np


def value_key(v: int) -> int:
    return 2 * v if v >= 0 else -2 * v - 1


def ordered_values(bound: int) -> list[int]:
    out = [0]
    for r in range(1, bound + 1):
        out += [-r, r]
    return out


def scan_key(t: Sequence[int]) -> tuple:
    return (max((abs(v) for v in t), default=0), tuple(value_key(v) for v in t))


def box_order(bound: int, dim: int) -> Iterator[tuple[int, ...]]:
    """All integer tuples with max-norm <= bound, in scan order."""
    vals = ordered_values(bound)
    for r in range(bound + 1):
        sub = vals[:2 * r + 1]
        for t in itertools.product(sub, repeat=dim):
            if max((abs(v) for v in t), default=0) == r:
                yield t


def box_grid(bound: int, dim: int) -> np.ndarray:
    """All tuples of the box as rows of an int64 array (unsorted)."""
    r = np.arange(-bound, bound + 1, dtype=np.int64)
    grids = np.meshgrid(*([r] * dim), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1)


def first_in_scan_order(rows: np.ndarray) -> int:
    """Index of the row that comes first in scan order."""
    if len(rows) == 0:
        raise ValueError("no candidates")
    keys = np.where(rows >= 0, 2 * rows, -2 * rows - 1)
    norm = np.abs(rows).max(axis=1)
    order = np.lexsort(tuple(keys[:, j] for j in range(rows.shape[1] - 1, -1, -1)) + (norm,))
    return int(order[0])
