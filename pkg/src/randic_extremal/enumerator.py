"""Isomorph-free generation of graphs with given order, size and degree cap.

Graphs are grown one vertex at a time by canonical augmentation: a child is
kept only if the vertex just added is, up to automorphism, the one that the
child's canonical deletion rule would remove.  Every isomorphism class is
therefore produced exactly once, from exactly one parent class, and no
history has to be stored.  Degree caps prune whole subtrees because deleting
a vertex never raises a degree.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from . import _kernels
from .graph_core import Graph

MAX_ENUM_VERTICES = 16


class EnumerationError(ValueError):
    """Raised for an inconsistent or out-of-range :class:`EnumSpec`."""


@dataclass(frozen=True)
class EnumSpec:
    n: int
    m: int
    max_degree: Optional[int] = None
    connected_only: bool = True

    def __post_init__(self):
        if self.n < 0:
            raise EnumerationError("n must be non-negative")
        if self.n > MAX_ENUM_VERTICES:
            raise EnumerationError(f"n={self.n} exceeds the enumeration ceiling {MAX_ENUM_VERTICES}")
        if not 0 <= self.m <= self.n * (self.n - 1) // 2:
            raise EnumerationError(f"m={self.m} impossible for n={self.n}")
        if self.connected_only and self.n >= 1 and self.m < self.n - 1:
            raise EnumerationError(f"a connected graph on {self.n} vertices needs at least {self.n - 1} edges")
        if self.max_degree is not None and self.max_degree < 0:
            raise EnumerationError("max_degree must be non-negative")

    @property
    def cap(self) -> int:
        return self.n if self.max_degree is None else min(self.max_degree, self.n)

    @classmethod
    def cyclic(cls, n: int, k: int, max_degree: Optional[int] = None) -> EnumSpec:
        """Connected graphs on ``n`` vertices with cyclomatic number ``k``."""
        return cls(n, n + k - 1, max_degree, True)


def _degree_range(spec: EnumSpec, j: int, e: int) -> tuple[int, int]:
    # degree of the vertex added to a j-vertex graph with e edges
    n, m, cap = spec.n, spec.m, spec.cap
    if j == 0:
        return 0, 0
    lo_future = 1 if spec.connected_only else 0
    remaining = n - (j + 1)
    room_after = sum(min(i, cap) for i in range(j + 1, n))
    lo = max(lo_future, m - e - room_after)
    hi = min(j, cap, m - e - remaining * lo_future)
    return lo, hi


def _children(spec: EnumSpec, rows: np.ndarray, j: int, e: int):
    lo, hi = _degree_range(spec, j, e)
    if lo > hi:
        return np.zeros((0, j + 1), np.int64), np.zeros(0, np.int64)
    return _kernels.extend(rows, j, lo, hi, spec.cap, spec.connected_only)


def _walk(spec: EnumSpec, rows: np.ndarray, j: int, e: int) -> Iterator[np.ndarray]:
    """Yield batches (2-D arrays) of finished graphs below one node."""
    kids, degs = _children(spec, rows, j, e)
    if j + 1 == spec.n:
        keep = (e + degs) == spec.m
        if keep.any():
            yield kids[keep]
        return
    for child, d in zip(kids, degs):
        yield from _walk(spec, child, j + 1, e + int(d))


def _frontier(spec: EnumSpec, depth: int) -> list[tuple[np.ndarray, int, int]]:
    # all nodes at the given vertex count, in depth-first order
    nodes = [(np.zeros(0, np.int64), 0, 0)]
    for _ in range(depth):
        nxt = []
        for rows, j, e in nodes:
            kids, degs = _children(spec, rows, j, e)
            nxt.extend((child, j + 1, e + int(d)) for child, d in zip(kids, degs))
        nodes = nxt
    return nodes


def _walk_task(args):
    spec, rows, j, e = args
    batches = list(_walk(spec, rows, j, e))
    if not batches:
        return np.zeros((0, spec.n), np.int64)
    return np.concatenate(batches)


def iter_batches(spec: EnumSpec, workers: int = 1) -> Iterator[np.ndarray]:
    """Stream the classes of ``spec`` as 2-D arrays of canonical adjacency rows.

    The concatenated stream is identical for every ``workers`` value: work is
    split at a fixed depth and results are merged in submission order.
    """
    if spec.n == 0:
        if spec.m == 0:
            yield np.zeros((1, 0), np.int64)
        return
    if workers <= 1 or spec.n < 6:
        yield from _walk(spec, np.zeros(0, np.int64), 0, 0)
        return
    depth = spec.n - 3
    nodes = _frontier(spec, depth)
    tasks = [(spec, rows, j, e) for rows, j, e in nodes]
    with multiprocessing.get_context("fork").Pool(workers) as pool:
        for batch in pool.imap(_walk_task, tasks, chunksize=8):
            if len(batch):
                yield batch


def enumerate_graphs(spec: EnumSpec, workers: int = 1) -> Iterator[Graph]:
    """One canonically labelled representative per isomorphism class."""
    for batch in iter_batches(spec, workers):
        for row in batch:
            yield Graph.from_array(row)


def count_graphs(spec: EnumSpec, workers: int = 1) -> int:
    return sum(len(b) for b in iter_batches(spec, workers))
