"""Simple undirected graphs on vertices ``0..n-1`` stored as adjacency bitsets."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

import numpy as np

from . import _kernels
from .graph6 import parse_graph6, write_graph6

MAX_VERTICES = 64

__all__ = [
    "Graph",
    "DegreeProfile",
    "EdgeTypeSignature",
    "GraphError",
    "MAX_VERTICES",
    "canonical_code",
    "canonical_form",
    "automorphism_orbits",
    "cyclomatic_number",
    "degree_profile",
    "edge_type_signature",
    "is_connected",
    "parse_graph6",
    "write_graph6",
]


class GraphError(ValueError):
    """Raised for invalid graph construction or edits."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``rows[v]`` is an integer bitmask of the neighbours of ``v``.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise GraphError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= n")
            if (row >> v) & 1:
                raise GraphError(f"self-loop at {v}")
            r = row
            while r:
                b = r & -r
                u = b.bit_length() - 1
                if not (self.rows[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
                r ^= b

    # -- construction -------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} outside 0..{n - 1}")
            if (rows[u] >> v) & 1:
                raise GraphError(f"repeated edge {u}-{v}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_array(cls, arr) -> Graph:
        # numpy int64 rows; bit 63 comes back negative
        rows = tuple(int(x) & 0xFFFFFFFFFFFFFFFF for x in arr)
        return cls(len(rows), rows)

    @classmethod
    def from_graph6(cls, text: str) -> Graph:
        n, edges = parse_graph6(text)
        return cls.from_edges(n, edges)

    def to_array(self) -> np.ndarray:
        out = np.zeros(self.n, dtype=np.int64)
        for i, r in enumerate(self.rows):
            out[i] = r - (1 << 64) if r >= 1 << 63 else r
        return out

    def to_graph6(self) -> str:
        return write_graph6(self.n, self.edges())

    # -- queries ------------------------------------------------------------

    @property
    def m(self) -> int:
        return sum(self.degrees()) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        out = []
        r = self.rows[v]
        while r:
            b = r & -r
            out.append(b.bit_length() - 1)
            r ^= b
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.neighbors(u) if u < v]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    # -- edits (each returns a new graph) -----------------------------------

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise GraphError(f"self-loop at {u}")
        if self.has_edge(u, v):
            raise GraphError(f"edge {u}-{v} already present")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise GraphError(f"edge {u}-{v} not present")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def add_vertex(self, neighbors: Iterable[int] = ()) -> Graph:
        """Append vertex ``n`` adjacent to ``neighbors``."""
        new = self.n
        rows = list(self.rows) + [0]
        for u in neighbors:
            rows[u] |= 1 << new
            rows[new] |= 1 << u
        return Graph(self.n + 1, tuple(rows))

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabelling must be a permutation of 0..n-1")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.n))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, g6={self.to_graph6()!r})"


class DegreeProfile(Mapping[int, int]):
    """Counts ``n_i`` of vertices of each degree ``i``."""

    def __init__(self, counts: Mapping[int, int]):
        self._counts = {int(i): int(c) for i, c in sorted(counts.items()) if c}

    def __getitem__(self, i: int) -> int:
        return self._counts.get(i, 0)

    def __iter__(self):
        return iter(self._counts)

    def __len__(self) -> int:
        return len(self._counts)

    def __eq__(self, other) -> bool:
        if isinstance(other, Mapping):
            return self._counts == {i: c for i, c in other.items() if c}
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._counts.items()))

    @property
    def n(self) -> int:
        return sum(self._counts.values())

    @property
    def delta(self) -> int:
        return max(self._counts, default=0)

    def __repr__(self) -> str:
        return f"DegreeProfile({self._counts})"


class EdgeTypeSignature(Mapping[tuple[int, int], int]):
    """Counts ``m_{i,j}`` of edges joining degree ``i`` to degree ``j``.

    Keys are normalised to ``(min, max)`` and zero counts are dropped, so
    ``{(4, 3): 4}`` and ``{(3, 4): 4, (2, 2): 0}`` compare equal.
    """

    def __init__(self, counts: Mapping[tuple[int, int], int]):
        merged: Counter = Counter()
        for (i, j), c in counts.items():
            if c < 0:
                raise GraphError(f"negative count for edge type {(i, j)}")
            merged[(min(i, j), max(i, j))] += c
        self._counts = {k: merged[k] for k in sorted(merged) if merged[k]}

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self._counts.get((min(i, j), max(i, j)), 0)

    def __iter__(self):
        return iter(self._counts)

    def __len__(self) -> int:
        return len(self._counts)

    def __eq__(self, other) -> bool:
        if isinstance(other, EdgeTypeSignature):
            return self._counts == other._counts
        if isinstance(other, Mapping):
            return self == EdgeTypeSignature(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.key())

    def key(self) -> tuple[tuple[tuple[int, int], int], ...]:
        return tuple(self._counts.items())

    @property
    def m(self) -> int:
        return sum(self._counts.values())

    def endpoint_counts(self) -> dict[int, int]:
        """Endpoint slots per degree; equals ``i * n_i`` for a real graph."""
        slots: Counter = Counter()
        for (i, j), c in self._counts.items():
            slots[i] += c
            slots[j] += c
        return dict(slots)

    def implied_profile(self) -> DegreeProfile:
        """Degree profile forced by the endpoint identity (isolated vertices excluded)."""
        counts = {}
        for i, slots in self.endpoint_counts().items():
            if slots % i:
                raise GraphError(f"{slots} endpoint slots cannot come from degree-{i} vertices")
            counts[i] = slots // i
        return DegreeProfile(counts)

    def __repr__(self) -> str:
        return f"EdgeTypeSignature({self._counts})"


def degree_profile(g: Graph) -> DegreeProfile:
    return DegreeProfile(Counter(g.degrees()))


def edge_type_signature(g: Graph) -> EdgeTypeSignature:
    deg = g.degrees()
    return EdgeTypeSignature(Counter((min(deg[u], deg[v]), max(deg[u], deg[v])) for u, v in g.edges()))


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            nxt |= g.rows[b.bit_length() - 1]
            f ^= b
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return seen == (1 << g.n) - 1


def cyclomatic_number(g: Graph) -> int:
    """``m - n + 1`` for a connected graph."""
    if not is_connected(g):
        raise GraphError("cyclomatic number is only defined for connected graphs")
    return g.m - g.n + 1


def _canon(g: Graph):
    return _kernels.canon_label(g.to_array(), g.n)


def canonical_form(g: Graph) -> Graph:
    """The canonically relabelled copy of ``g`` (equal iff isomorphic)."""
    _, _, code = _canon(g)
    return Graph.from_array(code)


def canonical_code(g: Graph) -> bytes:
    """Isomorphism-invariant total-order key: graph6 of the canonical form."""
    return canonical_form(g).to_graph6().encode("ascii")


def automorphism_orbits(g: Graph) -> list[int]:
    """``orbits[v]`` is the least vertex in the automorphism orbit of ``v``."""
    _, orbits, _ = _canon(g)
    return [int(x) for x in orbits]
