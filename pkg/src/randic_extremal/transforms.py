"""Five local graph rewrites and their exact effect on the Randić index.

Site anchors by kind:

* ``T1``: ``(w, (w, p), (w, q))``.  Two pendant paths hang from the hub ``w``;
  the path starting at ``p`` is detached and appended to the leaf end of the
  path starting at ``q``.
* ``T2``: ``(x, y, (x, u), (y, v))``.  The pendant path at ``x`` (starting at
  ``u``) moves to the leaf end of the pendant path at ``y`` (starting at ``v``).
* ``T3``: ``((x, y),)``.  The edge is subdivided by a new vertex ``n``.
* ``T4``: ``(v1, v2, v3, v4, u1)``.  Edge ``v4 u1`` becomes ``v2 u1``.
* ``T5``: ``(x1, x2, x3, x4, x5, x6, w)``.  Edge ``x2 w`` becomes ``x5 w``.

A pendant path is a maximal chain of degree-2 vertices ending in a leaf; a
lone leaf counts as a path of one vertex.  ``T4`` and ``T5`` placements whose
edge swap would disconnect a connected graph are not reported as sites.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .exact_radical import RadicalValue
from .graph_core import Graph, is_connected
from .randic import randic_exact

KINDS = ("T1", "T2", "T3", "T4", "T5")


class TransformError(ValueError):
    """Raised when a site does not validate against the graph."""


@dataclass(frozen=True)
class TransformSite:
    kind: str
    anchors: tuple

    def __post_init__(self):
        kind = self.kind.upper()
        if kind not in KINDS:
            raise TransformError(f"unknown transformation kind {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "anchors", _freeze(self.anchors))

    def __str__(self) -> str:
        return f"{self.kind} {_fmt(self.anchors)}"


def _freeze(x):
    if isinstance(x, (list, tuple)):
        return tuple(_freeze(a) for a in x)
    return int(x)


def _fmt(x) -> str:
    if isinstance(x, tuple):
        return "(" + ",".join(_fmt(a) for a in x) + ")"
    return str(x)


# -- pendant paths ----------------------------------------------------------


def pendant_paths(g: Graph) -> list[tuple[int, tuple[int, ...]]]:
    """``(hub, path)`` pairs; ``path`` runs from the vertex next to the hub to the leaf.

    Only paths ending at a vertex of degree >= 3 are reported.
    """
    deg = g.degrees()
    out = []
    for leaf in range(g.n):
        if deg[leaf] != 1:
            continue
        chain = [leaf]
        prev, cur = leaf, g.neighbors(leaf)[0]
        while deg[cur] == 2:
            chain.append(cur)
            a, b = g.neighbors(cur)
            prev, cur = cur, (b if a == prev else a)
        if deg[cur] >= 3:
            out.append((cur, tuple(reversed(chain))))
    out.sort()
    return out


def _paths_by_hub(g: Graph) -> dict[int, list[tuple[int, ...]]]:
    hubs: dict[int, list[tuple[int, ...]]] = {}
    for hub, path in pendant_paths(g):
        hubs.setdefault(hub, []).append(path)
    return hubs


# -- site discovery ---------------------------------------------------------


def _t1_sites(g: Graph) -> list[TransformSite]:
    out = []
    for w, paths in sorted(_paths_by_hub(g).items()):
        for p, q in combinations(paths, 2):
            out.append(TransformSite("T1", (w, (w, p[0]), (w, q[0]))))
    return out


def _t2_sites(g: Graph) -> list[TransformSite]:
    out = []
    all_paths = pendant_paths(g)
    for (x, qpath), (y, ppath) in permutations(all_paths, 2):
        if x == y:
            continue
        # degrees in the host graph with both paths removed
        gone = set(qpath) | set(ppath)

        def host_deg(v):
            return sum(1 for u in g.neighbors(v) if u not in gone)

        if host_deg(x) < 2 or host_deg(y) < 2:
            continue
        if any(host_deg(v) < 2 for v in g.neighbors(x) if v not in gone):
            continue
        out.append(TransformSite("T2", (x, y, (x, qpath[0]), (y, ppath[0]))))
    out.sort(key=lambda s: s.anchors)
    return out


def _t3_sites(g: Graph) -> list[TransformSite]:
    return [TransformSite("T3", (e,)) for e in g.edges()]


def _stays_connected(g: Graph, drop: tuple[int, int], add: tuple[int, int]) -> bool:
    # a bridge swap may cut the graph; such placements are not sites
    return not is_connected(g) or is_connected(_rewire(g, drop, add))


def _t4_sites(g: Graph) -> list[TransformSite]:
    deg = g.degrees()
    delta = max(deg, default=0)
    if delta < 4:
        return []
    hubs = [v for v in range(g.n) if deg[v] == delta]
    out = []
    for v2 in range(g.n):
        if deg[v2] != 2:
            continue
        a, b = g.neighbors(v2)
        for v1, v3 in ((a, b), (b, a)):
            if deg[v1] < 2 or deg[v3] < 3:
                continue
            for v4 in hubs:
                if v4 in (v1, v2, v3):
                    continue
                for u1 in g.neighbors(v4):
                    if u1 in (v1, v2, v3):
                        continue
                    if not _stays_connected(g, (v4, u1), (v2, u1)):
                        continue
                    out.append(TransformSite("T4", (v1, v2, v3, v4, u1)))
    out.sort(key=lambda s: s.anchors)
    return out


def _t5_sites(g: Graph) -> list[TransformSite]:
    deg = g.degrees()
    tails = []
    for x5 in range(g.n):
        if deg[x5] != 2:
            continue
        a, b = g.neighbors(x5)
        for x4, x6 in ((a, b), (b, a)):
            if deg[x4] == 4 and deg[x6] in (1, 2):
                tails.append((x4, x5, x6))
    out = []
    for x2 in range(g.n):
        if deg[x2] != 3:
            continue
        nb = g.neighbors(x2)
        for w in nb:
            x1, x3 = sorted(v for v in nb if v != w)
            if deg[x1] != 3 or deg[x3] != 3:
                continue
            for x4, x5, x6 in tails:
                names = (x1, x2, x3, x4, x5, x6, w)
                if len(set(names)) < 7 or g.has_edge(x5, w):
                    continue
                if not _stays_connected(g, (x2, w), (x5, w)):
                    continue
                out.append(TransformSite("T5", names))
    out.sort(key=lambda s: s.anchors)
    return out


_FINDERS = {"T1": _t1_sites, "T2": _t2_sites, "T3": _t3_sites, "T4": _t4_sites, "T5": _t5_sites}


@lru_cache(maxsize=4096)
def _cached_sites(g: Graph, kind: str) -> tuple[TransformSite, ...]:
    return tuple(_FINDERS[kind](g))


def find_sites(g: Graph, kind: str) -> list[TransformSite]:
    """All sites of ``kind`` in ``g`` in a fixed label order."""
    kind = kind.upper()
    if kind not in _FINDERS:
        raise TransformError(f"unknown transformation kind {kind!r}")
    return list(_cached_sites(g, kind))


# -- rewriting --------------------------------------------------------------


def _chain_from(g: Graph, hub: int, start: int) -> tuple[int, ...]:
    for h, path in pendant_paths(g):
        if h == hub and path[0] == start:
            return path
    raise TransformError(f"no pendant path starting at {start} hangs from {hub}")


def _rewire(g: Graph, drop: tuple[int, int], add: tuple[int, int]) -> Graph:
    return g.remove_edge(*drop).add_edge(*add)


def apply_transform(g: Graph, site: TransformSite) -> Graph:
    if site not in _cached_sites(g, site.kind):
        raise TransformError(f"site {site} does not validate against the graph")
    a = site.anchors
    if site.kind == "T1":
        w, (_, p), (_, q) = a
        q_leaf = _chain_from(g, w, q)[-1]
        return _rewire(g, (w, p), (q_leaf, p))
    if site.kind == "T2":
        x, y, (_, u), (_, v) = a
        p_leaf = _chain_from(g, y, v)[-1]
        return _rewire(g, (x, u), (p_leaf, u))
    if site.kind == "T3":
        ((x, y),) = a
        return g.remove_edge(x, y).add_vertex((x, y))
    if site.kind == "T4":
        v1, v2, v3, v4, u1 = a
        return _rewire(g, (v4, u1), (v2, u1))
    x1, x2, x3, x4, x5, x6, w = a
    return _rewire(g, (x2, w), (x5, w))


def delta_randic(g: Graph, site: TransformSite) -> RadicalValue:
    """``R(result) - R(g)`` computed exactly."""
    return randic_exact(apply_transform(g, site)) - randic_exact(g)
