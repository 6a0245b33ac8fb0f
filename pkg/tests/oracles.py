"""Reference implementations that share no code with the package."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

import mpmath

mpmath.mp.dps = 60


def decode_graph6(text: str) -> tuple[int, set[tuple[int, int]]]:
    """Plain graph6 reader for n <= 62."""
    data = [ord(c) - 63 for c in text]
    n = data[0]
    assert 0 <= n <= 62
    bits = []
    for x in data[1:]:
        bits.extend((x >> (5 - i)) & 1 for i in range(6))
    edges = set()
    pos = 0
    for v in range(1, n):
        for u in range(v):
            if bits[pos]:
                edges.add((u, v))
            pos += 1
    return n, edges


@lru_cache(maxsize=None)
def _pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


def mask_of(n: int, edges) -> int:
    index = {p: i for i, p in enumerate(_pairs(n))}
    m = 0
    for u, v in edges:
        m |= 1 << index[(min(u, v), max(u, v))]
    return m


def _relabel_mask(n: int, mask: int, perm) -> int:
    pairs = _pairs(n)
    index = {p: i for i, p in enumerate(pairs)}
    out = 0
    for i, (u, v) in enumerate(pairs):
        if mask >> i & 1:
            a, b = perm[u], perm[v]
            out |= 1 << index[(min(a, b), max(a, b))]
    return out


def brute_canonical(n: int, edges) -> int:
    """Smallest edge mask over all relabellings."""
    mask = mask_of(n, edges)
    return min(_relabel_mask(n, mask, p) for p in permutations(range(n)))


def _connected(n: int, mask: int) -> bool:
    if n <= 1:
        return True
    adj = [set() for _ in range(n)]
    for i, (u, v) in enumerate(_pairs(n)):
        if mask >> i & 1:
            adj[u].add(v)
            adj[v].add(u)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


@lru_cache(maxsize=None)
def labeled_classes(n: int) -> dict[tuple[int, bool], frozenset[int]]:
    """All isomorphism classes on ``n`` vertices keyed by ``(m, connected)``.

    Walks every labelled graph and sweeps out its whole orbit at once, so each
    class costs ``n!`` relabellings.
    """
    pairs = _pairs(n)
    seen = set()
    out: dict[tuple[int, bool], set[int]] = {}
    perms = list(permutations(range(n)))
    for mask in range(1 << len(pairs)):
        if mask in seen:
            continue
        orbit = {_relabel_mask(n, mask, p) for p in perms}
        seen |= orbit
        key = (bin(mask).count("1"), _connected(n, mask))
        out.setdefault(key, set()).add(min(orbit))
    return {k: frozenset(v) for k, v in out.items()}


def mp_randic(n: int, edges) -> mpmath.mpf:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return mpmath.fsum(1 / mpmath.sqrt(deg[u] * deg[v]) for u, v in edges)


def mp_radical(value) -> mpmath.mpf:
    """High-precision evaluation of a ``RadicalValue`` from its public terms."""
    return mpmath.fsum(
        mpmath.mpf(q.numerator) / q.denominator * mpmath.sqrt(s) for s, q in value.terms.items()
    )
