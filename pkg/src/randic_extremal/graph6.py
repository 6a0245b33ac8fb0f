"""graph6 encoding (undirected simple graphs, one graph per line)."""

from __future__ import annotations

from typing import Iterable

HEADER = ">>graph6<<"
_MAX_N = 64


class Graph6Error(ValueError):
    """Malformed graph6 text; ``offset`` is the index of the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def _encode_n(n: int) -> str:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise ValueError(f"vertex count {n} too large for graph6")


def write_graph6(n: int, edges: Iterable[tuple[int, int]]) -> str:
    """Encode a graph given by ``n`` and an edge list (no header, no newline)."""
    nbits = n * (n - 1) // 2
    bits = bytearray(nbits + (-nbits) % 6)
    for u, v in edges:
        if u > v:
            u, v = v, u
        # column-major upper triangle: x(0,1) x(0,2) x(1,2) x(0,3) ...
        bits[v * (v - 1) // 2 + u] = 1
    out = [_encode_n(n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> tuple[int, list[tuple[int, int]]]:
    """Decode one graph6 line into ``(n, edges)``.

    An optional ``>>graph6<<`` header and surrounding whitespace are accepted.
    """
    s = text.strip()
    base = len(text) - len(text.lstrip())
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
        base += len(HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)!r} outside graph6 range 63..126", base + i)
    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    elif len(s) >= 2 and s[1] == "~":
        raise Graph6Error("eight-byte size header not supported", base + 1)
    else:
        if len(s) < 4:
            raise Graph6Error("truncated size header", base + len(s))
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        if n <= 62:
            raise Graph6Error(f"non-canonical size header for n={n}", base)
        pos = 4
    if n > _MAX_N:
        raise Graph6Error(f"{n} vertices exceeds the supported maximum {_MAX_N}", base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[pos:]
    if len(body) < need:
        raise Graph6Error(f"truncated bit field: expected {need} bytes, got {len(body)}", base + len(s))
    if len(body) > need:
        raise Graph6Error("trailing bytes after bit field", base + pos + need)
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            byte = ord(body[k // 6]) - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((u, v))
            k += 1
    if need:
        pad = (-nbits) % 6
        last = ord(body[-1]) - 63
        if last & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits", base + pos + need - 1)
    return n, edges
