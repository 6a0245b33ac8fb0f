"""Low-level bitset kernels: canonical labeling and one-vertex extension.

Graphs are passed as ``int64`` arrays of adjacency rows, bit ``j`` of
``rows[i]`` set iff ``ij`` is an edge.  Everything here is written so that it
compiles under numba and still runs (slowly) as plain Python.
"""

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - exercised only without numba

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


_POP16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.int64)


@njit(cache=True)
def popcount(x):
    return (
        _POP16[x & 0xFFFF]
        + _POP16[(x >> 16) & 0xFFFF]
        + _POP16[(x >> 32) & 0xFFFF]
        + _POP16[(x >> 48) & 0xFFFF]
    )


@njit(cache=True)
def low_index(x):
    """Index of the lowest set bit of a nonzero word."""
    return popcount((x & -x) - 1)


@njit(cache=True)
def full_mask(n):
    if n >= 64:
        return np.int64(-1)
    return (np.int64(1) << n) - 1


@njit(cache=True)
def _refine(adj, n, lab, ends, cnt):
    # Equitable refinement of the ordered partition (lab, ends) in place.
    # Cells are split by neighbour counts into each splitter cell, with
    # sub-cells ordered by ascending count; the result depends only on the
    # ordered partition, never on the order of vertices inside a cell.
    changed = True
    while changed:
        changed = False
        sw = 0
        while sw < n:
            ew = sw
            while not ends[ew]:
                ew += 1
            wmask = np.int64(0)
            for i in range(sw, ew + 1):
                wmask |= np.int64(1) << lab[i]
            s = 0
            while s < n:
                e = s
                while not ends[e]:
                    e += 1
                if e > s:
                    first = popcount(adj[lab[s]] & wmask)
                    cnt[s] = first
                    split = False
                    for i in range(s + 1, e + 1):
                        c = popcount(adj[lab[i]] & wmask)
                        cnt[i] = c
                        if c != first:
                            split = True
                    if split:
                        for i in range(s + 1, e + 1):
                            c = cnt[i]
                            v = lab[i]
                            j = i - 1
                            while j >= s and cnt[j] > c:
                                cnt[j + 1] = cnt[j]
                                lab[j + 1] = lab[j]
                                j -= 1
                            cnt[j + 1] = c
                            lab[j + 1] = v
                        for i in range(s, e):
                            if cnt[i] != cnt[i + 1]:
                                ends[i] = True
                        changed = True
                s = e + 1
            ew = sw
            while not ends[ew]:
                ew += 1
            sw = ew + 1


@njit(cache=True)
def _target_cell(ends, n, out):
    # First non-singleton cell; returns False if the partition is discrete.
    s = 0
    while s < n:
        e = s
        while not ends[e]:
            e += 1
        if e > s:
            out[0] = s
            out[1] = e
            return True
        s = e + 1
    return False


@njit(cache=True)
def _leaf_code(adj, n, lab, pos, code):
    for i in range(n):
        pos[lab[i]] = i
    for i in range(n):
        row = adj[lab[i]]
        r = np.int64(0)
        while row != 0:
            b = row & -row
            r |= np.int64(1) << pos[popcount(b - 1)]
            row ^= b
        code[i] = r


@njit(cache=True)
def _compare(a, b, n):
    for i in range(n):
        if a[i] != b[i]:
            return 1 if a[i] > b[i] else -1
    return 0


@njit(cache=True)
def _find(uf, x):
    while uf[x] != x:
        uf[x] = uf[uf[x]]
        x = uf[x]
    return x


@njit(cache=True)
def _orbits_fixing(auts, naut, seq, depth, n, uf):
    for i in range(n):
        uf[i] = i
    for a in range(naut):
        fixes = True
        for i in range(depth):
            if auts[a, seq[i]] != seq[i]:
                fixes = False
                break
        if not fixes:
            continue
        for x in range(n):
            rx = _find(uf, x)
            ry = _find(uf, auts[a, x])
            if rx != ry:
                if rx < ry:
                    uf[ry] = rx
                else:
                    uf[rx] = ry


@njit(cache=True)
def canon_label(adj, n):
    """Canonical labeling of a graph given by adjacency rows.

    Returns ``(lab, orbits, code)``: ``lab[i]`` is the vertex placed at
    canonical position ``i``, ``orbits[v]`` is the smallest vertex in the
    automorphism orbit of ``v`` and ``code`` holds the adjacency rows of the
    canonically relabelled graph.
    """
    lab_out = np.arange(n).astype(np.int64)
    orbits = np.arange(n).astype(np.int64)
    code_out = np.zeros(n, np.int64)
    if n == 0:
        return lab_out, orbits, code_out
    cnt = np.zeros(n, np.int64)
    pos = np.zeros(n, np.int64)
    uf = np.zeros(n, np.int64)
    cell = np.zeros(2, np.int64)

    depth_cap = n + 1
    labs = np.zeros((depth_cap, n), np.int64)
    ends = np.zeros((depth_cap, n), np.bool_)
    ts = np.zeros(depth_cap, np.int64)
    te = np.zeros(depth_cap, np.int64)
    cur = np.zeros(depth_cap, np.int64)
    seq = np.zeros(depth_cap, np.int64)
    fseq = np.zeros(depth_cap, np.int64)
    explored = np.zeros((depth_cap, n), np.bool_)

    for i in range(n):
        labs[0, i] = i
    ends[0, n - 1] = True
    _refine(adj, n, labs[0], ends[0], cnt)
    if not _target_cell(ends[0], n, cell):
        _leaf_code(adj, n, labs[0], pos, code_out)
        return labs[0].copy(), orbits, code_out

    max_aut = 2 * n * n + 8
    auts = np.zeros((max_aut, n), np.int64)
    naut = 0

    first_lab = np.zeros(n, np.int64)
    first_code = np.zeros(n, np.int64)
    best_lab = np.zeros(n, np.int64)
    best_code = np.zeros(n, np.int64)
    code = np.zeros(n, np.int64)
    have_first = False
    flen = 0

    ts[0] = cell[0]
    te[0] = cell[1]
    cur[0] = cell[0]
    d = 0
    while d >= 0:
        if cur[d] > te[d]:
            d -= 1
            continue
        v = labs[d, cur[d]]
        cur[d] += 1
        if naut > 0:
            _orbits_fixing(auts, naut, seq, d, n, uf)
            rv = _find(uf, v)
            pruned = False
            for u in range(n):
                if explored[d, u] and _find(uf, u) == rv:
                    pruned = True
                    break
            if pruned:
                continue
        explored[d, v] = True
        seq[d] = v
        c = d + 1
        for i in range(n):
            labs[c, i] = labs[d, i]
            ends[c, i] = ends[d, i]
        p = ts[d]
        while labs[c, p] != v:
            p += 1
        labs[c, p] = labs[c, ts[d]]
        labs[c, ts[d]] = v
        ends[c, ts[d]] = True
        _refine(adj, n, labs[c], ends[c], cnt)
        if _target_cell(ends[c], n, cell):
            d = c
            ts[d] = cell[0]
            te[d] = cell[1]
            cur[d] = cell[0]
            for i in range(n):
                explored[d, i] = False
            continue
        _leaf_code(adj, n, labs[c], pos, code)
        if not have_first:
            have_first = True
            for i in range(n):
                first_lab[i] = labs[c, i]
                best_lab[i] = labs[c, i]
                first_code[i] = code[i]
                best_code[i] = code[i]
            for i in range(c):
                fseq[i] = seq[i]
            flen = c
            continue
        if _compare(code, first_code, n) == 0:
            if naut < max_aut:
                for i in range(n):
                    auts[naut, first_lab[i]] = labs[c, i]
                naut += 1
            # this subtree is an automorphic image of one already explored:
            # resume at the deepest node shared with the first path
            k = 0
            while k < flen and k <= d and seq[k] == fseq[k]:
                k += 1
            d = k
            continue
        cmp = _compare(code, best_code, n)
        if cmp > 0:
            for i in range(n):
                best_lab[i] = labs[c, i]
                best_code[i] = code[i]
        elif cmp == 0 and naut < n * n:
            for i in range(n):
                auts[naut, best_lab[i]] = labs[c, i]
            naut += 1

    _orbits_fixing(auts, naut, seq, 0, n, uf)
    for i in range(n):
        orbits[i] = _find(uf, i)
    return best_lab, orbits, best_code


@njit(cache=True)
def _is_cut(adj, n, u):
    # adj is assumed connected; is u a cut vertex?
    if n <= 2:
        return False
    rest = full_mask(n) & ~(np.int64(1) << u)
    seen = rest & -rest
    frontier = seen
    while frontier != 0:
        nb = np.int64(0)
        f = frontier
        while f != 0:
            b = f & -f
            nb |= adj[popcount(b - 1)]
            f ^= b
        nb &= rest & ~seen
        seen |= nb
        frontier = nb
    return seen != rest


@njit(cache=True)
def is_connected_rows(adj, n):
    if n <= 1:
        return True
    allm = full_mask(n)
    seen = np.int64(1)
    frontier = seen
    while frontier != 0:
        nb = np.int64(0)
        f = frontier
        while f != 0:
            b = f & -f
            nb |= adj[popcount(b - 1)]
            f ^= b
        nb &= allm & ~seen
        seen |= nb
        frontier = nb
    return seen == allm


@njit(cache=True)
def _hash_code(code, n):
    h = np.int64(1469598103934665603)
    for i in range(n):
        h = (h ^ code[i]) * np.int64(1099511628211)
    return h


@njit(cache=True)
def extend(parent, np_, dlo, dhi, cap, connected):
    """All canonical one-vertex extensions of ``parent``.

    The new vertex ``v = np_`` receives ``d`` neighbours, ``dlo <= d <= dhi``.
    A child is kept only when ``v`` lies in the automorphism orbit of the
    child's canonical deletion vertex: among deletable vertices (non-cut
    vertices when ``connected``) of minimum degree, maximise the sum of
    neighbour degrees, then take the one with the highest canonical position.
    Returns ``(rows, degrees)`` where ``rows[k]`` is the canonically
    relabelled child and ``degrees[k]`` the degree of the added vertex.
    """
    n = np_ + 1
    deg_p = np.zeros(n, np.int64)
    for u in range(np_):
        deg_p[u] = popcount(parent[u])
    at_cap = np.int64(0)
    for u in range(np_):
        if deg_p[u] >= cap:
            at_cap |= np.int64(1) << u

    size = 64
    out = np.zeros((size, n), np.int64)
    out_deg = np.zeros(size, np.int64)
    hashes = np.zeros(size, np.int64)
    nout = 0

    child = np.zeros(n, np.int64)
    deg_c = np.zeros(n, np.int64)
    inv = np.zeros(n, np.int64)
    ties = np.zeros(n, np.bool_)
    pmask = full_mask(np_)

    for d in range(dlo, dhi + 1):
        if d > np_ or d > cap:
            break
        if d == 0:
            s = np.int64(0)
        else:
            s = full_mask(d)
        low_out = np.int64(0)
        low_in = np.int64(0)
        for u in range(np_):
            if deg_p[u] < d:
                low_out |= np.int64(1) << u
            if deg_p[u] + 1 < d:
                low_in |= np.int64(1) << u
        while True:
            if (s & at_cap) == 0:
                ok = True
                offending = (low_out & ~s) | (low_in & s)
                if offending != 0 and not connected:
                    ok = False
                if ok:
                    for u in range(np_):
                        child[u] = parent[u]
                        if (s >> u) & 1:
                            child[u] |= np.int64(1) << np_
                    child[np_] = s
                    for u in range(n):
                        deg_c[u] = popcount(child[u])
                    f = offending
                    while f != 0 and ok:
                        b = f & -f
                        u = popcount(b - 1)
                        if deg_c[u] <= 1 or not _is_cut(child, n, u):
                            ok = False
                        f ^= b
                if ok:
                    for u in range(n):
                        acc = np.int64(0)
                        r = child[u]
                        while r != 0:
                            b = r & -r
                            acc += deg_c[popcount(b - 1)]
                            r ^= b
                        inv[u] = acc
                    nties = 0
                    for u in range(np_):
                        ties[u] = False
                        if deg_c[u] == d and inv[u] >= inv[np_]:
                            if connected and _is_cut(child, n, u):
                                continue
                            if inv[u] > inv[np_]:
                                ok = False
                                break
                            ties[u] = True
                            nties += 1
                if ok:
                    lab, orb, code = canon_label(child, n)
                    if nties > 0:
                        best = np_
                        bestpos = -1
                        for i in range(n):
                            w = lab[i]
                            if w == np_ or ties[w]:
                                bestpos = i
                                best = w
                        if orb[best] != orb[np_]:
                            ok = False
                    if ok:
                        h = _hash_code(code, n)
                        dup = False
                        for k in range(nout):
                            if hashes[k] == h and _compare(out[k], code, n) == 0:
                                dup = True
                                break
                        if not dup:
                            if nout == size:
                                size *= 2
                                grown = np.zeros((size, n), np.int64)
                                grown[:nout] = out[:nout]
                                out = grown
                                gd = np.zeros(size, np.int64)
                                gd[:nout] = out_deg[:nout]
                                out_deg = gd
                                gh = np.zeros(size, np.int64)
                                gh[:nout] = hashes[:nout]
                                hashes = gh
                            out[nout] = code
                            out_deg[nout] = d
                            hashes[nout] = h
                            nout += 1
            if d == 0:
                break
            # next subset of the same size (Gosper)
            c = s & -s
            r = s + c
            if r == 0 or (r & ~pmask) != 0:
                break
            s = (((r ^ s) >> 2) // c) | r
            if (s & ~pmask) != 0:
                break
    return out[:nout].copy(), out_deg[:nout].copy()


@njit(cache=True)
def randic_float_batch(rows, n):
    out = np.zeros(rows.shape[0], np.float64)
    deg = np.zeros(n, np.float64)
    for k in range(rows.shape[0]):
        for u in range(n):
            deg[u] = popcount(rows[k, u])
        total = 0.0
        for u in range(n):
            r = rows[k, u] & ~((np.int64(2) << u) - 1)
            while r != 0:
                b = r & -r
                w = popcount(b - 1)
                total += 1.0 / np.sqrt(deg[u] * deg[w])
                r ^= b
        out[k] = total
    return out
