"""Exhaustive checks of the extremal claims and the transformation lemmas.

Every claim is checked over complete isomorph-free enumerations, so a PASS
means "holds for every graph in the stated range", nothing more.  Violations
are reported as COUNTEREXAMPLE with graph6 witnesses instead of raising.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional

import numpy as np

from . import _kernels
from .enumerator import EnumSpec, enumerate_graphs, iter_batches
from .exact_radical import RadicalValue, sign, to_decimal
from .families import (
    FamilyError,
    FamilySpec,
    construct_member,
    enumerate_members,
    is_member,
)
from .graph_core import (
    EdgeTypeSignature,
    Graph,
    GraphError,
    canonical_code,
    cyclomatic_number,
    degree_profile,
    edge_type_signature,
    is_connected,
)
from .randic import randic_exact
from .transforms import TransformSite, apply_transform, delta_randic, find_sites, pendant_paths

PASS = "PASS"
FAIL = "FAIL"
COUNTEREXAMPLE = "COUNTEREXAMPLE"

SCREEN_MARGIN = 1e-6
_CLUSTER_GAP = 1e-9
_PRUNE_EVERY = 1 << 14
_MAX_WITNESSES = 10

# margins taken from the proofs, compared exactly
MARGIN_T1 = Fraction(1, 100)
MARGIN_T3B = Fraction(38, 1000)
MARGIN_T5 = Fraction(68, 10000)


class ClaimError(ValueError):
    """Unknown claim id or parameters beyond the configured ceiling."""


# -- degree identities ------------------------------------------------------


def _require_connected(g: Graph):
    if not is_connected(g):
        raise GraphError("input graph must be connected")


def check_degree_identities(g: Graph) -> bool:
    """Both leaf/degree-2 count identities, plus their forms for γ = 5, 6."""
    _require_connected(g)
    gamma = cyclomatic_number(g)
    prof = degree_profile(g)
    high = [(i, c) for i, c in prof.items() if i >= 3]
    s2 = sum((i - 2) * c for i, c in high)
    s1 = sum((i - 1) * c for i, c in high)
    ok = prof[1] == 2 - 2 * gamma + s2 and prof[2] == 2 * gamma + g.n - 2 - s1
    if gamma == 5:
        ok = ok and prof[1] == s2 - 8 and prof[2] == g.n + 8 - s1
    elif gamma == 6:
        ok = ok and prof[1] == s2 - 10 and prof[2] == g.n + 10 - s1
    return ok


def mii_violations(g: Graph) -> list[int]:
    """Degrees ``i`` whose ``m_ii`` exceeds the applicable bound."""
    _require_connected(g)
    gamma = cyclomatic_number(g)
    prof = degree_profile(g)
    sig = edge_type_signature(g)
    slack = -2 if prof[1] == 0 else -1
    return [
        i
        for i in range(3, g.n)
        if 0 < prof[i] < g.n and sig[(i, i)] > prof[i] + slack + gamma
    ]


def check_mii_bound(g: Graph) -> bool:
    return not mii_violations(g)


# -- extremal search --------------------------------------------------------


@dataclass(frozen=True)
class RankedLevel:
    value: RadicalValue
    maximizers: tuple[str, ...]
    signatures: tuple[EdgeTypeSignature, ...]

    def graphs(self) -> list[Graph]:
        return [Graph.from_graph6(c) for c in self.maximizers]


@dataclass(frozen=True)
class ExtremalReport:
    n: int
    k: int
    max_degree: Optional[int]
    class_size: int
    levels: tuple[RankedLevel, ...]

    @property
    def ranked_values(self) -> list[RadicalValue]:
        return [lv.value for lv in self.levels]

    def to_dict(self, digits: int = 12) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "max_degree": self.max_degree,
            "class_size": self.class_size,
            "ranked_values": [
                {
                    "rank": r + 1,
                    "exact": str(lv.value),
                    "decimal": to_decimal(lv.value, digits),
                    "maximizers": [
                        {"graph6": c, "signature": _sig_text(s)}
                        for c, s in zip(lv.maximizers, lv.signatures)
                    ],
                }
                for r, lv in enumerate(self.levels)
            ],
        }

    def to_text(self, digits: int = 12) -> str:
        md = "none" if self.max_degree is None else str(self.max_degree)
        lines = [f"n={self.n} k={self.k} max_degree={md} classes={self.class_size}"]
        for r, lv in enumerate(self.levels):
            lines.append(f"rank {r + 1}: {lv.value}\t{to_decimal(lv.value, digits)}\t({len(lv.maximizers)} graphs)")
            for c, s in zip(lv.maximizers, lv.signatures):
                lines.append(f"  {c}\t{_sig_text(s)}")
        return "\n".join(lines)


def _sig_text(sig: EdgeTypeSignature) -> str:
    return " ".join(f"m{i},{j}={c}" for (i, j), c in sig.items())


def _screen_threshold(vals: np.ndarray, top_t: int) -> float:
    """Float cut below which no graph can hold one of the top ``top_t`` values.

    Floats within ``_CLUSTER_GAP`` of each other are lumped together, which can
    only lower the cut, and the cut sits ``SCREEN_MARGIN`` below the lowest
    float of the ``top_t``-th lump.
    """
    if len(vals) == 0:
        return -np.inf
    u = np.unique(vals)[::-1]
    breaks = np.nonzero(u[:-1] - u[1:] > _CLUSTER_GAP)[0]
    if len(breaks) < top_t - 1:
        return -np.inf
    end = breaks[top_t - 1] if top_t - 1 < len(breaks) else len(u) - 1
    return float(u[end]) - SCREEN_MARGIN


def extremal_search(
    n: int,
    k: int,
    top_t: int = 1,
    max_degree: Optional[int] = None,
    workers: int = 1,
    screen: bool = True,
) -> ExtremalReport:
    """Exact top ``top_t`` Randić values over connected graphs with ``n`` vertices and cyclomatic number ``k``."""
    if top_t < 1:
        raise ValueError("top_t must be >= 1")
    spec = EnumSpec.cyclic(n, k, max_degree)
    rows_acc: list[np.ndarray] = []
    vals_acc: list[np.ndarray] = []
    cut = -np.inf
    pending = 0
    size = 0

    def merge():
        rows = np.concatenate(rows_acc) if rows_acc else np.zeros((0, n), np.int64)
        vals = np.concatenate(vals_acc) if vals_acc else np.zeros(0)
        return rows, vals

    for batch in iter_batches(spec, workers):
        size += len(batch)
        vals = _kernels.randic_float_batch(batch, n)
        if screen:
            keep = vals >= cut
            batch, vals = batch[keep], vals[keep]
        if len(batch):
            rows_acc.append(batch)
            vals_acc.append(vals)
            pending += len(batch)
        if screen and pending >= _PRUNE_EVERY:
            rows, vals = merge()
            cut = max(cut, _screen_threshold(vals, top_t))
            keep = vals >= cut
            rows_acc, vals_acc, pending = [rows[keep]], [vals[keep]], 0

    rows, vals = merge()
    if screen:
        keep = vals >= _screen_threshold(vals, top_t)
        rows = rows[keep]

    groups: dict[RadicalValue, list[Graph]] = {}
    for r in rows:
        g = Graph.from_array(r)
        groups.setdefault(randic_exact(g), []).append(g)
    ordered = sorted(groups, reverse=True)[:top_t]
    levels = []
    for v in ordered:
        items = sorted((canonical_code(g).decode(), edge_type_signature(g)) for g in groups[v])
        levels.append(
            RankedLevel(v, tuple(c for c, _ in items), tuple(s for _, s in items))
        )
    return ExtremalReport(n, k, max_degree, size, tuple(levels))


# -- reports ----------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    graph6: str
    value: Optional[RadicalValue] = None
    note: str = ""

    def to_dict(self, digits: int = 12) -> dict:
        d = {"graph6": self.graph6, "note": self.note}
        if self.value is not None:
            d["exact"] = str(self.value)
            d["decimal"] = to_decimal(self.value, digits)
        return d


@dataclass
class VerificationResult:
    claim_id: str
    status: str
    witnesses: list[Witness] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in (PASS, FAIL, COUNTEREXAMPLE):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == COUNTEREXAMPLE and not self.witnesses:
            raise ValueError("a counterexample needs at least one witness")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self, digits: int = 12) -> dict:
        return {
            "claim_id": self.claim_id,
            "status": self.status,
            "witnesses": [w.to_dict(digits) for w in self.witnesses],
            "notes": list(self.notes),
            "details": self.details,
        }

    def to_json(self, digits: int = 12) -> str:
        return json.dumps(self.to_dict(digits), indent=2, sort_keys=True)

    def to_text(self, digits: int = 12) -> str:
        lines = [f"claim: {self.claim_id}", f"status: {self.status}"]
        lines += [f"note: {x}" for x in self.notes]
        for w in self.witnesses:
            val = f"\t{w.value}\t{to_decimal(w.value, digits)}" if w.value is not None else ""
            lines.append(f"witness: {w.graph6}{val}\t{w.note}".rstrip())
        for key in sorted(self.details):
            lines.append(f"detail: {key} = {json.dumps(self.details[key], sort_keys=True)}")
        return "\n".join(lines)


def _witness(g: Graph, note: str = "", value: Optional[RadicalValue] = None) -> Witness:
    note = f"{note} [{_sig_text(edge_type_signature(g))}]"
    return Witness(canonical_code(g).decode(), randic_exact(g) if value is None else value, note)


def _combine(claim_id: str, parts: list[VerificationResult], notes=()) -> VerificationResult:
    status = PASS
    if any(p.status == COUNTEREXAMPLE for p in parts):
        status = COUNTEREXAMPLE
    elif any(p.status == FAIL for p in parts):
        status = FAIL
    witnesses = [w for p in parts for w in p.witnesses]
    out = VerificationResult(claim_id, status, witnesses, notes=list(notes))
    for p in parts:
        out.notes.extend(p.notes)
        out.details.update(p.details)
    return out


# -- graph streams ----------------------------------------------------------


def _connected_graphs(n_values: Iterable[int], k_values: Optional[Iterable[int]] = None, max_degree=None, workers=1):
    """``(n, k, g)`` over connected graphs; all sizes when ``k_values`` is None."""
    for n in n_values:
        top = n * (n - 1) // 2 - n + 1
        ks = range(0, top + 1) if k_values is None else [k for k in k_values if 0 <= k <= top]
        for k in ks:
            for g in enumerate_graphs(EnumSpec.cyclic(n, k, max_degree), workers):
                yield n, k, g


# -- transformation probes --------------------------------------------------


class _Tally:
    def __init__(self):
        self.sites = 0
        self.lo: Optional[RadicalValue] = None
        self.hi: Optional[RadicalValue] = None
        self.zero = 0
        self.witnesses: list[Witness] = []
        self.bad = 0

    def see(self, d: RadicalValue):
        self.sites += 1
        if self.lo is None or d < self.lo:
            self.lo = d
        if self.hi is None or d > self.hi:
            self.hi = d
        if d.is_zero():
            self.zero += 1

    def flag(self, g: Graph, note: str, value=None):
        self.bad += 1
        if len(self.witnesses) < _MAX_WITNESSES:
            self.witnesses.append(Witness(g.to_graph6(), value, note))

    def details(self, prefix: str) -> dict:
        out = {f"{prefix}.sites": self.sites, f"{prefix}.zero_deltas": self.zero, f"{prefix}.violations": self.bad}
        if self.lo is not None:
            out[f"{prefix}.min_delta"] = to_decimal(self.lo, 12)
            out[f"{prefix}.max_delta"] = to_decimal(self.hi, 12)
        return out


def _chain_length(g: Graph, hub: int, start: int) -> int:
    return next(len(p) for h, p in pendant_paths(g) if h == hub and p[0] == start)


def _probe_t1(g: Graph, t: _Tally):
    for s in find_sites(g, "T1"):
        d = delta_randic(g, s)
        t.see(d)
        w, (_, p), (_, q) = s.anchors
        long_chains = _chain_length(g, w, p) >= 2 and _chain_length(g, w, q) >= 2
        if sign(d) <= 0:
            t.flag(g, f"{s}: delta not positive", d)
        elif long_chains and d <= MARGIN_T1:
            t.flag(g, f"{s}: delta below 0.01 with both paths of >= 2 vertices", d)


def _probe_t2(g: Graph, t: _Tally):
    for s in find_sites(g, "T2"):
        d = delta_randic(g, s)
        t.see(d)
        if sign(d) <= 0:
            t.flag(g, f"{s}: delta not positive", d)


def t4_hypothesis(g: Graph, site: TransformSite) -> bool:
    """``deg(u1) <= 3`` and some other neighbour of ``v4`` has degree <= 3."""
    v1, v2, v3, v4, u1 = site.anchors
    if g.degree(u1) > 3:
        return False
    return any(g.degree(u) <= 3 for u in g.neighbors(v4) if u != u1)


def t4_equality_case(g: Graph, site: TransformSite) -> bool:
    v1, v2, v3, v4, u1 = site.anchors
    others = sorted(g.degree(u) for u in g.neighbors(v4) if u != u1)
    return (
        g.degree(v1) == 2
        and g.degree(v3) == 3
        and g.degree(u1) == 3
        and g.degree(v4) == 4
        and others == [3, 4, 4]
    )


def t4_equality_witness() -> tuple[Graph, TransformSite]:
    """A 9-vertex graph with a T4 site whose delta is exactly zero."""
    # v4=0, u1..u4 = 1..4, v1=5, v2=6, v3=7, extra leaf 8 on v1
    edges = [
        (0, 1), (0, 2), (0, 3), (0, 4), (6, 5), (6, 7), (3, 4),
        (3, 1), (3, 2), (4, 7), (1, 7), (4, 2), (5, 8),
    ]
    return Graph.from_edges(9, edges), TransformSite("T4", (5, 6, 7, 0, 1))


def _probe_t4(g: Graph, t: _Tally):
    for s in find_sites(g, "T4"):
        if not t4_hypothesis(g, s):
            continue
        d = delta_randic(g, s)
        t.see(d)
        sg = sign(d)
        if sg < 0:
            t.flag(g, f"{s}: delta negative", d)
        elif (sg == 0) != t4_equality_case(g, s):
            t.flag(g, f"{s}: zero delta does not match the equality conditions", d)


def _probe_t5(g: Graph, t: _Tally):
    for s in find_sites(g, "T5"):
        d = delta_randic(g, s)
        t.see(d)
        if sign(d) >= 0:
            t.flag(g, f"{s}: delta not negative", d)
        elif -d <= MARGIN_T5:
            t.flag(g, f"{s}: |delta| not above 0.0068", d)


def _subdivisions(g: Graph) -> list[tuple[tuple[int, int], RadicalValue, EdgeTypeSignature]]:
    base = randic_exact(g)
    out = []
    for s in find_sites(g, "T3"):
        h = apply_transform(g, s)
        out.append((s.anchors[0], randic_exact(h) - base, edge_type_signature(h)))
    return out


def _probe_t3(g: Graph, parts: str, tallies: dict):
    deg = g.degrees()
    subs = _subdivisions(g)
    gains = [(e, d) for e, d, _ in subs]
    for _, d in gains:
        tallies["T3"].see(d)
    if "a" in parts:
        strong = [(e, d) for e, d in gains if deg[e[0]] >= 3 and deg[e[1]] >= 3]
        weak = [(e, d) for e, d in gains if deg[e[0]] in (1, 2) or deg[e[1]] in (1, 2)]
        if strong and weak:
            e_hi, d_hi = max(strong, key=lambda x: x[1])
            e_lo, d_lo = min(weak, key=lambda x: x[1])
            tallies["T3a"].see(d_lo - d_hi)
            if not d_lo > d_hi:
                tallies["T3a"].flag(g, f"subdividing {e_lo} does not beat subdividing {e_hi}", d_lo - d_hi)
    if "b" in parts:
        two = [(e, d) for e, d in gains if 2 in (deg[e[0]], deg[e[1]])]
        leafy = [
            (e, d) for e, d in gains
            if sorted((deg[e[0]], deg[e[1]]))[0] == 1 and max(deg[e[0]], deg[e[1]]) >= 3
        ]
        if two and leafy:
            e_hi, d_hi = max(two, key=lambda x: x[1])
            e_lo, d_lo = min(leafy, key=lambda x: x[1])
            diff = d_lo - d_hi
            tallies["T3b"].see(diff)
            if not diff > MARGIN_T3B:
                tallies["T3b"].flag(g, f"subdividing {e_lo} beats {e_hi} by at most 0.038", diff)
    if "c" in parts:
        two = [x for x in subs if 2 in (deg[x[0][0]], deg[x[0][1]])]
        if len(two) >= 2:
            ref_e, ref_d, ref_sig = two[0]
            for e, d, sig in two[1:]:
                tallies["T3c"].see(d - ref_d)
                if d != ref_d or sig != ref_sig:
                    tallies["T3c"].flag(g, f"subdividing {e} and {ref_e} give different results", d - ref_d)


_T3_NOTES = {
    "a": "an edge with an endpoint of degree 1 or 2 gains more from subdivision than an edge between two vertices of degree >= 3",
    "c": "checked in the general form: every edge with a degree-2 endpoint gives the same subdivision gain and signature",
}


def probe_transform_monotonicity(
    kind: str,
    n_range: Iterable[int],
    k_range: Iterable[int],
    workers: int = 1,
    t3_parts: str = "abc",
) -> VerificationResult:
    """Check the sign (and proof margin) of every site of ``kind`` over all graphs in range."""
    kind = kind.upper()
    n_range, k_range = list(n_range), list(k_range)
    tallies = {key: _Tally() for key in ("T1", "T2", "T3", "T3a", "T3b", "T3c", "T4", "T5")}
    graphs = 0
    for _, _, g in _connected_graphs(n_range, k_range, workers=workers):
        graphs += 1
        if kind == "T1":
            _probe_t1(g, tallies["T1"])
        elif kind == "T2":
            _probe_t2(g, tallies["T2"])
        elif kind == "T3":
            _probe_t3(g, t3_parts, tallies)
        elif kind == "T4":
            _probe_t4(g, tallies["T4"])
        elif kind == "T5":
            _probe_t5(g, tallies["T5"])
        else:
            raise ClaimError(f"unknown transformation kind {kind!r}")
    used = [kind] if kind != "T3" else [f"T3{p}" for p in t3_parts]
    witnesses = [w for key in used for w in tallies[key].witnesses]
    bad = sum(tallies[key].bad for key in used)
    res = VerificationResult(
        f"probe_{kind.lower()}",
        COUNTEREXAMPLE if bad else PASS,
        witnesses,
        details={"graphs": graphs, "n_range": n_range, "k_range": k_range},
    )
    for key in used:
        res.details.update(tallies[key].details(key))
    if kind == "T2":
        res.notes.append("neighbour condition read as: every neighbour of x has degree >= 2 once both paths are removed")
    if kind == "T1":
        res.notes.append("0.01 margin checked only when both pendant paths have at least 2 vertices")
    if kind == "T4":
        res.notes.append("sites restricted to deg(u1) <= 3 with another neighbour of v4 of degree <= 3; v4 has maximum degree")
    if kind == "T3":
        res.notes.extend(_T3_NOTES[p] for p in t3_parts if p in _T3_NOTES)
    return res


# -- extremal claims ----------------------------------------------------------


def _family(name: str, n: int, k: int) -> Optional[FamilySpec]:
    try:
        return FamilySpec.of(name, n, k)
    except FamilyError:
        return None


def _matching_families(graphs: list[Graph], n: int, k: int) -> list[str]:
    names = ["lambda1", "gamma1", "lambda2", "gamma2", "regular3"]
    names += [f"omega{i}" for i in range(1, 9)]
    out = []
    for name in names:
        fam = _family(name, n, k)
        if fam is not None and graphs and all(is_member(g, fam) for g in graphs):
            out.append(name)
    return out


def _level_after_excluding(report: ExtremalReport, exclude: Optional[FamilySpec]):
    for lv in report.levels:
        gs = lv.graphs()
        if exclude is not None:
            gs = [g for g in gs if not is_member(g, exclude)]
        if gs:
            return lv.value, gs
    return None, []


def _bound_claim(
    claim_id: str,
    n: int,
    k: int,
    bound: RadicalValue,
    family: Optional[FamilySpec],
    exclude: Optional[FamilySpec] = None,
    workers: int = 1,
) -> VerificationResult:
    """``R <= bound`` over the class (minus ``exclude``), equality iff in ``family``."""
    report = extremal_search(n, k, top_t=2 if exclude is not None else 1, workers=workers)
    res = VerificationResult(claim_id, PASS, details={f"n={n},k={k}.classes": report.class_size})
    best, gs = _level_after_excluding(report, exclude)
    key = f"n={n},k={k}"
    if best is None:
        res.notes.append(f"{key}: no graph in range")
        return res
    res.details[f"{key}.maximum"] = to_decimal(best, 12)
    res.details[f"{key}.maximizers"] = len(gs)
    res.details[f"{key}.maximizer_families"] = _matching_families(gs, n, k)
    if best > bound:
        res.status = COUNTEREXAMPLE
        res.witnesses += [_witness(g, f"{key}: exceeds the bound", best) for g in gs[:_MAX_WITNESSES]]
        return res
    if family is None:
        if best == bound:
            res.status = COUNTEREXAMPLE
            res.witnesses += [_witness(g, f"{key}: attains the bound outside the family", best) for g in gs]
        return res
    if best < bound:
        res.status = FAIL
        res.notes.append(f"{key}: bound not attained although {family.name} is nonempty")
        return res
    outside = [g for g in gs if not is_member(g, family)]
    if outside:
        res.status = COUNTEREXAMPLE
        res.notes.append(f"{key}: the bound holds, but {len(outside)} graphs outside {family.name} attain it")
        res.witnesses += [_witness(g, f"{key}: attains the bound but is not in {family.name}", best) for g in outside]
    codes = {canonical_code(g) for g in gs}
    members = list(enumerate_members(family))
    missed = [g for g in members if canonical_code(g) not in codes]
    if missed:
        res.status = COUNTEREXAMPLE
        res.witnesses += [_witness(g, f"{key}: {family.name} member below the bound") for g in missed]
    built = construct_member(family)
    if randic_exact(built) != bound:
        res.status = COUNTEREXAMPLE
        res.witnesses.append(_witness(built, f"{key}: constructed {family.name} member misses the bound"))
    res.details[f"{key}.family_members"] = len(members)
    return res


def _ranking_claim(
    claim_id: str,
    n: int,
    k: int,
    first: str,
    second: str,
    workers: int = 1,
) -> VerificationResult:
    """The top two distinct values are attained exactly by the named families.

    A family whose counts are infeasible at ``(n, k)`` is empty, so it cannot
    hold a rank.
    """
    report = extremal_search(n, k, top_t=2, workers=workers)
    key = f"n={n},k={k}"
    res = VerificationResult(claim_id, PASS, details={f"{key}.classes": report.class_size})
    for rank, (lv, name) in enumerate(zip(report.levels, (first, second)), start=1):
        gs = lv.graphs()
        found = _matching_families(gs, n, k)
        res.details[f"{key}.rank{rank}.value"] = to_decimal(lv.value, 12)
        res.details[f"{key}.rank{rank}.families"] = found
        fam = _family(name, n, k)
        members = {canonical_code(g): g for g in enumerate_members(fam)} if fam else {}
        outside = [g for g in gs if canonical_code(g) not in members]
        codes = {canonical_code(g) for g in gs}
        missing = [g for c, g in members.items() if c not in codes]
        if not outside and not missing:
            continue
        res.status = COUNTEREXAMPLE
        if fam is None:
            held = ", ".join(found) or "no listed family"
            res.notes.append(f"{key}: rank {rank} is held by {held}, not {name} ({name} is empty here)")
        else:
            parts = []
            if outside:
                parts.append(f"{len(outside)} graphs outside {name} share the value")
            if missing:
                parts.append(f"{len(missing)} {name} members fall below it")
            if found:
                parts.append(f"every graph at this rank is in {', '.join(found)}")
            res.notes.append(f"{key}: rank {rank}: " + "; ".join(parts))
        res.witnesses += [
            _witness(g, f"{key}: rank {rank} value outside {name}", lv.value) for g in outside[:_MAX_WITNESSES]
        ]
        res.witnesses += [_witness(g, f"{key}: {name} member below rank {rank}") for g in missing[:_MAX_WITNESSES]]
    return res


# -- claim table --------------------------------------------------------------


@dataclass(frozen=True)
class Claim:
    claim_id: str
    summary: str
    run: Callable[..., VerificationResult]
    ceiling: int  # largest admissible n


def _n_values(n, default: list[int], lowest: int) -> list[int]:
    if n is None:
        return default
    if n < lowest:
        raise ClaimError(f"claim needs n >= {lowest}, got n={n}")
    return [n]


def _lemma1(part: str):
    kind = {"1": "T1", "2": "T2", "3": "T3", "3a": "T3", "3b": "T3", "3c": "T3", "4": "T4", "5": "T5"}[part]

    def run(n=None, k=None, workers=1):
        n_max = 9 if n is None else n
        k_max = 6 if k is None else k
        t3 = part[1:] if part.startswith("3") and len(part) > 1 else "abc"
        res = probe_transform_monotonicity(kind, range(2, n_max + 1), range(0, k_max + 1), workers, t3_parts=t3)
        res.claim_id = f"lemma1_{part}"
        if kind == "T4":
            g, site = t4_equality_witness()
            d = delta_randic(g, site)
            ok = site in find_sites(g, "T4") and d.is_zero() and t4_equality_case(g, site) and t4_hypothesis(g, site)
            res.witnesses.append(Witness(g.to_graph6(), d, f"equality witness, site {site}"))
            if not ok and res.status == PASS:
                res.status = FAIL
                res.notes.append("constructed equality witness does not give a zero delta")
        return res

    return run


def _lemma2(n=None, k=None, workers=1):
    n_max = 8 if n is None else n
    res = VerificationResult("lemma2", PASS, notes=[
        "the single-vertex graph is excluded: it has no edges and no leaves, so the leaf identity gives 2 instead of 0",
    ])
    count = 0
    for _, _, g in _connected_graphs(range(2, n_max + 1), workers=workers):
        count += 1
        if not check_degree_identities(g):
            res.status = COUNTEREXAMPLE
            if len(res.witnesses) < _MAX_WITNESSES:
                res.witnesses.append(_witness(g, "degree-count identity fails"))
    res.details["graphs"] = count
    res.details["n_range"] = [2, n_max]
    return res


def _cor3(n=None, k=None, workers=1):
    n_max = 9 if n is None else n
    res = VerificationResult("cor3", PASS)
    count = 0
    for _, _, g in _connected_graphs(range(2, n_max + 1), [5, 6], workers=workers):
        count += 1
        if not check_degree_identities(g):
            res.status = COUNTEREXAMPLE
            if len(res.witnesses) < _MAX_WITNESSES:
                res.witnesses.append(_witness(g, "specialised identity fails"))
    res.details["graphs"] = count
    return res


def _cor4(n=None, k=None, workers=1):
    n = 12 if n is None else n
    if n < 12:
        raise ClaimError("claim needs n >= 12")
    res = VerificationResult("cor4", PASS, notes=["degree-count sets matched by degree profile alone"])
    cases = [(0, 5, "upsilon1"), (1, 5, "upsilon2"), (0, 6, "upsilon3"), (1, 6, "upsilon4")]
    prof = {name: FamilySpec.of(name, n).degree_profile for _, _, name in cases}
    count = 0
    for _, gamma, g in _connected_graphs([n], None, max_degree=3, workers=workers):
        if g.max_degree() != 3:
            continue
        p = degree_profile(g)
        if p[1] > 1:
            continue
        count += 1
        for n1, want, name in cases:
            if p[1] == n1 and (gamma == want) != (p == prof[name]):
                res.status = COUNTEREXAMPLE
                res.witnesses.append(_witness(g, f"cyclomatic number {gamma} vs membership in {name}"))
    res.details["graphs"] = count
    return res


def _lemma5(n=None, k=None, workers=1):
    n_max = 8 if n is None else n
    res = VerificationResult("lemma5", PASS, notes=["the undefined n_i(T) is read as n_i(G)"])
    count = 0
    applicable = 0
    for _, _, g in _connected_graphs(range(2, n_max + 1), workers=workers):
        count += 1
        p = degree_profile(g)
        if any(0 < p[i] < g.n for i in range(3, g.n)):
            applicable += 1
        bad = mii_violations(g)
        if bad:
            res.status = COUNTEREXAMPLE
            if len(res.witnesses) < _MAX_WITNESSES:
                res.witnesses.append(_witness(g, f"m_ii bound fails for i in {bad}"))
    res.details["graphs"] = count
    res.details["graphs_meeting_precondition"] = applicable
    return res


def _value(name: str, n: int, k: int) -> RadicalValue:
    return FamilySpec.of(name, n, k).expected_value


def _check_k(claim_id, k_arg, k):
    if k_arg is not None and k_arg != k:
        raise ClaimError(f"{claim_id} is stated for k={k} only")


def _fixed_gamma(claim_id, k, lowest, default, top, excl=None):
    def run(n=None, k_arg=None, workers=1):
        _check_k(claim_id, k_arg, k)
        parts = []
        for nn in _n_values(n, default, lowest):
            fam = _family(top, nn, k)
            bound_name = {"omega1": "lambda1", "omega3": "lambda1", "omega5": "gamma2", "omega7": "gamma2"}[top]
            bound = FamilySpec.of(bound_name, nn, k).expected_value
            ex = _family(excl, nn, k) if excl else None
            parts.append(_bound_claim(claim_id, nn, k, bound, fam, ex, workers))
        return _combine(claim_id, parts)

    return run


def _remark(claim_id, n_fixed, k):
    def run(n=None, k_arg=None, workers=1):
        _check_k(claim_id, k_arg, k)
        if n is not None and n != n_fixed:
            raise ClaimError(f"{claim_id} is stated for n={n_fixed} only")
        fam = FamilySpec.of("regular3", n_fixed, k)
        return _bound_claim(claim_id, n_fixed, k, RadicalValue.rational(Fraction(n_fixed, 2)), fam, None, workers)

    return run


def _general(claim_id, k_default, k_min, mode):
    """Claims quantified over k: ``mode`` picks the n range and families."""

    def run(n=None, k=None, workers=1):
        ks = k_default if k is None else [k]
        parts = []
        for kk in ks:
            if kk < k_min:
                raise ClaimError(f"{claim_id} needs k >= {k_min}")
            if mode in ("first", "second", "rank"):
                ns = [2 * kk - 1, 2 * kk] if n is None else [n]
                if any(x < 2 * kk - 1 for x in ns):
                    raise ClaimError(f"{claim_id} needs n >= 2k-1")
            else:
                ns = [2 * kk - 2]
                if n is not None and n != 2 * kk - 2:
                    raise ClaimError(f"{claim_id} needs n = 2k-2")
            for nn in ns:
                if mode == "first":
                    parts.append(_bound_claim(claim_id, nn, kk, _value("lambda1", nn, kk), FamilySpec.of("lambda1", nn, kk), None, workers))
                elif mode == "cubic":
                    parts.append(_bound_claim(claim_id, nn, kk, RadicalValue.rational(Fraction(nn, 2)), FamilySpec.of("regular3", nn, kk), None, workers))
                elif mode == "second":
                    parts.append(_bound_claim(claim_id, nn, kk, _value("gamma2", nn, kk), FamilySpec.of("gamma2", nn, kk), FamilySpec.of("lambda1", nn, kk), workers))
                elif mode == "second_cubic":
                    parts.append(_bound_claim(claim_id, nn, kk, _value("gamma2", nn, kk), FamilySpec.of("gamma2", nn, kk), FamilySpec.of("regular3", nn, kk), workers))
                elif mode == "rank":
                    parts.append(_ranking_claim(claim_id, nn, kk, "lambda1", "gamma2", workers))
                elif mode == "rank_cubic":
                    parts.append(_ranking_claim(claim_id, nn, kk, "regular3", "gamma2", workers))
        return _combine(claim_id, parts)

    return run


def _corollary(claim_id, k, lowest, default, first, second, notes=()):
    def run(n=None, k_arg=None, workers=1):
        _check_k(claim_id, k_arg, k)
        parts = [
            _ranking_claim(claim_id, nn, k, first, second, workers)
            for nn in _n_values(n, default, lowest)
        ]
        return _combine(claim_id, parts, notes)

    return run


_OMEGA_NOTE = (
    "omega5 and omega7 are published with host set upsilon3, which has no degree-4 vertex; "
    "membership is decided by the edge-type counts (omega5 = gamma2 at k=5, omega7 = gamma2 at k=6)"
)

CLAIMS: dict[str, Claim] = {}


def _register(claim_id, summary, run, ceiling):
    CLAIMS[claim_id] = Claim(claim_id, summary, run, ceiling)


for _p, _s in [
    ("1", "moving one pendant path to the end of another at the same hub raises R"),
    ("2", "moving a pendant path onto the end of a pendant path at another vertex raises R"),
    ("3", "subdivision comparisons (a), (b) and (c)"),
    ("3a", "subdividing next to a degree-1 or degree-2 vertex beats subdividing between two degree >= 3 vertices"),
    ("3b", "subdividing a pendant edge at a degree >= 3 vertex beats subdividing next to a degree-2 vertex by > 0.038"),
    ("3c", "all subdivisions next to a degree-2 vertex give equal R"),
    ("4", "moving a neighbour of a maximum-degree vertex onto a degree-2 vertex does not lower R"),
    ("5", "moving an edge from a degree-3 vertex to a degree-2 vertex next to a degree-4 vertex lowers R by > 0.0068"),
]:
    _register(f"lemma1_{_p}", _s, _lemma1(_p), 10)

_register("lemma2", "leaf and degree-2 counts from the degree profile and cyclomatic number", _lemma2, 9)
_register("cor3", "the same identities written out for cyclomatic number 5 and 6", _cor3, 10)
_register("cor4", "for maximum degree 3 and at most one leaf, the cyclomatic number fixes the degree-count set", _cor4, 13)
_register("lemma5", "bound on edges joining two vertices of equal degree >= 3", _lemma5, 9)
_register("thm_tth1_1", "k=5, n>=9: maximum is n/2 - (5-2sqrt6)/6, attained exactly by omega1",
          _fixed_gamma("thm_tth1_1", 5, 9, [9, 10], "omega1"), 12)
_register("thm_tth1_2", "k=6, n>=11: maximum is n/2 - (5-2sqrt6)/6, attained exactly by omega3",
          _fixed_gamma("thm_tth1_2", 6, 11, [11, 12], "omega3"), 12)
_register("rem7_1", "k=5, n=8: maximum 4, attained exactly by cubic graphs", _remark("rem7_1", 8, 5), 8)
_register("rem7_2", "k=6, n=10: maximum 5, attained exactly by cubic graphs", _remark("rem7_2", 10, 6), 10)
_register("thm_basth1_1", "n>=2k-1: maximum n/2 - (5-2sqrt6)/6, attained exactly by lambda1",
          _general("thm_basth1_1", [3, 4, 5], 3, "first"), 12)
_register("thm_basth1_2", "n=2k-2: maximum n/2, attained exactly by cubic graphs",
          _general("thm_basth1_2", [3, 4, 5, 6], 3, "cubic"), 12)
_register("thm_tth3_1", "k=5, n>=9, outside omega1: maximum n/2 - (6-(2sqrt3+sqrt6))/3, attained exactly by omega5",
          _fixed_gamma("thm_tth3_1", 5, 9, [9, 10], "omega5", "omega1"), 12)
_register("thm_tth3_2", "k=6, n>=11, outside omega3: maximum n/2 - (6-(2sqrt3+sqrt6))/3, attained exactly by omega7",
          _fixed_gamma("thm_tth3_2", 6, 11, [11, 12], "omega7", "omega3"), 12)
_register("thm_basth2_1", "k>=4, n>=2k-1, outside lambda1: maximum attained exactly by gamma2",
          _general("thm_basth2_1", [4, 5], 4, "second"), 12)
_register("thm_basth2_2", "k>=4, n=2k-2, not cubic: maximum attained exactly by gamma2",
          _general("thm_basth2_2", [4, 5, 6], 4, "second_cubic"), 12)
_register("corollary_final_1", "k=5, n>=9: omega1 holds the largest value and omega5 the second",
          _corollary("corollary_final_1", 5, 9, [9, 10], "omega1", "omega5", [_OMEGA_NOTE]), 12)
_register("corollary_final_2", "k=6, n>=11: omega7 holds the largest value and omega8 the second (as published)",
          _corollary("corollary_final_2", 6, 11, [11, 12], "omega7", "omega8", [_OMEGA_NOTE]), 12)
_register("thm_final_1", "k>=4, n>=2k-1: lambda1 first, gamma2 second",
          _general("thm_final_1", [4, 5], 4, "rank"), 12)
_register("thm_final_2", "k>=4, n=2k-2: cubic graphs first, gamma2 second",
          _general("thm_final_2", [4, 5, 6], 4, "rank_cubic"), 12)


def verify_claim(claim_id: str, n: Optional[int] = None, k: Optional[int] = None, workers: int = 1) -> VerificationResult:
    """Run one claim from :data:`CLAIMS`; ``n`` and ``k`` override the default sample."""
    claim = CLAIMS.get(claim_id)
    if claim is None:
        raise ClaimError(f"unknown claim {claim_id!r}")
    if n is not None and n > claim.ceiling:
        raise ClaimError(f"{claim_id}: n={n} exceeds the ceiling {claim.ceiling}")
    if workers < 1:
        raise ClaimError("workers must be >= 1")
    res = claim.run(n, k, workers)
    res.claim_id = claim_id
    if claim_id.startswith("thm_tth3"):
        res.notes.append(_OMEGA_NOTE)
    if claim_id == "thm_tth3_2":
        res.notes.append("the proof of this case names omega5; the statement's omega7 is what is checked")
    return res
