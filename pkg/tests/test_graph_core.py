import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st
from networkx.algorithms.isomorphism import GraphMatcher

from oracles import decode_graph6
from randic_extremal.graph6 import Graph6Error, parse_graph6, write_graph6
from randic_extremal.graph_core import (
    DegreeProfile,
    EdgeTypeSignature,
    Graph,
    GraphError,
    automorphism_orbits,
    canonical_code,
    canonical_form,
    cyclomatic_number,
    degree_profile,
    edge_type_signature,
    is_connected,
)


@st.composite
def graphs(draw, min_n=1, max_n=11):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def connected_graphs(draw, min_n=1, max_n=11):
    """A random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    if pairs:
        edges |= set(draw(st.lists(st.sampled_from(pairs), unique=True, max_size=2 * n)))
    return Graph.from_edges(n, sorted(edges))


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


# -- graph6 ---------------------------------------------------------------


def test_graph6_hand_examples():
    n, edges = parse_graph6("D?{")
    assert n == 5 and sorted(edges) == [(0, 4), (1, 4), (2, 4), (3, 4)]
    assert parse_graph6("@") == (1, [])
    assert write_graph6(4, [(a, b) for a in range(4) for b in range(a + 1, 4)]) == "C~"


@given(graphs(min_n=0, max_n=20))
def test_graph6_round_trip_against_reference_decoder(g):
    text = g.to_graph6()
    n, edges = decode_graph6(text)
    assert n == g.n and edges == set(g.edges())
    assert Graph.from_graph6(text) == g


def test_graph6_large_order_header():
    g = Graph.from_edges(64, [(0, 63), (5, 6)])
    text = g.to_graph6()
    assert text[0] == "~"
    assert Graph.from_graph6(text) == g


def test_graph6_accepts_header_line():
    assert parse_graph6(">>graph6<<C~")[0] == 4


@pytest.mark.parametrize("bad", ["", "C", "C~~", "C!", "B~", "~??"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_graph6_error_names_offset():
    with pytest.raises(Graph6Error) as info:
        parse_graph6("C!")
    assert info.value.offset == 1


# -- construction and queries ---------------------------------------------


def test_from_edges_validation():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(2, (2, 0))


def test_edits_and_queries():
    g = Graph.from_edges(4, [(0, 1), (1, 2)])
    assert g.m == 2 and g.degrees() == [1, 2, 1, 0]
    h = g.add_edge(2, 3).add_vertex([0, 3])
    assert h.n == 5 and h.edges() == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
    assert h.remove_edge(0, 4).has_edge(0, 4) is False
    with pytest.raises(GraphError):
        g.add_edge(0, 1)
    with pytest.raises(GraphError):
        g.remove_edge(0, 2)
    assert g.relabel([3, 2, 1, 0]).edges() == [(1, 2), (2, 3)]


def test_profiles_and_signatures():
    # triangle with a pendant edge: degrees 3, 2, 2, 1
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
    assert degree_profile(g) == {1: 1, 2: 2, 3: 1}
    sig = edge_type_signature(g)
    assert sig == {(2, 3): 2, (2, 2): 1, (1, 3): 1}
    assert sig == EdgeTypeSignature({(3, 2): 2, (2, 2): 1, (3, 1): 1, (4, 4): 0})
    assert sig.implied_profile() == degree_profile(g)
    assert cyclomatic_number(g) == 1


def test_cyclomatic_requires_connected():
    with pytest.raises(GraphError):
        cyclomatic_number(Graph.from_edges(4, [(0, 1), (2, 3)]))


@given(graphs())
def test_endpoint_identity(g):
    # sum over j of m_ij (with m_ii counted twice) equals i * n_i
    sig = edge_type_signature(g)
    prof = degree_profile(g)
    slots = sig.endpoint_counts()
    for i, c in prof.items():
        if i:
            assert slots.get(i, 0) == i * c
    assert sig.m == g.m


@given(graphs())
def test_connectivity_matches_networkx(g):
    assert is_connected(g) == (g.n == 0 or nx.is_connected(to_nx(g)))


# -- canonical labelling --------------------------------------------------


@given(graphs(max_n=12), st.randoms(use_true_random=False))
def test_canonical_code_is_relabelling_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_code(g.relabel(perm)) == canonical_code(g)
    assert canonical_form(g).n == g.n and canonical_form(g).m == g.m


def test_canonical_code_separates_non_isomorphic():
    rnd = random.Random(7)
    seen: dict[bytes, nx.Graph] = {}
    for _ in range(400):
        n = rnd.randint(5, 8)
        m = rnd.randint(n - 1, n + 4)
        h = nx.gnm_random_graph(n, m, seed=rnd.randint(0, 10**9))
        g = Graph.from_edges(n, h.edges())
        code = canonical_code(g)
        if code in seen:
            assert nx.is_isomorphic(seen[code], h)
        for other_code, other in seen.items():
            if other_code != code and other.number_of_nodes() == n:
                assert not nx.is_isomorphic(other, h)
        seen[code] = h


@given(graphs(max_n=8))
def test_orbits_match_networkx_automorphisms(g):
    h = to_nx(g)
    expected = list(range(g.n))
    for iso in GraphMatcher(h, h).isomorphisms_iter():
        for v, w in iso.items():
            expected[w] = min(expected[w], v)
    # expected[w] is the least vertex mapped onto w, i.e. the orbit minimum
    assert automorphism_orbits(g) == expected


def test_degree_profile_mapping_behaviour():
    p = DegreeProfile({3: 2, 2: 0})
    assert dict(p) == {3: 2} and p.n == 2 and p.delta == 3 and p[5] == 0
