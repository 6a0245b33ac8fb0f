import pytest

from randic_extremal.families import (
    CUBIC_CATALOG,
    FAMILY_NAMES,
    OMEGA_BASE,
    FamilyError,
    FamilySpec,
    construct_member,
    cubic_graph,
    enumerate_members,
    family_signature,
    is_member,
    min_order,
)
from randic_extremal.graph_core import (
    Graph,
    cyclomatic_number,
    degree_profile,
    edge_type_signature,
    is_connected,
)
from randic_extremal.randic import FamilyValueId, family_value, randic_exact, randic_of_signature

GENERAL = ("lambda1", "gamma1", "lambda2", "gamma2")
OMEGAS = tuple(f"omega{i}" for i in range(1, 9))
UPSILONS = tuple(f"upsilon{i}" for i in range(1, 7))


def test_reference_signature_examples():
    assert family_signature(FamilySpec("lambda1", 9, 5)) == {(3, 3): 11, (2, 3): 2}
    assert family_signature(FamilySpec("gamma2", 10, 5)) == {(3, 4): 4, (3, 3): 6, (2, 3): 2, (2, 2): 2}
    assert family_signature(FamilySpec("gamma1", 13, 6)) == {(3, 3): 16, (2, 3): 1, (1, 2): 1}


@pytest.mark.parametrize("omega", OMEGAS)
def test_omega_lists_specialise_general_families(omega):
    k = FamilySpec.of(omega, 14).k
    for n in range(min_order(omega), min_order(omega) + 4):
        spec = FamilySpec.of(omega, n)
        base = FamilySpec(OMEGA_BASE[omega], n, k)
        assert spec.edge_signature == base.edge_signature


@pytest.mark.parametrize("name", GENERAL)
@pytest.mark.parametrize("k", [3, 4, 5, 6, 7])
def test_general_family_identities(name, k):
    try:
        start = min_order(name, k)
    except FamilyError:
        pytest.skip("k below the family minimum")
    for n in range(start, start + 5):
        spec = FamilySpec(name, n, k)
        sig = spec.edge_signature
        assert sig.m == n + k - 1
        assert sig.implied_profile().n == n
        assert randic_of_signature(sig) == family_value(FamilyValueId(name.upper(), n, k))
        assert spec.expected_value == randic_of_signature(sig)
        g = construct_member(spec)
        assert is_connected(g) and cyclomatic_number(g) == k
        assert edge_type_signature(g) == sig
        assert randic_exact(g) == spec.expected_value


@pytest.mark.parametrize("k,expected", [(3, {"lambda1": 5, "gamma1": 7}), (5, {"lambda1": 9, "gamma1": 11, "lambda2": 10, "gamma2": 8})])
def test_minimum_orders(k, expected):
    for name, n in expected.items():
        assert min_order(name, k) == n


@pytest.mark.parametrize("name", OMEGAS + UPSILONS)
def test_fixed_k_families_construct(name):
    start = min_order(name)
    for n in range(start, start + 4):
        spec = FamilySpec.of(name, n)
        g = construct_member(spec)
        assert is_member(g, spec)
        prof = degree_profile(g)
        assert sum(i * c for i, c in prof.items()) == 2 * (n + spec.k - 1)


def test_upsilon_handshake_and_omega_hosts():
    # an edge-type family's degree profile must satisfy the degree-count family it sits in
    for omega, host in (("omega1", "upsilon1"), ("omega3", "upsilon3"), ("omega5", "upsilon5"), ("omega7", "upsilon6")):
        n = max(min_order(omega), min_order(host))
        assert FamilySpec.of(omega, n).degree_profile == FamilySpec.of(host, n).degree_profile


def test_petersen_is_upsilon3():
    assert is_member(CUBIC_CATALOG["petersen"], FamilySpec.of("upsilon3", 10))


def test_cycle_is_not_lambda1():
    c9 = Graph.from_edges(9, [(i, (i + 1) % 9) for i in range(9)])
    assert not is_member(c9, FamilySpec("lambda1", 9, 5))


def test_regular3():
    spec = FamilySpec.of("regular3", 8)
    assert spec.k == 5
    g = construct_member(spec)
    assert set(g.degrees()) == {3} and randic_exact(g) == 4


@pytest.mark.parametrize("order", [4, 6, 8, 10, 12, 14, 16, 18])
def test_cubic_catalog(order):
    g = cubic_graph(order)
    assert g.n == order and set(g.degrees()) == {3} and is_connected(g)


def test_enumerated_members_agree_with_membership():
    spec = FamilySpec("lambda1", 9, 5)
    members = list(enumerate_members(spec))
    assert members and all(is_member(g, spec) for g in members)
    assert any(edge_type_signature(g) == edge_type_signature(construct_member(spec)) for g in members)


@pytest.mark.parametrize(
    "args",
    [("lambda1", 8, 5), ("lambda2", 9, 5), ("gamma2", 10, 3), ("omega1", 9, 6),
     ("upsilon1", 7, 5), ("regular3", 9, 5), ("nope", 9, 5)],
)
def test_infeasible_specs(args):
    with pytest.raises(FamilyError):
        FamilySpec(*args)


def test_of_requires_k_for_general_families():
    with pytest.raises(FamilyError):
        FamilySpec.of("lambda1", 9)
    with pytest.raises(FamilyError):
        cubic_graph(7)
    with pytest.raises(FamilyError):
        family_signature(FamilySpec.of("upsilon1", 9))
    assert set(OMEGAS + UPSILONS + GENERAL + ("regular3",)) == set(FAMILY_NAMES)
