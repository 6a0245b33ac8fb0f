import json
from fractions import Fraction

import pytest

from randic_extremal.enumerator import EnumSpec, count_graphs, enumerate_graphs
from randic_extremal.exact_radical import sign
from randic_extremal.families import CUBIC_CATALOG, FamilySpec, is_member
from randic_extremal.graph_core import Graph, edge_type_signature
from randic_extremal.randic import randic_exact
from randic_extremal.verifier import (
    CLAIMS,
    COUNTEREXAMPLE,
    PASS,
    ClaimError,
    VerificationResult,
    check_degree_identities,
    check_mii_bound,
    extremal_search,
    mii_violations,
    probe_transform_monotonicity,
    verify_claim,
)


def test_degree_identity_examples():
    assert check_degree_identities(Graph.from_graph6("D?{"))  # K_{1,4}
    assert check_degree_identities(CUBIC_CATALOG["petersen"])
    with pytest.raises(ValueError):
        check_degree_identities(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_degree_identities_exhaustive_small():
    for n in range(2, 8):
        for m in range(n - 1, n * (n - 1) // 2 + 1):
            for g in enumerate_graphs(EnumSpec(n, m)):
                assert check_degree_identities(g)


def test_mii_examples():
    assert check_mii_bound(CUBIC_CATALOG["K4"])  # n_3 = n, precondition fails
    pendant_triangle = Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
    assert check_mii_bound(pendant_triangle) and mii_violations(pendant_triangle) == []


def test_remark_value_and_cubic_maximisers():
    rep = extremal_search(8, 5)
    assert rep.ranked_values == [4]
    assert len(rep.levels[0].maximizers) == count_graphs(EnumSpec(8, 12, max_degree=3))
    assert all(set(g.degrees()) == {3} for g in rep.levels[0].graphs())


def test_n9_k5_first_and_second():
    rep = extremal_search(9, 5, top_t=2)
    first, second = rep.levels
    assert str(first.value) == "11/3 + 1/3*sqrt(6)"
    assert all(is_member(g, FamilySpec("lambda1", 9, 5)) for g in first.graphs())
    assert second.value == FamilySpec("gamma2", 9, 5).expected_value
    assert set(second.signatures) == {FamilySpec("gamma2", 9, 5).edge_signature}
    for lv in rep.levels:
        for g in lv.graphs():
            assert randic_exact(g) == lv.value


@pytest.mark.parametrize("n,k,top", [(6, 2, 3), (7, 3, 4), (8, 4, 3), (8, 3, 2)])
def test_screen_is_sound(n, k, top):
    a = extremal_search(n, k, top_t=top)
    b = extremal_search(n, k, top_t=top, screen=False)
    assert a == b


@pytest.mark.parametrize("n,k", [(6, 1), (7, 2)])
def test_full_ranking_accounts_for_every_class(n, k):
    size = count_graphs(EnumSpec.cyclic(n, k))
    rep = extremal_search(n, k, top_t=size)
    assert sum(len(lv.maximizers) for lv in rep.levels) == rep.class_size == size
    vals = rep.ranked_values
    assert all(sign(b - a) == -1 for a, b in zip(vals, vals[1:]))


def test_workers_do_not_change_reports():
    one = verify_claim("thm_tth1_1", n=9, workers=1)
    two = verify_claim("thm_tth1_1", n=9, workers=2)
    assert one.status == PASS
    assert one.to_json() == two.to_json()
    assert extremal_search(9, 4, 3, workers=2) == extremal_search(9, 4, 3)


def test_small_claims_pass():
    for cid in ("lemma2", "lemma5", "rem7_1", "thm_basth1_2"):
        res = verify_claim(cid, n=7) if cid in ("lemma2", "lemma5") else verify_claim(cid)
        assert res.status == PASS, res.to_text()


def test_probe_reports_margins():
    res = probe_transform_monotonicity("T1", range(2, 8), range(0, 4))
    assert res.status == PASS
    assert res.details["T1.sites"] > 0 and res.details["T1.violations"] == 0


def test_cubic_k6_equality_ties_are_reported():
    res = verify_claim("thm_basth2_2", k=6)
    assert res.status == COUNTEREXAMPLE
    codes = {w.graph6 for w in res.witnesses}
    assert {"IkC_GKJAw", "IkK?GKFAw"} <= codes
    target = FamilySpec("gamma2", 10, 6).expected_value
    for w in res.witnesses:
        g = Graph.from_graph6(w.graph6)
        assert randic_exact(g) == target
        assert not is_member(g, FamilySpec("gamma2", 10, 6))
        assert edge_type_signature(g) == {(2, 2): 3, (2, 3): 2, (3, 4): 4, (4, 4): 6}


def test_tie_identity():
    # three (2,2) edges and six (4,4) edges weigh exactly as much as nine (3,3) edges
    assert 3 * Fraction(1, 2) + 6 * Fraction(1, 4) == 9 * Fraction(1, 3)


def test_result_invariants_and_serialisation():
    with pytest.raises(ValueError):
        VerificationResult("x", COUNTEREXAMPLE)
    res = verify_claim("rem7_1")
    data = json.loads(res.to_json())
    assert data["claim_id"] == "rem7_1" and data["status"] == PASS
    assert res.to_text().startswith("claim: rem7_1\nstatus: PASS")


@pytest.mark.parametrize(
    "cid,kw",
    [("nope", {}), ("thm_tth1_1", {"n": 8}), ("thm_tth1_1", {"k": 6}), ("rem7_1", {"n": 9}),
     ("thm_basth1_1", {"k": 2}), ("thm_tth3_1", {"n": 8}), ("thm_tth1_1", {"n": 40}), ("lemma2", {"workers": 0})],
)
def test_claim_errors(cid, kw):
    with pytest.raises(ClaimError):
        verify_claim(cid, **kw)


def test_registry_covers_every_claim():
    expected = {f"lemma1_{p}" for p in ("1", "2", "3", "3a", "3b", "3c", "4", "5")}
    expected |= {"lemma2", "cor3", "cor4", "lemma5", "rem7_1", "rem7_2"}
    expected |= {f"thm_{t}_{i}" for t in ("tth1", "tth3", "basth1", "basth2", "final") for i in (1, 2)}
    expected |= {"corollary_final_1", "corollary_final_2"}
    assert set(CLAIMS) == expected
