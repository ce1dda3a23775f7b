import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import BOWTIE, C3, C4, C4_CYCLIC, C6, K2, P3, STAR3, graphs, oriented_graphs
from skewperm.graph import Cycle, Graph, GraphError, OrientedGraph, bipartition, enumerate_cycles
from skewperm.orientations import (
    HOLDS,
    REFUTED,
    SAMPLED_HOLDS,
    ConsistencyError,
    OrientationReport,
    all_orientations,
    reverse_edge,
    toward_y_orientation,
    verify_all_orientations_same,
    verify_bipartite_i_relation,
    verify_forest_relation,
    verify_matching_equality,
)
from skewperm.poly import Poly, char_poly
from skewperm.sachs import CycleParity, cycle_parity, perm_poly_adjacency_sachs, perm_poly_skew_sachs
from skewperm.spectra import multiset_equal, roots

VERIFIERS = [
    verify_all_orientations_same,
    verify_matching_equality,
    verify_bipartite_i_relation,
    verify_forest_relation,
]


def P(*cs):
    return Poly.from_ints(cs)


def test_all_orientations_counts():
    assert len(list(all_orientations(K2))) == 2
    assert [og.bits for og in all_orientations(C3)] == list(range(8))
    assert [og.bits for og in all_orientations(Graph(3))] == [0]


def test_reverse_edge():
    assert reverse_edge(reverse_edge(C4_CYCLIC, 2), 2) == C4_CYCLIC
    k2 = OrientedGraph(K2, 0)
    assert reverse_edge(k2, 0) == OrientedGraph(K2, 1)
    flipped = reverse_edge(C4_CYCLIC, 0)
    assert cycle_parity(flipped, Cycle((0, 1, 2, 3))) is CycleParity.ODDLY
    with pytest.raises(IndexError):
        reverse_edge(k2, 1)


def test_toward_y_examples():
    assert sorted(toward_y_orientation(C4, bipartition(C4)).arcs) == [(0, 1), (0, 3), (2, 1), (2, 3)]
    assert toward_y_orientation(K2, ({0}, {1})).arcs == [(0, 1)]
    assert sorted(toward_y_orientation(P3, ({0, 2}, {1})).arcs) == [(0, 1), (2, 1)]
    with pytest.raises(GraphError):
        toward_y_orientation(C3, ({0}, {1, 2}))
    with pytest.raises(GraphError):
        toward_y_orientation(K2, ({0}, {0, 1}))


# same-poly ---------------------------------------------------------------------------


def test_same_poly_examples():
    r = verify_all_orientations_same(C3)
    assert r.verdict == HOLDS and r.examined == 8 and r.witness is None
    r = verify_all_orientations_same(C4)
    assert r.verdict == REFUTED
    assert {r.witness.poly_a, r.witness.poly_b} == {P(1, 0, -4, 0, 0), P(1, 0, -4, 0, 4)}
    assert r.witness.bits_a == 0
    assert perm_poly_skew_sachs(OrientedGraph(C4, r.witness.bits_b)) == r.witness.poly_b
    for t in (P3, STAR3, Graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])):
        assert verify_all_orientations_same(t).verdict == HOLDS


def test_report_json_shape():
    r = verify_all_orientations_same(C4)
    data = json.loads(r.dumps())
    assert list(data) == ["graph6", "property", "verdict", "examined", "witness", "seed"]
    assert data["graph6"] == "Cl" and data["property"] == "same-poly" and data["seed"] is None
    assert set(data["witness"]) == {"bits_a", "bits_b", "poly_a", "poly_b"}
    assert data["witness"]["poly_a"] == ["1", "0", "-4", "0", "0"]


# matching-eq -------------------------------------------------------------------------


def test_matching_eq_examples():
    assert verify_matching_equality(C3).verdict == HOLDS
    r = verify_matching_equality(C4)
    assert r.verdict == REFUTED
    # bitmask 0 is already oddly oriented, so it is the first witness
    assert r.witness.bits_a == 0 and r.witness.bits_b is None
    assert r.witness.poly_a == P(1, 0, -4, 0, 0) and r.witness.poly_b == P(1, 0, -4, 0, 2)
    evenly = perm_poly_skew_sachs(C4_CYCLIC)
    assert evenly == P(1, 0, -4, 0, 4) and evenly != r.witness.poly_b
    r = verify_matching_equality(BOWTIE)
    assert r.verdict == HOLDS and r.examined == 64


# bipartite-i -------------------------------------------------------------------------


def test_bipartite_i_examples():
    assert verify_bipartite_i_relation(C4).verdict == HOLDS
    assert verify_bipartite_i_relation(P3).verdict == HOLDS
    r = verify_bipartite_i_relation(C3)
    assert r.verdict == REFUTED and r.examined == 8


def test_bipartite_i_sampled_non_bipartite_still_refuted():
    r = verify_bipartite_i_relation(C3, budget=4, seed=3)
    assert r.verdict == REFUTED and r.examined == 4 and r.seed == 3


# forest ----------------------------------------------------------------------------


def test_forest_examples():
    assert verify_forest_relation(P3).verdict == HOLDS
    assert multiset_equal(roots(P(1, 0, -2, 0)), roots(char_poly(P3.adjacency_matrix())), 1e-12)
    r = verify_forest_relation(STAR3)
    assert r.verdict == HOLDS and r.examined == 8
    r = verify_forest_relation(C4)
    assert r.verdict == REFUTED
    assert r.witness.poly_a == P(1, 0, -4, 0, 0)


# sweep semantics ---------------------------------------------------------------------


def test_budget_sampling_is_seeded():
    g = Graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
    a = verify_all_orientations_same(g, budget=16, seed=11)
    b = verify_all_orientations_same(g, budget=16, seed=11)
    assert a == b
    assert a.verdict == SAMPLED_HOLDS and a.examined == 16 and a.seed == 11


def test_sampled_refutation_carries_seed():
    r = verify_all_orientations_same(C6, budget=8, seed=5)
    assert r.verdict in (REFUTED, SAMPLED_HOLDS) and r.seed == 5
    if r.verdict == REFUTED:
        assert r.witness.poly_a != r.witness.poly_b


def test_invalid_budget():
    with pytest.raises(ValueError):
        verify_all_orientations_same(C4, budget=0)


@pytest.mark.parametrize("verify", VERIFIERS)
def test_halving_gives_identical_reports(verify, connected):
    for g in connected[:150]:
        if g.m > 10:
            continue
        assert verify(g, halve=True) == verify(g, halve=False)


@pytest.mark.parametrize("verify", VERIFIERS)
def test_thread_count_does_not_change_reports(verify):
    for g in (C4, C6, BOWTIE, Graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])):
        assert verify(g, threads=1) == verify(g, threads=4)


def test_consistency_error_carries_report():
    rep = OrientationReport("Bw", "same-poly", HOLDS, 8)
    err = ConsistencyError("boom", rep)
    assert err.report is rep and isinstance(err, AssertionError)


@given(graphs(max_n=6))
def test_refutations_replay(g):
    for verify in VERIFIERS:
        r = verify(g)
        if r.verdict != REFUTED or r.witness is None:
            continue
        w = r.witness
        assert perm_poly_skew_sachs(OrientedGraph(g, w.bits_a)) == w.poly_a
        if w.bits_b is not None:
            assert perm_poly_skew_sachs(OrientedGraph(g, w.bits_b)) == w.poly_b
        assert w.poly_a != w.poly_b


# toward-Y invariants ------------------------------------------------------------------


@given(graphs(max_n=7))
def test_toward_y_signs(g):
    bip = bipartition(g)
    if bip is None:
        return
    pg = perm_poly_adjacency_sachs(g)
    ps = perm_poly_skew_sachs(toward_y_orientation(g, bip))
    for l in range(g.n // 2 + 1):
        assert ps[2 * l] == (-1) ** l * pg[2 * l]


def _no_4l_cycles(g):
    return all(c.length % 4 for c in enumerate_cycles(g))


def test_toward_y_matches_adjacency_spectrum(trees):
    cases = [C6] + [t for t in trees]
    for g in cases:
        assert _no_4l_cycles(g)
        og = toward_y_orientation(g, bipartition(g))
        assert multiset_equal(
            roots(perm_poly_skew_sachs(og), 1e-8), roots(char_poly(g.adjacency_matrix()), 1e-8), 1e-8
        )


@given(oriented_graphs(max_n=6), st.integers(0, 40))
def test_reverse_edge_flips_exactly_one_bit(og, e):
    if og.graph.m == 0:
        return
    e %= og.graph.m
    assert (reverse_edge(og, e).bits ^ og.bits) == 1 << e


def test_contradiction_raises(monkeypatch):
    import skewperm.orientations as mod

    monkeypatch.setattr(mod, "has_even_cycle", lambda g: True)
    with pytest.raises(ConsistencyError) as info:
        verify_all_orientations_same(C3)
    assert info.value.report.verdict == HOLDS
