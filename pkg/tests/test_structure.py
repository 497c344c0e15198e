import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import corpus, graphs
from minkconn.connectivity import EDGE, VERTEX, is_minimally_connected
from minkconn.graph import build_graph, complete, complete_bipartite, components, cycle, induced_subgraph, mask_of
from minkconn.spectral import spectral_radius
from minkconn.structure import (
    check_global_bounds,
    check_subgraph_bounds,
    degree_k_census,
    forest_check,
    large_subgraph_threshold,
    level_constants,
    level_sets,
    order_hypothesis,
    subset_edge_counts,
    theorem_1_1_report,
)


def by_id(reports):
    return {r.bound_id: r for r in reports}


class TestSubsetCounts:
    @given(graphs(max_n=10))
    def test_matches_direct_count(self, g):
        counts = subset_edge_counts(g)
        for mask in range(1 << g.n):
            assert counts[mask] == induced_subgraph(g, mask).num_edges if mask else counts[0] == 0

    def test_c4(self):
        assert subset_edge_counts(cycle(4))[0b1111] == 4


class TestSubgraphBounds:
    def test_thresholds(self):
        assert large_subgraph_threshold(3, EDGE) == 12
        assert large_subgraph_threshold(3, VERTEX) == 11
        with pytest.raises(ValueError):
            large_subgraph_threshold(3, "arc")

    def test_k25_tight_and_extremal(self):
        g = complete_bipartite(2, 7)
        rep = by_id(check_subgraph_bounds(g, 2, VERTEX))
        assert not rep["thm1.0-a"].failed
        b = rep["thm1.0-b"]
        assert b.applicable and b.tight and b.extremal and not b.failed
        assert subset_edge_counts(g)[g.all_mask] == 2 * (7 - 2)

    def test_k26_seven_vertex_subset(self):
        g = complete_bipartite(2, 8)
        s = mask_of([0, 1, 2, 3, 4, 5, 6])
        assert subset_edge_counts(g)[s] == 10 == 2 * (7 - 2)
        assert not any(r.failed for r in check_subgraph_bounds(g, 2, VERTEX))

    def test_cycle_edge_mode(self):
        rep = by_id(check_subgraph_bounds(cycle(6), 2, EDGE))
        assert rep["thm1.0-a"].holds
        assert not rep["thm1.0-b"].applicable

    def test_violation_reported(self):
        rep = by_id(check_subgraph_bounds(complete(6), 2, VERTEX))
        assert rep["thm1.0-a"].failed
        assert rep["thm1.0-a"].lhs > rep["thm1.0-a"].rhs

    def test_large_complete_bipartite_passes(self):
        g = complete_bipartite(3, 20)
        assert not any(r.failed for r in check_subgraph_bounds(g, 3, VERTEX))

    def test_dense_non_bipartite_subgraph_fails(self):
        # K_{2,6} with an edge moved into the big side: {0,1,2,3,5,6} spans 9 > 2(6 - 2)
        g = complete_bipartite(2, 8).with_edges([(2, 3)]).without_edges([(0, 4)])
        b = by_id(check_subgraph_bounds(g, 2, VERTEX))["thm1.0-b"]
        assert b.failed and (b.lhs, b.rhs) == (9, 8) and b.witness == [0, 1, 2, 3, 5, 6]

    def test_sampled_path(self):
        g = complete_bipartite(3, 24)
        reps = by_id(check_subgraph_bounds(g, 3, EDGE, samples=20000, seed=1))
        assert "sampled" in reps["thm1.0-a"].note
        b = reps["thm1.0-b"]
        assert b.tight and b.extremal and not b.failed
        assert b.lhs == 3 * (len(b.witness) - 3) and b.witness[:3] == [0, 1, 2]


class TestGlobalBounds:
    def test_k25(self):
        rep = by_id(check_global_bounds(complete_bipartite(2, 7), 2, VERTEX))
        assert (rep["mader-kn"].lhs, rep["mader-kn"].rhs) == (10, 11)
        knk = rep["mader-knk"]
        assert knk.applicable and knk.tight and knk.extremal and not knk.failed

    def test_c7_edge(self):
        rep = by_id(check_global_bounds(cycle(7), 2, EDGE))["mader-knk"]
        assert (rep.lhs, rep.rhs, rep.holds, rep.tight) == (7, 10, True, False)

    def test_cai_on_k5(self):
        assert is_minimally_connected(complete(5), 4, VERTEX)
        cai = by_id(check_global_bounds(complete(5), 4, VERTEX))["cai"]
        assert cai.applicable and (cai.lhs, cai.rhs) == (10, 81 // 8) and cai.tight

    def test_lemma23_needs_hypothesis(self):
        rep = by_id(check_global_bounds(complete(6), 2, EDGE))["lemma2.3"]
        assert not rep.applicable and rep.witness == [0, 1, 2, 3, 4, 5]

    def test_uniqueness_regimes(self):
        k = 3
        vertex = by_id(check_global_bounds(complete_bipartite(k, 3 * k - 1), k, VERTEX))["mader-knk"]
        edge = by_id(check_global_bounds(complete_bipartite(k, 3 * k - 1), k, EDGE))["mader-knk"]
        assert vertex.uniqueness_applies and not edge.uniqueness_applies

    @pytest.mark.parametrize("n,k", [(6, 2), (6, 3), (7, 2), (7, 3)])
    def test_wheel_equality_is_flagged(self, n, k):
        # a tight non-bipartite graph inside the uniqueness regime must fail
        g = complete_bipartite(k, n).with_edges([(k, k + 1)]).without_edges([(0, k)])
        rep = by_id(check_global_bounds(g, k, VERTEX))["mader-knk"]
        assert rep.tight and rep.extremal is False
        assert rep.failed == rep.uniqueness_applies


class TestDegreeAndForest:
    def test_census(self):
        assert degree_k_census(cycle(6), 2) == 6
        assert degree_k_census(complete_bipartite(2, 7), 2) == 5
        assert degree_k_census(complete_bipartite(3, 10), 3) == 7

    @pytest.mark.parametrize("g,k", [(complete_bipartite(2, 7), 2), (cycle(9), 2), (complete(5), 4)])
    def test_forest_holds(self, g, k):
        assert forest_check(g, k) == (True, None)

    def test_cycle_found(self):
        g = build_graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
        ok, cyc = forest_check(g, 1)
        assert not ok and sorted(cyc) == [0, 1, 2]

    @given(graphs(max_n=10))
    def test_forest_against_edge_count(self, g):
        ok, cyc = forest_check(g, 2)
        rest = g.all_mask & ~mask_of(v for v, d in enumerate(g.degrees()) if d == 2)
        h = induced_subgraph(g, rest) if rest else None
        if h is None:
            assert ok
            return
        assert ok == (h.num_edges == h.n - len(components(h)))
        if not ok:
            assert len(cyc) >= 3
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                assert g.has_edge(a, b) and rest >> a & 1

    @pytest.mark.parametrize("k", [2, 3])
    def test_corpus_degree_k(self, k):
        # minimally k-edge-connected graphs have at least k + 1 vertices of degree k
        for n in range(k + 1, 8):
            for g in corpus(n, k):
                if is_minimally_connected(g, k, EDGE):
                    assert degree_k_census(g, k) >= k + 1


class TestLevelSets:
    def test_constants(self):
        alpha, beta, gamma0 = level_constants(3)
        assert alpha == Fraction(1, 288) and beta == Fraction(5, 864) and gamma0 == Fraction(1, 6)
        assert order_hypothesis(3) == 18 * 3 * 288**2 == 4478976

    @pytest.mark.parametrize("n,whole", [(15, True), (100, True), (400, False)])
    def test_complete_bipartite_gamma(self, n, whole):
        # right-side coordinate ratio is k / rho = 3 / sqrt(3(n-3)); compare with 1/6
        g = complete_bipartite(3, n)
        assert (3 / math.sqrt(3 * (n - 3)) >= 1 / 6) == whole
        lv = level_sets(g, spectral_radius(g), 3)
        assert lv.L_gamma0 == (g.all_mask if whole else 0b111)

    def test_k28_report(self):
        rep = theorem_1_1_report(complete_bipartite(2, 10), 2)
        assert rep.size_L == 10

    def test_k3_497(self):
        rep = theorem_1_1_report(complete_bipartite(3, 500), 3)
        assert rep.L == [0, 1, 2] and rep.coord_ok and rep.degree_ok
        assert not rep.hyp_n_ok
        assert rep.hyp_rho_ok == (rep.rho**2 >= 3 * 497)

    @given(graphs(min_n=2, max_n=12, connected=True))
    def test_nesting(self, g):
        for k in (2, 3, 4):
            lv = level_sets(g, spectral_radius(g), k)
            assert lv.L_gamma0 & ~lv.L_beta == 0
            assert lv.L_beta & ~lv.L_alpha == 0
            assert lv.L_gamma0 >> lv.ustar & 1

    @given(st.integers(2, 4), st.integers(1, 60))
    def test_complete_bipartite_past_crossover(self, k, extra):
        # k / sqrt(k(n-k)) < 1/(2k) exactly when n > 4k^3 + k
        n = 4 * k**3 + k + extra
        rep = theorem_1_1_report(complete_bipartite(k, n), k)
        assert rep.L == list(range(k)) and rep.coord_ok and rep.degree_ok

    def test_k_one_rejected(self):
        with pytest.raises(ValueError):
            level_sets(cycle(5), spectral_radius(cycle(5)), 1)


class TestSubgraphUniquenessBand:
    def test_band_equality_is_recorded_not_judged(self):
        # k=2 vertex mode: |H|=6 sits in [5k-4, k(k+5)/2)
        g = complete_bipartite(2, 6).with_edges([(2, 3)]).without_edges([(0, 2)])
        rep = by_id(check_subgraph_bounds(g, 2, VERTEX))["thm1.0-b"]
        assert (rep.lhs, rep.rhs) == (8, 8)
        assert rep.extremal is False and not rep.uniqueness_applies and not rep.failed
        assert "not judged" in rep.note

    def test_band_kknk_is_not_judged(self):
        rep = by_id(check_subgraph_bounds(complete_bipartite(2, 6), 2, VERTEX))["thm1.0-b"]
        assert rep.extremal and not rep.uniqueness_applies

    def test_above_band_is_judged(self):
        rep = by_id(check_subgraph_bounds(complete_bipartite(2, 9), 2, VERTEX))["thm1.0-b"]
        assert rep.extremal and rep.uniqueness_applies

    def test_tree_case_flagged(self):
        rep = by_id(check_subgraph_bounds(build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)]), 1, VERTEX))["thm1.0-b"]
        assert "trees" in rep.note
