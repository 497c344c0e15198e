import math

import numpy as np
import pytest

from conftest import corpus
from minkconn.connectivity import EDGE, VERTEX, brute_force_connectivity
from minkconn.graph import build_graph, canonical_code, complete_bipartite, decode_graph6
from minkconn.scan import SUITES, ScanError, reduce_records, run_suite, scan_graphs, scan_lines, verify_graphs, verify_lines
from minkconn.spectral import spectral_radius


def oracle_population(n, k, kind):
    """Minimal graphs and their radii via exhaustive cuts and numpy's eigensolver."""
    out = {}
    for g in corpus(n, k):
        if brute_force_connectivity(g, kind).value < k:
            continue
        if all(brute_force_connectivity(g.without_edges([e]), kind).value < k for e in g.edges()):
            out[canonical_code(g)] = float(np.linalg.eigvalsh(g.adjacency_matrix())[-1])
    return out


def wheel(n):
    return build_graph(n, [(0, i) for i in range(1, n)] + [(i, i % (n - 1) + 1) for i in range(1, n)])


def bowtie():
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


@pytest.mark.parametrize("n,k,kind", [(5, 2, VERTEX), (5, 2, EDGE), (6, 2, VERTEX), (6, 3, VERTEX), (6, 3, EDGE)])
def test_scan_matches_independent_route(n, k, kind):
    expected = oracle_population(n, k, kind)
    report, records = scan_graphs(list(corpus(n)), k, kind)
    got = {r.graph6: r.rho for r in records if r.minimal}
    assert got.keys() == expected.keys()
    for code, rho in got.items():
        assert rho == pytest.approx(expected[code], abs=1e-10)
    assert report.population == len(expected)


def test_k2_n6():
    report, _ = scan_graphs(list(corpus(6, 2)), 2, VERTEX)
    assert report.argmax_rho["graph6"] == canonical_code(complete_bipartite(2, 6))
    assert report.argmax_rho["rho"] == pytest.approx(math.sqrt(8), abs=1e-10)
    assert report.matches_Kknk and report.near_ties == []


@pytest.mark.parametrize("n", [6, 7])
def test_wheel_beats_k3_at_small_order(n):
    # hub joined to C_{n-1}: rho = 1 + sqrt(n), above sqrt(3(n-3))
    w = wheel(n)
    assert brute_force_connectivity(w, VERTEX).value == 3
    assert all(brute_force_connectivity(w.without_edges([e]), VERTEX).value < 3 for e in w.edges())
    report, records = scan_graphs(list(corpus(n, 3)), 3, VERTEX)
    assert report.argmax_rho["rho"] == pytest.approx(1 + math.sqrt(n), abs=1e-10)
    assert report.argmax_rho["graph6"] == canonical_code(w)
    kknk = canonical_code(complete_bipartite(3, n))
    assert any(r.graph6 == kknk and r.minimal for r in records)
    assert not report.matches_Kknk


def test_bowtie_beats_k23_edge_mode():
    report, _ = scan_graphs(list(corpus(5, 2)), 2, EDGE)
    assert report.argmax_rho["graph6"] == canonical_code(bowtie())
    assert report.argmax_rho["rho"] == pytest.approx((1 + math.sqrt(17)) / 2, abs=1e-10)
    assert not report.matches_Kknk
    # vertex mode is unaffected: the bowtie has a cut vertex
    report, _ = scan_graphs(list(corpus(5, 2)), 2, VERTEX)
    assert report.matches_Kknk


def test_exact_tie_surfaces():
    report, _ = scan_graphs(list(corpus(7, 3)), 3, EDGE)
    assert [t["graph6"] for t in report.near_ties] == ["FJaNw"]
    assert report.argmax_rho["graph6"] == "FBjFw"
    assert report.near_ties[0]["rho"] == pytest.approx(report.argmax_rho["rho"], abs=1e-9)


def test_empty_population():
    report, _ = scan_graphs(list(corpus(5)), 5, VERTEX)
    assert report.population == 0 and report.argmax_rho is None and not report.matches_Kknk


def test_tie_break_is_order_independent():
    records = scan_graphs(list(corpus(7, 3)), 3, EDGE)[1]
    a = reduce_records(records, 3, EDGE).to_dict()
    b = reduce_records(records[::-1], 3, EDGE).to_dict()
    a.pop("scanned"), b.pop("scanned")
    assert a == b


def test_jobs_do_not_change_output():
    gs = list(corpus(6))
    one = scan_graphs(gs, 2, EDGE, jobs=1)
    two = scan_graphs(gs, 2, EDGE, jobs=2)
    assert one[0].to_dict() == two[0].to_dict()
    assert [r.to_dict() for r in one[1]] == [r.to_dict() for r in two[1]]


def test_record_fields():
    _, (rec,) = scan_graphs([complete_bipartite(2, 7)], 2, VERTEX)
    assert rec.to_dict() == {
        "graph6": canonical_code(complete_bipartite(2, 7)),
        "n": 7,
        "e": 10,
        "kappa": 2,
        "kappa_prime": 2,
        "minimal": True,
        "rho": pytest.approx(math.sqrt(10)),
        "degree_k_count": 5,
    }


def test_mixed_orders_rejected():
    with pytest.raises(ScanError):
        scan_graphs([complete_bipartite(2, 5), complete_bipartite(2, 6)], 2, VERTEX)


def test_bad_lines_are_reported_and_skipped():
    report, records = scan_lines(["E?~o", "not graph6", "", "ELrw"], 2, VERTEX)
    assert len(records) == 2
    assert [p.line for p in report.parse_errors] == [2]


@pytest.mark.parametrize("k", [0, -1])
def test_bad_k(k):
    with pytest.raises(ScanError):
        scan_graphs([], k, VERTEX)


class TestVerify:
    def test_unknown_suite(self):
        with pytest.raises(ScanError):
            verify_graphs([], "everything", 2, VERTEX)

    @pytest.mark.parametrize("suite", SUITES)
    def test_all_suites_pass_on_k25(self, suite):
        report, per_graph = verify_graphs([complete_bipartite(2, 7)], suite, 2, VERTEX)
        assert report.ok and report.checked == 1 and per_graph[0]["passed"]

    def test_non_minimal_graphs_are_skipped(self):
        report, per_graph = verify_graphs([decode_graph6("E~~w")], "forest", 2, VERTEX)
        assert report.checked == 0 and per_graph == []

    def test_degree_k_corpus(self):
        gs = [g for n in range(3, 8) for g in corpus(n, 2)]
        report, per_graph = verify_graphs(gs, "degree-k", 2, EDGE)
        assert report.ok and report.checked > 0
        for r in per_graph:
            assert r["details"]["bound"]["rhs"] >= 3

    def test_forest_corpus(self):
        gs = [g for n in range(3, 8) for g in corpus(n, 2)]
        report, _ = verify_graphs(gs, "forest", 2, VERTEX)
        assert report.ok and report.checked > 0

    def test_failing_bound_is_reported(self):
        # one extra edge puts K_{2,5} over k(n - k) and leaves the cycle 0-2-1-3 among high-degree vertices
        failures, _ = run_suite(complete_bipartite(2, 7).with_edges([(2, 3)]), "bounds-global", 2, VERTEX)
        assert [f["bound_id"] for f in failures] == ["mader-knk", "lemma2.2-forest"]

    def test_failures_are_counted(self, monkeypatch):
        import minkconn.scan as scan

        monkeypatch.setattr(scan, "run_suite", lambda g, suite, k, mode: ([{"why": "forced"}], {}))
        report, _ = verify_graphs([complete_bipartite(2, 7), complete_bipartite(2, 6)], "forest", 2, VERTEX)
        assert (report.checked, report.passed, report.failed, report.ok) == (2, 0, 2, False)
        assert report.failures[0]["failures"] == [{"why": "forced"}]

    def test_subset_suites_capped(self):
        with pytest.raises(ScanError):
            run_suite(complete_bipartite(2, 13), "heredity", 2, VERTEX)

    def test_lines_with_errors(self):
        report, _ = verify_lines(["E?~o", "!!"], "forest", 2, VERTEX)
        assert report.ok and [p.line for p in report.parse_errors] == [2]


def test_scan_rho_uses_canonical_labels():
    g = complete_bipartite(2, 7).relabel([6, 5, 4, 3, 2, 1, 0])
    _, (rec,) = scan_graphs([g], 2, VERTEX)
    assert rec.graph6 == canonical_code(g)
    assert rec.rho == pytest.approx(spectral_radius(g).rho)
