import itertools

import pytest
from hypothesis import given

from helpers import graphs
from misc.canonical import is_isomorphic
from misc.constructions import ex_fan
from misc.errors import CapabilityError, GraphInputError
from misc.fans import contains_fan
from misc.graph import complete_bipartite, complete_graph, cycle_graph, empty_graph, full_set, vertex_set
from misc.graph_io import graph6_decode
from misc.search import SearchReport, cut_size, exhaustive_extremal, hill_climb_extremal, max_cut, merge_reports
from misc.spectral import spectral_radius


def brute_force_cut(g) -> int:
    return max(cut_size(g, s) for s in range(1 << g.n))


@pytest.mark.parametrize("g, size", [(complete_graph(4), 4), (complete_bipartite(3, 3), 9), (cycle_graph(5), 4)])
def test_max_cut_examples(g, size):
    s, t, found = max_cut(g)
    assert found == size
    assert s | t == full_set(g.n) and s & t == 0
    assert s & 1


@given(graphs(min_n=1, max_n=10))
def test_exact_max_cut_matches_brute_force(g):
    assert max_cut(g).size == brute_force_cut(g)


def test_heuristic_cut_is_locally_optimal():
    g = complete_bipartite(20, 20).with_edge(0, 1)
    s, t, size = max_cut(g, exact=False)
    assert size == 400
    for v in range(g.n):
        own = s if (s >> v) & 1 else t
        assert (g.rows[v] & own).bit_count() <= (g.rows[v] & ~own).bit_count()


def test_exact_cut_cap():
    with pytest.raises(CapabilityError):
        max_cut(empty_graph(30), exact=True)


@pytest.mark.parametrize("n", range(3, 7))
def test_mantel_by_enumeration(n):
    report = exhaustive_extremal(n, 1, "edges")
    assert report.best_value == n * n // 4
    assert report.exhaustive and len(report.witnesses) == 1
    assert is_isomorphic(graph6_decode(report.witnesses[0]), complete_bipartite((n + 1) // 2, n // 2))


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
@pytest.mark.parametrize("objective", ["edges", "lambda1"])
def test_mantel_and_nosal_by_enumeration_slow(n, objective):
    report = exhaustive_extremal(n, 1, objective)
    assert len(report.witnesses) == 1
    assert is_isomorphic(graph6_decode(report.witnesses[0]), complete_bipartite((n + 1) // 2, n // 2))


def test_search_examples():
    report = exhaustive_extremal(5, 1, "edges")
    assert report.best_value == 6
    report = exhaustive_extremal(6, 1, "lambda1")
    assert report.best_value == pytest.approx(3.0, abs=1e-9)
    assert is_isomorphic(graph6_decode(report.witnesses[0]), complete_bipartite(3, 3))
    assert exhaustive_extremal(2, 1, "edges").best_value == 1


def test_comparison_with_constructions():
    assert exhaustive_extremal(5, 2, "edges").comparison == "equal"
    assert exhaustive_extremal(4, 2, "edges").comparison == "construction-infeasible"


def test_witnesses_reproduce_best_value():
    report = exhaustive_extremal(6, 2, "lambda1")
    for text in report.witnesses:
        g = graph6_decode(text)
        assert not contains_fan(g, 2)[0]
        assert spectral_radius(g).lambda1 == pytest.approx(report.best_value, abs=1e-9)


def test_bad_parameters():
    with pytest.raises(GraphInputError):
        exhaustive_extremal(5, 1, "triangles")
    with pytest.raises(GraphInputError):
        exhaustive_extremal(5, 0)
    with pytest.raises(CapabilityError):
        exhaustive_extremal(10, 1)
    with pytest.raises(CapabilityError):
        hill_climb_extremal(3000, 1)


def test_hill_climb_never_worsens_the_construction():
    report = hill_climb_extremal(14, 3, "edges", restarts=2, seed=1, steps=200)
    assert report.best_value >= 55
    assert not report.exhaustive and report.seed == 1


def test_hill_climb_is_deterministic():
    first = hill_climb_extremal(12, 2, "edges", restarts=3, seed=5, steps=150)
    second = hill_climb_extremal(12, 2, "edges", restarts=3, seed=5, steps=150)
    assert first == second


def test_hill_climb_below_construction_threshold():
    report = hill_climb_extremal(6, 2, "lambda1", restarts=3, seed=0, steps=300)
    assert report.comparison == "construction-infeasible"
    assert all(not contains_fan(graph6_decode(w), 2)[0] for w in report.witnesses)


@pytest.mark.slow
def test_hill_climb_at_one_hundred_vertices():
    report = hill_climb_extremal(100, 2, "edges", restarts=20, seed=0)
    assert report.best_value >= ex_fan(100, 2).value == 2501


@pytest.mark.slow
def test_hill_climb_finds_balanced_bipartite_graph():
    report = hill_climb_extremal(50, 1, "lambda1", restarts=4, seed=3, steps=500)
    assert report.best_value == pytest.approx(25.0, abs=1e-9)
    assert graph6_decode(report.witnesses[0]).edge_count == 625


def make_report(value, witnesses, examined=1, exhaustive=True, comparison="equal"):
    return SearchReport(6, 1, "edges", value, witnesses, examined, exhaustive, comparison, None)


def test_merge_reports_is_order_free():
    reports = [make_report(9, ["a"], 3), make_report(9, ["b", "a"], 4), make_report(8, ["c"], 5, False)]
    merged = merge_reports(reports)
    assert merged.best_value == 9 and merged.witnesses == ["a", "b"]
    assert merged.graphs_examined == 12 and not merged.exhaustive
    for order in itertools.permutations(reports):
        assert merge_reports(list(order)) == merged
    left = merge_reports([merge_reports(reports[:2]), reports[2]])
    right = merge_reports([reports[0], merge_reports(reports[1:])])
    assert left == right == merged


def test_merge_rejects_mixed_problems():
    other = SearchReport(7, 1, "edges", 12, [], 1, True, "equal", None)
    with pytest.raises(GraphInputError):
        merge_reports([make_report(9, []), other])
    with pytest.raises(GraphInputError):
        merge_reports([])


def test_cut_size_of_explicit_split():
    assert cut_size(complete_graph(4), vertex_set([0, 1])) == 4
