import math

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from helpers import connected_graphs, graphs, to_nx
from misc.constructions import construction_partition, extremal_g1, extremal_graph
from misc.errors import CapabilityError, ConvergenceError, EquitabilityError, GraphInputError
from misc.graph import complete_bipartite, complete_graph, disjoint_union, empty_graph, full_set, max_degree, \
    vertex_set
from misc.spectral import QuotientMatrix, charpoly, charpoly_root, coarsest_equitable_partition, floor_ceiling_gap, \
    quotient_matrix, rayleigh_lower_bound, spectral_radius, triangle_edge_bound


@pytest.mark.parametrize("g, value, tol", [
    (complete_graph(10), 9.0, 1e-9),
    (complete_bipartite(4, 4), 4.0, 1e-9),
    (complete_bipartite(1, 8), math.sqrt(8), 1e-6),
])
def test_known_radii(g, value, tol):
    result = spectral_radius(g)
    assert abs(result.lambda1 - value) <= tol
    assert result.vector.max() == pytest.approx(1.0)
    assert result.positive and result.vector.min() > 0


def test_empty_graph_is_rejected():
    with pytest.raises(GraphInputError):
        spectral_radius(empty_graph(0))
    with pytest.raises(GraphInputError):
        spectral_radius(complete_graph(3), tol=0)


def test_disconnected_graph_picks_largest_component():
    result = spectral_radius(disjoint_union(complete_graph(3), complete_graph(5)))
    assert result.lambda1 == pytest.approx(4.0, abs=1e-9)
    assert not result.positive and not result.tied
    assert np.all(result.vector[:3] == 0)


def test_tied_components_are_flagged():
    result = spectral_radius(disjoint_union(complete_graph(4), complete_graph(4)))
    assert result.tied and result.lambda1 == pytest.approx(3.0, abs=1e-9)


def test_iteration_cap_raises_with_best_iterate():
    with pytest.raises(ConvergenceError) as info:
        spectral_radius(extremal_g1(50, 3), tol=1e-30, max_iter=3)
    assert info.value.best is not None and info.value.best.lambda1 > 0


@settings(max_examples=100)
@given(graphs(min_n=1, max_n=20))
def test_matches_numpy_eigvalsh(g):
    expected = max(0.0, float(np.linalg.eigvalsh(nx.to_numpy_array(to_nx(g))).max())) if g.edge_count else 0.0
    assert spectral_radius(g).lambda1 == pytest.approx(expected, abs=1e-8)


@settings(max_examples=500)
@given(graphs(min_n=1, max_n=20))
def test_sandwich(g):
    lam = spectral_radius(g).lambda1
    assert rayleigh_lower_bound(g) <= lam + 1e-9
    assert lam <= max_degree(g) + 1e-9


def test_rayleigh_examples():
    assert rayleigh_lower_bound(extremal_g1(14, 3)) == pytest.approx(110 / 14)
    assert spectral_radius(extremal_g1(14, 3)).lambda1 >= 110 / 14
    assert rayleigh_lower_bound(complete_graph(6)) == 5
    assert rayleigh_lower_bound(complete_bipartite(1, 8)) == pytest.approx(16 / 9)
    with pytest.raises(GraphInputError):
        rayleigh_lower_bound(empty_graph(0))


def test_quotient_examples():
    q = quotient_matrix(extremal_g1(14, 3), construction_partition(14, 3))
    assert q.classes == (6, 1, 7)
    assert q.b == ((2, 0, 7), (0, 0, 7), (6, 1, 0))
    assert charpoly(q) == [1, -2, -49, 14]
    assert abs(charpoly_root(q) - spectral_radius(extremal_g1(14, 3)).lambda1) <= 1e-8
    q = quotient_matrix(complete_bipartite(2, 5), [vertex_set(range(2)), vertex_set(range(2, 7))])
    assert q.b == ((0, 5), (2, 0))
    assert charpoly_root(q) == pytest.approx(math.sqrt(10), abs=1e-12)
    assert quotient_matrix(complete_graph(5), [full_set(5)]).b == ((4,),)


def test_charpoly_root_examples():
    assert charpoly_root(QuotientMatrix((3, 3), ((0, 3), (3, 0)))) == pytest.approx(3.0, abs=1e-12)
    assert charpoly_root(QuotientMatrix((8,), ((7,),))) == pytest.approx(7.0, abs=1e-12)


def test_non_equitable_partition_names_the_vertex():
    g = complete_bipartite(2, 3).without_edge(0, 2)
    with pytest.raises(EquitabilityError) as info:
        quotient_matrix(g, [vertex_set([0, 1]), vertex_set([2, 3, 4])])
    assert info.value.vertex in (1, 3, 4)


@pytest.mark.parametrize("classes", [[0b011], [0b011, 0b110], [0b011, 0b100, 0b1000]])
def test_partition_must_cover_exactly(classes):
    with pytest.raises(GraphInputError):
        quotient_matrix(complete_graph(3), classes)


def test_charpoly_cap():
    q = QuotientMatrix((1,) * 7, tuple(tuple(0 for _ in range(7)) for _ in range(7)))
    with pytest.raises(CapabilityError):
        charpoly(q)


@pytest.mark.parametrize("k", [1, 3, 5])
@pytest.mark.parametrize("n", [50, 200, 1000])
def test_quotient_root_agrees_with_power_iteration(n, k):
    g = extremal_graph(n, k, certify=False)
    q = quotient_matrix(g, construction_partition(n, k))
    assert abs(charpoly_root(q) - spectral_radius(g).lambda1) <= 1e-8


@given(connected_graphs(max_n=12))
def test_coarsest_partition_is_equitable(g):
    q = quotient_matrix(g, coarsest_equitable_partition(g))
    if len(q.classes) <= 6:
        assert charpoly_root(q) == pytest.approx(spectral_radius(g).lambda1, abs=1e-7)


@pytest.mark.parametrize("n", [3, 9, 10, 11, 1001, 10 ** 6 - 1])
def test_floor_ceiling_gap_below_one_over_n(n):
    gap = floor_ceiling_gap(n)
    assert 0 <= gap < 1 / n
    if n % 2 == 0:
        assert gap == 0


def test_floor_ceiling_gap_values():
    assert floor_ceiling_gap(3) == pytest.approx(1.5 - math.sqrt(2), abs=1e-15)
    assert floor_ceiling_gap(9) == pytest.approx(4.5 - math.sqrt(20), abs=1e-15)
    with pytest.raises(GraphInputError):
        floor_ceiling_gap(1)


def test_floor_ceiling_gap_whole_range():
    ns = np.arange(2, 10 ** 6 + 1)
    a, b = (ns + 1) // 2, ns // 2
    gaps = (ns * ns - 4 * a * b) / 4 / (ns / 2 + np.sqrt(a * b))
    assert np.all(gaps < 1 / ns)


def test_triangle_edge_bound_values():
    assert triangle_edge_bound(complete_graph(5)) == pytest.approx(16 - 30 / 4)
    assert triangle_edge_bound(complete_bipartite(4, 4)) == pytest.approx(16.0)
