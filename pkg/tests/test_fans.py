import pytest
from hypothesis import given, settings, strategies as st

from helpers import fan_graph, graphs
from misc.constructions import extremal_g2, turan_bipartite
from misc.errors import CapabilityError, GraphInputError
from misc.fans import FanWitness, contains_fan, contains_fan_naive, creates_fan, verify_witness
from misc.generate import enumerate_graphs
from misc.graph import complete_graph, cycle_graph, empty_graph


@pytest.mark.parametrize("k", range(1, 6))
def test_fan_contains_itself(k):
    found, witness = contains_fan(fan_graph(k), k)
    assert found and witness.center == 0
    assert verify_witness(fan_graph(k), k, witness)
    assert not contains_fan(fan_graph(k), k + 1)[0]


def test_known_answers():
    assert not contains_fan(cycle_graph(5), 1)[0]
    found, witness = contains_fan(complete_graph(5), 2)
    assert found and witness.center == 0
    assert contains_fan_naive(complete_graph(5), 2)
    assert not contains_fan(turan_bipartite(10), 2)[0]
    assert not contains_fan(extremal_g2(12, 2), 2)[0]
    assert not contains_fan(empty_graph(0), 1)[0]


def test_bad_k():
    with pytest.raises(GraphInputError):
        contains_fan(complete_graph(3), 0)


def test_naive_cap():
    with pytest.raises(CapabilityError):
        contains_fan_naive(complete_graph(13), 1)
    with pytest.raises(CapabilityError):
        contains_fan_naive(complete_graph(5), 4)


def test_witness_checks():
    g = complete_graph(5)
    assert verify_witness(g, 2, FanWitness(0, ((1, 2), (3, 4))))
    assert not verify_witness(g, 2, FanWitness(0, ((1, 2), (2, 3))))
    assert not verify_witness(fan_graph(2), 2, FanWitness(0, ((1, 3), (2, 4))))
    assert not verify_witness(g, 3, FanWitness(0, ((1, 2), (3, 4))))


def test_creates_fan_sees_the_new_edge():
    g = fan_graph(2).without_edge(3, 4)
    assert not contains_fan(g, 2)[0]
    witness = creates_fan(g, 3, 4, 2)
    assert witness is not None and witness.center == 0
    assert creates_fan(g, 1, 3, 3) is None


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("k", [1, 2])
def test_agrees_with_naive_on_every_class(n, k):
    for _, g in enumerate_graphs(n):
        found, witness = contains_fan(g, k)
        assert found == contains_fan_naive(g, k)
        if found:
            assert verify_witness(g, k, witness)


@pytest.mark.slow
@pytest.mark.parametrize("k", [1, 2])
def test_agrees_with_naive_on_seven_vertices(k):
    for _, g in enumerate_graphs(7):
        assert contains_fan(g, k)[0] == contains_fan_naive(g, k)


@settings(max_examples=300)
@given(graphs(max_n=12))
def test_agrees_with_naive_on_random_graphs(g):
    for k in (1, 2, 3):
        assert contains_fan(g, k)[0] == contains_fan_naive(g, k)


@given(graphs(min_n=2, max_n=10))
def test_incremental_check_matches_full_check(g):
    if contains_fan(g, 2)[0]:
        return
    for u, v in complete_graph(g.n).edges():
        if not g.has_edge(u, v):
            assert (creates_fan(g, u, v, 2) is not None) == contains_fan(g.with_edge(u, v), 2)[0]


@given(graphs(max_n=12), st.integers(2, 4))
def test_fan_implies_smaller_fan(g, k):
    if contains_fan(g, k)[0]:
        assert contains_fan(g, k - 1)[0]


@given(graphs(min_n=1, max_n=12), st.integers(1, 3), st.data())
def test_adding_edges_keeps_a_fan(g, k, data):
    keep = data.draw(st.lists(st.booleans(), min_size=g.edge_count, max_size=g.edge_count))
    sub = g
    for (u, v), kept in zip(g.edges(), keep):
        if not kept:
            sub = sub.without_edge(u, v)
    if contains_fan(sub, k)[0]:
        assert contains_fan(g, k)[0]
