import networkx as nx
import pytest
from hypothesis import given, settings

from helpers import graphs, to_nx
from misc.constructions import turan_bipartite
from misc.errors import Graph6ParseError, GraphInputError
from misc.graph import complete_graph, empty_graph, make_graph
from misc.graph_io import HEADER, format_edge_list, graph6_decode, graph6_encode, parse_edge_list, to_dot


def test_graph6_known_strings():
    assert graph6_encode(complete_graph(3)) == "Bw"
    assert graph6_encode(empty_graph(1)) == "@"
    assert graph6_encode(empty_graph(0)) == "?"


@given(graphs(min_n=1, max_n=16))
def test_graph6_matches_networkx(g):
    assert graph6_encode(g).encode() == nx.to_graph6_bytes(to_nx(g), header=False).rstrip(b"\n")


@settings(max_examples=10_000)
@given(graphs(max_n=16))
def test_graph6_round_trip(g):
    assert graph6_decode(graph6_encode(g)) == g


def test_graph6_medium_size_round_trip():
    g = turan_bipartite(100)
    text = graph6_encode(g)
    assert text[0] == "~"
    assert graph6_decode(text) == g


def test_graph6_header_and_newline():
    assert graph6_decode(HEADER + "Bw\n") == complete_graph(3)


@pytest.mark.parametrize("text, offset", [("B", 1), ("Bw x", 2), ("Bx", 1), ("", 0), ("Bé", 1)])
def test_graph6_parse_errors_carry_offset(text, offset):
    with pytest.raises(Graph6ParseError) as info:
        graph6_decode(text)
    assert info.value.offset == offset


def test_graph6_cap():
    with pytest.raises(Graph6ParseError):
        graph6_decode(graph6_encode(turan_bipartite(20)), cap=10)


def test_edge_list_parsing():
    g = parse_edge_list("# triangle plus an isolated vertex\n4\n0 1\n1 2\n\n0 2\n")
    assert g.n == 4 and g.edge_count == 3
    assert parse_edge_list("0 1\n1 2\n").n == 3
    assert parse_edge_list(format_edge_list(g)) == g
    with pytest.raises(GraphInputError):
        parse_edge_list("0 1 2\n")
    with pytest.raises(GraphInputError):
        parse_edge_list("a b\n")


def test_dot_lists_edges_and_isolated_vertices():
    dot = to_dot(make_graph(3, [(0, 1)]), "pair")
    assert dot.startswith("graph pair {")
    assert "  0 -- 1;" in dot and "  2;" in dot
