"""Shared strategies and networkx bridges for the test suite."""
import networkx as nx
from hypothesis import strategies as st

from misc.graph import Graph, make_graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h, ordering="sorted")
    return make_graph(h.number_of_nodes(), h.edges())


def fan_graph(k: int) -> Graph:
    """F_k: hub 0 joined to k disjoint edges (2i + 1, 2i + 2)."""
    edges = []
    for i in range(k):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return make_graph(2 * k + 1, edges)


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 12) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return make_graph(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 30) -> Graph:
    """A random spanning tree plus a random sprinkle of extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    if n >= 2:
        extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=3 * n))
        edges += [(u, v) for u, v in extra if u != v]
    return make_graph(n, edges)
