"""Dense undirected simple graphs with bitset rows.

Row ``i`` of a graph is a Python int whose bit ``j`` is set iff ``v_i v_j`` is an
edge. Vertex sets are plain ints over the same bit positions, so neighbourhood
intersections and degree counts are a single ``&`` followed by ``bit_count``.
Graphs are immutable; every edit returns a new graph.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import TypeAlias

import numpy as np

from data.config import vertex_cap
from misc.errors import CapabilityError, GraphInputError

VertexSet: TypeAlias = int


def iter_bits(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def members(s: VertexSet) -> list[int]:
    return list(iter_bits(s))


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    s = 0
    for v in vertices:
        s |= 1 << v
    return s


def full_set(n: int) -> VertexSet:
    return (1 << n) - 1


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise GraphInputError(f"expected {self.n} rows, got {len(self.rows)}")
        mask = full_set(self.n)
        for i, row in enumerate(self.rows):
            if row & ~mask:
                raise GraphInputError(f"row {i} has bits outside 0..{self.n - 1}")
            if (row >> i) & 1:
                raise GraphInputError(f"vertex {i} has a loop")
            for j in iter_bits(row >> (i + 1)):
                if not (self.rows[i + 1 + j] >> i) & 1:
                    raise GraphInputError(f"adjacency is not symmetric at ({i}, {i + 1 + j})")

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> Graph:
        # rows produced by a symmetric edit of an already valid graph
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        return g

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return members(self.rows[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u]) if u < v]

    def with_edge(self, u: int, v: int) -> Graph:
        _check_pair(self.n, u, v)
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        assert (rows[u] >> v) & 1 and (rows[v] >> u) & 1
        return Graph._trusted(self.n, tuple(rows))

    def without_edge(self, u: int, v: int) -> Graph:
        _check_pair(self.n, u, v)
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        assert not (rows[u] >> v) & 1 and not (rows[v] >> u) & 1
        return Graph._trusted(self.n, tuple(rows))

    def __repr__(self):
        return f"Graph(n={self.n}, e={self.edge_count})"


def _check_vertex(n: int, v: int):
    if not 0 <= v < n:
        raise GraphInputError(f"vertex {v} out of range for a graph on {n} vertices")


def _check_pair(n: int, u: int, v: int):
    _check_vertex(n, u)
    _check_vertex(n, v)
    if u == v:
        raise GraphInputError(f"loop at vertex {u} is not allowed in a simple graph")


def make_graph(n: int, edges: Iterable[tuple[int, int]], cap: int | None = None) -> Graph:
    """Build a graph from an edge list; duplicate pairs collapse to one edge."""
    cap = vertex_cap if cap is None else cap
    if n < 0:
        raise GraphInputError(f"vertex count must be non-negative, got {n}")
    if n > cap:
        raise CapabilityError(f"{n} vertices exceeds the vertex cap of {cap}")
    rows = [0] * n
    for u, v in edges:
        _check_pair(n, u, v)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    mask = full_set(n)
    return Graph(n, tuple(mask & ~(1 << i) for i in range(n)))


def cycle_graph(n: int) -> Graph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)], cap=max(n, vertex_cap))


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)], cap=max(n, vertex_cap))


def complete_bipartite(a: int, b: int) -> Graph:
    left, right = full_set(a), full_set(a + b) & ~full_set(a)
    return Graph(a + b, tuple(right if i < a else left for i in range(a + b)))


def degree(g: Graph, v: int) -> int:
    _check_vertex(g.n, v)
    return g.rows[v].bit_count()


def degrees(g: Graph) -> list[int]:
    return [row.bit_count() for row in g.rows]


def degree_into(g: Graph, v: int, s: VertexSet) -> int:
    _check_vertex(g.n, v)
    return (g.rows[v] & s).bit_count()


def induced_subgraph(g: Graph, s: VertexSet) -> Graph:
    """Subgraph on ``s``, relabelled by ascending original index."""
    s &= full_set(g.n)
    kept = members(s)
    position = {v: i for i, v in enumerate(kept)}
    rows = []
    for v in kept:
        row = 0
        for w in iter_bits(g.rows[v] & s):
            row |= 1 << position[w]
        rows.append(row)
    return Graph._trusted(len(kept), tuple(rows))


def neighborhood_graph(g: Graph, v: int) -> Graph:
    _check_vertex(g.n, v)
    return induced_subgraph(g, g.rows[v])


def triangle_count(g: Graph) -> int:
    # each triangle u < v < w is counted once, at its two smallest vertices
    total = 0
    for u in range(g.n):
        above_u = g.rows[u] >> (u + 1) << (u + 1)
        for v in iter_bits(above_u):
            total += (g.rows[u] & g.rows[v] & ~full_set(v + 1)).bit_count()
    return total


def edges_inside(g: Graph, s: VertexSet) -> int:
    return sum((g.rows[v] & s).bit_count() for v in iter_bits(s)) // 2


def edges_between(g: Graph, s: VertexSet, t: VertexSet) -> int:
    """Edges with one end in ``s`` and the other in ``t`` (sets assumed disjoint)."""
    return sum((g.rows[v] & t).bit_count() for v in iter_bits(s))


def complement(g: Graph) -> Graph:
    mask = full_set(g.n)
    return Graph._trusted(g.n, tuple(~row & mask & ~(1 << i) for i, row in enumerate(g.rows)))


def disjoint_union(*graphs: Graph) -> Graph:
    rows, offset = [], 0
    for h in graphs:
        rows.extend(row << offset for row in h.rows)
        offset += h.n
    return Graph._trusted(offset, tuple(rows))


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Image of ``g`` under the vertex map ``v -> perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphInputError("relabelling must be a permutation of the vertices")
    rows = [0] * g.n
    for v, row in enumerate(g.rows):
        image = 0
        for w in iter_bits(row):
            image |= 1 << perm[w]
        rows[perm[v]] = image
    return Graph._trusted(g.n, tuple(rows))


def connected_components(g: Graph) -> list[VertexSet]:
    seen, components = 0, []
    for start in range(g.n):
        if (seen >> start) & 1:
            continue
        component = frontier = 1 << start
        while frontier:
            reached = 0
            for v in iter_bits(frontier):
                reached |= g.rows[v]
            frontier = reached & ~component
            component |= frontier
        seen |= component
        components.append(component)
    return components


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def adjacency_matrix(g: Graph, dtype=np.float64) -> np.ndarray:
    nbytes = max(1, (g.n + 7) // 8)
    packed = np.frombuffer(b"".join(row.to_bytes(nbytes, "little") for row in g.rows), dtype=np.uint8)
    bits = np.unpackbits(packed.reshape(g.n, nbytes), axis=1, bitorder="little")[:, :g.n]
    return bits.astype(dtype)


def max_degree(g: Graph) -> int:
    return max((row.bit_count() for row in g.rows), default=0)


def min_degree(g: Graph) -> int:
    return min((row.bit_count() for row in g.rows), default=0)
