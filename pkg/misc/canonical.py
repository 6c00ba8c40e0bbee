"""Canonical forms for small graphs.

The canonical form is the lexicographically least graph6 bit string over all
vertex orderings that respect the colour-refinement partition. Colour classes
are ordered by an isomorphism-invariant rank, so restricting the orderings this
way keeps the minimum invariant; the search also prunes any prefix already
larger than the best code and explores only one of two interchangeable twins.
"""
from data.config import canonical_cap
from misc.errors import CapabilityError
from misc.graph import Graph, iter_bits, relabel
from misc.graph_io import graph6_encode


def refine_colors(g: Graph, initial: list[int] | None = None) -> list[int]:
    """Stable colouring by iterated neighbour-colour multisets.

    The colour classes form the coarsest equitable partition refining
    ``initial``; colour numbers are ranks of invariant signatures.
    """
    colors = list(initial) if initial is not None else [0] * g.n
    count = len(set(colors))
    while True:
        signatures = [(colors[v], tuple(sorted(colors[w] for w in iter_bits(g.rows[v])))) for v in range(g.n)]
        rank = {s: i for i, s in enumerate(sorted(set(signatures)))}
        refined = [rank[s] for s in signatures]
        if len(rank) == count:
            return refined
        colors, count = refined, len(rank)


def _minimal_ordering(g: Graph) -> list[int]:
    colors = refine_colors(g)
    cell_of_position = sorted(colors)
    unplaced = [0] * (max(colors, default=-1) + 1)
    for v, c in enumerate(colors):
        unplaced[c] |= 1 << v
    rows = g.rows
    placed: list[int] = []
    code: list[int] = []
    best_code: list[int] | None = None
    best_order: list[int] = []

    def search(j: int):
        nonlocal best_code, best_order
        if j == g.n:
            if best_code is None or code < best_code:
                best_code, best_order = list(code), list(placed)
            return
        cell = cell_of_position[j]
        tried: list[int] = []
        for v in iter_bits(unplaced[cell]):
            if any((rows[u] & ~(1 << v)) == (rows[v] & ~(1 << u)) for u in tried):
                continue
            tried.append(v)
            column = 0
            for p in placed:
                column = (column << 1) | ((rows[v] >> p) & 1)
            code.append(column)
            if best_code is None or code <= best_code[:j + 1]:
                placed.append(v)
                unplaced[cell] &= ~(1 << v)
                search(j + 1)
                unplaced[cell] |= 1 << v
                placed.pop()
            code.pop()

    search(0)
    return best_order


def canonical_graph(g: Graph) -> Graph:
    if g.n > canonical_cap:
        raise CapabilityError(f"canonical form is capped at {canonical_cap} vertices, got {g.n}")
    order = _minimal_ordering(g)
    perm = [0] * g.n
    for position, v in enumerate(order):
        perm[v] = position
    return relabel(g, perm)


def canonical_form(g: Graph) -> bytes:
    return graph6_encode(canonical_graph(g)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(row.bit_count() for row in g.rows) != sorted(row.bit_count() for row in h.rows):
        return False
    return canonical_form(g) == canonical_form(h)
