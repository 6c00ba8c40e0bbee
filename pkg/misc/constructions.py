"""Extremal constructions for k-fans and the closed-form extremal functions.

G1(n, k), k odd: the balanced complete bipartite graph with two disjoint K_k
inside the larger side. G2(n, k), k even: the same host with a core graph H* on
2k - 1 vertices, k^2 - 3k/2 edges and maximum degree k - 1 inside the larger
side. In both cases the larger side is made of vertices 0 .. ceil(n/2) - 1 and
the core occupies its first vertices.
"""
import logging
import threading
from typing import NamedTuple

from data.config import chvatal_hanson_budget, construction_cap
from misc.canonical import refine_colors
from misc.errors import CapabilityError, ConstructionError, GraphInputError
from misc.fans import contains_fan
from misc.generate import Bounded, enumerate_graphs
from misc.graph import Graph, VertexSet, complete_graph, disjoint_union, empty_graph, full_set, make_graph, max_degree
from misc.graph_io import graph6_decode, graph6_encode
from misc.matching import has_matching_of_size, maximum_matching


class ExtremalValue(NamedTuple):
    value: int
    in_proven_range: bool


def _positive(name: str, value: int):
    if not isinstance(value, int) or value < 1:
        raise GraphInputError(f"{name} must be a positive integer, got {value!r}")


def fan_excess(k: int) -> int:
    """Edges above floor(n^2/4) in an extremal F_k-free graph."""
    _positive("k", k)
    return k * k - k if k % 2 else k * (2 * k - 3) // 2


def proven_threshold(k: int) -> int:
    return 50 * k * k


def construction_threshold(k: int) -> int:
    return 4 * k - 1 if k % 2 else 4 * k - 3


def ex_fan(n: int, k: int) -> ExtremalValue:
    _positive("k", k)
    if n < 0:
        raise GraphInputError(f"order must be non-negative, got {n}")
    value = n * n // 4 + fan_excess(k)
    in_range = n >= proven_threshold(k)
    if not in_range:
        logging.debug(f"ex({n}, F_{k}) evaluated below n = {proven_threshold(k)}")
    return ExtremalValue(value, in_range)


def f_chvatal_hanson(beta: int, delta: int) -> int:
    """Maximum edges of a graph with matching number <= beta and maximum degree <= delta."""
    _positive("beta", beta)
    _positive("delta", delta)
    return delta * beta + (delta // 2) * (beta // ((delta + 1) // 2))


def _check_order(n: int):
    if n < 1:
        raise GraphInputError(f"order must be positive, got {n}")
    if n > construction_cap:
        raise CapabilityError(f"{n} vertices exceeds the construction cap of {construction_cap}")


def _host(n: int, core: Graph) -> Graph:
    a = (n + 1) // 2
    side_a, side_b = full_set(a), full_set(n) & ~full_set(a)
    rows = [side_b | (core.rows[i] if i < core.n else 0) for i in range(a)]
    rows.extend(side_a for _ in range(a, n))
    return Graph._trusted(n, tuple(rows))


def turan_bipartite(n: int) -> Graph:
    _check_order(n)
    return _host(n, empty_graph(0))


def near_regular_graph(m: int, d: int) -> Graph:
    """Graph on m vertices with maximum degree d and floor(m*d/2) edges.

    A circulant on offsets 1 .. d//2; for odd d a matching of chords longer
    than d//2 tops every vertex but at most one up to degree d.
    """
    if m < 1 or not 0 <= d <= m - 1:
        raise GraphInputError(f"need 0 <= d <= m - 1, got m={m}, d={d}")
    edges = [(i, (i + s) % m) for i in range(m) for s in range(1, d // 2 + 1)]
    if d % 2:
        if m % 2 == 0:
            edges.extend((i, i + m // 2) for i in range(m // 2))
        else:
            step = (m - 1) // 2
            cycle = [(i * step) % m for i in range(m)]
            edges.extend((cycle[i], cycle[i + 1]) for i in range(0, m - 1, 2))
    g = make_graph(m, edges, cap=max(m, construction_cap))
    assert g.edge_count == m * d // 2 and max_degree(g) <= d
    return g


def _certify_bounded(g: Graph, beta: int, delta: int, edges: int, what: str):
    if max_degree(g) > delta:
        raise ConstructionError(f"{what}: maximum degree {max_degree(g)} exceeds {delta}")
    if g.edge_count != edges:
        raise ConstructionError(f"{what}: {g.edge_count} edges, expected {edges}")
    nu = maximum_matching(g).size
    if nu > beta:
        raise ConstructionError(f"{what}: matching number {nu} exceeds {beta}")


def chvatal_hanson_extremal_graph(beta: int, delta: int) -> Graph:
    """A graph attaining f(beta, delta), certified by the matching module."""
    _positive("beta", beta)
    _positive("delta", delta)
    if beta * delta > chvatal_hanson_budget:
        raise CapabilityError(f"beta * delta = {beta * delta} exceeds the budget of {chvatal_hanson_budget}")
    target = f_chvatal_hanson(beta, delta)
    degree = min(delta, 2 * beta)
    if (2 * beta + 1) * degree // 2 == target:
        g = near_regular_graph(2 * beta + 1, degree)
    else:
        s = (delta + 1) // 2
        q, r = beta // s, beta - (beta // s) * s
        parts = [near_regular_graph(2 * s + 1, delta) for _ in range(q)]
        parts.extend(make_graph(delta + 1, [(0, j) for j in range(1, delta + 1)]) for _ in range(r))
        g = disjoint_union(*parts)
    _certify_bounded(g, beta, delta, target, f"f({beta}, {delta}) graph")
    return g


_core_cache: dict[int, Graph] = {}
_core_lock = threading.Lock()
_persisted: set[int] = set()


def _valid_core(k: int, g: Graph) -> bool:
    order = 2 * k if k % 2 else 2 * k - 1
    if g.n != order or g.edge_count != fan_excess(k) or max_degree(g) > k - 1:
        return False
    return not has_matching_of_size(g, k)[0]


def _search_core(k: int) -> Graph:
    best: list[tuple[int, bytes]] = []
    for key, g in enumerate_graphs(2 * k - 1, Bounded(k - 1, k - 1)):
        best.append((-g.edge_count, key))
    _, key = min(best)
    return graph6_decode(key)


def _build_core(k: int) -> Graph:
    if k % 2:
        return disjoint_union(complete_graph(k), complete_graph(k))
    if k <= 4:
        core = _search_core(k)
    else:
        core = near_regular_graph(2 * k - 1, k - 1)
    if not _valid_core(k, core):
        raise ConstructionError(f"core graph for k={k} failed certification")
    return core


def fan_core_graph(k: int) -> Graph:
    """Graph embedded in the larger side: 2 K_k for odd k, H* for even k."""
    _positive("k", k)
    with _core_lock:
        core = _core_cache.get(k)
        if core is None:
            core = _build_core(k)
            _core_cache[k] = core
            logging.info(f"Built core graph for k={k}: {core.n} vertices, {core.edge_count} edges")
        return core


def preload_cores(stored: dict[int, str]):
    """Seed the core cache from persisted graph6 fixtures, skipping any that fail certification."""
    with _core_lock:
        for k, text in stored.items():
            g = graph6_decode(text)
            if k % 2 == 0 and _valid_core(k, g):
                _core_cache.setdefault(k, g)
                _persisted.add(k)
            else:
                logging.warning(f"Stored core graph for k={k} rejected")


def new_cores() -> dict[int, str]:
    """Computed H* graphs that are not yet persisted."""
    with _core_lock:
        return {k: graph6_encode(g) for k, g in sorted(_core_cache.items()) if k % 2 == 0 and k not in _persisted}


def mark_persisted(ks):
    with _core_lock:
        _persisted.update(ks)


def _certify_fan_free(g: Graph, k: int, what: str):
    found, witness = contains_fan(g, k)
    if found:
        raise ConstructionError(f"{what} contains F_{k} centred at {witness.center}")


def extremal_g1(n: int, k: int, certify: bool = True) -> Graph:
    _positive("k", k)
    if k % 2 == 0:
        raise GraphInputError(f"G1 needs odd k, got k={k}")
    if n < construction_threshold(k):
        raise GraphInputError(f"G1 needs n >= 4k - 1 = {construction_threshold(k)}, got n={n}")
    _check_order(n)
    g = _host(n, fan_core_graph(k))
    assert g.edge_count == ex_fan(n, k).value
    if certify:
        _certify_fan_free(g, k, f"G1({n}, {k})")
    return g


def extremal_g2(n: int, k: int, certify: bool = True) -> Graph:
    _positive("k", k)
    if k % 2:
        raise GraphInputError(f"G2 needs even k, got k={k}")
    if n < construction_threshold(k):
        raise GraphInputError(f"G2 needs n >= 4k - 3 = {construction_threshold(k)}, got n={n}")
    _check_order(n)
    g = _host(n, fan_core_graph(k))
    assert g.edge_count == ex_fan(n, k).value
    if certify:
        _certify_fan_free(g, k, f"G2({n}, {k})")
    return g


def extremal_graph(n: int, k: int, certify: bool = True) -> Graph:
    return extremal_g1(n, k, certify) if k % 2 else extremal_g2(n, k, certify)


def construction_partition(n: int, k: int) -> list[VertexSet]:
    """Equitable partition of the extremal construction.

    Odd k: core vertices, the rest of the larger side, the smaller side. Even k:
    the coarsest equitable partition, which splits the core by its structure.
    """
    g = extremal_graph(n, k, certify=False)
    a = (n + 1) // 2
    if k % 2:
        classes = [full_set(2 * k), full_set(a) & ~full_set(2 * k), full_set(n) & ~full_set(a)]
        return [c for c in classes if c]
    colors = refine_colors(g)
    classes = [0] * (max(colors) + 1)
    for v, c in enumerate(colors):
        classes[c] |= 1 << v
    return classes
