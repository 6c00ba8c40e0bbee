"""Isomorph-free enumeration of graphs in a hereditary class.

Level e holds one representative per isomorphism class of accepted graphs with
e edges. Level e + 1 is every accepted one-edge extension, deduplicated by
canonical form. Because the class is closed under edge deletion, every member
with e + 1 edges extends some member with e edges, so nothing is missed.
"""
import logging
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor

from data.config import exhaustive_cap
from misc.canonical import canonical_form
from misc.errors import CapabilityError
from misc.fans import fan_through_edge
from misc.graph import Graph, empty_graph, full_set, iter_bits
from misc.matching import has_matching_of_size

Accept = Callable[[Graph, int, int], bool]


class FanFree:
    """Accepts an extension by uv when it keeps the graph F_k-free."""

    def __init__(self, k: int):
        self.k = k

    def __call__(self, child: Graph, u: int, v: int) -> bool:
        return fan_through_edge(child, u, v, self.k) is None

    def __repr__(self):
        return f"FanFree({self.k})"


class Bounded:
    """Accepts while the maximum degree and matching number stay within bounds."""

    def __init__(self, max_degree: int, max_matching: int):
        self.max_degree = max_degree
        self.max_matching = max_matching

    def __call__(self, child: Graph, u: int, v: int) -> bool:
        if child.rows[u].bit_count() > self.max_degree or child.rows[v].bit_count() > self.max_degree:
            return False
        found, _ = has_matching_of_size(child, self.max_matching + 1)
        return not found

    def __repr__(self):
        return f"Bounded({self.max_degree}, {self.max_matching})"


def _accept_all(child: Graph, u: int, v: int) -> bool:
    return True


def _extend(parents: list[Graph], accept: Accept) -> dict[bytes, Graph]:
    out: dict[bytes, Graph] = {}
    for g in parents:
        mask = full_set(g.n)
        for u in range(g.n):
            for v in iter_bits(~g.rows[u] & mask & ~full_set(u + 1)):
                child = g.with_edge(u, v)
                if not accept(child, u, v):
                    continue
                key = canonical_form(child)
                if key not in out:
                    out[key] = child
    return out


def _shards(items: list, count: int) -> list[list]:
    return [items[i::count] for i in range(count) if items[i::count]]


def enumerate_graphs(n: int, accept: Accept | None = None, workers: int = 1) -> Iterator[tuple[bytes, Graph]]:
    """Yield ``(canonical_form, graph)`` for every class member on n vertices, by edge count."""
    if n > exhaustive_cap:
        raise CapabilityError(f"exhaustive enumeration is capped at {exhaustive_cap} vertices, got {n}")
    accept = accept or _accept_all
    start = empty_graph(n)
    level = {canonical_form(start): start}
    edges = 0
    while level:
        logging.debug(f"enumerate n={n}: {len(level)} classes with {edges} edges")
        yield from level.items()
        parents = list(level.values())
        if workers > 1 and len(parents) > workers:
            merged: dict[bytes, Graph] = {}
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for part in pool.map(_extend, _shards(parents, workers), [accept] * workers):
                    for key, graph in part.items():
                        merged.setdefault(key, graph)
            level = {key: merged[key] for key in sorted(merged)}
        else:
            level = dict(sorted(_extend(parents, accept).items()))
        edges += 1
