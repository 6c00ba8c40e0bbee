"""Maximum matching in general graphs (Edmonds' blossom algorithm).

The search grows one alternating tree per exposed vertex in ascending order and
contracts odd cycles by relabelling their base. A tree that fails to reach an
exposed vertex is deleted for good: no later augmentation can pass through it,
and its inner vertices become part of a Tutte-Berge barrier. State lives in
dicts keyed by the vertices actually touched, so a call restricted to a small
neighbourhood of a large graph stays proportional to that neighbourhood.
"""
from collections import deque
from dataclasses import dataclass

from misc.graph import Graph, VertexSet, connected_components, full_set, induced_subgraph, iter_bits, max_degree

__all__ = ["MatchingResult", "maximum_matching", "has_matching_of_size", "certify_maximum", "max_degree"]


@dataclass(frozen=True)
class MatchingResult:
    edges: tuple[tuple[int, int], ...]
    size: int
    # inner vertices of the failed trees; None when the search stopped early
    barrier: VertexSet | None = None

    def __post_init__(self):
        if self.size != len(self.edges):
            raise ValueError(f"size {self.size} does not match {len(self.edges)} edges")

    def vertices(self) -> VertexSet:
        s = 0
        for u, v in self.edges:
            s |= (1 << u) | (1 << v)
        return s


class _Blossom:
    def __init__(self, g: Graph, within: VertexSet):
        self.rows = g.rows
        self.alive = within
        self.match: dict[int, int] = {}

    def greedy(self, limit: int | None):
        free = self.alive
        for v in iter_bits(self.alive):
            if limit is not None and len(self.match) // 2 >= limit:
                return
            if not (free >> v) & 1:
                continue
            candidates = self.rows[v] & free
            if candidates:
                w = (candidates & -candidates).bit_length() - 1
                self.match[v], self.match[w] = w, v
                free &= ~((1 << v) | (1 << w))

    def grow(self, root: int) -> tuple[int | None, dict[int, int], set[int]]:
        match = self.match
        parent: dict[int, int] = {}
        base: dict[int, int] = {}
        outer = {root}
        tree = [root]
        queue = deque([root])

        def base_of(v: int) -> int:
            return base.get(v, v)

        def lca(a: int, b: int) -> int:
            seen = set()
            while True:
                a = base_of(a)
                seen.add(a)
                if a not in match:
                    break
                a = parent[match[a]]
            while True:
                b = base_of(b)
                if b in seen:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, b: int, child: int, blossom: set[int]):
            while base_of(v) != b:
                blossom.add(base_of(v))
                blossom.add(base_of(match[v]))
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in iter_bits(self.rows[v] & self.alive):
                if base_of(v) == base_of(to) or match.get(v) == to:
                    continue
                if to == root or (to in match and match[to] in parent):
                    new_base = lca(v, to)
                    blossom: set[int] = set()
                    mark_path(v, new_base, to, blossom)
                    mark_path(to, new_base, v, blossom)
                    for u in tree:
                        if base_of(u) in blossom:
                            base[u] = new_base
                            if u not in outer:
                                outer.add(u)
                                queue.append(u)
                elif to not in parent:
                    parent[to] = v
                    if to not in match:
                        return to, parent, outer
                    mate = match[to]
                    tree.extend((to, mate))
                    outer.add(mate)
                    queue.append(mate)
        return None, parent, outer

    def augment(self, end: int, parent: dict[int, int]):
        v = end
        while v is not None:
            pv = parent[v]
            nxt = self.match.get(pv)
            self.match[v], self.match[pv] = pv, v
            v = nxt

    def run(self, limit: int | None) -> MatchingResult:
        self.greedy(limit)
        barrier = 0
        stopped = False
        for root in iter_bits(self.alive):
            if limit is not None and len(self.match) // 2 >= limit:
                stopped = True
                break
            if root in self.match or not (self.alive >> root) & 1:
                continue
            if not self.rows[root] & self.alive:
                self.alive &= ~(1 << root)
                continue
            end, parent, outer = self.grow(root)
            if end is not None:
                self.augment(end, parent)
                continue
            tree = outer | set(parent)
            for v in parent:
                if v not in outer:
                    barrier |= 1 << v
            for v in tree:
                self.alive &= ~(1 << v)
        edges = tuple(sorted((v, w) for v, w in self.match.items() if v < w))
        return MatchingResult(edges, len(edges), None if stopped else barrier)


def _scope(g: Graph, within: VertexSet | None) -> VertexSet:
    return full_set(g.n) if within is None else within & full_set(g.n)


def maximum_matching(g: Graph, within: VertexSet | None = None) -> MatchingResult:
    """Maximum-cardinality matching of ``g`` (or of the subgraph induced on ``within``).

    Ties are broken by ascending vertex index, so the result is reproducible.
    """
    return _Blossom(g, _scope(g, within)).run(None)


def has_matching_of_size(g: Graph, k: int, within: VertexSet | None = None) -> tuple[bool, MatchingResult | None]:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    scope = _scope(g, within)
    if 2 * k > scope.bit_count():
        return False, None
    result = _Blossom(g, scope).run(k)
    if result.size >= k:
        return True, result
    return False, None


def certify_maximum(g: Graph, result: MatchingResult, within: VertexSet | None = None) -> bool:
    """Check the matching invariants and the Tutte-Berge identity for its barrier."""
    scope = _scope(g, within)
    used = 0
    for u, v in result.edges:
        if not g.has_edge(u, v) or (used >> u) & 1 or (used >> v) & 1:
            return False
        if not ((scope >> u) & 1 and (scope >> v) & 1):
            return False
        used |= (1 << u) | (1 << v)
    if result.barrier is None or result.barrier & ~scope:
        return False
    rest = induced_subgraph(g, scope & ~result.barrier)
    odd = sum(1 for c in connected_components(rest) if c.bit_count() % 2)
    return 2 * result.size == scope.bit_count() + result.barrier.bit_count() - odd
