"""k-fan detection.

A graph contains F_k iff some vertex v has a matching of size k inside N(v):
the matched pairs together with v are k triangles sharing exactly v.
"""
from dataclasses import dataclass

from data.config import naive_fan_cap, naive_fan_k
from misc.errors import CapabilityError, GraphInputError
from misc.graph import Graph, iter_bits
from misc.matching import has_matching_of_size


@dataclass(frozen=True)
class FanWitness:
    center: int
    pairs: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict:
        return {"center": self.center, "pairs": [list(p) for p in self.pairs]}


def _check_k(k: int):
    if k < 1:
        raise GraphInputError(f"fan size k must be positive, got {k}")


def _fan_at(g: Graph, center: int, k: int) -> FanWitness | None:
    found, matching = has_matching_of_size(g, k, within=g.rows[center])
    if not found:
        return None
    return FanWitness(center, matching.edges[:k])


def _centers_by_degree(g: Graph, k: int) -> list[int]:
    # a center needs 2k neighbours; ties keep ascending index
    candidates = [v for v in range(g.n) if g.rows[v].bit_count() >= 2 * k]
    return sorted(candidates, key=lambda v: -g.rows[v].bit_count())


def contains_fan(g: Graph, k: int) -> tuple[bool, FanWitness | None]:
    _check_k(k)
    for v in _centers_by_degree(g, k):
        witness = _fan_at(g, v, k)
        if witness is not None:
            return True, witness
    return False, None


def fan_through_edge(h: Graph, u: int, v: int, k: int) -> FanWitness | None:
    """Fan of ``h`` whose center is u, v or a common neighbour of the edge uv."""
    _check_k(k)
    for c in (u, v, *iter_bits(h.rows[u] & h.rows[v])):
        if h.rows[c].bit_count() >= 2 * k:
            witness = _fan_at(h, c, k)
            if witness is not None:
                return witness
    return None


def creates_fan(g: Graph, u: int, v: int, k: int) -> FanWitness | None:
    """Fan in ``g + uv``, assuming ``g`` itself is F_k-free.

    Every fan of g + uv that g lacks must use the new edge, so only u, v and
    their common neighbours can be its center.
    """
    return fan_through_edge(g.with_edge(u, v), u, v, k)


def contains_fan_naive(g: Graph, k: int) -> bool:
    """Backtracking over disjoint triangle sets at every center; small inputs only."""
    _check_k(k)
    if g.n > naive_fan_cap or k > naive_fan_k:
        raise CapabilityError(f"naive fan search is limited to n <= {naive_fan_cap}, k <= {naive_fan_k}")

    def pick(available: int, need: int) -> bool:
        if need == 0:
            return True
        for a in iter_bits(available):
            for b in iter_bits(g.rows[a] & available & ~((1 << (a + 1)) - 1)):
                if pick(available & ~((1 << a) | (1 << b)), need - 1):
                    return True
        return False

    return any(pick(g.rows[c], k) for c in range(g.n))


def verify_witness(g: Graph, k: int, w: FanWitness) -> bool:
    if len(w.pairs) != k or not 0 <= w.center < g.n:
        return False
    vertices = [w.center] + [x for pair in w.pairs for x in pair]
    if len(set(vertices)) != 2 * k + 1 or any(not 0 <= x < g.n for x in vertices):
        return False
    return all(g.has_edge(a, b) and g.has_edge(w.center, a) and g.has_edge(w.center, b) for a, b in w.pairs)
