"""Extremal search for F_k-free graphs and maximum cuts.

Exhaustive search walks every isomorphism class of F_k-free graphs on n
vertices; hill climbing gives evidence for larger n, starting from the
extremal construction where one exists.
"""
import logging
from dataclasses import asdict, dataclass, field
from typing import NamedTuple

import numpy as np

from data.config import canonical_cap, certify_every, exact_cut_cap, exhaustive_cap, hill_climb_cap, \
    search_restarts, search_steps
from misc.canonical import canonical_form
from misc.constructions import construction_threshold, extremal_graph
from misc.errors import CapabilityError, ConstructionError, ConvergenceError, GraphInputError
from misc.fans import contains_fan, creates_fan
from misc.generate import FanFree, enumerate_graphs
from misc.graph import Graph, VertexSet, adjacency_matrix, empty_graph, full_set, iter_bits
from misc.graph_io import graph6_encode
from misc.spectral import spectral_radius

OBJECTIVES = ("edges", "lambda1")
VALUE_TOL = 1e-9


@dataclass
class SearchReport:
    n: int
    k: int
    objective: str
    best_value: float
    witnesses: list[str] = field(default_factory=list)
    graphs_examined: int = 0
    exhaustive: bool = False
    comparison: str | None = None
    seed: int | None = None

    def as_dict(self) -> dict:
        return asdict(self)


class Cut(NamedTuple):
    s: VertexSet
    t: VertexSet
    size: int


def _check_params(n: int, k: int, objective: str):
    if n < 1:
        raise GraphInputError(f"order must be positive, got {n}")
    if k < 1:
        raise GraphInputError(f"fan size k must be positive, got {k}")
    if objective not in OBJECTIVES:
        raise GraphInputError(f"objective must be one of {OBJECTIVES}, got {objective!r}")


def _evaluate(g: Graph, objective: str, start: np.ndarray | None = None) -> tuple[float, np.ndarray | None]:
    if objective == "edges":
        return float(g.edge_count), None
    if g.edge_count == 0:
        return 0.0, None
    result = spectral_radius(g, start=start)
    return result.lambda1, result.vector


def objective_value(g: Graph, objective: str) -> float:
    return _evaluate(g, objective)[0]


def _witness_text(g: Graph) -> str:
    if g.n <= canonical_cap:
        return canonical_form(g).decode("ascii")
    return graph6_encode(g)


def compare_with_construction(n: int, k: int, objective: str, best_value: float) -> str:
    if n < construction_threshold(k):
        return "construction-infeasible"
    reference = objective_value(extremal_graph(n, k, certify=False), objective)
    if best_value > reference + VALUE_TOL:
        return "construction-suboptimal"
    return "equal"


class _Best:
    def __init__(self):
        self.value = -1.0
        self.graphs: dict[str, Graph] = {}

    def offer(self, value: float, g: Graph):
        if value > self.value + VALUE_TOL:
            self.value = value
            self.graphs = {}
        if abs(value - self.value) <= VALUE_TOL:
            self.graphs.setdefault(_witness_text(g), g)


def _finish(best: _Best, n: int, k: int, objective: str, examined: int, exhaustive: bool,
            seed: int | None) -> SearchReport:
    for text, g in best.graphs.items():
        if contains_fan(g, k)[0]:
            raise ConstructionError(f"witness {text} contains F_{k}")
    report = SearchReport(n, k, objective, best.value, sorted(best.graphs), examined, exhaustive,
                          compare_with_construction(n, k, objective, best.value), seed)
    logging.info(f"search n={n} k={k} {objective}: best {report.best_value} from {examined} graphs, "
                 f"{len(report.witnesses)} witnesses, {report.comparison}")
    return report


def exhaustive_extremal(n: int, k: int, objective: str = "edges", workers: int = 1) -> SearchReport:
    _check_params(n, k, objective)
    if n > exhaustive_cap:
        raise CapabilityError(f"exhaustive search is capped at {exhaustive_cap} vertices, got {n}")
    best = _Best()
    examined = 0
    for _, g in enumerate_graphs(n, FanFree(k), workers=workers):
        examined += 1
        best.offer(objective_value(g, objective), g)
    return _finish(best, n, k, objective, examined, True, None)


def _random_pair(rng: np.random.Generator, n: int) -> tuple[int, int]:
    u, v = rng.choice(n, size=2, replace=False)
    return int(u), int(v)


def _greedy_start(n: int, k: int, rng: np.random.Generator) -> Graph:
    g = empty_graph(n)
    if n < 2:
        return g
    for _ in range(20 * n):
        u, v = _random_pair(rng, n)
        if not g.has_edge(u, v) and creates_fan(g, u, v, k) is None:
            g = g.with_edge(u, v)
    return g


def _propose(g: Graph, k: int, rng: np.random.Generator) -> Graph | None:
    n = g.n
    if n < 2:
        return None
    move = rng.integers(3)
    if move == 0:
        u, v = _random_pair(rng, n)
        if g.has_edge(u, v) or creates_fan(g, u, v, k) is not None:
            return None
        return g.with_edge(u, v)
    edges = g.edges()
    if not edges:
        return None
    u, v = edges[rng.integers(len(edges))]
    if move == 1:
        return g.without_edge(u, v)
    # rotate uv to uw about u
    if rng.integers(2):
        u, v = v, u
    free = [w for w in iter_bits(~g.rows[u] & full_set(n)) if w != u]
    if not free:
        return None
    w = free[rng.integers(len(free))]
    h = g.without_edge(u, v)
    if creates_fan(h, u, w, k) is not None:
        return None
    return h.with_edge(u, w)


def hill_climb_extremal(n: int, k: int, objective: str = "edges", restarts: int | None = None,
                        seed: int = 0, steps: int | None = None, every: int | None = None) -> SearchReport:
    """Plain hill climbing over F_k-free graphs with add, delete and rotate moves.

    Restart 0 starts from the extremal construction when n allows one; the
    others from F_k-free graphs grown by random greedy edge insertion. A move
    is kept when the objective does not decrease, so a climb never ends below
    its start.
    """
    _check_params(n, k, objective)
    if n > hill_climb_cap:
        raise CapabilityError(f"hill climbing is capped at {hill_climb_cap} vertices, got {n}")
    restarts = search_restarts if restarts is None else restarts
    steps = search_steps if steps is None else steps
    every = certify_every if every is None else every
    rng = np.random.default_rng(seed)
    best = _Best()
    examined = 0
    for restart in range(max(1, restarts)):
        if restart == 0 and n >= construction_threshold(k):
            g = extremal_graph(n, k)
        else:
            g = _greedy_start(n, k, rng)
        current, vector = _evaluate(g, objective)
        examined += 1
        for step in range(1, steps + 1):
            candidate = _propose(g, k, rng)
            if candidate is None:
                continue
            examined += 1
            try:
                value, candidate_vector = _evaluate(candidate, objective, start=vector)
            except ConvergenceError as e:
                logging.warning(f"restart {restart} step {step}: {e}")
                continue
            if value >= current:
                g, current = candidate, value
                if candidate_vector is not None:
                    vector = candidate_vector
            if every and step % every == 0 and contains_fan(g, k)[0]:
                raise ConstructionError(f"hill climb left the F_{k}-free region at step {step}")
        logging.info(f"hill climb n={n} k={k} restart {restart}: {objective} = {current}")
        best.offer(current, g)
    return _finish(best, n, k, objective, examined, False, seed)


def merge_reports(reports: list[SearchReport]) -> SearchReport:
    """Merge shard reports: max value, witness union, summed counts. Associative and order-free."""
    if not reports:
        raise GraphInputError("nothing to merge")
    first = reports[0]
    for r in reports:
        if (r.n, r.k, r.objective) != (first.n, first.k, first.objective):
            raise GraphInputError(f"cannot merge reports for different problems: {r.n, r.k, r.objective}")
    top = max(r.best_value for r in reports)
    winners = [r for r in reports if abs(r.best_value - top) <= VALUE_TOL]
    witnesses = sorted({w for r in winners for w in r.witnesses})
    comparisons = sorted({r.comparison for r in winners if r.comparison})
    seeds = {r.seed for r in reports}
    return SearchReport(first.n, first.k, first.objective, top, witnesses,
                        sum(r.graphs_examined for r in reports), all(r.exhaustive for r in reports),
                        comparisons[0] if len(comparisons) == 1 else None,
                        seeds.pop() if len(seeds) == 1 else None)


def cut_size(g: Graph, s: VertexSet) -> int:
    t = full_set(g.n) & ~s
    return sum((g.rows[v] & t).bit_count() for v in iter_bits(s))


def _improve(g: Graph, s: VertexSet) -> VertexSet:
    # one-vertex moves until every vertex has at least half its neighbours across
    mask = full_set(g.n)
    moved = True
    while moved:
        moved = False
        for v in range(g.n):
            own = s if (s >> v) & 1 else mask & ~s
            if (g.rows[v] & own).bit_count() > (g.rows[v] & ~own & mask).bit_count():
                s ^= 1 << v
                moved = True
    return s


def _normalize(g: Graph, s: VertexSet) -> Cut:
    mask = full_set(g.n)
    if g.n and not s & 1:
        s = mask & ~s
    return Cut(s, mask & ~s, cut_size(g, s))


def _heuristic_cut(g: Graph, seed: int, restarts: int) -> VertexSet:
    if g.n < 2:
        return full_set(g.n)
    _, vectors = np.linalg.eigh(adjacency_matrix(g))
    s = sum(1 << v for v in range(g.n) if vectors[v, 0] >= 0)
    best = _improve(g, s)
    best_size = cut_size(g, best)
    rng = np.random.default_rng(seed)
    for _ in range(restarts):
        s = _improve(g, sum(1 << v for v in range(g.n) if rng.integers(2)))
        size = cut_size(g, s)
        if size > best_size:
            best, best_size = s, size
    return best


def _exact_cut(g: Graph, incumbent: VertexSet) -> VertexSet:
    n = g.n
    order = sorted(range(n), key=lambda v: -g.rows[v].bit_count())
    best_s, best_size = incumbent, cut_size(g, incumbent)

    def bound(s: VertexSet, t: VertexSet, cut: int, depth: int) -> int:
        rest = 0
        for v in order[depth:]:
            rest |= 1 << v
        extra = sum(max((g.rows[v] & s).bit_count(), (g.rows[v] & t).bit_count()) for v in iter_bits(rest))
        inside = sum((g.rows[v] & rest).bit_count() for v in iter_bits(rest)) // 2
        return cut + extra + inside

    def branch(s: VertexSet, t: VertexSet, cut: int, depth: int):
        nonlocal best_s, best_size
        if depth == n:
            if cut > best_size:
                best_s, best_size = s, cut
            return
        if bound(s, t, cut, depth) <= best_size:
            return
        v = order[depth]
        to_s, to_t = (g.rows[v] & t).bit_count(), (g.rows[v] & s).bit_count()
        first, second = ((s | 1 << v, t, cut + to_s), (s, t | 1 << v, cut + to_t))
        if to_t > to_s:
            first, second = second, first
        branch(*first, depth + 1)
        branch(*second, depth + 1)

    # the first vertex goes to S by symmetry
    v0 = order[0]
    branch(1 << v0, 0, 0, 1)
    return best_s


def max_cut(g: Graph, exact: bool | None = None, seed: int = 0, restarts: int = 8) -> Cut:
    """Maximum cut (S, T, e(S, T)); exact up to the configured size, else a local optimum.

    Either way no single vertex can switch sides and gain, so every vertex has
    at least as many neighbours across the cut as on its own side.
    """
    exact = g.n <= exact_cut_cap if exact is None else exact
    if exact and g.n > exact_cut_cap:
        raise CapabilityError(f"exact max cut is capped at {exact_cut_cap} vertices, got {g.n}")
    s = _heuristic_cut(g, seed, restarts)
    if exact and g.n > 1:
        s = _exact_cut(g, s)
    return _normalize(g, s)
