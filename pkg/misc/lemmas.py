"""Predicate checks for the inequalities behind the spectral extremal argument.

Each check evaluates one inequality on a concrete graph and reports whether
its hypotheses hold and whether its conclusion holds. Checks marked
conditional describe the spectral-extremal graph for large n; on other graphs
they are gated behind the candidate test (F_k-free and lambda1 at least the
Rayleigh value of an edge-extremal graph) and may fail without contradiction.
Integer-valued inequalities are compared exactly; anything involving lambda1
or the eigenvector gets an absolute slack of 1e-7.
"""
import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from misc.constructions import construction_threshold, ex_fan, fan_core_graph, fan_excess
from misc.errors import GraphInputError
from misc.fans import contains_fan
from misc.graph import Graph, VertexSet, edges_inside, induced_subgraph, is_connected, iter_bits, max_degree, \
    min_degree, triangle_count
from misc.matching import maximum_matching
from misc.search import max_cut
from misc.spectral import SpectralResult, rayleigh_lower_bound, spectral_radius

SLACK = 1e-7


@dataclass
class LemmaReport:
    lemma_id: str
    hypotheses_hold: bool
    conclusion_holds: bool
    quantities: dict = field(default_factory=dict)
    notes: str = ""
    conditional: bool = False

    @property
    def passed(self) -> bool:
        return not self.hypotheses_hold or self.conclusion_holds

    def as_dict(self) -> dict:
        return {"lemma": self.lemma_id, "hypotheses": self.hypotheses_hold, "conclusion": self.conclusion_holds,
                "conditional": self.conditional, "quantities": self.quantities, "notes": self.notes}


def default_constants(k: int) -> tuple[float, float]:
    delta = 1 / (8 * k)
    return delta, delta * delta / 6


def check_constants(k: int, delta: float | None = None, epsilon: float | None = None) -> tuple[float, float]:
    """Fill in the default delta and epsilon and check 0 < delta < 1/(4k), 0 < epsilon < delta^2/3."""
    if k < 1:
        raise GraphInputError(f"fan size k must be positive, got {k}")
    delta = default_constants(k)[0] if delta is None else delta
    epsilon = delta * delta / 6 if epsilon is None else epsilon
    if not 0 < delta < 1 / (4 * k):
        raise GraphInputError(f"delta must lie in (0, 1/(4k)) = (0, {1 / (4 * k)}), got {delta}")
    if not 0 < epsilon < delta ** 2 / 3:
        raise GraphInputError(f"epsilon must lie in (0, delta^2/3) = (0, {delta ** 2 / 3}), got {epsilon}")
    return delta, epsilon


class ProofContext:
    """Quantities shared by the checks on one graph, computed on first use."""

    def __init__(self, g: Graph, k: int, delta: float | None = None, epsilon: float | None = None,
                 spectral: SpectralResult | None = None):
        if g.n == 0:
            raise GraphInputError("lemma checks need a non-empty graph")
        self.delta, self.epsilon = check_constants(k, delta, epsilon)
        self.g = g
        self.k = k
        if spectral is not None:
            self.__dict__["spectral"] = spectral

    @cached_property
    def spectral(self) -> SpectralResult:
        return spectral_radius(self.g)

    @property
    def lambda1(self) -> float:
        return self.spectral.lambda1

    @cached_property
    def fan_free(self) -> bool:
        return not contains_fan(self.g, self.k)[0]

    @cached_property
    def triangles(self) -> int:
        return triangle_count(self.g)

    @cached_property
    def ex(self) -> int:
        return ex_fan(self.g.n, self.k).value

    @cached_property
    def candidate(self) -> bool:
        return self.fan_free and self.lambda1 >= 2 * self.ex / self.g.n - SLACK

    @cached_property
    def cut(self):
        return max_cut(self.g)

    @cached_property
    def low(self) -> VertexSet:
        # d(v) <= (1/2 - 1/(4(k+1))) n, cleared of fractions
        n, k = self.g.n, self.k
        return sum(1 << v for v in range(n) if 4 * (k + 1) * self.g.rows[v].bit_count() <= n * (2 * k + 1))

    @cached_property
    def inner(self) -> VertexSet:
        # W: vertices with at least delta*n neighbours on their own side
        s, t = self.cut.s, self.cut.t
        threshold = self.delta * self.g.n
        w = 0
        for v in range(self.g.n):
            own = s if (s >> v) & 1 else t
            if (self.g.rows[v] & own).bit_count() >= threshold:
                w |= 1 << v
        return w

    def gate_notes(self) -> str:
        if not self.fan_free:
            return f"graph contains F_{self.k}"
        if not self.candidate:
            return f"lambda1 = {self.lambda1:.6g} is below 2 ex/n = {2 * self.ex / self.g.n:.6g}"
        return ""


def _conditional(ctx: ProofContext, lemma_id: str, conclusion, quantities: dict, extra_gate=(True, "")) -> LemmaReport:
    gate_ok, gate_note = extra_gate
    hypotheses = ctx.candidate and gate_ok
    notes = ctx.gate_notes() or ("" if gate_ok else gate_note)
    holds = bool(conclusion()) if hypotheses else False
    return LemmaReport(lemma_id, hypotheses, holds, quantities, notes, conditional=True)


def _context(g: Graph, k: int, ctx: ProofContext | None) -> ProofContext:
    return ProofContext(g, k) if ctx is None else ctx


def check_triangle_edge_bound(g: Graph, ctx: ProofContext | None = None) -> LemmaReport:
    """e(G) >= lambda1^2 - 3t/lambda1."""
    ctx = _context(g, 1, ctx)
    e, t, lam = g.edge_count, ctx.triangles, ctx.lambda1
    bound = lam * lam - 3 * t / lam if lam > 0 else 0.0
    connected = is_connected(g)
    return LemmaReport("triangle-edge-bound", connected, e >= bound - SLACK if connected else False,
                       {"e": e, "t": t, "lambda1": lam, "bound": bound},
                       "" if connected else "graph is disconnected")


def check_triangle_edge_corollary(g: Graph, ctx: ProofContext | None = None) -> LemmaReport:
    """e(G) >= lambda1^2 - 6t/n whenever lambda1 >= n/2."""
    ctx = _context(g, 1, ctx)
    e, t, lam, n = g.edge_count, ctx.triangles, ctx.lambda1, g.n
    bound = lam * lam - 6 * t / n
    hypotheses = lam >= n / 2 - SLACK
    return LemmaReport("triangle-edge-bound-corollary", hypotheses, hypotheses and e >= bound - SLACK,
                       {"e": e, "t": t, "lambda1": lam, "bound": bound},
                       "" if hypotheses else f"lambda1 = {lam:.6g} is below n/2")


def check_matching_edge_bound(g: Graph, k: int) -> LemmaReport:
    """Matching number at most k - 1 forces e(H) <= k n."""
    if k < 1:
        raise GraphInputError(f"k must be positive, got {k}")
    nu = maximum_matching(g).size
    hypotheses = nu <= k - 1
    return LemmaReport("matching-edge-bound", hypotheses, hypotheses and g.edge_count <= k * g.n,
                       {"nu": nu, "e": g.edge_count, "bound": k * g.n},
                       "" if hypotheses else f"matching number {nu} exceeds k - 1 = {k - 1}")


def check_set_intersection(sets: list[VertexSet]) -> LemmaReport:
    """|A_1 & ... & A_p| >= sum |A_i| - (p - 1) |A_1 | ... | A_p|."""
    if not sets:
        raise GraphInputError("need at least one set")
    common, union = sets[0], 0
    for s in sets:
        common &= s
        union |= s
    total = sum(s.bit_count() for s in sets)
    bound = total - (len(sets) - 1) * union.bit_count()
    return LemmaReport("set-intersection", True, common.bit_count() >= bound,
                       {"p": len(sets), "intersection": common.bit_count(), "sum": total,
                        "union": union.bit_count(), "bound": bound})


def check_fanfree_triangle_budget(g: Graph, k: int, ctx: ProofContext | None = None) -> LemmaReport:
    """F_k-free graphs have e(G[N(v)]) <= k n at every v, hence 3t <= k n^2."""
    ctx = _context(g, k, ctx)
    n = g.n
    densest = max((edges_inside(g, g.rows[v]) for v in range(n)), default=0)
    quantities = {"t": ctx.triangles, "budget": k * n * n / 3, "max_neighbourhood_edges": densest,
                  "neighbourhood_bound": k * n}
    if not ctx.fan_free:
        return LemmaReport("fanfree-triangle-budget", False, False, quantities, f"graph contains F_{k}")
    holds = 3 * ctx.triangles <= k * n * n and densest <= k * n
    return LemmaReport("fanfree-triangle-budget", True, holds, quantities)


def check_rayleigh_lower_bound(g: Graph, k: int, ctx: ProofContext | None = None) -> LemmaReport:
    """A candidate has lambda1 >= 2 ex(n, F_k)/n >= n/2."""
    ctx = _context(g, k, ctx)
    n = g.n
    quantities = {"lambda1": ctx.lambda1, "rayleigh": rayleigh_lower_bound(g), "extremal_rayleigh": 2 * ctx.ex / n,
                  "half_n": n / 2}
    # 2 ex/n reaches n/2 unless k = 1 and n is odd
    reaches = 4 * ctx.ex >= n * n
    return _conditional(ctx, "rayleigh-lower-bound", lambda: ctx.lambda1 >= n / 2 - SLACK, quantities,
                        (reaches, f"2 ex/n is below n/2 for n={n}, k={k}"))


def check_max_cut(g: Graph, k: int, ctx: ProofContext | None = None) -> LemmaReport:
    """A maximum cut has e(S,T) >= (1/4 - eps) n^2 and sides within (1/2 +- sqrt(eps)) n."""
    ctx = _context(g, k, ctx)
    n, eps = g.n, ctx.epsilon
    s, t, size = ctx.cut
    a, b = s.bit_count(), t.bit_count()
    lo, hi = (0.5 - math.sqrt(eps)) * n, (0.5 + math.sqrt(eps)) * n
    unsatisfied = [v for v in range(n)
                   if (g.rows[v] & (s if (s >> v) & 1 else t)).bit_count() > (g.rows[v] & (t if (s >> v) & 1 else s)).bit_count()]
    quantities = {"cut": size, "cut_bound": (0.25 - eps) * n * n, "S": a, "T": b, "side_low": lo, "side_high": hi,
                  "epsilon": eps, "delta": ctx.delta, "unstable_vertices": len(unsatisfied)}
    return _conditional(ctx, "max-cut",
                        lambda: size >= (0.25 - eps) * n * n and lo <= a <= hi and lo <= b <= hi and not unsatisfied,
                        quantities)


def _needs_k2(k: int) -> tuple[bool, str]:
    return k >= 2, "the low-degree bound is stated for k >= 2"


def check_low_degree_bound(g: Graph, k: int, ctx: ProofContext | None = None) -> LemmaReport:
    """|L| <= 16 k^2, L = {v : d(v) <= (1/2 - 1/(4(k+1))) n}."""
    ctx = _context(g, k, ctx)
    size = ctx.low.bit_count()
    return _conditional(ctx, "low-degree-bound", lambda: size <= 16 * k * k,
                        {"L": size, "bound": 16 * k * k}, _needs_k2(k))


def check_low_degree_empty(g: Graph, k: int, ctx: ProofContext | None = None) -> LemmaReport:
    ctx = _context(g, k, ctx)
    return _conditional(ctx, "low-degree-empty", lambda: ctx.low == 0, {"L": ctx.low.bit_count()}, _needs_k2(k))


def check_inner_degree(g: Graph, k: int, ctx: ProofContext | None = None) -> LemmaReport:
    """|W| < 2 eps n/delta + 2k^2/(delta n) and W \\ L is empty.

    The argument needs 2 eps n/delta + 2k^2/(delta n) + 16k^2 + k - 1 < delta n,
    which is part of the hypotheses here.
    """
    ctx = _context(g, k, ctx)
    n, d, eps = g.n, ctx.delta, ctx.epsilon
    bound = 2 * eps * n / d + 2 * k * k / (d * n)
    large = bound + 16 * k * k + k - 1 < d * n
    size = ctx.inner.bit_count()
    outside = (ctx.inner & ~ctx.low).bit_count()
    gate = (k >= 2 and large, _needs_k2(k)[1] if k < 2 else f"n = {n} is too small for delta n = {d * n:.4g}")
    return _conditional(ctx, "inner-degree", lambda: size < bound and outside == 0,
                        {"W": size, "bound": bound, "W_minus_L": outside, "delta_n": d * n}, gate)


def _greedy_independent(g: Graph, side: VertexSet) -> VertexSet:
    chosen, available = 0, side
    while available:
        v = min(iter_bits(available), key=lambda u: ((g.rows[u] & available).bit_count(), u))
        chosen |= 1 << v
        available &= ~((1 << v) | g.rows[v])
    return chosen


def check_independent_sides(g: Graph, k: int, ctx: ProofContext | None = None) -> LemmaReport:
    """Each cut side holds an independent set missing at most 18 k^2 of its vertices."""
    ctx = _context(g, k, ctx)
    s, t, _ = ctx.cut
    i_s, i_t = _greedy_independent(g, s), _greedy_independent(g, t)
    slack = 18 * k * k
    quantities = {"S": s.bit_count(), "I_S": i_s.bit_count(), "T": t.bit_count(), "I_T": i_t.bit_count(),
                  "allowance": slack}
    return _conditional(ctx, "independent-sides",
                        lambda: i_s.bit_count() >= s.bit_count() - slack and i_t.bit_count() >= t.bit_count() - slack,
                        quantities)


def check_side_structure(g: Graph, k: int, ctx: ProofContext | None = None) -> LemmaReport:
    """G[S \\ L] and G[T \\ L] have max degree and matching number <= k - 1, so at most f(k-1, k-1) edges."""
    ctx = _context(g, k, ctx)
    s, t, _ = ctx.cut
    quantities, ok = {}, []
    for name, side in (("S", s), ("T", t)):
        h = induced_subgraph(g, side & ~ctx.low)
        nu, top = maximum_matching(h).size, max_degree(h)
        quantities.update({f"{name}_max_degree": top, f"{name}_matching": nu, f"{name}_edges": h.edge_count})
        ok.append(top <= k - 1 and nu <= k - 1 and h.edge_count <= fan_excess(k))
    quantities["edge_bound"] = fan_excess(k)
    return _conditional(ctx, "side-structure", lambda: all(ok), quantities)


def check_degree_refinement(g: Graph, k: int, ctx: ProofContext | None = None) -> LemmaReport:
    """Sides within n/2 +- 4k, e >= n^2/4 - 12k^2, n/2 - 14k^2 <= min degree <= lambda1 <= max degree <= n/2 + 5k."""
    ctx = _context(g, k, ctx)
    n, e = g.n, g.edge_count
    s, t, _ = ctx.cut
    a, b = s.bit_count(), t.bit_count()
    low_deg, high_deg, lam = min_degree(g), max_degree(g), ctx.lambda1
    inside = edges_inside(g, s) + edges_inside(g, t)
    checks = {
        "sides": all(abs(2 * side - n) <= 8 * k for side in (a, b)),
        "edges": 4 * e >= n * n - 48 * k * k,
        "min_degree": 2 * low_deg >= n - 28 * k * k,
        "max_degree": 2 * high_deg <= n + 10 * k,
        "sandwich": low_deg - SLACK <= lam <= high_deg + SLACK,
        "inner_edges": inside <= 2 * fan_excess(k),
    }
    quantities = {"S": a, "T": b, "e": e, "min_degree": low_deg, "max_degree": high_deg, "lambda1": lam,
                  "inner_edges": inside, "failed": [name for name, ok in checks.items() if not ok]}
    return _conditional(ctx, "degree-refinement", lambda: all(checks.values()), quantities)


def check_eigenvector_entries(g: Graph, k: int, ctx: ProofContext | None = None) -> LemmaReport:
    """Every Perron entry (max entry 1) is at least 1 - 116 k^2/n."""
    ctx = _context(g, k, ctx)
    smallest = float(ctx.spectral.vector.min())
    bound = 1 - 116 * k * k / g.n
    return _conditional(ctx, "eigenvector-entries", lambda: smallest >= bound - SLACK,
                        {"min_entry": smallest, "bound": bound})


def check_cut_balance(g: Graph, k: int, ctx: ProofContext | None = None) -> LemmaReport:
    ctx = _context(g, k, ctx)
    gap = abs(ctx.cut.s.bit_count() - ctx.cut.t.bit_count())
    return _conditional(ctx, "cut-balance", lambda: gap <= 1, {"side_gap": gap})


def _core_side(g: Graph, s: VertexSet, t: VertexSet) -> tuple[VertexSet, VertexSet]:
    # the side with more inner edges, then the larger side, then S
    if (edges_inside(g, t), t.bit_count()) > (edges_inside(g, s), s.bit_count()):
        return t, s
    return s, t


def _embed_core(g: Graph, core: Graph, side: VertexSet) -> list[int]:
    """Greedy injection of the core into side keeping as many of g's inner edges as possible.

    Core vertices are placed most-attached first; each goes to the free side
    vertex adjacent in g to the most images of its placed core neighbours,
    then to the one of highest inner degree, then to the lowest index.
    """
    image: dict[int, int] = {}
    free = side
    while len(image) < core.n:
        c = min((c for c in range(core.n) if c not in image),
                key=lambda c: (-sum(1 for d in iter_bits(core.rows[c]) if d in image),
                               -core.rows[c].bit_count(), c))
        placed = [image[d] for d in iter_bits(core.rows[c]) if d in image]
        u = min(iter_bits(free), key=lambda u: (-sum((g.rows[u] >> w) & 1 for w in placed),
                                                 -(g.rows[u] & side).bit_count(), u))
        image[c] = u
        free &= ~(1 << u)
    return [image[c] for c in range(core.n)]


def _place_core(g: Graph, core: Graph, s: VertexSet, t: VertexSet) -> Graph:
    rows = [0] * g.n
    for v in iter_bits(s):
        rows[v] = t
    for v in iter_bits(t):
        rows[v] = s
    image = _embed_core(g, core, s)
    for i in range(core.n):
        for j in iter_bits(core.rows[i]):
            rows[image[i]] |= 1 << image[j]
    return Graph(g.n, tuple(rows))


def check_perturbation_step(g: Graph, k: int, ctx: ProofContext | None = None) -> LemmaReport:
    """Swap g for the extremal pattern on g's max-cut sides and compare spectral radii.

    With E+ = E(H) - E(G) and E- = E(G) - E(H), the Rayleigh quotient of H at
    g's Perron vector exceeds lambda1(g) by (2/x.x)(sum_{E+} x_i x_j - sum_{E-} x_i x_j).
    """
    ctx = _context(g, k, ctx)
    n = g.n
    quantities = {"e": g.edge_count, "ex": ctx.ex}
    if not ctx.fan_free:
        return LemmaReport("perturbation", False, False, quantities, f"graph contains F_{k}")
    if g.edge_count >= ctx.ex:
        return LemmaReport("perturbation", False, False, quantities, "graph already has ex(n, F_k) edges")
    if n < construction_threshold(k):
        return LemmaReport("perturbation", False, False, quantities, f"no extremal construction on {n} vertices")
    s, t = _core_side(g, ctx.cut.s, ctx.cut.t)
    core = fan_core_graph(k)
    if s.bit_count() < core.n:
        return LemmaReport("perturbation", False, False, quantities,
                           f"core side has {s.bit_count()} vertices, the core needs {core.n}")
    h = _place_core(g, core, s, t)
    x = ctx.spectral.vector
    plus = [(u, v) for u, v in h.edges() if not g.has_edge(u, v)]
    minus = [(u, v) for u, v in g.edges() if not h.has_edge(u, v)]
    gain = sum(x[u] * x[v] for u, v in plus) - sum(x[u] * x[v] for u, v in minus)
    delta = 2 * gain / float(np.dot(x, x))
    lam_h = spectral_radius(h).lambda1
    quantities.update({"e_H": h.edge_count, "E_plus": len(plus), "E_minus": len(minus), "rayleigh_delta": delta,
                       "lambda1_G": ctx.lambda1, "lambda1_H": lam_h, "core_side": s.bit_count()})
    notes = "" if len(plus) >= len(minus) + 1 else "E+ is not larger than E-"
    return LemmaReport("perturbation", True, lam_h > ctx.lambda1, quantities, notes)


TRACE = {
    "cut-balance": check_cut_balance,
    "degree-refinement": check_degree_refinement,
    "eigenvector-entries": check_eigenvector_entries,
    "fanfree-triangle-budget": check_fanfree_triangle_budget,
    "independent-sides": check_independent_sides,
    "inner-degree": check_inner_degree,
    "low-degree-bound": check_low_degree_bound,
    "low-degree-empty": check_low_degree_empty,
    "max-cut": check_max_cut,
    "rayleigh-lower-bound": check_rayleigh_lower_bound,
    "side-structure": check_side_structure,
    "triangle-edge-bound": lambda g, k, ctx: check_triangle_edge_bound(g, ctx),
    "triangle-edge-bound-corollary": lambda g, k, ctx: check_triangle_edge_corollary(g, ctx),
}

LEMMA_IDS = sorted([*TRACE, "matching-edge-bound", "perturbation"])


def check_lemma(g: Graph, k: int, lemma_id: str, ctx: ProofContext | None = None) -> LemmaReport:
    ctx = _context(g, k, ctx)
    if lemma_id in TRACE:
        return TRACE[lemma_id](g, k, ctx)
    if lemma_id == "matching-edge-bound":
        return check_matching_edge_bound(g, k)
    if lemma_id == "perturbation":
        return check_perturbation_step(g, k, ctx)
    raise GraphInputError(f"unknown lemma {lemma_id!r}; known: {', '.join(LEMMA_IDS)}")


def run_trace(ctx: ProofContext) -> list[LemmaReport]:
    return [TRACE[lemma_id](ctx.g, ctx.k, ctx) for lemma_id in sorted(TRACE)]


def check_proof_trace(g: Graph, k: int, delta: float | None = None, epsilon: float | None = None) -> list[LemmaReport]:
    """Every proof-step check on g, sorted by lemma id. Failures are data."""
    return run_trace(ProofContext(g, k, delta, epsilon))
