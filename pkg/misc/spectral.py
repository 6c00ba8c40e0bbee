"""Spectral radius and Perron vector, numerically and through quotient matrices."""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from data.config import charpoly_cap, default_tolerance, max_iterations, rayleigh_every
from misc.canonical import refine_colors
from misc.errors import CapabilityError, ConvergenceError, EquitabilityError, GraphInputError
from misc.graph import Graph, VertexSet, adjacency_matrix, connected_components, full_set, induced_subgraph, \
    iter_bits, max_degree, members, triangle_count


@dataclass
class SpectralResult:
    lambda1: float
    vector: np.ndarray = field(repr=False)
    iterations: int
    residual: float
    # Perron vector strictly positive (connected input)
    positive: bool = True
    # several components share the dominant eigenvalue
    tied: bool = False

    def as_dict(self) -> dict:
        return {"lambda1": self.lambda1, "iterations": self.iterations, "residual": self.residual,
                "positive": self.positive, "tied": self.tied, "min_entry": float(self.vector.min())}


@dataclass(frozen=True)
class QuotientMatrix:
    classes: tuple[int, ...]
    b: tuple[tuple[int, ...], ...]

    def array(self) -> np.ndarray:
        return np.array(self.b, dtype=np.float64)


def _residual_floor(g: Graph) -> float:
    # rounding in A @ x grows with the row sums
    return 64 * np.finfo(np.float64).eps * max(1, max_degree(g))


def _normalized(x: np.ndarray) -> np.ndarray:
    if x.sum() < 0:
        x = -x
    return x / np.abs(x).max()


def _connected_radius(g: Graph, tol: float, max_iter: int, start: np.ndarray | None) -> SpectralResult:
    if g.n == 1:
        return SpectralResult(0.0, np.ones(1), 0, 0.0)
    a = adjacency_matrix(g)
    tol = max(tol, _residual_floor(g))
    x = _normalized(np.ones(g.n) if start is None else np.asarray(start, dtype=np.float64))
    best: SpectralResult | None = None
    for iteration in range(1, max_iter + 1):
        ax = a @ x
        lam = float(x @ ax / (x @ x))
        residual = float(np.abs(ax - lam * x).max())
        if best is None or residual < best.residual:
            best = SpectralResult(lam, x, iteration, residual)
        if residual <= tol:
            return best
        if iteration % rayleigh_every == 0:
            try:
                y = _normalized(np.linalg.solve(a - lam * np.eye(g.n), x))
            except np.linalg.LinAlgError:
                y = None
            # accept only a Perron-like step that does not lose Rayleigh quotient
            if y is not None and y.min() >= -1e-12 and float(y @ (a @ y) / (y @ y)) >= lam - tol:
                x = np.clip(y, 0.0, None)
                continue
        x = _normalized(ax + x)
    raise ConvergenceError(f"power iteration did not reach residual {tol} in {max_iter} iterations", best)


def spectral_radius(g: Graph, tol: float | None = None, max_iter: int | None = None,
                    start: np.ndarray | None = None) -> SpectralResult:
    """Dominant adjacency eigenpair, Perron vector scaled to maximum entry 1.

    Power iteration on A + I from the all-ones vector (or ``start``), with a
    Rayleigh-quotient inverse step every few iterations. For a disconnected
    graph the component with the largest radius wins and ``positive`` is off.
    """
    if g.n == 0:
        raise GraphInputError("spectral radius of the empty graph is undefined")
    tol = default_tolerance if tol is None else tol
    if not tol > 0:
        raise GraphInputError(f"tolerance must be positive, got {tol}")
    max_iter = max_iterations if max_iter is None else max_iter
    components = connected_components(g)
    if len(components) == 1:
        return _connected_radius(g, tol, max_iter, start)

    results = []
    for component in components:
        vertices = members(component)
        part_start = None if start is None else np.asarray(start, dtype=np.float64)[vertices]
        if part_start is not None and not np.any(part_start > 0):
            part_start = None
        results.append((vertices, _connected_radius(induced_subgraph(g, component), tol, max_iter, part_start)))
    top = max(r.lambda1 for _, r in results)
    winners = [(v, r) for v, r in results if abs(r.lambda1 - top) <= 1e-9 * max(1.0, top)]
    vertices, result = winners[0]
    vector = np.zeros(g.n)
    vector[vertices] = result.vector
    logging.debug(f"spectral radius over {len(components)} components, {len(winners)} tied at {top}")
    return SpectralResult(result.lambda1, vector, sum(r.iterations for _, r in results), result.residual,
                          positive=False, tied=len(winners) > 1)


def rayleigh_lower_bound(g: Graph) -> float:
    if g.n == 0:
        raise GraphInputError("Rayleigh bound needs at least one vertex")
    return 2 * g.edge_count / g.n


def triangle_edge_bound(g: Graph, lambda1: float | None = None) -> float:
    """lambda1^2 - 3t/lambda1, the triangle-corrected lower bound on e(G)."""
    lam = spectral_radius(g).lambda1 if lambda1 is None else lambda1
    if lam == 0:
        return 0.0
    return lam * lam - 3 * triangle_count(g) / lam


def _check_partition(g: Graph, partition: list[VertexSet]):
    seen = 0
    for i, cls in enumerate(partition):
        if not cls:
            raise GraphInputError(f"class {i} is empty")
        if cls & ~full_set(g.n):
            raise GraphInputError(f"class {i} has vertices outside 0..{g.n - 1}")
        if cls & seen:
            raise GraphInputError(f"class {i} overlaps an earlier class")
        seen |= cls
    if seen != full_set(g.n):
        raise GraphInputError(f"partition misses vertices {members(full_set(g.n) & ~seen)}")


def quotient_matrix(g: Graph, partition: list[VertexSet]) -> QuotientMatrix:
    _check_partition(g, partition)
    b = []
    for cls in partition:
        first = (cls & -cls).bit_length() - 1
        row = tuple((g.rows[first] & other).bit_count() for other in partition)
        for v in iter_bits(cls):
            for j, other in enumerate(partition):
                found = (g.rows[v] & other).bit_count()
                if found != row[j]:
                    raise EquitabilityError(v, j, row[j], found)
        b.append(row)
    return QuotientMatrix(tuple(cls.bit_count() for cls in partition), tuple(b))


def coarsest_equitable_partition(g: Graph) -> list[VertexSet]:
    colors = refine_colors(g)
    classes = [0] * (max(colors, default=-1) + 1)
    for v, c in enumerate(colors):
        classes[c] |= 1 << v
    return classes


def charpoly(q: QuotientMatrix) -> list[int]:
    """Exact coefficients of det(xI - B), leading coefficient first (Faddeev-LeVerrier)."""
    d = len(q.b)
    if d > charpoly_cap:
        raise CapabilityError(f"characteristic polynomial is capped at dimension {charpoly_cap}, got {d}")
    b = [[Fraction(x) for x in row] for row in q.b]
    coeffs = [Fraction(1)]
    m = [[Fraction(0)] * d for _ in range(d)]
    for k in range(1, d + 1):
        # M_k = B M_{k-1} + c_{k-1} I
        m = [[sum(b[i][t] * m[t][j] for t in range(d)) + (coeffs[-1] if i == j else 0) for j in range(d)]
             for i in range(d)]
        trace = sum(sum(b[i][t] * m[t][i] for t in range(d)) for i in range(d))
        coeffs.append(-trace / k)
    assert all(c.denominator == 1 for c in coeffs)
    return [int(c) for c in coeffs]


def _horner(coeffs: list[int], x: float) -> tuple[float, float]:
    value, slope = 0.0, 0.0
    for c in coeffs:
        slope = slope * x + value
        value = value * x + c
    return value, slope


def charpoly_root(q: QuotientMatrix) -> float:
    """Largest real root of the quotient's characteristic polynomial.

    The quotient of an equitable partition has real eigenvalues and its
    largest one is at most the maximum row sum, so Newton's method started
    there decreases monotonically onto it; bisection polishes the result.
    """
    coeffs = charpoly(q)
    hi = float(max(sum(row) for row in q.b))
    x = hi
    for _ in range(200):
        value, slope = _horner(coeffs, x)
        if value == 0 or slope == 0:
            break
        step = value / slope
        x -= step
        if abs(step) <= 1e-15 * max(1.0, abs(x)):
            break
    if not -1e-9 <= x <= hi + 1e-9:
        raise ConvergenceError(f"no real root of {coeffs} in [0, {hi}]", None)
    width = 1e-9 * max(1.0, hi)
    lo, up = x - width, min(hi, x + width)
    if _horner(coeffs, lo)[0] < 0 < _horner(coeffs, up)[0]:
        for _ in range(100):
            mid = (lo + up) / 2
            if _horner(coeffs, mid)[0] < 0:
                lo = mid
            else:
                up = mid
        x = (lo + up) / 2
    return x


def floor_ceiling_gap(n: int) -> float:
    """n/2 - sqrt(ceil(n/2) * floor(n/2)), computed without cancellation."""
    if n < 2:
        raise GraphInputError(f"gap is defined for n >= 2, got {n}")
    a, b = (n + 1) // 2, n // 2
    numerator = (n * n - 4 * a * b) / 4
    return numerator / (n / 2 + math.sqrt(a * b))
