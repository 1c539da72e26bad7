"""Edge-isoperimetric applications: graphs, products, Johnson graphs,
delta sequences and push-down set functions.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence

from . import kernels, oracle
from .errors import DomainError, ResourceError
from .grid import GridShape, Point, RankWeight, weight_of
from .orders import DominationOrder, initial_segment_points, lex
from .triangle import TriangleShape, best_segment_weight

__all__ = [
    "SimpleGraph",
    "DeltaSequence",
    "SetFunction",
    "ProductWeight",
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "parse_graph_spec",
    "induced_edges",
    "boundary_edges",
    "check_regular_identity",
    "cartesian_product",
    "johnson_graph",
    "sigma_bridge",
    "adjacent_pairs",
    "ak_optimum",
    "ak_bruteforce",
    "delta_sequence",
    "product_weight_table",
    "phi_power",
    "is_push_down",
    "delta_of_phi",
    "push_down_compress",
    "verify_local_global",
    "lindsay_check",
    "AK_GUARD",
    "PUSH_DOWN_GUARD",
]

AK_GUARD = 7
PUSH_DOWN_GUARD = 5


@dataclass(frozen=True)
class SimpleGraph:
    """Vertices ``0..n-1``; edges stored as sorted pairs."""

    n: int
    edges: frozenset
    labels: Optional[tuple] = None

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise DomainError("vertex count must be a nonnegative integer")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise DomainError(f"loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise DomainError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != self.n:
                raise DomainError("need one label per vertex")
            object.__setattr__(self, "labels", labels)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def regular_degree(self) -> Optional[int]:
        deg = set(self.degrees())
        if len(deg) > 1:
            return None
        return deg.pop() if deg else 0

    def neighbours(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def index_of(self, label) -> int:
        if self.labels is None:
            raise DomainError("graph has no labels")
        return self.labels.index(label)


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset(itertools.combinations(range(n), 2)))


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise DomainError("a cycle needs at least 3 vertices")
    return SimpleGraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> SimpleGraph:
    if n < 1:
        raise DomainError("a path needs at least 1 vertex")
    return SimpleGraph(n, frozenset((i, i + 1) for i in range(n - 1)))


_SPEC_FACTOR = re.compile(r"([KCP])(\d+)$")


def parse_graph_spec(spec: str) -> SimpleGraph:
    """``K4``, ``C5``, ``P3``, or a product such as ``K3xK4``."""
    parts = spec.strip().replace("□", "x").split("x")
    graphs = []
    for part in parts:
        m = _SPEC_FACTOR.match(part.strip())
        if not m:
            raise DomainError(f"bad graph spec {spec!r}")
        kind, n = m.group(1), int(m.group(2))
        graphs.append({"K": complete_graph, "C": cycle_graph, "P": path_graph}[kind](n))
    g = graphs[0]
    for h in graphs[1:]:
        g = cartesian_product(g, h)
    return g


def _vertex_set(G: SimpleGraph, A: Iterable[int]) -> frozenset:
    A = frozenset(A)
    if any(not (isinstance(v, int) and 0 <= v < G.n) for v in A):
        raise DomainError("vertex set is not inside the graph")
    return A


def induced_edges(G: SimpleGraph, A: Iterable[int]) -> frozenset:
    A = _vertex_set(G, A)
    return frozenset(e for e in G.edges if e[0] in A and e[1] in A)


def boundary_edges(G: SimpleGraph, A: Iterable[int]) -> frozenset:
    A = _vertex_set(G, A)
    return frozenset(e for e in G.edges if (e[0] in A) != (e[1] in A))


def check_regular_identity(G: SimpleGraph, A: Iterable[int]) -> bool:
    """``2|I(A)| + |boundary(A)| == k|A|`` on a ``k``-regular graph."""
    k = G.regular_degree()
    if k is None:
        raise DomainError("graph is not regular")
    A = _vertex_set(G, A)
    return 2 * len(induced_edges(G, A)) + len(boundary_edges(G, A)) == k * len(A)


def cartesian_product(G: SimpleGraph, H: SimpleGraph) -> SimpleGraph:
    """Vertex ``(g, h)`` gets index ``g * H.n + h``; labels are the pairs of
    factor labels (or indices)."""
    nh = H.n
    edges = set()
    for g in range(G.n):
        for u, v in H.edges:
            edges.add((g * nh + u, g * nh + v))
    for h in range(nh):
        for u, v in G.edges:
            edges.add((u * nh + h, v * nh + h))
    gl = G.labels or tuple(range(G.n))
    hl = H.labels or tuple(range(nh))
    labels = tuple((a, b) for a in gl for b in hl)
    return SimpleGraph(G.n * nh, frozenset(edges), labels)


def johnson_graph(n: int) -> SimpleGraph:
    """J(n, 2): 2-subsets of ``1..n`` in lex order, adjacent when they share one element."""
    if n < 2:
        raise DomainError("J(n, 2) needs n >= 2")
    verts = list(itertools.combinations(range(1, n + 1), 2))
    edges = frozenset(
        (i, j)
        for i, j in itertools.combinations(range(len(verts)), 2)
        if len(set(verts[i]) & set(verts[j])) == 1
    )
    return SimpleGraph(len(verts), edges, tuple(verts))


def sigma_bridge(v) -> Point:
    """Send the 2-subset ``{a1 < a2}`` of ``1..n`` to the triangle point ``(a1 - 1, a2 - 2)``."""
    try:
        a1, a2 = sorted(v)
    except (TypeError, ValueError):
        raise DomainError(f"{v!r} is not a 2-subset") from None
    if not (isinstance(a1, int) and isinstance(a2, int)) or a1 < 1 or a1 == a2:
        raise DomainError(f"{v!r} is not a 2-subset of positive integers")
    return (a1 - 1, a2 - 2)


def adjacent_pairs(G: SimpleGraph) -> int:
    """Unordered pairs of distinct edges sharing an endpoint."""
    return sum(d * (d - 1) // 2 for d in G.degrees())


def ak_optimum(n: int, m: int) -> int:
    """Maximum adjacent-pair count over graphs with ``n`` vertices and ``m`` edges,
    read off the better of the two triangle segments."""
    if n < 2:
        raise DomainError("need n >= 2")
    if not 0 <= m <= n * (n - 1) // 2:
        raise DomainError(f"edge count {m} out of range")
    shape = TriangleShape(n - 1)
    value, _ = best_segment_weight(shape, RankWeight.standard(shape.max_rank), m)
    return value


@lru_cache(maxsize=None)
def _ak_table(n: int) -> tuple[int, ...]:
    best, _ = kernels.edge_subset_pair_maxima(n)
    return tuple(best)


def ak_bruteforce(n: int, m: int) -> int:
    """Same maximum by exhaustive search over all labeled edge sets."""
    if n < 2:
        raise DomainError("need n >= 2")
    if n > AK_GUARD:
        raise ResourceError(f"brute force is limited to n <= {AK_GUARD}")
    if not 0 <= m <= n * (n - 1) // 2:
        raise DomainError(f"edge count {m} out of range")
    return _ak_table(n)[m]


@dataclass(frozen=True)
class DeltaSequence:
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def prefix_sums(self) -> list:
        return list(itertools.accumulate(self.values, initial=0))


def delta_sequence(G: SimpleGraph, order: Optional[Sequence[int]] = None) -> DeltaSequence:
    """Induced-edge gains along ``order`` (default: vertex index order)."""
    order = list(range(G.n)) if order is None else list(order)
    if sorted(order) != list(range(G.n)):
        raise DomainError("order must list every vertex exactly once")
    adj = G.neighbours()
    seen: set[int] = set()
    out = []
    for v in order:
        out.append(len(adj[v] & seen))
        seen.add(v)
    return DeltaSequence(out)


@dataclass(frozen=True)
class ProductWeight:
    """``wt(x) = sum_i deltas[i][x_i]`` on the grid with side lengths ``len(deltas[i])``."""

    deltas: tuple

    def __post_init__(self):
        object.__setattr__(self, "deltas", tuple(tuple(d) for d in self.deltas))

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(d) for d in self.deltas)

    def __call__(self, p: Point):
        if len(p) != len(self.deltas):
            raise DomainError("point dimension does not match the number of factors")
        return sum(d[x] for d, x in zip(self.deltas, p))


def product_weight_table(deltas: Sequence, shape: Optional[GridShape] = None) -> ProductWeight:
    w = ProductWeight(tuple(deltas))
    if any(len(d) == 0 for d in w.deltas):
        raise DomainError("delta sequences must be nonempty")
    if shape is not None and shape.lengths != w.lengths:
        raise DomainError(f"factor lengths {w.lengths} do not match {shape}")
    return w


class SetFunction:
    """A real function on the subsets of ``{0, .., n-1}``, tabulated by bitmask."""

    def __init__(self, n: int, table: Sequence):
        if not isinstance(n, int) or n < 0:
            raise DomainError("ground set size must be a nonnegative integer")
        table = tuple(table)
        if len(table) != 1 << n:
            raise DomainError(f"need {1 << n} table entries, got {len(table)}")
        self.n = n
        self.table = table

    @classmethod
    def from_callable(cls, n: int, f: Callable[[frozenset], object]) -> "SetFunction":
        return cls(n, [f(frozenset(i for i in range(n) if mask >> i & 1)) for mask in range(1 << n)])

    @classmethod
    def of_size(cls, n: int, f: Callable[[int], object]) -> "SetFunction":
        return cls(n, [f(bin(mask).count("1")) for mask in range(1 << n)])

    def mask(self, S: Iterable[int]) -> int:
        out = 0
        for i in S:
            if not 0 <= i < self.n:
                raise DomainError(f"{i} is outside the ground set")
            out |= 1 << i
        return out

    def __call__(self, S: Iterable[int]):
        return self.table[self.mask(S)]


def phi_power(phi: SetFunction, d: int, A: Iterable[Point]):
    """Sum of ``phi`` over every axis-parallel line of ``{0..n-1}^d`` met with ``A``."""
    n = phi.n
    A = {tuple(p) for p in A}
    for p in A:
        if len(p) != d or any(not 0 <= c < n for c in p):
            raise DomainError(f"{p} is not a point of the {d}-dimensional cube of side {n}")
    total = 0
    empty = phi.table[0]
    lines_per_axis = n ** (d - 1)
    for i in range(d):
        fibres: dict[tuple, int] = {}
        for p in A:
            key = p[:i] + p[i + 1 :]
            fibres[key] = fibres.get(key, 0) | (1 << p[i])
        total += sum(phi.table[m] for m in fibres.values())
        total += (lines_per_axis - len(fibres)) * empty
    return total


def is_push_down(phi: SetFunction):
    """``(True, None)`` or ``(False, witness)`` for the first failed property.

    Checked: ``phi(empty) == 0``; ``phi(A) <= phi({0..|A|-1})``; and
    ``phi(A) + phi(B) <= phi(A | B) + phi(A & B)`` for every pair.
    """
    n = phi.n
    if n > PUSH_DOWN_GUARD:
        raise ResourceError(f"exhaustive check is limited to n <= {PUSH_DOWN_GUARD}")
    t = phi.table
    if t[0] != 0:
        return False, {"property": "empty", "value": t[0]}
    for a in range(1 << n):
        k = bin(a).count("1")
        if t[a] > t[(1 << k) - 1]:
            return False, {"property": "nested", "A": _members(a), "k": k}
    for a in range(1 << n):
        for b in range(a, 1 << n):
            if t[a] + t[b] > t[a | b] + t[a & b]:
                return False, {"property": "lattice", "A": _members(a), "B": _members(b)}
    return True, None


def _members(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def delta_of_phi(phi: SetFunction) -> DeltaSequence:
    t = phi.table
    return DeltaSequence(t[(1 << i) - 1] - t[(1 << (i - 1)) - 1] for i in range(1, phi.n + 1))


def push_down_compress(
    shape: GridShape, A: Iterable[Point], S: Iterable[int], order: Optional[DominationOrder] = None
) -> frozenset:
    """Replace each fibre of ``A`` along the coordinates ``S`` (labels) by the
    initial segment of the same size in ``order`` on those coordinates."""
    S = sorted(set(S))
    if not S or any(not 1 <= c <= shape.d for c in S):
        raise DomainError(f"coordinate labels must be a nonempty subset of 1..{shape.d}")
    order = order or lex(len(S))
    if order.d != len(S):
        raise DomainError("order dimension must equal |S|")
    A = {tuple(p) for p in A}
    for p in A:
        shape.check(p)
    idx = [c - 1 for c in S]
    rest = [i for i in range(shape.d) if i not in idx]
    sub = GridShape(shape.lengths[i] for i in idx)
    counts: dict[tuple, int] = {}
    for p in A:
        key = tuple(p[i] for i in rest)
        counts[key] = counts.get(key, 0) + 1
    out = set()
    for key, k in counts.items():
        for q in initial_segment_points(sub, order, k):
            p = [0] * shape.d
            for i, c in zip(rest, key):
                p[i] = c
            for i, c in zip(idx, q):
                p[i] = c
            out.add(tuple(p))
    return frozenset(out)


@dataclass
class Report:
    title: str
    rows: list = field(default_factory=list)

    @property
    def all_agree(self) -> bool:
        return all(r["agree"] for r in self.rows)


def _lex_vs_oracle(shape: GridShape, weight, title: str) -> Report:
    if shape.d == 3:
        best, _ = oracle.box3_maxima(shape, weight)
    elif shape.d <= 2:
        table = oracle.optimal_by_size(shape, weight)
        best = [table[m][0] for m in range(shape.size + 1)]
    else:
        raise ResourceError("the oracle handles at most 3 factors")
    rep = Report(title)
    order = lex(shape.d)
    for m in range(shape.size + 1):
        lw = weight_of(weight, initial_segment_points(shape, order, m))
        rep.rows.append({"m": m, "lex_weight": lw, "oracle_max": best[m], "agree": lw == best[m]})
    return rep


def verify_local_global(n: int, d: int) -> Report:
    """Lex segments of the ``d``-th power of ``K_n`` against the oracle maximum."""
    if n < 1 or d < 1:
        raise DomainError("need n, d >= 1")
    delta = delta_sequence(complete_graph(n))
    shape = GridShape((n,) * d)
    return _lex_vs_oracle(shape, product_weight_table([delta] * d, shape), f"K{n}^{d}")


def lindsay_check(dims: Sequence[int]) -> Report:
    """Lex segments of a product of cliques (smallest clique first) against the oracle.

    Each row also records the induced-edge count of the segment on the actual
    product graph, which must equal the table weight.
    """
    dims = sorted(int(x) for x in dims)
    if not dims or any(x < 1 for x in dims):
        raise DomainError("clique sizes must be positive")
    shape = GridShape(dims)
    weight = product_weight_table([delta_sequence(complete_graph(x)) for x in dims], shape)
    rep = _lex_vs_oracle(shape, weight, "x".join(f"K{x}" for x in dims))
    g = complete_graph(dims[0])
    for x in dims[1:]:
        g = cartesian_product(g, complete_graph(x))
    strides = [math.prod(dims[i + 1 :]) for i in range(len(dims))]
    order = lex(len(dims))
    for row in rep.rows:
        verts = [sum(c * s for c, s in zip(p, strides)) for p in initial_segment_points(shape, order, row["m"])]
        row["graph_edges"] = len(induced_edges(g, verts))
        row["agree"] = row["agree"] and row["graph_edges"] == row["lex_weight"]
    return rep
