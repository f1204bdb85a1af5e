"""Minimality certificates for spanning trees of finite metric spaces.

Three independent routes:

* exactness: every edge's length equals the distance between the two
  components left after deleting it;
* bottleneck: the path-max metric of the tree never exceeds the metric;
* local minimality, checked straight from its definition on every path.

A negative verdict always carries a swap that strictly shortens the tree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .derived_metrics import WeightedTree, rho_inf_all_pairs
from .metric_core import MetricSpace, Number, PreconditionError, set_distance
from .tree_core import Edge, Tree, TreeError, cut_partition, edge, path, path_vertices


class Verdict(str, enum.Enum):
    MINIMAL = "MINIMAL"
    NOT_MINIMAL = "NOT_MINIMAL"
    LOCALLY_MINIMAL = "LOCALLY_MINIMAL"
    NOT_LOCALLY_MINIMAL = "NOT_LOCALLY_MINIMAL"


class CertificateDisagreement(AssertionError):
    """Two checks that must coincide gave different answers."""


@dataclass(frozen=True)
class EdgeExactness:
    edge: Edge
    exact: bool
    length: Number
    cut_distance: Number
    witness: tuple[int, int]


@dataclass(frozen=True)
class ImprovingSwap:
    """Replacing ``remove`` by ``insert`` shortens the tree by ``gain > 0``."""

    remove: Edge
    insert: Edge
    gain: Number


@dataclass(frozen=True)
class Certificate:
    verdict: Verdict
    method: str
    per_edge: dict = field(default_factory=dict)
    swap: Optional[ImprovingSwap] = None
    violation: Optional[tuple[int, int]] = None

    @property
    def positive(self) -> bool:
        return self.verdict in (Verdict.MINIMAL, Verdict.LOCALLY_MINIMAL)


def _check_sizes(space: MetricSpace, T: Tree):
    if space.n != T.n:
        raise TreeError(f"tree has {T.n} vertices, space has {space.n}")


def is_exact_edge(space: MetricSpace, T: Tree, e) -> EdgeExactness:
    _check_sizes(space, T)
    e = edge(*e)
    part = cut_partition(T, e)
    res = set_distance(space, part.side1, part.side2)
    length = space.dist[e[0]][e[1]]
    return EdgeExactness(e, space.cmp.eq(length, res.value), length, res.value, res.witness)


def exactness_table(space: MetricSpace, T: Tree) -> dict[Edge, EdgeExactness]:
    return {e: is_exact_edge(space, T, e) for e in T.sorted_edges()}


def verify_mst_by_exactness(space: MetricSpace, T: Tree) -> Certificate:
    table = exactness_table(space, T)
    for e, rec in table.items():
        if not rec.exact:
            swap = ImprovingSwap(e, edge(*rec.witness), rec.length - rec.cut_distance)
            return Certificate(Verdict.NOT_MINIMAL, "exactness", table, swap)
    return Certificate(Verdict.MINIMAL, "exactness", table)


def _heaviest_path_edge(space: MetricSpace, T: Tree, v: int, w: int) -> Edge:
    d = space.dist
    best = None
    for e in path(T, v, w):
        if best is None or d[e[0]][e[1]] > d[best[0]][best[1]]:
            best = e
    return best


def verify_mst_by_bottleneck(space: MetricSpace, T: Tree) -> Certificate:
    _check_sizes(space, T)
    lo = rho_inf_all_pairs(WeightedTree.induced(T, space))
    d = space.dist
    cmp = space.cmp
    for v, w in space.pairs():
        if not cmp.le(lo[v][w], d[v][w]):
            heavy = _heaviest_path_edge(space, T, v, w)
            swap = ImprovingSwap(heavy, (v, w), lo[v][w] - d[v][w])
            return Certificate(Verdict.NOT_MINIMAL, "bottleneck", swap=swap, violation=(v, w))
    return Certificate(Verdict.MINIMAL, "bottleneck")


def _locally_minimal_by_definition(space: MetricSpace, T: Tree):
    """First ``(pair, edge)`` with a path edge longer than the pair's distance, or None."""
    d = space.dist
    cmp = space.cmp
    for v, w in space.pairs():
        vs = path_vertices(T, v, w)
        for a, b in zip(vs, vs[1:]):
            if cmp.lt(d[v][w], d[a][b]):
                return (v, w), edge(a, b)
    return None


def verify_locally_minimal(space: MetricSpace, T: Tree) -> Certificate:
    """Definitional path check and all-edges-exact check; they must agree."""
    _check_sizes(space, T)
    bad = _locally_minimal_by_definition(space, T)
    exact = verify_mst_by_exactness(space, T)
    all_exact = exact.verdict is Verdict.MINIMAL
    if (bad is None) != all_exact:
        raise CertificateDisagreement(
            f"definitional check says {bad is None}, exactness says {all_exact}"
        )
    if bad is None:
        return Certificate(Verdict.LOCALLY_MINIMAL, "local", exact.per_edge)
    (v, w), long_edge = bad
    gain = space.dist[long_edge[0]][long_edge[1]] - space.dist[v][w]
    return Certificate(
        Verdict.NOT_LOCALLY_MINIMAL, "local", exact.per_edge,
        ImprovingSwap(long_edge, (v, w), gain), violation=(v, w),
    )


def verify(space: MetricSpace, T: Tree, method: str = "exact") -> Certificate:
    """Dispatch on ``method`` in {"exact", "bottleneck", "both"}."""
    if method == "exact":
        return verify_mst_by_exactness(space, T)
    if method == "bottleneck":
        return verify_mst_by_bottleneck(space, T)
    if method == "both":
        a = verify_mst_by_exactness(space, T)
        b = verify_mst_by_bottleneck(space, T)
        if a.verdict is not b.verdict:
            raise CertificateDisagreement(f"exactness: {a.verdict}, bottleneck: {b.verdict}")
        return Certificate(a.verdict, "both", a.per_edge, a.swap, b.violation)
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset


def _gmin_brute(space: MetricSpace) -> frozenset:
    n = space.n
    d = space.dist
    cmp = space.cmp
    pairs = list(space.pairs())
    found = set()
    # vertex 0 always on side 1: each unordered partition is visited once
    for mask in range(0, (1 << (n - 1)) - 1):
        side = (mask << 1) | 1
        best = None
        attaining = []
        for u, v in pairs:
            if ((side >> u) & 1) == ((side >> v) & 1):
                continue
            x = d[u][v]
            if best is None or cmp.lt(x, best):
                best, attaining = x, [(u, v)]
            elif cmp.eq(x, best):
                attaining.append((u, v))
        found.update(attaining)
    return frozenset(found)


def _gmin_bottleneck(space: MetricSpace) -> frozenset:
    from .exactify import kruskal

    lo = rho_inf_all_pairs(WeightedTree.induced(kruskal(space), space))
    d = space.dist
    cmp = space.cmp
    return frozenset((v, w) for v, w in space.pairs() if cmp.eq(d[v][w], lo[v][w]))


BRUTE_FORCE_LIMIT = 12


def gmin_graph(space: MetricSpace, method: str = "auto") -> Graph:
    """Pairs attaining the distance across some two-block partition of the points.

    ``method="brute"`` enumerates all partitions; ``"bottleneck"`` keeps the
    pairs whose distance equals the minimax distance of a Kruskal tree.
    ``"auto"`` uses the enumeration up to ``BRUTE_FORCE_LIMIT`` points.
    """
    if space.n < 2:
        raise PreconditionError("G_min needs at least two points")
    if method == "auto":
        method = "brute" if space.n <= BRUTE_FORCE_LIMIT else "bottleneck"
    if method == "brute":
        return Graph(space.n, _gmin_brute(space))
    if method == "bottleneck":
        return Graph(space.n, _gmin_bottleneck(space))
    raise ValueError(f"unknown method {method!r}")


def connectivity(graph: Graph) -> bool:
    if graph.n <= 1:
        return True
    adj = [[] for _ in range(graph.n)]
    for u, v in graph.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        for x in adj[stack.pop()]:
            if x not in seen:
                seen.add(x)
                stack.append(x)
    return len(seen) == graph.n
