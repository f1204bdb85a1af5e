"""Spanning trees on ``0..n-1``: paths, cut partitions and edge swaps."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .metric_core import MetricSpace

Edge = tuple[int, int]


class TreeError(ValueError):
    """Edge data does not describe a spanning tree."""


class NotAnEdgeError(TreeError):
    pass


class CycleError(TreeError):
    """The requested swap would leave a cycle (and a disconnected graph)."""


def edge(u: int, v: int) -> Edge:
    if u == v:
        raise TreeError(f"loop {u}-{v} is not an edge")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Tree:
    n: int
    edges: frozenset
    adj: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise TreeError("a tree needs at least one vertex")
        es = frozenset(edge(int(u), int(v)) for u, v in self.edges)
        for u, v in es:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise TreeError(f"edge {(u, v)} outside 0..{self.n - 1}")
        if len(es) != self.n - 1:
            raise TreeError(f"{len(es)} edges on {self.n} vertices; a tree has {self.n - 1}")
        adj = [[] for _ in range(self.n)]
        for u, v in sorted(es):
            adj[u].append(v)
            adj[v].append(u)
        adj = tuple(tuple(a) for a in adj)
        seen = _reach(adj, 0, None)
        if len(seen) != self.n:
            raise TreeError("edges do not connect all vertices")
        object.__setattr__(self, "edges", es)
        object.__setattr__(self, "adj", adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "Tree":
        return cls(n, frozenset(tuple(e) for e in edges))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __contains__(self, e) -> bool:
        return edge(*e) in self.edges


def _reach(adj, start: int, banned) -> set[int]:
    """Vertices reachable from ``start`` without crossing edges in ``banned``."""
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w in seen:
                continue
            if banned and ((u, w) if u < w else (w, u)) in banned:
                continue
            seen.add(w)
            stack.append(w)
    return seen


def _check_vertex(T: Tree, v: int):
    if not 0 <= v < T.n:
        raise TreeError(f"vertex {v} outside 0..{T.n - 1}")


def _require_edge(T: Tree, e) -> Edge:
    e = edge(*e)
    if e not in T.edges:
        raise NotAnEdgeError(f"{e} is not an edge of the tree")
    return e


def path_vertices(T: Tree, v: int, w: int) -> list[int]:
    """Vertices of the unique ``v``-``w`` path, endpoints included."""
    _check_vertex(T, v)
    _check_vertex(T, w)
    parent = {v: None}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        if u == w:
            break
        for x in T.adj[u]:
            if x not in parent:
                parent[x] = u
                queue.append(x)
    out = [w]
    while out[-1] != v:
        out.append(parent[out[-1]])
    out.reverse()
    return out


def path(T: Tree, v: int, w: int) -> list[Edge]:
    """Edges of the unique path from ``v`` to ``w``, in traversal order."""
    if v == w:
        raise TreeError("path needs distinct endpoints; the empty path is the caller's convention")
    vs = path_vertices(T, v, w)
    return [edge(a, b) for a, b in zip(vs, vs[1:])]


@dataclass(frozen=True)
class CutPartition:
    side1: frozenset
    side2: frozenset

    def __post_init__(self):
        object.__setattr__(self, "side1", frozenset(self.side1))
        object.__setattr__(self, "side2", frozenset(self.side2))
        if not self.side1 or not self.side2:
            raise TreeError("both sides of a partition must be nonempty")
        if self.side1 & self.side2:
            raise TreeError("partition sides overlap")

    def side_of(self, v: int) -> int:
        return 1 if v in self.side1 else 2

    def crosses(self, u: int, v: int) -> bool:
        return (u in self.side1) != (v in self.side1)


def cut_partition(T: Tree, e) -> CutPartition:
    """The two components of ``T`` minus ``e``; ``side1`` holds the smaller endpoint."""
    e = _require_edge(T, e)
    side1 = _reach(T.adj, e[0], {e})
    return CutPartition(frozenset(side1), frozenset(range(T.n)) - side1)


def cut_partition_set(T: Tree, removed: Iterable) -> list[frozenset]:
    """Components of ``T`` with the edges ``removed`` discarded, ordered by least vertex."""
    banned = {_require_edge(T, e) for e in removed}
    left = set(range(T.n))
    comps = []
    while left:
        start = min(left)
        comp = _reach(T.adj, start, banned)
        comps.append(frozenset(comp))
        left -= comp
    return comps


def swap_edge(T: Tree, e, f) -> Tree:
    """``T`` with edge ``e`` replaced by the pair ``f``.

    The result is a tree exactly when ``e`` lies on the path between the
    endpoints of ``f``; otherwise ``CycleError`` is raised.
    """
    e = _require_edge(T, e)
    f = edge(*f)
    _check_vertex(T, f[0])
    _check_vertex(T, f[1])
    if e == f:
        return T
    if e not in path(T, f[0], f[1]):
        raise CycleError(f"{e} is not on the path between {f[0]} and {f[1]}")
    return Tree(T.n, (T.edges - {e}) | {f})


def tree_length(T: Tree, space: MetricSpace):
    if T.n != space.n:
        raise TreeError(f"tree has {T.n} vertices, space has {space.n}")
    d = space.dist
    return sum((d[u][v] for u, v in T.edges), 0)


def cross_edge_count(T: Tree, P: CutPartition) -> int:
    if P.side1 | P.side2 != frozenset(range(T.n)):
        raise TreeError("partition does not cover the tree's vertices")
    return sum(1 for u, v in T.edges if P.crosses(u, v))
