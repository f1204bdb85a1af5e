"""Turn a spanning tree into an all-exact one by one pass of edge replacements.

Each enumerated edge is visited once. An exact edge is kept; a non-exact
edge is replaced by the pair attaining the distance between its two cut
sides. Replacements never break exactness of edges already visited, so on a
finite space the output is a minimal spanning tree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .certify import is_exact_edge
from .metric_core import MetricSpace, Number, PreconditionError
from .tree_core import Edge, Tree, TreeError, cut_partition, edge, swap_edge, tree_length


@dataclass(frozen=True)
class StepRecord:
    index: int
    action: str  # "kept" | "swapped"
    removed: Edge
    inserted: Edge
    sizes: tuple[int, int]
    length_before: Number
    length_after: Number


@dataclass
class ExactifyTrace:
    steps: list = field(default_factory=list)

    @property
    def processed(self) -> list[Edge]:
        """The edges that replaced (or kept) each enumerated edge, in order."""
        return [s.inserted for s in self.steps]

    def is_monotone(self) -> bool:
        for s in self.steps:
            if s.length_after > s.length_before:
                return False
            if s.action == "swapped" and not s.length_after < s.length_before:
                return False
        return all(a.length_after == b.length_before for a, b in zip(self.steps, self.steps[1:]))


def exactify_step(space: MetricSpace, T: Tree, e, index: int = 0, length: Optional[Number] = None):
    """One replacement; returns ``(tree, StepRecord)``."""
    e = edge(*e)
    if length is None:
        length = tree_length(T, space)
    rec = is_exact_edge(space, T, e)
    part = cut_partition(T, e)
    sizes = (len(part.side1), len(part.side2))
    if rec.exact:
        return T, StepRecord(index, "kept", e, e, sizes, length, length)
    ins = edge(*rec.witness)
    S = swap_edge(T, e, ins)
    after = length - rec.length + rec.cut_distance
    return S, StepRecord(index, "swapped", e, ins, sizes, length, after)


def default_order(space: MetricSpace, T: Tree) -> list[Edge]:
    """Ascending edge length, ties by the lexicographic pair."""
    d = space.dist
    return sorted(T.edges, key=lambda e: (d[e[0]][e[1]], e))


def resolve_order(space: MetricSpace, T: Tree, order) -> list[Edge]:
    """Accept ``None``/"asc", "given", "random:SEED" or an explicit edge list."""
    if order is None or order == "asc":
        return default_order(space, T)
    if order == "given":
        return T.sorted_edges()
    if isinstance(order, str) and order.startswith("random:"):
        seq = T.sorted_edges()
        random.Random(int(order.split(":", 1)[1])).shuffle(seq)
        return seq
    if isinstance(order, str):
        raise ValueError(f"unknown order {order!r}")
    seq = [edge(*e) for e in order]
    if len(seq) != len(T.edges) or set(seq) != set(T.edges):
        raise PreconditionError("order must be a permutation of the tree's edges")
    return seq


def exactify(space: MetricSpace, T0: Tree, order=None):
    """Run one pass over the edge enumeration; returns ``(tree, ExactifyTrace)``."""
    if T0.n != space.n:
        raise TreeError(f"tree has {T0.n} vertices, space has {space.n}")
    seq = resolve_order(space, T0, order)
    T = T0
    length = tree_length(T0, space)
    trace = ExactifyTrace()
    for i, e in enumerate(seq):
        # unvisited original edges are never removed, so e is still present
        T, rec = exactify_step(space, T, e, i, length)
        length = rec.length_after
        trace.steps.append(rec)
    return T, trace


def lemma_epartit_probe(space: MetricSpace, T: Tree, f, e) -> bool:
    """Does the exact edge ``f`` stay exact after an exactify step on ``e``?"""
    f, e = edge(*f), edge(*e)
    if e == f:
        raise PreconditionError("e and f must differ")
    if e not in T.edges or f not in T.edges:
        raise PreconditionError("e and f must be edges of T")
    if not is_exact_edge(space, T, f).exact:
        raise PreconditionError(f"{f} is not exact in T")
    S, _ = exactify_step(space, T, e)
    return is_exact_edge(space, S, f).exact


class _DisjointSets:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


def kruskal(space: MetricSpace) -> Tree:
    """Minimum spanning tree; ties broken by ascending length, then pair."""
    n = space.n
    if n < 1:
        raise PreconditionError("kruskal needs at least one point")
    d = space.dist
    pairs = sorted(space.pairs(), key=lambda p: (d[p[0]][p[1]], p))
    ds = _DisjointSets(n)
    chosen = []
    for u, v in pairs:
        if ds.union(u, v):
            chosen.append((u, v))
            if len(chosen) == n - 1:
                break
    return Tree(n, frozenset(chosen))
