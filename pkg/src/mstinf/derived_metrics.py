"""Path-sum and path-max metrics of a weighted tree, and the sandwich set between them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from .metric_core import Comparator, MetricSpace, Number, normalize_number, TAU, is_exact_value
from .tree_core import Edge, Tree, TreeError, edge, path


@dataclass(frozen=True, eq=False)
class WeightedTree:
    tree: Tree
    weight: Mapping[Edge, Number]

    def __post_init__(self):
        w = {}
        for e, x in dict(self.weight).items():
            w[edge(*e)] = normalize_number(x)
        if set(w) != set(self.tree.edges):
            raise TreeError("weights must be given for exactly the tree's edges")
        for e, x in w.items():
            if not x > 0:
                raise TreeError(f"edge {e} has non-positive weight {x}")
        object.__setattr__(self, "weight", w)

    @property
    def n(self) -> int:
        return self.tree.n

    @property
    def exact(self) -> bool:
        return all(is_exact_value(x) for x in self.weight.values())

    def total(self) -> Number:
        return sum(self.weight.values(), 0)

    @classmethod
    def induced(cls, tree: Tree, space: MetricSpace) -> "WeightedTree":
        """Weights ``omega(uv) = rho(u, v)`` read off the space."""
        if tree.n != space.n:
            raise TreeError(f"tree has {tree.n} vertices, space has {space.n}")
        return cls(tree, {e: space.dist[e[0]][e[1]] for e in tree.edges})


def rho1(wt: WeightedTree, v: int, w: int) -> Number:
    if v == w:
        return 0
    return sum((wt.weight[e] for e in path(wt.tree, v, w)), 0)


def rho_inf(wt: WeightedTree, v: int, w: int) -> Number:
    # max over the empty path is 0
    if v == w:
        return 0
    return max(wt.weight[e] for e in path(wt.tree, v, w))


def _all_pairs(wt: WeightedTree, combine):
    n = wt.n
    adj = wt.tree.adj
    weight = wt.weight
    table = []
    for root in range(n):
        row = [0] * n
        seen = [False] * n
        seen[root] = True
        stack = [root]
        while stack:
            u = stack.pop()
            for x in adj[u]:
                if not seen[x]:
                    seen[x] = True
                    row[x] = combine(row[u], weight[(u, x) if u < x else (x, u)])
                    stack.append(x)
        table.append(tuple(row))
    return tuple(table)


def rho1_all_pairs(wt: WeightedTree):
    return _all_pairs(wt, lambda acc, x: acc + x)


def rho_inf_all_pairs(wt: WeightedTree):
    """Full bottleneck table, one traversal per root."""
    return _all_pairs(wt, lambda acc, x: x if x > acc else acc)


@dataclass(frozen=True)
class DTMembership:
    ok: bool
    witness: Optional[tuple[int, int, str]] = None  # (v, w, "lower" | "upper")

    def __bool__(self):
        return self.ok


def in_DT(space: MetricSpace, wt: WeightedTree) -> DTMembership:
    """Check ``rho_inf <= dist <= rho1`` on every pair; report the first failure."""
    if space.n != wt.n:
        raise TreeError(f"tree has {wt.n} vertices, space has {space.n}")
    tol = space.tol if space.tol or wt.exact else TAU
    cmp = Comparator(tol)
    lo = rho_inf_all_pairs(wt)
    hi = rho1_all_pairs(wt)
    d = space.dist
    for v in range(space.n):
        for w in range(v + 1, space.n):
            if not cmp.le(lo[v][w], d[v][w]):
                return DTMembership(False, (v, w, "lower"))
            if not cmp.le(d[v][w], hi[v][w]):
                return DTMembership(False, (v, w, "upper"))
    return DTMembership(True)


def rho_space(wt: WeightedTree, kind: str = "sum", labels=None) -> MetricSpace:
    """The ``rho1`` (``kind="sum"``) or ``rho_inf`` (``kind="max"``) space of ``wt``."""
    if kind == "sum":
        table = rho1_all_pairs(wt)
    elif kind == "max":
        table = rho_inf_all_pairs(wt)
    else:
        raise ValueError(f"unknown kind {kind!r}; expected 'sum' or 'max'")
    return MetricSpace(table, labels, validate=False)


def sample_metric_in_DT(wt: WeightedTree, lam) -> MetricSpace:
    """Convex combination ``lam * rho_inf + (1 - lam) * rho1``."""
    if isinstance(lam, str):
        lam = Fraction(lam)
    lam = normalize_number(lam)
    if not 0 <= lam <= 1:
        raise ValueError(f"lambda must lie in [0, 1], got {lam}")
    lo = rho_inf_all_pairs(wt)
    hi = rho1_all_pairs(wt)
    n = wt.n
    table = tuple(
        tuple(normalize_number(lam * lo[i][j] + (1 - lam) * hi[i][j]) for j in range(n))
        for i in range(n)
    )
    return MetricSpace(table, validate=False)
