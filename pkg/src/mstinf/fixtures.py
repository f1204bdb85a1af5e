"""Registered countable spaces with declared (never computed) facts, and random spaces.

Enumeration orders are frozen; changing one changes every prefix.

==================== ==================================================
harmonic_with_limit  0, 1, 1/2, 1/3, ... on the real line
two_sided_harmonic   1, -1, 1/2, -1/2, 1/3, -1/3, ...
uniform_countable    0, 1, 2, ... with every distance 1
good_no_mst          0, x, 1, 1/2, 1/3, ...; x at distance 1 from the rest
star_quadratic       center m, then leaves 1, 2, ...; leaf k hangs at 1/k^2
any_tree             binary-heap tree, vertex k >= 1 hangs at 2^-k below
                     vertex (k - 1) // 2; path-sum metric
==================== ==================================================
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .derived_metrics import WeightedTree, rho1_all_pairs
from .metric_core import CountableSpace, MetricSpace, PreconditionError, set_distance
from .tree_core import Tree


@dataclass(frozen=True)
class FixtureMeta:
    name: str
    is_good: bool
    mst_exists: bool
    mst_length: Optional[str] = None
    notes: str = ""

    def to_dict(self):
        return {
            "name": self.name,
            "is_good": self.is_good,
            "mst_exists": self.mst_exists,
            "mst_length": self.mst_length,
            "notes": self.notes,
        }


def _harmonic_point(k: int) -> Fraction:
    return Fraction(0) if k == 0 else Fraction(1, k)


def _two_sided_point(k: int) -> Fraction:
    x = Fraction(1, k // 2 + 1)
    return x if k % 2 == 0 else -x


def _good_no_mst_point(k: int):
    if k == 0:
        return Fraction(0)
    if k == 1:
        return "x"
    return Fraction(1, k - 1)


def _good_no_mst_dist(j: int, k: int):
    if j == k:
        return 0
    if j == 1 or k == 1:
        return 1
    return abs(_good_no_mst_point(j) - _good_no_mst_point(k))


def _star_point(k: int) -> str:
    return "m" if k == 0 else f"leaf{k}"


def _star_dist(j: int, k: int):
    if j == k:
        return 0
    return sum(Fraction(1, i * i) for i in (j, k) if i)


def _line(pt: Callable[[int], Fraction]):
    return lambda j, k: abs(pt(j) - pt(k))


def _tree_path_sum(parent: Callable[[int], int], weight: Callable[[int], Fraction]):
    """Path-sum metric of a lazily given rooted tree with parents of smaller index."""

    def depth_chain(k):
        chain = [k]
        while chain[-1] != 0:
            chain.append(parent(chain[-1]))
        return chain

    def dist(j, k):
        if j == k:
            return 0
        cj, ck = depth_chain(j), depth_chain(k)
        common = set(cj) & set(ck)
        total = Fraction(0)
        for chain in (cj, ck):
            for v in chain:
                if v in common:
                    break
                total += weight(v)
        return total

    return dist


def any_tree(parent: Callable[[int], int], weight: Callable[[int], Fraction],
             name: str = "any_tree", size: Optional[int] = None,
             mst_length: Optional[str] = None) -> CountableSpace:
    """Path-sum space of a countable tree: vertex ``k >= 1`` hangs below ``parent(k) < k``
    by an edge of positive weight ``weight(k)``. The weights must be summable."""
    meta = FixtureMeta(name, True, True, mst_length,
                       "any summable weighted tree is an MST of its path-sum metric")
    return CountableSpace(name, lambda k: k, _tree_path_sum(parent, weight), meta, size)


def any_tree_from(wt: WeightedTree, name: str = "any_tree") -> CountableSpace:
    """Finite form of :func:`any_tree` for an explicit weighted tree."""
    table = rho1_all_pairs(wt)
    meta = FixtureMeta(name, True, True, str(wt.total()),
                       "any summable weighted tree is an MST of its path-sum metric")
    return CountableSpace(name, lambda k: k, lambda j, k: table[j][k], meta, wt.n)


_REGISTRY = {
    "harmonic_with_limit": lambda: CountableSpace(
        "harmonic_with_limit", _harmonic_point, _line(_harmonic_point),
        FixtureMeta("harmonic_with_limit", True, False, "1",
                    "{1/n} with its limit 0: good, but no MST; neighbours 1/n, 1/(n+1) are forced edges"),
    ),
    "two_sided_harmonic": lambda: CountableSpace(
        "two_sided_harmonic", _two_sided_point, _line(_two_sided_point),
        FixtureMeta("two_sided_harmonic", True, False, "2",
                    "{1/n} and {-1/n} without 0: the two halves are at distance 0, so no MST"),
    ),
    "uniform_countable": lambda: CountableSpace(
        "uniform_countable", lambda k: k, lambda j, k: 0 if j == k else 1,
        FixtureMeta("uniform_countable", False, False, None,
                    "all distances 1: G_min is complete yet the space is not good"),
    ),
    "good_no_mst": lambda: CountableSpace(
        "good_no_mst", _good_no_mst_point, _good_no_mst_dist,
        FixtureMeta("good_no_mst", True, False, None,
                    "x joined at distance 1 to {1/n} u {0}: G_min connected, still no MST"),
    ),
    "star_quadratic": lambda: CountableSpace(
        "star_quadratic", _star_point, _star_dist,
        FixtureMeta("star_quadratic", True, True, "pi^2/6",
                    "star with edge weights 1/k^2: an MST exists though d({m}, rest) = 0 is not attained"),
    ),
    "any_tree": lambda: any_tree(lambda k: (k - 1) // 2, lambda k: Fraction(1, 2 ** k), mst_length="1"),
}


def fixture_names() -> list[str]:
    return list(_REGISTRY)


def fixture(name: str) -> CountableSpace:
    try:
        return _REGISTRY[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(_REGISTRY)}") from None


RANDOM_MODELS = ("uniform_points_on_line", "random_metric_completion")


def random_space(n: int, seed: int, model: str = "random_metric_completion",
                 max_value: int = 20) -> MetricSpace:
    """Deterministic random finite metric space with integer distances.

    ``uniform_points_on_line`` draws distinct integer positions in
    ``[0, max_value * n)``. ``random_metric_completion`` draws symmetric
    values in ``[1, max_value]`` and closes them under shortest paths.
    """
    if n < 1:
        raise PreconditionError("random_space needs n >= 1")
    rng = random.Random(seed)
    if model == "uniform_points_on_line":
        pts = rng.sample(range(max_value * n), n)
        return MetricSpace.from_points(pts, lambda a, b: abs(a - b), validate=False)
    if model != "random_metric_completion":
        raise ValueError(f"unknown model {model!r}; expected one of {RANDOM_MODELS}")
    d = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            d[i][j] = d[j][i] = rng.randint(1, max_value)
    for k in range(n):
        dk = d[k]
        for i in range(n):
            di = d[i]
            dik = di[k]
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return MetricSpace(tuple(map(tuple, d)), validate=False)


def random_tree(n: int, rng: random.Random) -> Tree:
    """Uniform random labelled tree via a Pruefer sequence."""
    if n == 1:
        return Tree(1, frozenset())
    if n == 2:
        return Tree(2, frozenset({(0, 1)}))
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return tree_from_pruefer(n, seq)


def tree_from_pruefer(n: int, seq) -> Tree:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (i for i in range(n) if degree[i] == 1)
    edges.append((u, v))
    return Tree(n, frozenset(edges))


def random_weighted_tree(n: int, seed: int, max_weight: int = 10) -> WeightedTree:
    rng = random.Random(seed)
    T = random_tree(n, rng)
    return WeightedTree(T, {e: Fraction(rng.randint(1, max_weight), rng.randint(1, 4))
                            for e in T.sorted_edges()})


def unique_pair_probe(space: MetricSpace, side1, side2=None):
    """The pair attaining ``d(side1, side2)`` if it is the only minimizer, else None."""
    side1 = frozenset(side1)
    side2 = frozenset(range(space.n)) - side1 if side2 is None else frozenset(side2)
    if not side1 or not side2 or side1 & side2 or side1 | side2 != frozenset(range(space.n)):
        raise PreconditionError("not a partition of the space into two nonempty blocks")
    res = set_distance(space, side1, side2)
    cmp = space.cmp
    count = sum(1 for a in side1 for b in side2 if cmp.eq(space.dist[a][b], res.value))
    return res.witness if count == 1 else None
