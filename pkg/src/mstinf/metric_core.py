"""Finite metric spaces, lazily enumerated countable spaces, set distances.

Distances are kept exact (``int`` / ``fractions.Fraction``) whenever the
inputs are rational. A table containing any ``float`` switches the space to
float mode, where every comparison goes through the tolerance ``TAU``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Optional, Sequence, Union

Number = Union[int, Fraction, float]

TAU = 1e-9


class MetricFormatError(ValueError):
    """The distance table is not a square table of real numbers."""


class MetricAxiomError(ValueError):
    """The distance table is well formed but violates a metric axiom."""

    def __init__(self, violations):
        self.violations = list(violations)
        head = ", ".join(str(v) for v in self.violations[:3])
        more = "" if len(self.violations) <= 3 else f" (+{len(self.violations) - 3} more)"
        super().__init__(f"not a metric: {head}{more}")


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    axiom: str  # "identity" | "positivity" | "symmetry" | "triangle"
    indices: tuple

    def __str__(self):
        return f"{self.axiom} violation {self.indices}"


def normalize_number(x) -> Number:
    """Collapse integral rationals to ``int`` so exact arithmetic stays cheap."""
    if isinstance(x, bool):
        raise MetricFormatError(f"boolean is not a distance: {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return normalize_number(Fraction(x.numerator, x.denominator))
    if isinstance(x, float):
        return x
    raise MetricFormatError(f"not a real number: {x!r}")


def is_exact_value(x) -> bool:
    return isinstance(x, (int, Fraction))


class Comparator:
    """Exact comparisons, or comparisons within an absolute tolerance."""

    def __init__(self, tol: float = 0.0):
        self.tol = tol

    def eq(self, a, b) -> bool:
        return a == b if not self.tol else abs(a - b) <= self.tol

    def lt(self, a, b) -> bool:
        return a < b if not self.tol else a < b - self.tol

    def le(self, a, b) -> bool:
        return a <= b if not self.tol else a <= b + self.tol


def check_metric_axioms(dist_table, tol: Optional[float] = None) -> list[Violation]:
    """Return every metric-axiom violation of ``dist_table`` (empty iff a metric).

    Triangle violations are reported once per unordered outer pair as
    ``(i, j, k)`` with ``i < k`` meaning ``d(i, k) > d(i, j) + d(j, k)``.
    """
    table = _as_table(dist_table)
    n = len(table)
    if tol is None:
        tol = 0.0 if all(is_exact_value(x) for row in table for x in row) else TAU
    cmp = Comparator(tol)
    out: list[Violation] = []
    for i in range(n):
        if not cmp.eq(table[i][i], 0):
            out.append(Violation("identity", (i,)))
    for i in range(n):
        for j in range(i + 1, n):
            if not cmp.eq(table[i][j], table[j][i]):
                out.append(Violation("symmetry", (i, j)))
            if not cmp.lt(0, table[i][j]) or not cmp.lt(0, table[j][i]):
                out.append(Violation("positivity", (i, j)))
    for i in range(n):
        row_i = table[i]
        for k in range(i + 1, n):
            d_ik = row_i[k]
            for j in range(n):
                if j == i or j == k:
                    continue
                if cmp.lt(row_i[j] + table[j][k], d_ik):
                    out.append(Violation("triangle", (i, j, k)))
    return out


def _as_table(dist_table) -> tuple[tuple[Number, ...], ...]:
    try:
        rows = [list(r) for r in dist_table]
    except TypeError as exc:
        raise MetricFormatError("distance table must be a sequence of rows") from exc
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise MetricFormatError(f"table is not square: row of length {len(r)} in {n}x{n}")
    table = tuple(tuple(normalize_number(x) for x in r) for r in rows)
    for r in table:
        for x in r:
            if isinstance(x, float) and not math.isfinite(x):
                raise MetricFormatError(f"non-finite entry {x!r}")
    return table


@dataclass(frozen=True, eq=False)
class MetricSpace:
    """Points ``0..n-1`` with a symmetric distance table.

    Construction validates the metric axioms unless ``validate=False``; use
    that only for tables that are metrics by construction.
    """

    dist: tuple
    labels: Optional[tuple] = None
    validate: bool = field(default=True, repr=False)
    tol: float = field(init=False, repr=False)

    def __post_init__(self):
        table = _as_table(self.dist)
        object.__setattr__(self, "dist", table)
        exact = all(is_exact_value(x) for row in table for x in row)
        object.__setattr__(self, "tol", 0.0 if exact else TAU)
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != len(table):
                raise MetricFormatError(f"{len(labels)} labels for {len(table)} points")
            object.__setattr__(self, "labels", labels)
        if self.validate:
            bad = check_metric_axioms(table, self.tol)
            if bad:
                raise MetricAxiomError(bad)

    @property
    def n(self) -> int:
        return len(self.dist)

    @property
    def numeric(self) -> str:
        return "float" if self.tol else "rational"

    @property
    def cmp(self) -> Comparator:
        return Comparator(self.tol)

    def __call__(self, i: int, j: int) -> Number:
        return self.dist[i][j]

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, MetricSpace):
            return NotImplemented
        return self.dist == other.dist and self.labels == other.labels

    def __hash__(self):
        return hash((self.dist, self.labels))

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def restrict(self, n: int) -> "MetricSpace":
        """The subspace on the first ``n`` points."""
        if not 1 <= n <= self.n:
            raise PreconditionError(f"cannot restrict {self.n} points to {n}")
        labels = self.labels[:n] if self.labels is not None else None
        return MetricSpace(tuple(r[:n] for r in self.dist[:n]), labels, validate=False)

    def pairs(self):
        n = self.n
        for i in range(n):
            for j in range(i + 1, n):
                yield i, j

    @classmethod
    def from_points(cls, points: Sequence, metric: Callable, labels=None, validate=True):
        n = len(points)
        table = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                table[i][j] = table[j][i] = metric(points[i], points[j])
        if labels is None:
            labels = [str(p) for p in points]
        return cls(tuple(map(tuple, table)), labels, validate=validate)

    def to_float(self) -> "MetricSpace":
        return MetricSpace(tuple(tuple(float(x) for x in r) for r in self.dist), self.labels, validate=False)


@dataclass(frozen=True)
class CountableSpace:
    """A countable metric space given by an enumeration and a distance oracle.

    ``meta`` holds declared facts about the whole (infinite) space; nothing in
    this package computes them. ``size`` is ``None`` for infinite spaces.
    """

    name: str
    point: Callable[[int], object]
    distance: Callable[[int, int], Number]
    meta: object = None
    size: Optional[int] = None

    def dist(self, j: int, k: int) -> Number:
        return 0 if j == k else self.distance(j, k)


def prefix(space: CountableSpace, n: int) -> MetricSpace:
    """The finite subspace formed by the first ``n`` enumerated points."""
    if n < 1:
        raise PreconditionError("prefix needs n >= 1")
    if space.size is not None and n > space.size:
        raise PreconditionError(f"{space.name} has only {space.size} points")
    table = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            table[i][j] = table[j][i] = space.distance(i, j)
    labels = [str(space.point(k)) for k in range(n)]
    return MetricSpace(tuple(map(tuple, table)), labels, validate=False)


@dataclass(frozen=True)
class SetDistanceResult:
    value: Number
    witness: Optional[tuple[int, int]]


def set_distance(space: MetricSpace, A: Iterable[int], B: Iterable[int]) -> SetDistanceResult:
    """``min d(a, b)`` over ``A x B`` with the attaining pair ``(a, b)``, ``a in A``.

    Among attaining pairs the witness minimizes the sorted pair
    ``(min(a, b), max(a, b))`` lexicographically, so swapping ``A`` and ``B``
    yields the same unordered witness.
    """
    A = sorted(set(A))
    B = sorted(set(B))
    if not A or not B:
        raise PreconditionError("set_distance needs nonempty sets")
    if set(A) & set(B):
        raise PreconditionError("set_distance needs disjoint sets")
    for v in A + B:
        if not 0 <= v < space.n:
            raise PreconditionError(f"vertex {v} outside 0..{space.n - 1}")
    d = space.dist
    best = min(d[a][b] for a in A for b in B)
    cmp = space.cmp
    witness = None
    key = None
    for a in A:
        row = d[a]
        for b in B:
            if cmp.eq(row[b], best):
                k = (a, b) if a < b else (b, a)
                if key is None or k < key:
                    key, witness = k, (a, b)
    return SetDistanceResult(best, witness)
