"""Finite-prefix surrogates for the infinite-space statements.

For each registered fixture and growing n, print the Kruskal MST length of the
prefix, the maximum degree and the vertex carrying it, the number of MST edges
crossing a named partition, and how many of the first edges of the exactify
trace (started from a star at vertex 1) stay unchanged from the previous n.

    python scripts/prefix_trends.py [--sizes 4 8 16 32 64]
"""

import argparse

from mstinf import CutPartition, Tree, cross_edge_count, exactify, fixture, kruskal, prefix, tree_length
from mstinf.fixtures import fixture_names

# partitions whose crossing counts are interesting in the limit
PARTITIONS = {
    "harmonic_with_limit": lambda n: {0},
    "two_sided_harmonic": lambda n: {k for k in range(n) if k % 2 == 0},
    "good_no_mst": lambda n: {0, 1},
    "star_quadratic": lambda n: {0},
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[4, 8, 16, 32, 64])
    args = ap.parse_args()
    for name in fixture_names():
        fx = fixture(name)
        print(f"== {name}  (declared: good={fx.meta.is_good}, mst_exists={fx.meta.mst_exists}, "
              f"mst_length={fx.meta.mst_length})")
        prev = None
        for n in args.sizes:
            s = prefix(fx, n)
            T = kruskal(s)
            deg, v = max((T.degree(v), v) for v in range(n))
            cross = "-"
            side = PARTITIONS.get(name, lambda n: None)(n)
            if side and len(side) < n:
                cross = cross_edge_count(T, CutPartition(side, set(range(n)) - side))
            start = Tree(n, frozenset((min(1, k), max(1, k)) for k in range(n) if k != 1)) if n > 1 else T
            _, trace = exactify(s, start)
            early = [st.inserted for st in trace.steps]
            stable = "-" if prev is None else sum(1 for a, b in zip(prev, early) if a == b)
            prev = early
            print(f"  n={n:3d}  mst={float(tree_length(T, s)):.6f}  max_deg={deg} at {s.label(v)}  "
                  f"cross={cross}  stable_trace_prefix={stable}")


if __name__ == "__main__":
    main()
