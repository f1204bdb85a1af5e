"""Exit criteria. Each test prints one PASS/FAIL line; all comparisons are exact rationals."""

import random
import time
from fractions import Fraction

import numpy as np

from mstinf import (Verdict, check_metric_axioms, connectivity, cut_partition, exactify, gmin_graph, in_DT,
                    is_exact_edge, kruskal, lemma_epartit_probe, prefix, fixture, rho1_all_pairs,
                    rho_inf_all_pairs, sample_metric_in_DT, swap_edge, path, tree_length,
                    verify_locally_minimal, verify_mst_by_bottleneck, verify_mst_by_exactness)
from mstinf.certify import exactness_table
from mstinf.derived_metrics import WeightedTree
from mstinf.exactify import exactify_step
from mstinf.fixtures import random_space, random_tree, random_weighted_tree

from oracles import all_spanning_trees
from test_exactify import CASE2, CASE2_TREE

MODELS = ("random_metric_completion", "uniform_points_on_line")


def perturbed_mst(space, rng):
    """Kruskal tree, optionally moved by one random valid swap (often still minimal under ties)."""
    T = kruskal(space)
    if space.n > 2 and rng.random() < 0.5:
        v, w = rng.sample(range(space.n), 2)
        T = swap_edge(T, rng.choice(path(T, v, w)), (v, w))
    return T


def instances(count, max_n, seed, min_n=2):
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(min_n, max_n)
        space = random_space(n, rng.randrange(2**32), MODELS[i % 2], max_value=rng.choice([3, 6, 20]))
        T = perturbed_mst(space, rng) if i % 3 == 0 else random_tree(n, rng)
        yield space, T


def test_1_exactness_criterion_exhaustive(acceptance_report):
    start = time.perf_counter()
    rng = random.Random(1)
    mismatches = spaces = trees = 0
    for i in range(52):
        n = 4 + i % 4
        space = random_space(n, rng.randrange(2**32), MODELS[i % 2], max_value=rng.choice([3, 5, 20]))
        all_trees = all_spanning_trees(n)
        assert len(all_trees) == n ** (n - 2)
        lengths = [tree_length(T, space) for T in all_trees]
        best = min(lengths)
        for T, length in zip(all_trees, lengths):
            minimal = verify_mst_by_exactness(space, T).verdict is Verdict.MINIMAL
            mismatches += minimal != (length == best)
        spaces += 1
        trees += len(all_trees)
    elapsed = time.perf_counter() - start
    acceptance_report(1, "MINIMAL iff exhaustive minimum length",
                      mismatches == 0 and spaces >= 50 and elapsed < 60,
                      f"{spaces} spaces, {trees} trees, {mismatches} mismatches, {elapsed:.1f}s")


def test_2_bottleneck_agreement(acceptance_report):
    disagree = positives = 0
    for space, T in instances(1000, 9, seed=2):
        a = verify_mst_by_exactness(space, T).verdict
        b = verify_mst_by_bottleneck(space, T).verdict
        disagree += a is not b
        positives += a is Verdict.MINIMAL
    acceptance_report(2, "exactness and bottleneck certifiers agree", disagree == 0,
                      f"1000 instances, {positives} minimal, {disagree} disagreements")


def test_3_sandwich_sampler(acceptance_report):
    rng = random.Random(3)
    lams = [Fraction(k, 4) for k in range(5)]
    failures = 0
    for i in range(100):
        wt = random_weighted_tree(rng.randint(1, 30), rng.randrange(2**32))
        for lam in lams:
            space = sample_metric_in_DT(wt, lam)
            ok = (not check_metric_axioms(space.dist)
                  and in_DT(space, wt).ok
                  and verify_mst_by_exactness(space, wt.tree).verdict is Verdict.MINIMAL
                  and verify_mst_by_bottleneck(space, wt.tree).verdict is Verdict.MINIMAL)
            failures += not ok
    acceptance_report(3, "convex samples lie in D_T and certify the tree", failures == 0,
                      f"500 samples, {failures} failures")


def test_4_exactify_optimality(acceptance_report):
    rng = random.Random(4)
    bad = 0
    for i in range(200):
        n = rng.randint(2, 10)
        space = random_space(n, rng.randrange(2**32), MODELS[i % 2], max_value=rng.choice([3, 20]))
        T0 = random_tree(n, rng)
        target = tree_length(kruskal(space), space)
        for _ in range(3):
            order = T0.sorted_edges()
            rng.shuffle(order)
            T, trace = exactify(space, T0, order)
            final_exact = all(is_exact_edge(space, T, e).exact for e in trace.processed)
            bad += not (tree_length(T, space) == target and trace.is_monotone() and final_exact)
    acceptance_report(4, "exactify reaches the Kruskal length", bad == 0, f"600 runs, {bad} failures")


def test_5_lemma_persistence(acceptance_report):
    rng = random.Random(5)
    results = [lemma_epartit_probe(CASE2, CASE2_TREE, (1, 2), (0, 1))]
    case_two = 0
    while len(results) < 501:
        n = rng.randint(3, 9)
        space = random_space(n, rng.randrange(2**32), MODELS[len(results) % 2], max_value=rng.choice([3, 20]))
        T = random_tree(n, rng)
        exact = [f for f, r in exactness_table(space, T).items() if r.exact]
        if not exact:
            continue
        f = rng.choice(exact)
        e = rng.choice([x for x in T.sorted_edges() if x != f])
        S, rec = exactify_step(space, T, e)
        if rec.action == "swapped":
            # case two: the inserted pair lands beyond f, so f's cut changes
            case_two += cutsig(T, f) != cutsig(S, f)
        results.append(lemma_epartit_probe(space, T, f, e))
    acceptance_report(5, "exact edges survive an exactify step", all(results),
                      f"{len(results)} probes incl. hand-built case two, {case_two} random case-two hits")


def cutsig(T, f):
    p = cut_partition(T, f)
    return frozenset({p.side1, p.side2})


def _ranks(table):
    values = sorted({x for row in table for x in row})
    rank = {x: i for i, x in enumerate(values)}
    return np.array([[rank[x] for x in row] for row in table], dtype=np.int64)


def test_6_ultrametric_and_sandwich(acceptance_report):
    rng = random.Random(6)
    ultra_bad = 0
    for _ in range(100):
        wt = random_weighted_tree(rng.randint(1, 40), rng.randrange(2**32))
        # order-preserving ranks keep the strong triangle inequality exact
        L = _ranks(rho_inf_all_pairs(wt))
        ultra_bad += int(np.sum(L[:, None, :] > np.maximum(L[:, :, None], L[None, :, :])))
    upper_bad = lower_bad = 0
    for space, T in instances(200, 12, seed=61):
        hi = rho1_all_pairs(WeightedTree.induced(T, space))
        upper_bad += sum(space(v, w) > hi[v][w] for v, w in space.pairs())
        M = kruskal(space)
        lo = rho_inf_all_pairs(WeightedTree.induced(M, space))
        hi = rho1_all_pairs(WeightedTree.induced(M, space))
        lower_bad += sum(not lo[v][w] <= space(v, w) <= hi[v][w] for v, w in space.pairs())
    acceptance_report(6, "strong triangle inequality and rho_inf <= rho <= rho_1",
                      ultra_bad == lower_bad == upper_bad == 0,
                      f"ultrametric {ultra_bad}, upper {upper_bad}, MST sandwich {lower_bad} violations")


def test_7_fixture_shapes(acceptance_report):
    problems = []
    harmonic, star, gnm = fixture("harmonic_with_limit"), fixture("star_quadratic"), fixture("good_no_mst")
    for n in range(2, 65):
        s = prefix(harmonic, n)
        order = sorted(range(n), key=harmonic.point)
        consecutive = frozenset(tuple(sorted(p)) for p in zip(order, order[1:]))
        T = kruskal(s)
        if T.edges != consecutive or tree_length(T, s) != 1:
            problems.append(("harmonic", n))
        s = prefix(star, n)
        if kruskal(s).degree(0) != n - 1:
            problems.append(("star", n))
        s = prefix(gnm, n)
        if verify_mst_by_exactness(s, kruskal(s)).verdict is not Verdict.MINIMAL:
            problems.append(("good_no_mst", n))
    acceptance_report(7, "fixture prefix MST shapes for n <= 64", not problems,
                      f"{len(problems)} problems" + (f": {problems[:5]}" if problems else ""))


def test_8_gmin_dual(acceptance_report):
    rng = random.Random(8)
    mismatch = disconnected = not_sub = 0
    for i in range(100):
        n = rng.randint(2, 10)
        space = random_space(n, rng.randrange(2**32), MODELS[i % 2], max_value=rng.choice([2, 4, 20]))
        brute = gmin_graph(space, "brute")
        mismatch += brute != gmin_graph(space, "bottleneck")
        disconnected += not connectivity(brute)
        not_sub += not kruskal(space).edges <= brute.edges
    acceptance_report(8, "G_min by enumeration equals bottleneck route; connected; contains MST",
                      mismatch == disconnected == not_sub == 0,
                      f"100 spaces, {mismatch} mismatches, {disconnected} disconnected, {not_sub} not containing MST")


def test_9_local_minimality(acceptance_report):
    bad = positives = 0
    for space, T in instances(1000, 9, seed=9):
        local = verify_locally_minimal(space, T)  # raises if its two checks disagree
        minimal = verify_mst_by_exactness(space, T).verdict is Verdict.MINIMAL
        bad += local.positive != minimal
        positives += local.positive
    acceptance_report(9, "definitional local minimality iff all edges exact iff minimal", bad == 0,
                      f"1000 instances, {positives} locally minimal, {bad} mismatches")
