import random

import pytest
from hypothesis import given

from mstinf import (MetricSpace, Tree, TreeError, Verdict, connectivity, gmin_graph, is_exact_edge,
                    kruskal, path, swap_edge, tree_length, verify_locally_minimal,
                    verify_mst_by_bottleneck, verify_mst_by_exactness)
from mstinf.certify import Graph, verify
from mstinf.exactify import exactify
from mstinf.fixtures import random_space, random_tree
from mstinf.metric_core import PreconditionError

from oracles import all_spanning_trees, brute_set_distance, exhaustive_mst_length, nx_components
from strategies import metric_spaces, spaces_and_trees

LINE = MetricSpace.from_points([0, 1, 3], lambda a, b: abs(a - b))
PATH_013 = Tree.from_edges(3, [(0, 1), (1, 2)])
BAD_013 = Tree.from_edges(3, [(0, 2), (1, 2)])


def test_exact_edge_line():
    r = is_exact_edge(LINE, PATH_013, (0, 1))
    assert r.exact and r.cut_distance == 1


def test_non_exact_edge_line():
    r = is_exact_edge(LINE, BAD_013, (0, 2))
    assert not r.exact and r.cut_distance == 1 and r.length == 3 and r.witness == (0, 1)


def test_exact_edge_not_in_tree():
    with pytest.raises(TreeError):
        is_exact_edge(LINE, PATH_013, (0, 2))


@pytest.mark.parametrize("seed", range(20))
def test_exact_edge_vs_brute_force(seed):
    rng = random.Random(seed)
    space = random_space(rng.randint(2, 10), seed)
    T = random_tree(space.n, rng)
    e = rng.choice(T.sorted_edges())
    A, B = nx_components(T, [e])
    r = is_exact_edge(space, T, e)
    assert r.cut_distance == brute_set_distance(space.dist, A, B)
    assert r.exact == (space(*e) == r.cut_distance)


def test_two_points_minimal():
    s = MetricSpace([[0, 2], [2, 0]])
    T = Tree.from_edges(2, [(0, 1)])
    assert verify_mst_by_exactness(s, T).verdict is Verdict.MINIMAL
    assert verify_mst_by_bottleneck(s, T).verdict is Verdict.MINIMAL


def test_bad_tree_not_minimal_both_ways():
    a = verify_mst_by_exactness(LINE, BAD_013)
    b = verify_mst_by_bottleneck(LINE, BAD_013)
    assert a.verdict is b.verdict is Verdict.NOT_MINIMAL
    assert b.violation == (0, 1)
    assert a.swap.remove == (0, 2) and a.swap.insert == (0, 1) and a.swap.gain == 2


def test_size_mismatch():
    with pytest.raises(TreeError):
        verify_mst_by_exactness(LINE, Tree.from_edges(2, [(0, 1)]))


@pytest.mark.parametrize("seed", range(30))
def test_negative_witness_strictly_improves(seed):
    rng = random.Random(seed)
    space = random_space(rng.randint(3, 10), seed)
    T = random_tree(space.n, rng)
    for cert in (verify_mst_by_exactness(space, T), verify_mst_by_bottleneck(space, T)):
        if cert.verdict is Verdict.NOT_MINIMAL:
            S = swap_edge(T, cert.swap.remove, cert.swap.insert)
            assert tree_length(T, space) - tree_length(S, space) == cert.swap.gain > 0


@pytest.mark.parametrize("seed", range(10))
def test_kruskal_and_exactify_certified(seed):
    space = random_space(9, seed, "uniform_points_on_line" if seed % 2 else "random_metric_completion")
    assert verify_mst_by_bottleneck(space, kruskal(space)).verdict is Verdict.MINIMAL
    T, _ = exactify(space, random_tree(9, random.Random(seed)))
    assert verify_mst_by_exactness(space, T).verdict is Verdict.MINIMAL


@given(spaces_and_trees(2, 9))
def test_methods_agree(pair):
    space, T = pair
    assert verify_mst_by_exactness(space, T).verdict is verify_mst_by_bottleneck(space, T).verdict
    assert verify(space, T, "both").verdict is verify(space, T, "exact").verdict


@pytest.mark.parametrize("seed", range(8))
def test_exactness_criterion_exhaustive(seed):
    space = random_space(5 + seed % 2, seed, max_value=4)
    best = exhaustive_mst_length(space.dist, space.n)
    for T in all_spanning_trees(space.n):
        minimal = verify_mst_by_exactness(space, T).verdict is Verdict.MINIMAL
        assert minimal == (tree_length(T, space) == best)


def test_local_minimality_examples():
    assert verify_locally_minimal(LINE, PATH_013).verdict is Verdict.LOCALLY_MINIMAL
    cert = verify_locally_minimal(LINE, BAD_013)
    assert cert.verdict is Verdict.NOT_LOCALLY_MINIMAL
    assert cert.violation == (0, 1)


@given(spaces_and_trees(2, 8))
def test_local_checks_agree_and_match_minimality(pair):
    space, T = pair
    local = verify_locally_minimal(space, T)  # raises if its two checks disagree
    assert local.positive == (verify_mst_by_exactness(space, T).verdict is Verdict.MINIMAL)


@given(metric_spaces(2, 8))
def test_mst_path_edges_bounded(space):
    T = kruskal(space)
    for v, w in space.pairs():
        assert all(space(*e) <= space(v, w) for e in path(T, v, w))


def test_gmin_two_points():
    assert gmin_graph(MetricSpace([[0, 3], [3, 0]])).edges == {(0, 1)}


def test_gmin_uniform_complete():
    s = MetricSpace([[0 if i == j else 1 for j in range(5)] for i in range(5)])
    for method in ("brute", "bottleneck"):
        assert len(gmin_graph(s, method).edges) == 10


def test_gmin_needs_two_points():
    with pytest.raises(PreconditionError):
        gmin_graph(MetricSpace([[0]]))


@pytest.mark.parametrize("seed", range(20))
def test_gmin_dual_computation(seed):
    rng = random.Random(seed)
    space = random_space(rng.randint(2, 10), seed, max_value=rng.choice([3, 20]))
    brute = gmin_graph(space, "brute")
    assert brute == gmin_graph(space, "bottleneck")
    assert connectivity(brute)
    assert kruskal(space).edges <= brute.edges


def test_gmin_large_uses_bottleneck():
    space = random_space(14, 0)
    g = gmin_graph(space)
    assert connectivity(g) and kruskal(space).edges <= g.edges


def test_connectivity_examples():
    assert connectivity(Graph(1, frozenset()))
    assert not connectivity(Graph(3, frozenset({(0, 1)})))
    assert connectivity(Graph(3, frozenset({(0, 1), (1, 2)})))


@pytest.mark.parametrize("seed", range(10))
def test_float_mode_matches_rational(seed):
    rng = random.Random(seed)
    space = random_space(8, seed, max_value=4)
    fspace = space.to_float()
    assert fspace.numeric == "float"
    T = random_tree(8, rng)
    for check in (verify_mst_by_exactness, verify_mst_by_bottleneck):
        assert check(space, T).verdict is check(fspace, T).verdict
    assert gmin_graph(space) == gmin_graph(fspace)
