import dataclasses
import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SMALL, permutation_matching_count, subset_tree_count
from taitmorse import (
    BUILTIN_NAMES,
    CapExceeded,
    CombMap,
    Matching,
    SignedTaitGraph,
    balance,
    count_matchings_bruteforce,
    count_matchings_fkt,
    count_spanning_trees,
    enumerate_matchings,
    enumerate_spanning_trees,
    kasteleyn_orient,
    matching_to_tree,
    builtin_diagram,
    dual,
    overlay,
    random_planar_map,
    tait_graphs,
    star_candidates,
    tree_to_matching,
)
from taitmorse.dimers_trees import det_bareiss, is_spanning_tree, laplacian
from taitmorse.tait_overlay import quadrangulation

TRIANGLE = CombMap((2, 4, 0, 5, 1, 3))
DIPOLE = CombMap((2, 5, 4, 1, 0, 3))
LOOP = CombMap((1, 0))
EDGE = CombMap((0, 1))

KNOWN = {"kink": 1, "3_1": 3, "4_1": 5, "5_1": 5, "5_2": 7,
         "6_1": 9, "6_2": 11, "6_3": 13, "7_1": 7}


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_counts_agree(name, pipeline):
    p = pipeline(name)
    bg = p.balanced
    expected = permutation_matching_count(bg)
    assert expected == KNOWN[name]
    assert len(enumerate_matchings(bg)) == expected
    assert count_matchings_bruteforce(bg) == expected
    assert count_matchings_fkt(bg) == expected
    assert count_spanning_trees(p.g) == count_spanning_trees(p.g_star) == expected
    assert subset_tree_count(p.g.map) == expected


@pytest.mark.parametrize("name", SMALL)
def test_star_and_swap_invariance(name, pipeline):
    expected = KNOWN[name]
    for swap in (False, True):
        p = pipeline(name, swap=swap)
        for s in p.stars:
            bg = balance(p.overlay, s)
            assert count_matchings_fkt(bg) == len(enumerate_matchings(bg)) == expected


def test_matchings_cover_each_vertex_once(pipeline):
    bg = pipeline("5_2", star=3).balanced
    for m in enumerate_matchings(bg):
        assert m.is_perfect(bg)
        whites = [w for _, w, _ in m.pairs(bg)]
        assert sorted(whites) == sorted(bg.whites)


def test_enumeration_order_and_limit(pipeline):
    bg = pipeline("4_1").balanced
    ms = enumerate_matchings(bg)
    assert [m.edges for m in ms] == sorted(m.edges for m in ms)
    assert enumerate_matchings(bg, limit=2) == ms[:2]
    assert enumerate_matchings(bg, limit=0) == []


def test_isolated_black_has_no_cover(pipeline):
    bg = pipeline("3_1").balanced
    cut = dataclasses.replace(bg, edge_ids=tuple(
        j for j in bg.edge_ids if bg.overlay.edge_ends(j)[0] != 0))
    assert cut.degree(0) == 0
    assert count_matchings_bruteforce(cut) == 0
    assert enumerate_matchings(cut) == []


def test_bruteforce_cap(pipeline):
    bg = pipeline("4_1").balanced
    with pytest.raises(CapExceeded):
        count_matchings_bruteforce(bg, cap=3)


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_kasteleyn_audit(name, pipeline):
    bg = pipeline(name).balanced
    k = kasteleyn_orient(bg)
    assert len(k.forward) == len(bg.edge_ids)
    counts = k.clockwise_counts(bg)
    assert len(counts) == len(bg.bounded_faces)
    assert all(c % 2 == 1 for c in counts)
    assert k.is_valid(bg)
    assert kasteleyn_orient(bg) == k


def test_kasteleyn_kink_vacuous(pipeline):
    bg = pipeline("kink").balanced
    assert bg.bounded_faces == ()
    assert kasteleyn_orient(bg).is_valid(bg)


def _leibniz(mat):
    n = len(mat)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        total += (-1) ** inversions * math.prod(mat[i][perm[i]] for i in range(n))
    return total


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n),
                       min_size=n, max_size=n)))
def test_bareiss_matches_leibniz(mat):
    assert det_bareiss(mat) == _leibniz(mat)


def test_bareiss_needs_pivoting():
    assert det_bareiss([[0, 1], [1, 0]]) == -1
    assert det_bareiss([[0, 0], [0, 0]]) == 0
    assert det_bareiss([[10 ** 30, 1], [1, 10 ** 30]]) == 10 ** 60 - 1


@pytest.mark.parametrize("m,trees", [(TRIANGLE, 3), (DIPOLE, 3), (LOOP, 1), (EDGE, 1)])
def test_small_tree_counts(m, trees):
    assert count_spanning_trees(m) == trees
    assert len(enumerate_spanning_trees(m)) == trees
    assert subset_tree_count(m) == trees


def test_triangle_trees_omit_one_edge():
    trees = enumerate_spanning_trees(TRIANGLE)
    assert [sorted(t.edges) for t in trees] == [[0, 1], [0, 2], [1, 2]]


def test_laplacian_ignores_loops():
    m = CombMap((1, 2, 0, 3))  # loop at a vertex joined to a leaf
    assert m.counts() == (2, 2, 2)
    lap = laplacian(m)
    assert [sum(row) for row in lap] == [0, 0]
    assert count_spanning_trees(m) == 1


def test_tree_enumeration_cap():
    with pytest.raises(CapExceeded):
        enumerate_spanning_trees(TRIANGLE, cap=2)


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_tree_enumeration_matches_count(name, pipeline):
    g = pipeline(name).g
    trees = enumerate_spanning_trees(g)
    assert len(trees) == count_spanning_trees(g)
    assert all(is_spanning_tree(g.map, t.edges) for t in trees)


@pytest.mark.parametrize("name", SMALL)
def test_bijection_roundtrip(name, pipeline):
    p = pipeline(name)
    n = len(p.code)
    trees = {t.edges for t in enumerate_spanning_trees(p.g)}
    for s in p.stars:
        bg = balance(p.overlay, s)
        ms = enumerate_matchings(bg)
        images = set()
        for m in ms:
            t, ts = matching_to_tree(bg, m)
            assert len(t.edges) + len(ts.edges) == n
            assert t.edges.isdisjoint(ts.edges)
            assert t.root == s.v0 - p.overlay.n
            assert tree_to_matching(bg, t) == m
            images.add(t.edges)
        assert images == trees
        for t in trees:
            assert matching_to_tree(bg, tree_to_matching(bg, t))[0].edges == t


def test_kink_bijection():
    p_edge = None
    for swap in (False, True):
        g, gs = tait_graphs(builtin_diagram("kink"), swap=swap)
        if g.map.counts() == (2, 1, 1):
            p_edge = (g, gs)
    gh = overlay(*p_edge)
    bg = balance(gh, star_candidates(gh)[0])
    (m,) = enumerate_matchings(bg)
    t, ts = matching_to_tree(bg, m)
    assert t.edges == frozenset({0}) and ts.edges == frozenset()


def test_triangle_tree_to_matching():
    gh = quadrangulation(TRIANGLE)
    bg = balance(gh, star_candidates(gh)[0])
    for e in range(3):
        m = tree_to_matching(bg, {0, 1, 2} - {e})
        # the omitted edge's black vertex goes to the dual side
        assert [j % 2 for j in m.edges] == [int(k == e) for k in range(3)]


def test_tree_to_matching_rejects_bad_input():
    gh = quadrangulation(CombMap((1, 2, 0, 3)))
    bg = balance(gh, star_candidates(gh)[0])
    with pytest.raises(ValueError, match="loop"):
        tree_to_matching(bg, {0})
    gh = quadrangulation(TRIANGLE)
    bg = balance(gh, star_candidates(gh)[0])
    with pytest.raises(ValueError):
        tree_to_matching(bg, {0})
    with pytest.raises(ValueError):
        matching_to_tree(bg, Matching((0, 0, 0)))


def test_matching_to_tree_rejects_imperfect():
    gh = quadrangulation(TRIANGLE)
    bg = balance(gh, star_candidates(gh)[0])
    m = enumerate_matchings(bg)[0]
    with pytest.raises(ValueError):
        matching_to_tree(bg, Matching(m.edges[:-1]))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 9), st.randoms(use_true_random=False))
def test_random_maps_bijection(edges, rnd):
    m = random_planar_map(edges, rnd)
    gh = quadrangulation(m)
    trees = count_spanning_trees(m)
    assert trees == count_spanning_trees(dual(m))
    for s in star_candidates(gh)[:3]:
        bg = balance(gh, s)
        assert kasteleyn_orient(bg).is_valid(bg)
        ms = enumerate_matchings(bg)
        assert len(ms) == count_matchings_fkt(bg) == trees
        for mm in ms:
            t, _ = matching_to_tree(bg, mm)
            assert tree_to_matching(bg, t) == mm


def test_signed_graph_input():
    g = SignedTaitGraph.unsigned(TRIANGLE)
    assert count_spanning_trees(g) == 3
    assert len(enumerate_spanning_trees(g)) == 3
