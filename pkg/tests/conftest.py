import itertools
import random
from collections import Counter

import networkx as nx
import pytest

from taitmorse import (
    BUILTIN_NAMES,
    balance,
    builtin_diagram,
    overlay,
    star_candidates,
    tait_graphs,
)

SMALL = [n for n in BUILTIN_NAMES if len(builtin_diagram(n)) <= 6]


def pd_face_count(crossings):
    """Count faces straight from PD quadruples, without building a map.

    A corner (c, p) is the sector between positions p and p+1. Leaving
    crossing c along position p+1 keeps that sector on the right; arriving
    at the other occurrence (c', p') of the label, the face on the right is
    the sector between p' and p'+1, i.e. corner (c', p').
    """
    where = {}
    for c, quad in enumerate(crossings):
        for p, label in enumerate(quad):
            where.setdefault(label, []).append((c, p))

    def other(c, p):
        a, b = where[crossings[c][p]]
        return b if a == (c, p) else a

    seen = set()
    faces = 0
    for start in itertools.product(range(len(crossings)), range(4)):
        if start in seen:
            continue
        faces += 1
        corner = start
        while corner not in seen:
            seen.add(corner)
            c, p = corner
            c2, p2 = other(c, (p + 1) % 4)
            corner = (c2, p2)
    return faces


def nx_multigraph(m):
    g = nx.MultiGraph()
    g.add_nodes_from(range(len(m.vertices)))
    for e in range(m.edge_count):
        g.add_edge(*m.endpoints(e), key=e)
    return g


def subset_tree_count(m):
    """Spanning trees by checking every edge subset of the right size."""
    g = nx_multigraph(m)
    n = g.number_of_nodes()
    count = 0
    for subset in itertools.combinations(g.edges(keys=True), n - 1):
        h = nx.MultiGraph()
        h.add_nodes_from(g.nodes)
        h.add_edges_from(subset)
        if nx.is_tree(h):
            count += 1
    return count


def permutation_matching_count(bg):
    """Perfect matchings by trying every black -> white bijection."""
    mult = Counter(bg.overlay.edge_ends(j) for j in bg.edge_ids)
    blacks, whites = list(bg.blacks), list(bg.whites)
    if len(blacks) != len(whites):
        return 0
    total = 0
    for perm in itertools.permutations(whites):
        prod = 1
        for b, w in zip(blacks, perm):
            prod *= mult[(b, w)]
            if not prod:
                break
        total += prod
    return total


class Pipeline:
    def __init__(self, name, star=0, swap=False):
        self.code = builtin_diagram(name)
        self.g, self.g_star = tait_graphs(self.code, swap)
        self.overlay = overlay(self.g, self.g_star)
        self.stars = star_candidates(self.overlay)
        self.star = self.stars[star]
        self.balanced = balance(self.overlay, self.star)


@pytest.fixture
def pipeline():
    return Pipeline


@pytest.fixture
def rng():
    return random.Random(20121)
