"""
Perfect matchings and spanning trees
====================================

Perfect matchings of the balanced graph are counted three ways (explicit
enumeration, exhaustive permanent expansion, and a Kasteleyn determinant)
and put in bijection with spanning trees of the Tait graph rooted at the
starred vertex. Every number here is an exact Python integer.

A :class:`Matching` stores, for each black vertex ``e`` (Tait edge ``e``),
the overlaid edge id it uses: an even id ``2x`` matches ``e`` to the tail
of Tait dart ``x``, an odd id ``2x+1`` to the face left of ``x``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import CapExceeded, InvariantError
from .tait_overlay import BalancedGraph, SignedTaitGraph

BRUTEFORCE_CAP = 16
TREE_EDGE_CAP = 20


@dataclass(frozen=True)
class Matching:
    edges: tuple[int, ...]

    def pairs(self, bg: BalancedGraph) -> list[tuple[int, int, int]]:
        """``[black, white, overlaid edge id]`` per black vertex."""
        return [(b, bg.overlay.edge_ends(j)[1], j) for b, j in enumerate(self.edges)]

    def is_perfect(self, bg: BalancedGraph) -> bool:
        if len(self.edges) != len(bg.blacks):
            return False
        kept = set(bg.edge_ids)
        whites = []
        for b, j in enumerate(self.edges):
            eb, w = bg.overlay.edge_ends(j)
            if j not in kept or eb != b:
                return False
            whites.append(w)
        return sorted(whites) == sorted(bg.whites)


@dataclass(frozen=True)
class SpanningTree:
    """Edge set of a spanning tree together with its root vertex."""

    edges: frozenset[int]
    root: int


def enumerate_matchings(bg: BalancedGraph, limit: int | None = None) -> list[Matching]:
    """All perfect matchings, lexicographic in the per-black edge choice."""
    blacks = list(bg.blacks)
    options = [bg.incident[b] for b in blacks]
    ends = bg.overlay.edge_ends
    used = set()
    chosen = []
    out = []

    def extend(i):
        if limit is not None and len(out) >= limit:
            return
        if i == len(blacks):
            out.append(Matching(tuple(chosen)))
            return
        for j in options[i]:
            w = ends(j)[1]
            if w in used:
                continue
            used.add(w)
            chosen.append(j)
            extend(i + 1)
            chosen.pop()
            used.discard(w)

    if len(blacks) == len(bg.whites):
        extend(0)
    return out


def biadjacency(bg: BalancedGraph, weight=None) -> list[list[int]]:
    """Black-by-white matrix; parallel edges add up.

    ``weight(j)`` gives the entry contributed by overlaid edge ``j``
    (1 when omitted).
    """
    col = {w: i for i, w in enumerate(bg.whites)}
    mat = [[0] * len(bg.whites) for _ in bg.blacks]
    for j in bg.edge_ids:
        b, w = bg.overlay.edge_ends(j)
        mat[b][col[w]] += 1 if weight is None else weight(j)
    return mat


def _permanent(mat, row, used):
    if row == len(mat):
        return 1
    total = 0
    for c, a in enumerate(mat[row]):
        if a and not used >> c & 1:
            total += a * _permanent(mat, row + 1, used | 1 << c)
    return total


def count_matchings_bruteforce(bg: BalancedGraph, cap: int = BRUTEFORCE_CAP) -> int:
    """Permanent of the biadjacency matrix by full row expansion."""
    if len(bg.blacks) > cap:
        raise CapExceeded(f"{len(bg.blacks)} black vertices exceeds the cap of {cap}")
    if len(bg.blacks) != len(bg.whites):
        return 0
    return _permanent(biadjacency(bg), 0, 0)


@dataclass(frozen=True)
class KasteleynOrientation:
    """``forward[k]`` is True when compact edge ``k`` points black -> white."""

    forward: tuple[bool, ...]

    def weight(self, bg: BalancedGraph):
        sign = {j: 1 if f else -1 for j, f in zip(bg.edge_ids, self.forward)}
        return sign.__getitem__

    def clockwise_counts(self, bg: BalancedGraph) -> list[int]:
        """Clockwise edges on each bounded face.

        Face orbits run counterclockwise, so an edge is clockwise exactly
        when its orientation opposes the walk.
        """
        out = []
        for f in bg.bounded_faces:
            cw = 0
            for d in bg.map.faces[f]:
                along = d % 2 == 0  # dart 2k leaves the black end
                cw += along != self.forward[d >> 1]
            out.append(cw)
        return out

    def is_valid(self, bg: BalancedGraph) -> bool:
        return all(c % 2 for c in self.clockwise_counts(bg))


def kasteleyn_orient(bg: BalancedGraph) -> KasteleynOrientation:
    """Orient a spanning forest black -> white, then close faces one by one.

    The edges off the forest form a tree in the dual; peeling bounded faces
    that have a single undecided edge fixes each such edge so its face gets
    an odd clockwise count.
    """
    m = bg.map
    vertex = bg.dart_vertex
    forward = [None] * m.edge_count
    seen = set()
    for start in range(m.dart_count):
        if vertex[start] in seen:
            continue
        seen.add(vertex[start])
        queue = deque([start])
        while queue:
            d = queue.popleft()
            for e in _darts_at(m, d):
                w = vertex[e ^ 1]
                if w not in seen:
                    seen.add(w)
                    forward[e >> 1] = True
                    queue.append(e ^ 1)
    faces = [m.faces[f] for f in bg.bounded_faces]
    pending = list(range(len(faces)))
    while pending:
        progress = False
        rest = []
        for i in pending:
            open_edges = {d >> 1 for d in faces[i] if forward[d >> 1] is None}
            if len(open_edges) > 1:
                rest.append(i)
                continue
            progress = True
            if not open_edges:
                continue
            k = open_edges.pop()
            forward[k] = True
            cw = sum((d % 2 == 0) != forward[d >> 1] for d in faces[i])
            if cw % 2 == 0:
                forward[k] = False
        if not progress:
            raise InvariantError("bounded faces could not be peeled; graph not planar?")
        pending = rest
    return KasteleynOrientation(tuple(True if f is None else f for f in forward))


def _darts_at(m, d):
    e = d
    while True:
        yield e
        e = m.rotation[e]
        if e == d:
            return


def det_bareiss(mat) -> int:
    """Determinant by fraction-free elimination, exact on integers."""
    a = [list(row) for row in mat]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def count_matchings_fkt(bg: BalancedGraph) -> int:
    """``|det K|`` for the Kasteleyn-signed biadjacency matrix ``K``."""
    if len(bg.blacks) != len(bg.whites):
        return 0
    orient = kasteleyn_orient(bg)
    return abs(det_bareiss(biadjacency(bg, orient.weight(bg))))


def _graph_map(g):
    return g.map if isinstance(g, SignedTaitGraph) else g


def laplacian(g) -> list[list[int]]:
    """Graph Laplacian with parallel edges counted and loops dropped."""
    m = _graph_map(g)
    n = len(m.vertices)
    lap = [[0] * n for _ in range(n)]
    for e in range(m.edge_count):
        a, b = m.endpoints(e)
        if a == b:
            continue
        lap[a][a] += 1
        lap[b][b] += 1
        lap[a][b] -= 1
        lap[b][a] -= 1
    return lap


def count_spanning_trees(g) -> int:
    """Matrix-tree count; accepts a SignedTaitGraph or a bare CombMap."""
    lap = laplacian(g)
    return det_bareiss([row[1:] for row in lap[1:]])


class _DisjointSets:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def is_spanning_tree(g, edges) -> bool:
    m = _graph_map(g)
    n = len(m.vertices)
    if len(edges) != n - 1:
        return False
    sets = _DisjointSets(n)
    return all(sets.union(*m.endpoints(e)) for e in edges)


def enumerate_spanning_trees(g, limit: int | None = None, root: int = 0,
                             cap: int = TREE_EDGE_CAP) -> list[SpanningTree]:
    """Spanning trees as edge subsets, in lexicographic order of edge ids."""
    m = _graph_map(g)
    if m.edge_count > cap:
        raise CapExceeded(f"{m.edge_count} edges exceeds the cap of {cap}")
    edges = [e for e in range(m.edge_count) if len(set(m.endpoints(e))) == 2]
    out = []
    for subset in combinations(edges, len(m.vertices) - 1):
        if limit is not None and len(out) >= limit:
            break
        if is_spanning_tree(m, subset):
            out.append(SpanningTree(frozenset(subset), root))
    return out


def _tait_vertex(bg, white):
    return white - bg.overlay.n


def _tait_face(bg, white):
    return white - bg.overlay.n - len(bg.overlay.base.vertices)


def _check_tree(n_vertices, parent, root, edges, what):
    if len(edges) != n_vertices - 1 or root in parent:
        raise InvariantError(f"{what} has the wrong number of edges")
    for start in parent:
        v, steps = start, 0
        while v != root:
            v = parent.get(v)
            steps += 1
            if v is None or steps > n_vertices:
                raise InvariantError(f"{what} is not a tree rooted at {root}")


def matching_to_tree(bg: BalancedGraph, m: Matching):
    """Split a perfect matching into a spanning tree of G and one of G*.

    Blacks matched to a Tait vertex give the edges of ``T`` (each non-root
    vertex points to its parent along its matched edge); the other edges
    give ``T*`` in the dual, rooted at the starred face.
    """
    base = bg.overlay.base
    if not m.is_perfect(bg):
        raise ValueError("matching is not a perfect matching of this graph")
    v0 = _tait_vertex(bg, bg.star.v0)
    f0 = _tait_face(bg, bg.star.f0)
    tree, cotree = set(), set()
    parent, coparent = {}, {}
    for e, j in enumerate(m.edges):
        x = j >> 1
        if j % 2 == 0:
            tree.add(e)
            parent[base.vertex_of[x]] = base.vertex_of[x ^ 1]
        else:
            cotree.add(e)
            coparent[base.face_of[x]] = base.face_of[x ^ 1]
    _check_tree(len(base.vertices), parent, v0, tree, "T")
    _check_tree(len(base.faces), coparent, f0, cotree, "T*")
    return SpanningTree(frozenset(tree), v0), SpanningTree(frozenset(cotree), f0)


def tree_to_matching(bg: BalancedGraph, t) -> Matching:
    """Inverse of :func:`matching_to_tree`.

    ``t`` is a :class:`SpanningTree` of G or an iterable of edge ids.
    """
    base = bg.overlay.base
    edges = set(t.edges if isinstance(t, SpanningTree) else t)
    if any(len(set(base.endpoints(e))) == 1 for e in edges):
        raise ValueError("a spanning tree cannot contain a loop")
    if not is_spanning_tree(base, edges):
        raise ValueError("edge set is not a spanning tree of the Tait graph")
    choice = [None] * base.edge_count
    v0 = _tait_vertex(bg, bg.star.v0)
    f0 = _tait_face(bg, bg.star.f0)
    # orient the tree towards v0: the dart of edge e at its child is x, edge 2x
    _grow(base.vertices, base.vertex_of, v0, edges, choice, 0)
    # complementary dual edges towards f0: the dual dart at child face is x, edge 2x+1
    rest = set(range(base.edge_count)) - edges
    _grow(base.faces, base.face_of, f0, rest, choice, 1)
    if None in choice:
        raise InvariantError("dual complement of the tree is not spanning")
    matching = Matching(tuple(choice))
    if not matching.is_perfect(bg):
        raise InvariantError("tree produced an imperfect matching")
    return matching


def _grow(orbits, where, root, allowed, choice, parity):
    # orbits[v] lists darts x whose (tail vertex | left face) is v
    seen = {root}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for x in orbits[v]:
            e = x >> 1
            child = where[x ^ 1]
            if e in allowed and child not in seen:
                seen.add(child)
                choice[e] = 2 * (x ^ 1) + parity
                queue.append(child)
    if len(seen) != len(orbits):
        raise InvariantError("growth did not reach every vertex")
