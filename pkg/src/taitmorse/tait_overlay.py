"""
Tait graphs and the overlaid quadrangulation
============================================

From a diagram's universe and a checkerboard colouring we build the signed
Tait graph on the black faces and its dual on the white faces. Overlaying
the pair gives a bipartite quadrangulation of the sphere: black vertices
are the crossings (equivalently the edges of the Tait graph), white
vertices are the Tait vertices together with the dual vertices. Deleting
the two white vertices of one square leaves the balanced graph on which
perfect matchings live.

Overlaid graph layout, for a Tait graph with ``n`` edges, ``V`` vertices
and ``F`` faces:

* vertex ids ``0..n-1`` are black (Tait edge ``e`` is vertex ``e``),
  ``n..n+V-1`` are Tait vertices, ``n+V..n+V+F-1`` are Tait faces;
* edge ``2x`` is the half of Tait dart ``x`` running to its tail vertex,
  edge ``2x+1`` the half of the dual edge running to the face left of ``x``;
* edge ``j`` owns darts ``2j`` (black end) and ``2j+1`` (white end).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .diagram_io import PdCode
from .errors import InvariantError, RestrictionError
from .planar_map import (
    BLACK,
    WHITE,
    CombMap,
    FaceColoring,
    Universe,
    checkerboard,
    dual,
    medial_layout,
    universe,
)

POSITIVE, NEGATIVE = 1, -1


def sign_of_crossing(over, shaded, flip: bool = False) -> int:
    """Sign of a crossing from its local picture.

    Positions ``0..3`` run counterclockwise around the crossing; sector
    ``i`` lies between positions ``i`` and ``i+1``. ``over`` holds the two
    positions of the over-strand, ``shaded`` the two shaded sectors. The
    sign is +1 when a counterclockwise quarter-turn carries the over-strand
    through the shaded sectors onto the under-strand. ``flip`` reverses
    the page orientation convention.
    """
    over = sorted(p % 4 for p in over)
    shaded = sorted(s % 4 for s in shaded)
    if over not in ([0, 2], [1, 3]):
        raise ValueError(f"over-strand positions {over} are not opposite")
    if shaded not in ([0, 2], [1, 3]):
        raise ValueError(f"shaded sectors {shaded} are not opposite")
    # a quarter-turn from position p sweeps sector p
    sign = POSITIVE if over == shaded else NEGATIVE
    return -sign if flip else sign


@dataclass(frozen=True)
class SignedTaitGraph:
    """Plane graph with one signed edge per crossing.

    ``crossing_of[e]`` is the crossing of edge ``e``. When built from a
    diagram, ``region_of[v]`` and ``face_region[f]`` give the universe face
    that vertex ``v`` and face ``f`` stand for.
    """

    map: CombMap
    signs: tuple[int, ...]
    crossing_of: tuple[int, ...] | None = None
    region_of: tuple[int, ...] | None = None
    face_region: tuple[int, ...] | None = None
    universe_dart: tuple[int, ...] | None = None

    def __post_init__(self):
        if len(self.signs) != self.map.edge_count:
            raise ValueError("one sign per edge required")
        if any(s not in (POSITIVE, NEGATIVE) for s in self.signs):
            raise ValueError("signs must be +1 or -1")
        if self.crossing_of is None:
            object.__setattr__(self, "crossing_of", tuple(range(self.map.edge_count)))

    @classmethod
    def unsigned(cls, m: CombMap, sign: int = POSITIVE) -> "SignedTaitGraph":
        return cls(m, (sign,) * m.edge_count)

    def dart_labels(self) -> list[int]:
        return [self.signs[d >> 1] for d in range(self.map.dart_count)]

    def is_isomorphic(self, other: "SignedTaitGraph") -> bool:
        """Orientation- and sign-preserving map isomorphism."""
        return self.map.is_isomorphic(other.map, self.dart_labels(), other.dart_labels())

    def mirror(self) -> "SignedTaitGraph":
        return SignedTaitGraph(self.map, tuple(-s for s in self.signs), self.crossing_of,
                               self.region_of, self.face_region, self.universe_dart)


def _orbit_regions(orbits, region_of_dart):
    out = []
    for orbit in orbits:
        regions = {region_of_dart[d] for d in orbit}
        if len(regions) != 1:
            raise InvariantError("a Tait orbit spans several universe faces")
        out.append(regions.pop())
    return tuple(out)


def _corner_graph(u: Universe, coloring: FaceColoring, color, flip):
    m = u.map
    face_of = m.face_of
    phi = m.face_permutation
    dart_at = {}
    vertex_region = [0] * (2 * len(u.crossing_darts))
    left_region = [0] * (2 * len(u.crossing_darts))
    signs = []
    for c, darts in enumerate(u.crossing_darts):
        # sector i is the corner (darts[i], rotation(darts[i])), in the face of darts[i]
        i = 0 if coloring[face_of[darts[0]]] == color else 1
        if coloring[face_of[darts[i + 2]]] != color:
            raise InvariantError(f"opposite sectors at crossing {c} differ in colour")
        for k, gd in ((i, 2 * c), (i + 2, 2 * c + 1)):
            dart_at[darts[k]] = gd
            vertex_region[gd] = face_of[darts[k]]
            # heading from sector k across the crossing, sector k+3 is on the left
            left_region[gd] = face_of[darts[(k + 3) % 4]]
        signs.append(sign_of_crossing((1, 3), (i, i + 2), flip))
    rot = [0] * (2 * len(u.crossing_darts))
    corner = [0] * len(rot)
    for ud, gd in dart_at.items():
        rot[gd] = dart_at[phi[ud]]
        corner[gd] = ud
    g = CombMap(tuple(rot))
    return SignedTaitGraph(
        g,
        tuple(signs),
        tuple(range(len(signs))),
        _orbit_regions(g.vertices, vertex_region),
        _orbit_regions(g.faces, left_region),
        tuple(corner),
    )


def tait_from_universe(u: Universe, coloring: FaceColoring | None = None,
                       sign_flip: bool = False):
    """Return ``(G, G*)``: Tait graphs on the black and white faces.

    Edge ``c`` of both graphs is crossing ``c``. Signs follow
    :func:`sign_of_crossing` with the graph's own faces shaded, so the dual
    carries the opposite signs.
    """
    if coloring is None:
        coloring = checkerboard(u.map)
    g = _corner_graph(u, coloring, BLACK, sign_flip)
    g_star = _corner_graph(u, coloring, WHITE, sign_flip)
    return g, g_star


def tait_graphs(code: PdCode, swap: bool = False, sign_flip: bool = False):
    """Tait pair of a PD code under the default (or swapped) colouring."""
    u = universe(code)
    return tait_from_universe(u, checkerboard(u.map, swap), sign_flip)


def diagram_from_tait(g: SignedTaitGraph) -> PdCode:
    """Diagram whose universe is the medial of ``g`` with the given signs.

    Strands are oriented by walking link components from the lowest
    unvisited medial dart; arcs are numbered along the walk. Crossing ``c``
    of the result is edge ``c`` of ``g``. The black faces of the result are
    the vertices of ``g``; since the face of dart 0 is the sector after the
    incoming under-strand of crossing 0, the default colouring selects them
    exactly when edge 0 is negative (see :func:`tait_swap_for`).
    """
    g.map.check_spherical()
    layout = medial_layout(g.map)
    where = {}
    for e, darts in enumerate(layout):
        for k, d in enumerate(darts):
            where[d] = (e, k)

    def straight(d):
        e, k = where[d]
        return layout[e][(k + 2) % 4]

    label = {}
    incoming = set()
    nxt = 1
    for start in range(2 * g.map.dart_count):
        if (start >> 1) in label:
            continue
        d = start
        while True:
            label[d >> 1] = nxt
            nxt += 1
            incoming.add(d ^ 1)
            d = straight(d ^ 1)
            if d == start:
                break
            if (d >> 1) in label:
                raise InvariantError("strand walk revisited an arc")
    crossings = []
    for e, darts in enumerate(layout):
        # NE-SW under for positive edges, NW-SE for negative
        under = (0, 2) if g.signs[e] == POSITIVE else (1, 3)
        k0 = next(k for k in under if darts[k] in incoming)
        crossings.append(tuple(label[darts[(k0 + j) % 4] >> 1] for j in range(4)))
    return PdCode(tuple(crossings))


def tait_swap_for(g: SignedTaitGraph) -> bool:
    """Colouring swap under which ``diagram_from_tait(g)`` gives back ``g``."""
    return g.signs[0] == POSITIVE


def diagrams_equivalent(a: PdCode, b: PdCode) -> bool:
    """Same universe with the same over/under data, ignoring orientation."""
    ua, ub = universe(a), universe(b)
    la = [p % 2 for _, p in ua.position_of]
    lb = [p % 2 for _, p in ub.position_of]
    return ua.map.is_isomorphic(ub.map, la, lb)


VERTEX_CELL, EDGE_CELL, FACE_CELL = 0, 1, 2


def _overlay_map(m: CombMap) -> CombMap:
    phi = m.face_permutation
    rot = [0] * (4 * m.dart_count)
    for e in range(m.edge_count):
        d, a = 2 * e, 2 * e + 1
        # around the crossing: to tail(a), face(d), tail(d), face(a)
        rot[4 * a] = 4 * d + 2
        rot[4 * d + 2] = 4 * d
        rot[4 * d] = 4 * a + 2
        rot[4 * a + 2] = 4 * a
    for x in range(m.dart_count):
        rot[4 * x + 1] = 4 * m.rotation[x] + 1
        rot[4 * x + 3] = 4 * phi[x] + 3
    return CombMap(tuple(rot))


@dataclass(frozen=True)
class OverlaidGraph:
    """Bipartite quadrangulation built on the map ``base`` (the Tait graph).

    Read as a poset, black vertices are 1-cells and white vertices are 0- or
    2-cells of the complex whose 1-skeleton is ``base``.
    """

    base: CombMap
    map: CombMap
    crossing_of: tuple[int, ...] | None = None
    region_of: tuple[int, ...] | None = None
    universe_dart: tuple[int, ...] | None = None

    @property
    def n(self) -> int:
        return self.base.edge_count

    @cached_property
    def cells(self) -> tuple[tuple[int, int], ...]:
        v, _, f = self.base.counts()
        return (tuple((EDGE_CELL, e) for e in range(self.n))
                + tuple((VERTEX_CELL, i) for i in range(v))
                + tuple((FACE_CELL, i) for i in range(f)))

    def vertex_id(self, dim: int, index: int) -> int:
        if dim == EDGE_CELL:
            return index
        if dim == VERTEX_CELL:
            return self.n + index
        return self.n + len(self.base.vertices) + index

    @property
    def blacks(self) -> range:
        return range(self.n)

    @property
    def whites(self) -> range:
        return range(self.n, len(self.cells))

    def edge_ends(self, j: int) -> tuple[int, int]:
        """``(black, white)`` of overlaid edge ``j``."""
        x = j >> 1
        if j & 1:
            white = self.vertex_id(FACE_CELL, self.base.face_of[x])
        else:
            white = self.vertex_id(VERTEX_CELL, self.base.vertex_of[x])
        return x >> 1, white

    @cached_property
    def dart_vertex(self) -> tuple[int, ...]:
        out = []
        for j in range(self.map.edge_count):
            out.extend(self.edge_ends(j))
        return tuple(out)

    def degree(self, v: int) -> int:
        return sum(1 for w in self.dart_vertex if w == v)

    def counts(self) -> tuple[int, int, int]:
        return len(self.cells), self.map.edge_count, len(self.map.faces)

    def dart_labels(self) -> list[str]:
        """Per dart: ``b`` black end, ``v`` at a vertex cell, ``f`` at a face cell."""
        names = "vbf"
        return [names[self.cells[w][0]] for w in self.dart_vertex]

    def square_vertices(self, face: int) -> tuple[int, ...]:
        return tuple(self.dart_vertex[d] for d in self.map.faces[face])

    def to_json(self) -> dict:
        kinds = {VERTEX_CELL: "vertex", EDGE_CELL: "crossing", FACE_CELL: "face"}
        verts = []
        for i, (dim, idx) in enumerate(self.cells):
            rec = {"id": i, "color": "black" if dim == EDGE_CELL else "white",
                   "kind": kinds[dim], "cell": [dim, idx]}
            if dim == EDGE_CELL and self.crossing_of is not None:
                rec["crossing"] = self.crossing_of[idx]
            if dim != EDGE_CELL and self.region_of is not None:
                rec["universe_face"] = self.region_of[i - self.n]
            verts.append(rec)
        edges = [{"id": j, "black": b, "white": w}
                 for j, (b, w) in ((j, self.edge_ends(j)) for j in range(self.map.edge_count))]
        return {"vertices": verts, "edges": edges,
                "faces": [list(self.square_vertices(f)) for f in range(len(self.map.faces))]}

    def to_dot(self, star=None, name="overlay") -> str:
        starred = set() if star is None else {star.v0, star.f0}
        lines = [f"graph {name} {{"]
        for i, (dim, _) in enumerate(self.cells):
            shape = "box" if dim == EDGE_CELL else "circle"
            style = "filled" if dim == EDGE_CELL else "solid"
            extra = ' xlabel="*"' if i in starred else ""
            lines.append(f"  n{i} [shape={shape} style={style}{extra}];")
        for j in range(self.map.edge_count):
            b, w = self.edge_ends(j)
            lines.append(f"  n{b} -- n{w};")
        lines.append("}")
        return "\n".join(lines)


def quadrangulation(m: CombMap, crossing_of=None, region_of=None,
                    universe_dart=None) -> OverlaidGraph:
    """Vertex/edge/face incidence graph of a spherical map, embedded."""
    m.check_spherical()
    return OverlaidGraph(m, _overlay_map(m), crossing_of, region_of, universe_dart)


def overlay(g: SignedTaitGraph, g_star: SignedTaitGraph) -> OverlaidGraph:
    """Overlay a Tait graph and its dual so dual edges cross at crossings."""
    if not dual(g.map).is_isomorphic(g_star.map):
        raise ValueError("second graph is not the plane dual of the first")
    region = None
    if g.region_of is not None and g.face_region is not None:
        region = tuple(g.region_of) + tuple(g.face_region)
        if g_star.region_of is not None and set(g.face_region) != set(g_star.region_of):
            raise InvariantError("faces of G do not match the vertices of G*")
    return quadrangulation(g.map, g.crossing_of, region, g.universe_dart)


def overlay_from_universe(u: Universe, coloring: FaceColoring):
    """The same quadrangulation read directly off the universe.

    Black vertices are crossings and white vertices are universe faces;
    edge ``d`` joins the crossing at the tail of universe dart ``d`` to the
    face of the corner after ``d``. Dart labels as in
    :meth:`OverlaidGraph.dart_labels` (``v`` for black faces, ``f`` for
    white ones) are returned alongside.
    """
    m = u.map
    rot = [0] * (2 * m.dart_count)
    labels = []
    for d in range(m.dart_count):
        rot[2 * d] = 2 * m.rotation[d]
        rot[2 * d + 1] = 2 * m.face_permutation[d] + 1
        labels.append("b")
        labels.append("v" if coloring[m.face_of[d]] == BLACK else "f")
    return CombMap(tuple(rot)), labels


@dataclass(frozen=True)
class StarPair:
    """A Tait vertex ``v0`` and a Tait face ``f0`` on square ``square``."""

    v0: int
    f0: int
    square: int


def _square_of_corner(gh: OverlaidGraph, x: int) -> int:
    # the corner between Tait darts x and rotation(x) at their tail vertex
    return gh.map.face_of[4 * x + 1]


def star_candidates(gh: OverlaidGraph) -> list[StarPair]:
    """One star pair per square, ordered by the universe edge it spans.

    Without a universe the order follows the Tait corner (the dart
    preceding the corner counterclockwise).
    """
    base = gh.base
    out = []
    for x in range(base.dart_count):
        key = x if gh.universe_dart is None else gh.universe_dart[x] >> 1
        square = _square_of_corner(gh, x)
        pair = StarPair(gh.vertex_id(VERTEX_CELL, base.vertex_of[x]),
                        gh.vertex_id(FACE_CELL, base.face_of[x]), square)
        out.append((key, x, pair))
    out.sort(key=lambda t: t[:2])
    return [pair for _, _, pair in out]


def default_star(gh: OverlaidGraph) -> StarPair:
    return star_candidates(gh)[0]


@dataclass(frozen=True)
class BalancedGraph:
    """The overlaid graph with the two starred white vertices removed.

    ``map`` is the induced rotation system; its edge ``k`` is overlaid edge
    ``edge_ids[k]`` with darts ``2k`` (black end) and ``2k+1`` (white end).
    ``bounded_faces`` lists the faces of ``map`` that are squares of the
    overlaid graph; the rest form the infinite face, whose boundary walks
    (one per connected component) are recorded in ``periphery``.
    """

    overlay: OverlaidGraph
    star: StarPair
    map: CombMap
    edge_ids: tuple[int, ...]
    bounded_faces: tuple[int, ...]
    periphery: tuple[tuple[int, ...], ...]

    @property
    def blacks(self) -> range:
        return self.overlay.blacks

    @cached_property
    def whites(self) -> tuple[int, ...]:
        starred = (self.star.v0, self.star.f0)
        return tuple(w for w in self.overlay.whites if w not in starred)

    def edge_ends(self, k: int) -> tuple[int, int]:
        """``(black, white)`` of compact edge ``k``."""
        return self.overlay.edge_ends(self.edge_ids[k])

    @cached_property
    def dart_vertex(self) -> tuple[int, ...]:
        out = []
        for k in range(len(self.edge_ids)):
            out.extend(self.edge_ends(k))
        return tuple(out)

    @cached_property
    def incident(self) -> dict[int, tuple[int, ...]]:
        """Overlaid edge ids at each vertex, in increasing order."""
        out = {v: [] for v in list(self.blacks) + list(self.whites)}
        for j in self.edge_ids:
            b, w = self.overlay.edge_ends(j)
            out[b].append(j)
            out[w].append(j)
        return {v: tuple(sorted(js)) for v, js in out.items()}

    @cached_property
    def periphery_vertices(self) -> frozenset[int]:
        return frozenset(v for walk in self.periphery for v in walk)

    def degree(self, v: int) -> int:
        return len(self.incident[v])

    def is_balanced(self) -> bool:
        return len(self.blacks) == len(self.whites)

    def to_json(self) -> dict:
        return {
            "star": {"v0": self.star.v0, "f0": self.star.f0, "square": self.star.square},
            "blacks": list(self.blacks),
            "whites": list(self.whites),
            "edges": [{"id": j, "black": b, "white": w}
                      for j in self.edge_ids for b, w in [self.overlay.edge_ends(j)]],
            "periphery": [list(w) for w in self.periphery],
        }

    def to_dot(self, name="balanced") -> str:
        lines = [f"graph {name} {{"]
        lines.append(f"  // starred: v0=n{self.star.v0} f0=n{self.star.f0}")
        for v in self.blacks:
            lines.append(f"  n{v} [shape=box style=filled];")
        for v in self.whites:
            lines.append(f"  n{v} [shape=circle];")
        for j in self.edge_ids:
            b, w = self.overlay.edge_ends(j)
            lines.append(f'  n{b} -- n{w} [label="{j}"];')
        lines.append("}")
        return "\n".join(lines)


def balance(gh: OverlaidGraph, s: StarPair) -> BalancedGraph:
    """Delete the starred pair; it must span a square (adjacent critical cells)."""
    squares = [f for f in range(len(gh.map.faces))
               if {s.v0, s.f0} <= set(gh.square_vertices(f))]
    cells = gh.cells
    if not (gh.n <= s.v0 < len(cells) and cells[s.v0][0] == VERTEX_CELL
            and gh.n <= s.f0 < len(cells) and cells[s.f0][0] == FACE_CELL):
        raise RestrictionError("star pair must be one Tait vertex and one Tait face")
    if s.square not in squares:
        raise RestrictionError(
            f"vertices {s.v0} and {s.f0} do not lie on square {s.square}")
    starred = (s.v0, s.f0)
    keep = [j for j in range(gh.map.edge_count) if gh.edge_ends(j)[1] not in starred]
    compact = {}
    for k, j in enumerate(keep):
        compact[2 * j] = 2 * k
        compact[2 * j + 1] = 2 * k + 1
    rot = [0] * (2 * len(keep))
    for old, new in compact.items():
        nxt = gh.map.rotation[old]
        while nxt not in compact:
            nxt = gh.map.rotation[nxt]
        rot[new] = compact[nxt]
    m = CombMap(tuple(rot))
    original = {frozenset(orbit) for f, orbit in enumerate(gh.map.faces)
                if not set(gh.square_vertices(f)) & set(starred)}
    back = {new: old for old, new in compact.items()}
    bounded, periphery = [], []
    for f, orbit in enumerate(m.faces):
        if frozenset(back[d] for d in orbit) in original:
            bounded.append(f)
        else:
            periphery.append(tuple(gh.dart_vertex[back[d]] for d in orbit))
    return BalancedGraph(gh, s, m, tuple(keep), tuple(bounded), tuple(periphery))
