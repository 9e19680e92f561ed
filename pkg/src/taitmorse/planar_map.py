"""
Combinatorial maps
==================

A map is a set of darts ``0 .. 2m-1`` with two permutations: the edge
involution ``d -> d ^ 1`` (edge ``k`` owns darts ``2k`` and ``2k+1``) and a
rotation giving the counterclockwise successor of each dart around its
vertex. Faces are orbits of ``d -> rotation^-1(d ^ 1)``; with this choice a
face orbit walks its face counterclockwise, the face lies on the left of
every dart in the orbit, and the corner between ``d`` and ``rotation(d)``
belongs to the face of ``d``.

All orbit listings start at the lowest dart and are sorted by that dart.
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .diagram_io import PdCode
from .errors import ColoringError, MapError


def _orbits(perm):
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle = []
        d = start
        while not seen[d]:
            seen[d] = True
            cycle.append(d)
            d = perm[d]
        out.append(tuple(cycle))
    return out


def _index(orbits, size):
    where = [0] * size
    for i, orbit in enumerate(orbits):
        for d in orbit:
            where[d] = i
    return tuple(where)


@dataclass(frozen=True)
class CombMap:
    """Rotation system on ``len(rotation)`` darts; pairing is ``d ^ 1``."""

    rotation: tuple[int, ...]

    def __post_init__(self):
        rot = tuple(int(d) for d in self.rotation)
        object.__setattr__(self, "rotation", rot)
        if len(rot) % 2:
            raise MapError("dart count must be even")
        if sorted(rot) != list(range(len(rot))):
            raise MapError("rotation is not a permutation of the darts")

    @classmethod
    def from_permutations(cls, pairing, rotation) -> "CombMap":
        """Build from an arbitrary fixed-point-free involution.

        Darts are renumbered so that each pair becomes ``2k, 2k+1``, edges
        ordered by their lowest original dart.
        """
        n = len(pairing)
        if len(rotation) != n:
            raise MapError("pairing and rotation differ in length")
        if sorted(pairing) != list(range(n)) or sorted(rotation) != list(range(n)):
            raise MapError("pairing and rotation must be permutations")
        new = [-1] * n
        k = 0
        for d in range(n):
            if new[d] >= 0:
                continue
            e = pairing[d]
            if e == d or pairing[e] != d:
                raise MapError("pairing must be a fixed-point-free involution")
            new[d], new[e] = 2 * k, 2 * k + 1
            k += 1
        rot = [0] * n
        for d in range(n):
            rot[new[d]] = new[rotation[d]]
        return cls(tuple(rot))

    @property
    def dart_count(self) -> int:
        return len(self.rotation)

    @property
    def edge_count(self) -> int:
        return len(self.rotation) // 2

    @staticmethod
    def opposite(d: int) -> int:
        return d ^ 1

    @staticmethod
    def edge_of(d: int) -> int:
        return d >> 1

    @cached_property
    def inverse_rotation(self) -> tuple[int, ...]:
        inv = [0] * self.dart_count
        for d, s in enumerate(self.rotation):
            inv[s] = d
        return tuple(inv)

    @cached_property
    def face_permutation(self) -> tuple[int, ...]:
        inv = self.inverse_rotation
        return tuple(inv[d ^ 1] for d in range(self.dart_count))

    @cached_property
    def vertices(self) -> list[tuple[int, ...]]:
        return _orbits(self.rotation)

    @cached_property
    def faces(self) -> list[tuple[int, ...]]:
        return _orbits(self.face_permutation)

    @cached_property
    def vertex_of(self) -> tuple[int, ...]:
        return _index(self.vertices, self.dart_count)

    @cached_property
    def face_of(self) -> tuple[int, ...]:
        return _index(self.faces, self.dart_count)

    def counts(self) -> tuple[int, int, int]:
        """``(V, E, F)``."""
        return len(self.vertices), self.edge_count, len(self.faces)

    def euler_characteristic(self) -> int:
        v, e, f = self.counts()
        return v - e + f

    def components(self) -> list[list[int]]:
        """Dart sets of the connected components, lowest dart first."""
        comp = [-1] * self.dart_count
        out = []
        for start in range(self.dart_count):
            if comp[start] >= 0:
                continue
            comp[start] = len(out)
            members = [start]
            queue = deque([start])
            while queue:
                d = queue.popleft()
                for nxt in (self.rotation[d], d ^ 1):
                    if comp[nxt] < 0:
                        comp[nxt] = len(out)
                        members.append(nxt)
                        queue.append(nxt)
            out.append(sorted(members))
        return out

    def is_connected(self) -> bool:
        return self.dart_count > 0 and len(self.components()) == 1

    def is_spherical(self) -> bool:
        return self.is_connected() and self.euler_characteristic() == 2

    def check_spherical(self):
        if not self.is_connected():
            raise MapError("map is not connected")
        chi = self.euler_characteristic()
        if chi != 2:
            raise MapError(f"not a map of the sphere: V - E + F = {chi}")

    def degree(self, vertex: int) -> int:
        return len(self.vertices[vertex])

    def endpoints(self, edge: int) -> tuple[int, int]:
        return self.vertex_of[2 * edge], self.vertex_of[2 * edge + 1]

    def canonical_form(self, labels=None) -> tuple:
        """Smallest relabelled encoding over all root darts.

        ``labels`` optionally attaches a comparable value to every dart.
        Two connected maps are isomorphic (orientation preserved, labels
        respected) exactly when their canonical forms agree.
        """
        best = None
        for root in range(self.dart_count):
            code = self._code_from(root, labels)
            if best is None or code < best:
                best = code
        return (self.dart_count, best)

    def _code_from(self, root, labels):
        new = {root: 0}
        order = [root]
        i = 0
        while i < len(order):
            d = order[i]
            for nxt in (self.rotation[d], d ^ 1):
                if nxt not in new:
                    new[nxt] = len(order)
                    order.append(nxt)
            i += 1
        if len(order) != self.dart_count:
            raise MapError("canonical form requires a connected map")
        if labels is None:
            return tuple((new[self.rotation[d]], new[d ^ 1]) for d in order)
        return tuple((new[self.rotation[d]], new[d ^ 1], labels[d]) for d in order)

    def is_isomorphic(self, other: "CombMap", labels=None, other_labels=None) -> bool:
        if self.counts() != other.counts():
            return False
        return self.canonical_form(labels) == other.canonical_form(other_labels)

    def to_json(self) -> dict:
        return {
            "dart_count": self.dart_count,
            "pairing": [d ^ 1 for d in range(self.dart_count)],
            "rotation": list(self.rotation),
            "faces": [list(f) for f in self.faces],
        }

    def to_dot(self, name="map") -> str:
        lines = [f"graph {name} {{"]
        for i, orbit in enumerate(self.faces):
            lines.append(f"  // face {i}: darts {' '.join(map(str, orbit))}")
        for v in range(len(self.vertices)):
            lines.append(f"  v{v};")
        for e in range(self.edge_count):
            a, b = self.endpoints(e)
            lines.append(f'  v{a} -- v{b} [label="e{e}"];')
        lines.append("}")
        return "\n".join(lines)


def map_from_json(data) -> CombMap:
    """Read ``{dart_count, pairing, rotation}`` (a string or parsed dict)."""
    if isinstance(data, str):
        data = json.loads(data)
    rotation = data["rotation"]
    count = data.get("dart_count", data.get("darts", len(rotation)))
    pairing = data.get("pairing") or [d ^ 1 for d in range(count)]
    if len(rotation) != count:
        raise MapError("dart_count does not match rotation length")
    return CombMap.from_permutations(list(pairing), list(rotation))


@dataclass(frozen=True)
class Universe:
    """The 4-valent map of a diagram together with its crossing layout.

    ``crossing_darts[c][p]`` is the dart at position ``p`` of crossing
    ``c`` (positions as in the PD quadruple).
    """

    code: PdCode
    map: CombMap
    crossing_darts: tuple[tuple[int, int, int, int], ...]

    @cached_property
    def position_of(self) -> tuple[tuple[int, int], ...]:
        out = [None] * self.map.dart_count
        for c, darts in enumerate(self.crossing_darts):
            for p, d in enumerate(darts):
                out[d] = (c, p)
        return tuple(out)


def universe(code: PdCode) -> Universe:
    """Build the universe of ``code``; rejects non-planar or split input."""
    edge = {label: k for k, label in enumerate(code.labels)}
    used = set()
    layout = []
    for quad in code.crossings:
        darts = []
        for label in quad:
            d = 2 * edge[label]
            if d in used:
                d += 1
            used.add(d)
            darts.append(d)
        layout.append(tuple(darts))
    rot = [0] * (4 * len(layout))
    for darts in layout:
        for p in range(4):
            rot[darts[p]] = darts[(p + 1) % 4]
    m = CombMap(tuple(rot))
    if not m.is_connected():
        raise MapError("disconnected projection")
    chi = m.euler_characteristic()
    if chi != 2:
        raise MapError(f"PD code is not realizable on the sphere (V - E + F = {chi})")
    return Universe(code, m, tuple(layout))


def map_from_pd(code: PdCode) -> CombMap:
    return universe(code).map


def faces(m: CombMap) -> list[tuple[int, ...]]:
    return m.faces


def dual(m: CombMap) -> CombMap:
    """Plane dual: vertex ``i`` of the result is face ``i`` of ``m``.

    Dart ``d`` of the dual crosses the edge of ``d`` starting from the face
    on its left, so the dual shares edge numbering with ``m``.
    """
    return CombMap(m.face_permutation)


def medial_layout(m: CombMap) -> list[tuple[int, int, int, int]]:
    """Darts of ``medial(m)`` around each medial vertex.

    For edge ``e`` drawn from ``d = 2e`` (west) to ``d ^ 1`` (east) the
    tuple lists the half-edges heading NE, NW, SW, SE, counterclockwise.
    West and east sectors are vertices of ``m``; north and south are its
    faces. Medial edge ``x`` joins the corner between ``x`` and
    ``rotation(x)``: dart ``2x`` sits on edge ``x >> 1``, ``2x + 1`` on
    edge ``rotation(x) >> 1``.
    """
    inv = m.inverse_rotation
    out = []
    for e in range(m.edge_count):
        d, a = 2 * e, 2 * e + 1
        out.append((2 * inv[a] + 1, 2 * d, 2 * inv[d] + 1, 2 * a))
    return out


def medial(m: CombMap) -> CombMap:
    rot = [0] * (2 * m.dart_count)
    for darts in medial_layout(m):
        for p in range(4):
            rot[darts[p]] = darts[(p + 1) % 4]
    return CombMap(tuple(rot))


BLACK, WHITE = "black", "white"


@dataclass(frozen=True)
class FaceColoring:
    color: tuple[str, ...]

    def __getitem__(self, face):
        return self.color[face]

    def faces_of(self, color) -> list[int]:
        return [f for f, c in enumerate(self.color) if c == color]

    def swapped(self) -> "FaceColoring":
        return FaceColoring(tuple(WHITE if c == BLACK else BLACK for c in self.color))


def checkerboard(m: CombMap, swap: bool = False) -> FaceColoring:
    """Proper 2-colouring of faces; the face of dart 0 is black unless ``swap``."""
    face_of = m.face_of
    color = [None] * len(m.faces)
    for start in range(len(color)):
        if color[start] is not None:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            f = queue.popleft()
            for d in m.faces[f]:
                g = face_of[d ^ 1]
                if color[g] is None:
                    color[g] = 1 - color[f]
                    queue.append(g)
                elif color[g] == color[f]:
                    raise ColoringError(
                        f"faces {f} and {g} share edge {d >> 1}; no checkerboard colouring"
                    )
    flip = color[face_of[0]] if m.dart_count else 0
    if swap:
        flip = 1 - flip
    return FaceColoring(tuple(BLACK if c == flip else WHITE for c in color))


def random_planar_map(edges: int, rng=None) -> CombMap:
    """Grow a random spherical map with the given number of edges.

    Starts from one edge on two vertices and repeatedly either hangs a
    pendant edge in a random corner or joins two corners of one face,
    which may create loops and parallel edges. Both moves keep V - E + F = 2.
    """
    if edges < 1:
        raise ValueError("need at least one edge")
    rng = rng or random.Random()
    rot = [0, 1]
    while len(rot) < 2 * edges:
        m = CombMap(tuple(rot))
        a, b = len(rot), len(rot) + 1
        rot.extend([a, b])
        face = rng.choice(m.faces)
        d1 = rng.choice(face)
        if rng.random() < 0.4:
            rot[a], rot[d1] = rot[d1], a
        else:
            d2 = rng.choice(face)
            # insert a after d1 and b after d2, both inside the chosen face
            if d1 == d2:
                rot[b], rot[a], rot[d1] = rot[d1], b, a
            else:
                rot[a], rot[d1] = rot[d1], a
                rot[b], rot[d2] = rot[d2], b
    m = CombMap(tuple(rot))
    m.check_spherical()
    return m
