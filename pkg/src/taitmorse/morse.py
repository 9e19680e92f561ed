"""
Discrete Morse functions on 2-spheres
=====================================

A cell decomposition of the sphere is given by an embedded graph (its
1-skeleton); vertices, edges and faces of the map are the 0-, 1- and
2-cells. Its face poset, drawn in the plane, is the overlaid Tait graph, so
a perfect matching of the balanced graph pairs every cell except the two
starred ones. Such a pairing is acyclic and is realised here by an explicit
integer-valued discrete Morse function.

Incidences are numbered like overlaid edges: ``2x`` is (tail of dart
``x``, edge of ``x``) and ``2x+1`` is (edge of ``x``, face left of ``x``).
A loop meets its vertex twice and a bridge meets its face twice; pairing
across one such incidence leaves the other pointing down, which shows up as
a cycle, as it should.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import cached_property

from .diagram_io import PdCode
from .dimers_trees import Matching, enumerate_matchings
from .errors import InvariantError, RestrictionError
from .planar_map import CombMap
from .tait_overlay import (
    POSITIVE,
    EDGE_CELL,
    FACE_CELL,
    VERTEX_CELL,
    OverlaidGraph,
    SignedTaitGraph,
    StarPair,
    balance,
    diagram_from_tait,
    quadrangulation,
    star_candidates,
    tait_graphs,
)

Cell = tuple[int, int]
DIM_NAMES = {VERTEX_CELL: "v", EDGE_CELL: "e", FACE_CELL: "f"}


def cell_name(cell: Cell) -> str:
    return f"{DIM_NAMES[cell[0]]}{cell[1]}"


@dataclass(frozen=True)
class Complex2:
    """2-complex of the sphere whose 1-skeleton is ``map``."""

    map: CombMap

    def __post_init__(self):
        self.map.check_spherical()

    def counts(self) -> tuple[int, int, int]:
        return self.map.counts()

    def euler_characteristic(self) -> int:
        return self.map.euler_characteristic()

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        v, e, f = self.counts()
        return (tuple((VERTEX_CELL, i) for i in range(v))
                + tuple((EDGE_CELL, i) for i in range(e))
                + tuple((FACE_CELL, i) for i in range(f)))

    def incidence(self, i: int) -> tuple[Cell, Cell]:
        """``(facet, cell)`` of incidence ``i``."""
        x = i >> 1
        edge = (EDGE_CELL, x >> 1)
        if i & 1:
            return edge, (FACE_CELL, self.map.face_of[x])
        return (VERTEX_CELL, self.map.vertex_of[x]), edge

    @property
    def incidence_count(self) -> int:
        return 2 * self.map.dart_count

    @cached_property
    def facets(self) -> dict[Cell, list[tuple[Cell, int]]]:
        out = {c: [] for c in self.cells}
        for i in range(self.incidence_count):
            low, high = self.incidence(i)
            out[high].append((low, i))
        return out

    @cached_property
    def cofacets(self) -> dict[Cell, list[tuple[Cell, int]]]:
        out = {c: [] for c in self.cells}
        for i in range(self.incidence_count):
            low, high = self.incidence(i)
            out[low].append((high, i))
        return out

    @cached_property
    def overlay(self) -> OverlaidGraph:
        return quadrangulation(self.map)

    def is_isomorphic(self, other: "Complex2") -> bool:
        return self.map.is_isomorphic(other.map)

    def to_json(self) -> dict:
        return self.map.to_json()


def complex_from_map(m: CombMap) -> Complex2:
    return Complex2(m)


def complex_from_diagram(code: PdCode, swap: bool = False) -> Complex2:
    """The complex whose 1-skeleton is the Tait graph of ``code``."""
    g, _ = tait_graphs(code, swap)
    return Complex2(g.map)


def face_poset(d: Complex2) -> OverlaidGraph:
    """Hasse diagram of the cells, embedded; vertex ids as in the overlay."""
    return d.overlay


def cell_of_vertex(gh: OverlaidGraph, v: int) -> Cell:
    return gh.cells[v]


@dataclass(frozen=True)
class HassePairing:
    """Set of paired incidences; every cell lies in at most one pair."""

    complex: Complex2
    pairs: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "pairs", frozenset(self.pairs))
        seen = set()
        for i in self.pairs:
            if not 0 <= i < self.complex.incidence_count:
                raise ValueError(f"no incidence {i}")
            for c in self.complex.incidence(i):
                if c in seen:
                    raise ValueError(f"cell {cell_name(c)} is paired twice")
                seen.add(c)

    @classmethod
    def from_cells(cls, d: Complex2, cell_pairs) -> "HassePairing":
        """Pair cells ``(facet, cell)``, using their first incidence."""
        pairs = []
        for low, high in cell_pairs:
            for c, i in d.cofacets[tuple(low)]:
                if c == tuple(high):
                    pairs.append(i)
                    break
            else:
                raise ValueError(f"{cell_name(low)} is not a facet of {cell_name(high)}")
        return cls(d, frozenset(pairs))

    @cached_property
    def partner(self) -> dict[Cell, Cell]:
        out = {}
        for i in self.pairs:
            low, high = self.complex.incidence(i)
            out[low] = high
            out[high] = low
        return out

    def cell_pairs(self) -> list[tuple[Cell, Cell]]:
        return sorted(self.complex.incidence(i) for i in self.pairs)

    @property
    def critical(self) -> list[Cell]:
        return [c for c in self.complex.cells if c not in self.partner]

    def arcs(self):
        """Modified Hasse digraph: paired incidences point up, others down."""
        for i in range(self.complex.incidence_count):
            low, high = self.complex.incidence(i)
            yield (low, high, i) if i in self.pairs else (high, low, i)

    def to_dot(self, name="hasse") -> str:
        lines = [f"digraph {name} {{"]
        for c in self.complex.cells:
            attr = " [peripheries=2]" if c not in self.partner else ""
            lines.append(f"  {cell_name(c)}{attr};")
        for a, b, i in self.arcs():
            style = ' [color=red penwidth=2]' if i in self.pairs else ""
            lines.append(f"  {cell_name(a)} -> {cell_name(b)}{style};")
        lines.append("}")
        return "\n".join(lines)


def acyclic_check(p: HassePairing) -> bool:
    """True iff the modified Hasse digraph has no directed cycle."""
    succ = {c: [] for c in p.complex.cells}
    for a, b, _ in p.arcs():
        succ[a].append(b)
    state = dict.fromkeys(succ, 0)  # 0 new, 1 on stack, 2 done
    for root in succ:
        if state[root]:
            continue
        state[root] = 1
        stack = [(root, iter(succ[root]))]
        while stack:
            node, it = stack[-1]
            for nxt in it:
                if state[nxt] == 1:
                    return False
                if state[nxt] == 0:
                    state[nxt] = 1
                    stack.append((nxt, iter(succ[nxt])))
                    break
            else:
                state[node] = 2
                stack.pop()
    return True


PAIRED_UP, PAIRED_DOWN, CRITICAL = "paired-up", "paired-down", "critical"


@dataclass(frozen=True)
class MorseFunction:
    complex: Complex2
    values: dict = field(hash=False)

    def __getitem__(self, cell):
        return self.values[tuple(cell)]

    def status(self, cell) -> str:
        cell = tuple(cell)
        v = self.values[cell]
        if any(v <= self.values[c] for c, _ in self.complex.facets[cell]):
            return PAIRED_DOWN
        if any(v >= self.values[c] for c, _ in self.complex.cofacets[cell]):
            return PAIRED_UP
        return CRITICAL

    def to_json(self) -> list[dict]:
        return [{"id": idx, "dim": dim, "value": self.values[(dim, idx)],
                 "status": self.status((dim, idx))}
                for dim, idx in self.complex.cells]


def morse_function(p: HassePairing) -> MorseFunction:
    """Flat Morse function realising an acyclic pairing.

    Each pair and each unpaired cell becomes one node; a non-paired
    incidence forces its facet's node below its cell's node. Nodes take
    their position in a topological order (ties broken by lowest cell), so
    paired cells share a value.
    """
    d = p.complex
    node = {}
    for c in d.cells:
        other = p.partner.get(c)
        node[c] = min(c, other) if other is not None else c
    succ = {n: set() for n in set(node.values())}
    indeg = dict.fromkeys(succ, 0)
    for i in range(d.incidence_count):
        if i in p.pairs:
            continue
        low, high = d.incidence(i)
        a, b = node[low], node[high]
        if a == b:
            raise InvariantError(f"pairing of {cell_name(low)} is not regular")
        if b not in succ[a]:
            succ[a].add(b)
            indeg[b] += 1
    heap = [n for n, k in indeg.items() if k == 0]
    heapq.heapify(heap)
    level = {}
    while heap:
        n = heapq.heappop(heap)
        level[n] = len(level)
        for m in succ[n]:
            indeg[m] -= 1
            if indeg[m] == 0:
                heapq.heappush(heap, m)
    if len(level) != len(succ):
        raise InvariantError("pairing has a closed path; no Morse function exists")
    return MorseFunction(d, {c: level[node[c]] for c in d.cells})


@dataclass(frozen=True)
class MorseReport:
    valid: bool
    counts: dict
    critical: list
    violations: list

    def lines(self) -> list[str]:
        out = [f"valid: {self.valid}",
               "critical: " + " ".join(cell_name(c) for c in self.critical)]
        out.extend(self.violations)
        return out


def validate_morse(d: Complex2, f) -> MorseReport:
    """Check the local discrete Morse conditions cell by cell.

    For every cell at most one facet (counted with multiplicity) may have a
    value at least its own, and at most one cofacet a value at most its
    own; no cell may use both exceptions. ``f`` is a MorseFunction or a
    mapping from cells to integers.
    """
    values = f.values if isinstance(f, MorseFunction) else dict(f)
    counts, critical, violations = {}, [], []
    for c in d.cells:
        v = values[c]
        down = sum(1 for s, _ in d.facets[c] if values[s] >= v)
        up = sum(1 for t, _ in d.cofacets[c] if values[t] <= v)
        counts[c] = (down, up)
        if down > 1:
            violations.append(f"{cell_name(c)}: {down} facets with value >= {v}")
        if up > 1:
            violations.append(f"{cell_name(c)}: {up} cofacets with value <= {v}")
        if down and up:
            violations.append(f"{cell_name(c)}: exceptional both below and above")
        if not down and not up:
            critical.append(c)
    return MorseReport(not violations, counts, critical, violations)


def pairing_from_matching(d: Complex2, m: Matching) -> HassePairing:
    # overlaid edge ids and incidence ids coincide by construction
    return HassePairing(d, frozenset(m.edges))


def matching_to_morse(d: Complex2, s: StarPair, m: Matching, bg=None):
    """Read a perfect matching as a Hasse pairing and realise it.

    Returns ``(pairing, function)``; the critical cells are the starred
    vertex and face.
    """
    bg = bg or balance(face_poset(d), s)
    if not m.is_perfect(bg):
        raise ValueError("matching is not perfect on the balanced graph")
    p = pairing_from_matching(d, m)
    expected = [cell_of_vertex(bg.overlay, s.v0), cell_of_vertex(bg.overlay, s.f0)]
    if sorted(p.critical) != sorted(expected):
        raise InvariantError("unpaired cells differ from the starred pair")
    f = morse_function(p)
    report = validate_morse(d, f)
    if not report.valid or sorted(report.critical) != sorted(expected):
        raise InvariantError("constructed function fails validation: "
                             + "; ".join(report.violations))
    return p, f


def enumerate_morse(d: Complex2, s: StarPair, limit: int | None = None) -> list[MorseFunction]:
    """One validated Morse function per perfect matching, in matching order."""
    bg = balance(face_poset(d), s)
    return [matching_to_morse(d, s, m, bg)[1] for m in enumerate_matchings(bg, limit)]


def knot_from_complex(d: Complex2, signs=None) -> PdCode:
    """Diagram whose Tait graph is the 1-skeleton of ``d``.

    ``signs`` maps edge ids to +1/-1 (a sequence or dict); all +1 by default.
    """
    n = d.map.edge_count
    if signs is None:
        signs = (POSITIVE,) * n
    elif isinstance(signs, dict):
        signs = tuple(signs.get(e, POSITIVE) for e in range(n))
    return diagram_from_tait(SignedTaitGraph(d.map, tuple(signs)))


def complex_roundtrip(d: Complex2, signs=None) -> Complex2:
    """complex -> diagram -> complex, choosing the colouring that restores G."""
    code = knot_from_complex(d, signs)
    first = POSITIVE if signs is None else (signs[0] if not isinstance(signs, dict)
                                            else signs.get(0, POSITIVE))
    return complex_from_diagram(code, swap=first == POSITIVE)


def star_for_cells(gh: OverlaidGraph, v0: int, f0: int) -> StarPair:
    """Star pair from a 0-cell index and a 2-cell index, if they share a square."""
    a = gh.vertex_id(VERTEX_CELL, v0)
    b = gh.vertex_id(FACE_CELL, f0)
    for s in star_candidates(gh):
        if (s.v0, s.f0) == (a, b):
            return s
    raise RestrictionError(f"v{v0} and f{f0} do not share a square of the face poset")
