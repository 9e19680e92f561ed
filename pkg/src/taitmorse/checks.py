"""Invariant audit for a single diagram, used by ``taitmorse check``."""

from __future__ import annotations

from .diagram_io import PdCode, parse_pd, serialize_pd
from .dimers_trees import (
    BRUTEFORCE_CAP,
    count_matchings_bruteforce,
    count_matchings_fkt,
    count_spanning_trees,
    enumerate_matchings,
    kasteleyn_orient,
    matching_to_tree,
    tree_to_matching,
)
from .morse import (
    Complex2,
    acyclic_check,
    complex_roundtrip,
    enumerate_morse,
    face_poset,
    matching_to_morse,
    validate_morse,
)
from .planar_map import checkerboard, dual, universe
from .tait_overlay import (
    balance,
    diagram_from_tait,
    diagrams_equivalent,
    overlay,
    overlay_from_universe,
    star_candidates,
    tait_from_universe,
    tait_graphs,
    tait_swap_for,
)


def _structure(code, swap):
    u = universe(code)
    n = len(code)
    _require(u.map.counts() == (n, 2 * n, n + 2), u.map.counts())
    col = checkerboard(u.map, swap)
    for d in range(u.map.dart_count):
        _require(col[u.map.face_of[d]] != col[u.map.face_of[d ^ 1]])
    g, gs = tait_from_universe(u, col)
    _require(g.map.edge_count == n and g.map.is_spherical())
    _require(dual(g.map).is_isomorphic(gs.map))
    gh = overlay(g, gs)
    _require(gh.counts() == (2 * n + 2, 4 * n, 2 * n))
    _require(gh.map.euler_characteristic() == 2)
    _require(all(len(f) == 4 for f in gh.map.faces))
    _require(all(gh.degree(b) == 4 for b in gh.blacks))
    alt, labels = overlay_from_universe(u, col)
    _require(gh.map.is_isomorphic(alt, gh.dart_labels(), labels))
    return g, gs, gh


def _balanced(gh):
    for s in star_candidates(gh):
        bg = balance(gh, s)
        _require(bg.is_balanced())
        _require(all(len(bg.map.faces[f]) == 4 for f in bg.bounded_faces))
        for b in bg.blacks:
            if b not in bg.periphery_vertices:
                _require(bg.degree(b) == 4)


def _counts(g, gs, gh):
    trees = count_spanning_trees(g)
    _require(trees == count_spanning_trees(gs))
    for s in star_candidates(gh):
        bg = balance(gh, s)
        _require(kasteleyn_orient(bg).is_valid(bg))
        found = {len(enumerate_matchings(bg)), count_matchings_fkt(bg), trees}
        if len(bg.blacks) <= BRUTEFORCE_CAP:
            found.add(count_matchings_bruteforce(bg))
        _require(found == {trees}, found)


def _color_swap(code):
    a = tait_graphs(code, swap=False)[0]
    b = tait_graphs(code, swap=True)[0]
    _require(count_spanning_trees(a) == count_spanning_trees(b))


def _bijection(gh):
    for s in star_candidates(gh):
        bg = balance(gh, s)
        images = set()
        for m in enumerate_matchings(bg):
            t, ts = matching_to_tree(bg, m)
            _require(len(t.edges) + len(ts.edges) == gh.n)
            _require(tree_to_matching(bg, t) == m)
            images.add(t.edges)
        _require(len(images) == count_spanning_trees(gh.base))


def _morse(g):
    d = Complex2(g.map)
    for s in star_candidates(face_poset(d)):
        bg = balance(face_poset(d), s)
        ms = enumerate_matchings(bg)
        for m in ms:
            p, f = matching_to_morse(d, s, m, bg)
            _require(acyclic_check(p))
            report = validate_morse(d, f)
            _require(report.valid and len(report.critical) == 2)
        _require(len(enumerate_morse(d, s)) == len(ms))


def _diagram_roundtrip(code, g):
    back = diagram_from_tait(g)
    _require(diagrams_equivalent(code, back))
    again = tait_graphs(back, swap=tait_swap_for(g))[0]
    _require(again.is_isomorphic(g))


def _complex_roundtrip(g):
    d = Complex2(g.map)
    _require(complex_roundtrip(d).is_isomorphic(d))
    _require(complex_roundtrip(d, g.signs).is_isomorphic(d))


def run_checks(code: PdCode, swap: bool = False):
    """Yield ``(name, passed, detail)`` for every invariant."""
    try:
        g, gs, gh = _structure(code, swap)
    except AssertionError as exc:
        yield "structure", False, str(exc)
        return
    yield "structure", True, ""
    steps = [
        ("serialize round-trip", lambda: _require(parse_pd(serialize_pd(code)) == code)),
        ("balanced graphs", lambda: _balanced(gh)),
        ("count agreement", lambda: _counts(g, gs, gh)),
        ("colour-swap invariance", lambda: _color_swap(code)),
        ("tree-matching bijection", lambda: _bijection(gh)),
        ("morse correspondence", lambda: _morse(g)),
        ("diagram round-trip", lambda: _diagram_roundtrip(code, g)),
        ("complex round-trip", lambda: _complex_roundtrip(g)),
    ]
    for name, step in steps:
        try:
            step()
        except AssertionError as exc:
            yield name, False, str(exc)
        else:
            yield name, True, ""


def _require(cond, detail=""):
    if not cond:
        raise AssertionError(detail)
