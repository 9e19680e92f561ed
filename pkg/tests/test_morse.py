import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SMALL
from taitmorse import (
    BUILTIN_NAMES,
    CombMap,
    Complex2,
    HassePairing,
    InvariantError,
    MapError,
    RestrictionError,
    acyclic_check,
    balance,
    builtin_diagram,
    complex_from_diagram,
    complex_from_map,
    count_matchings_fkt,
    enumerate_matchings,
    enumerate_morse,
    face_poset,
    knot_from_complex,
    map_from_pd,
    matching_to_morse,
    morse_function,
    overlay,
    random_planar_map,
    star_candidates,
    tait_graphs,
    validate_morse,
)
from taitmorse.morse import (
    CRITICAL,
    PAIRED_DOWN,
    PAIRED_UP,
    cell_of_vertex,
    complex_roundtrip,
    star_for_cells,
)
from taitmorse.tait_overlay import diagrams_equivalent

TRIANGLE = CombMap((2, 4, 0, 5, 1, 3))
DIPOLE = CombMap((2, 5, 4, 1, 0, 3))
EDGE = CombMap((0, 1))


def test_cell_counts():
    assert complex_from_map(TRIANGLE).counts() == (3, 3, 2)
    assert complex_from_map(EDGE).counts() == (2, 1, 1)
    for d in (complex_from_map(TRIANGLE), complex_from_map(EDGE)):
        assert d.euler_characteristic() == 2
        assert len(d.cells) == sum(d.counts())


def test_non_spherical_rejected():
    with pytest.raises(MapError):
        Complex2(CombMap((0, 1, 2, 3)))


def test_kink_complex_matches_diagram():
    code = builtin_diagram("kink")
    d = complex_from_diagram(code)
    g = tait_graphs(code)[0]
    assert d.counts() == g.map.counts()
    assert sum(d.counts()) == len(map_from_pd(code).faces) + len(code)


def test_incidences_with_multiplicity():
    loop = complex_from_map(CombMap((1, 0)))
    # one vertex, one loop edge, two faces: the loop meets its vertex twice
    assert loop.counts() == (1, 1, 2)
    edge = (1, 0)
    assert [c for c, _ in loop.facets[edge]] == [(0, 0), (0, 0)]
    bridge = complex_from_map(EDGE)
    assert [c for c, _ in bridge.cofacets[edge]] == [(2, 0), (2, 0)]


def test_face_poset_is_trefoil_overlay():
    gh = face_poset(complex_from_map(TRIANGLE))
    g, gs = tait_graphs(builtin_diagram("3_1"))
    knot_side = overlay(g, gs) if g.map.counts() == (3, 3, 2) else overlay(gs, g)
    assert gh.map.is_isomorphic(knot_side.map, gh.dart_labels(), knot_side.dart_labels())


def test_face_poset_adjacency_is_incidence():
    d = complex_from_map(DIPOLE)
    gh = face_poset(d)
    for i in range(d.incidence_count):
        b, w = gh.edge_ends(i)
        low, high = d.incidence(i)
        assert cell_of_vertex(gh, b) in (low, high)
        assert cell_of_vertex(gh, w) in (low, high)
        assert cell_of_vertex(gh, b)[0] == 1
    assert all(len(f) == 4 for f in gh.map.faces)


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_face_poset_matches_knot_overlay(name):
    code = builtin_diagram(name)
    g, gs = tait_graphs(code)
    a = overlay(g, gs)
    b = face_poset(complex_from_diagram(code))
    assert a.map.is_isomorphic(b.map, a.dart_labels(), b.dart_labels())


def test_kink_unique_function():
    d = complex_from_diagram(builtin_diagram("kink"))
    s = star_candidates(face_poset(d))[0]
    (f,) = enumerate_morse(d, s)
    report = validate_morse(d, f)
    assert report.valid and len(report.critical) == 2


def test_double_triangle_functions():
    d = complex_from_map(TRIANGLE)
    gh = face_poset(d)
    for s in star_candidates(gh):
        bg = balance(gh, s)
        ms = enumerate_matchings(bg)
        assert len(ms) == 3
        pairings = set()
        for m in ms:
            p, f = matching_to_morse(d, s, m, bg)
            pairings.add(p.pairs)
            assert acyclic_check(p)
            expected = sorted([cell_of_vertex(gh, s.v0), cell_of_vertex(gh, s.f0)])
            assert sorted(p.critical) == expected
            assert sorted(validate_morse(d, f).critical) == expected
            v0 = cell_of_vertex(gh, s.v0)
            assert all(f[c] > f[v0] for c in d.cells if c != v0)
            assert f.status(v0) == CRITICAL
            statuses = {f.status(c) for c in d.cells}
            assert statuses == {CRITICAL, PAIRED_UP, PAIRED_DOWN}
        assert len(pairings) == 3


@pytest.mark.parametrize("name", SMALL)
def test_correspondence(name):
    d = complex_from_diagram(builtin_diagram(name))
    gh = face_poset(d)
    for s in star_candidates(gh):
        bg = balance(gh, s)
        fs = enumerate_morse(d, s)
        assert len(fs) == count_matchings_fkt(bg) == len(enumerate_matchings(bg))
        for f in fs:
            report = validate_morse(d, f)
            assert report.valid
            assert sorted(report.critical) == sorted(
                [cell_of_vertex(gh, s.v0), cell_of_vertex(gh, s.f0)])


def test_constant_function_invalid():
    d = complex_from_map(TRIANGLE)
    report = validate_morse(d, {c: 0 for c in d.cells})
    assert not report.valid
    assert any("e" in line and "facets" in line for line in report.violations)


def test_strict_function_valid():
    d = complex_from_map(TRIANGLE)
    report = validate_morse(d, {c: c[0] for c in d.cells})
    assert report.valid
    assert len(report.critical) == len(d.cells)


def test_both_exceptions_flagged():
    # an edge paired with a vertex below and a face above at once
    d = complex_from_map(EDGE)
    values = {(0, 0): 1, (0, 1): 0, (1, 0): 1, (2, 0): 1}
    report = validate_morse(d, values)
    assert not report.valid
    assert any("both" in line for line in report.violations)


def test_cyclic_pairing_on_dipole():
    d = complex_from_map(DIPOLE)
    # v0-e0 and v1-e1 with e0, e1 both joining v0 and v1: a closed V-path
    p = HassePairing.from_cells(d, [((0, 0), (1, 0)), ((0, 1), (1, 1))])
    assert not acyclic_check(p)
    with pytest.raises(InvariantError):
        morse_function(p)


def test_empty_pairing_acyclic():
    d = complex_from_map(DIPOLE)
    p = HassePairing(d, frozenset())
    assert acyclic_check(p)
    assert p.critical == list(d.cells)
    assert validate_morse(d, morse_function(p)).valid


def test_loop_pairing_is_cyclic():
    d = complex_from_map(CombMap((1, 0)))
    p = HassePairing(d, frozenset({0}))  # vertex with the loop
    assert not acyclic_check(p)


def test_pairing_rejects_double_use():
    d = complex_from_map(TRIANGLE)
    with pytest.raises(ValueError):
        HassePairing(d, frozenset({0, 1}))
    with pytest.raises(ValueError):
        HassePairing.from_cells(d, [((0, 0), (2, 0))])


def test_double_triangle_to_trefoil():
    d = complex_from_map(TRIANGLE)
    code = knot_from_complex(d)
    # the builtin trefoil's triangle Tait graph carries negative signs
    assert not diagrams_equivalent(code, builtin_diagram("3_1"))
    assert diagrams_equivalent(knot_from_complex(d, [-1] * 3), builtin_diagram("3_1"))
    assert map_from_pd(code).is_isomorphic(map_from_pd(builtin_diagram("3_1")))
    gh = face_poset(d)
    assert (len(gh.blacks), len(gh.whites)) == (3, 5)
    assert complex_roundtrip(d).is_isomorphic(d)


def test_mirror_signs_keep_universe():
    d = complex_from_map(TRIANGLE)
    plus = knot_from_complex(d)
    minus = knot_from_complex(d, [-1, -1, -1])
    assert map_from_pd(plus).is_isomorphic(map_from_pd(minus))
    assert not diagrams_equivalent(plus, minus)
    assert knot_from_complex(d, {1: -1}) == knot_from_complex(d, [1, -1, 1])


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 12), st.randoms(use_true_random=False), st.data())
def test_random_complex_roundtrip(edges, rnd, data):
    d = complex_from_map(random_planar_map(edges, rnd))
    signs = data.draw(st.lists(st.sampled_from([1, -1]), min_size=edges, max_size=edges))
    assert complex_roundtrip(d, signs).is_isomorphic(d)


def test_star_for_cells():
    gh = face_poset(complex_from_map(TRIANGLE))
    s = star_candidates(gh)[0]
    v, f = cell_of_vertex(gh, s.v0)[1], cell_of_vertex(gh, s.f0)[1]
    assert star_for_cells(gh, v, f).square in {c.square for c in star_candidates(gh)
                                              if (c.v0, c.f0) == (s.v0, s.f0)}
    gh = face_poset(complex_from_diagram(builtin_diagram("4_1")))
    pairs = {(cell_of_vertex(gh, c.v0)[1], cell_of_vertex(gh, c.f0)[1])
             for c in star_candidates(gh)}
    vs = {a for a, _ in pairs}
    fs = {b for _, b in pairs}
    bad = next((a, b) for a in vs for b in fs if (a, b) not in pairs)
    with pytest.raises(RestrictionError):
        star_for_cells(gh, *bad)


def test_exports():
    d = complex_from_map(TRIANGLE)
    s = star_candidates(face_poset(d))[0]
    m = enumerate_matchings(balance(face_poset(d), s))[0]
    p, f = matching_to_morse(d, s, m)
    records = f.to_json()
    assert len(records) == 8
    assert [r["status"] for r in records].count(CRITICAL) == 2
    dot = p.to_dot()
    assert dot.count("->") == d.incidence_count
    assert dot.count("color=red") == len(p.pairs) == 3
    assert d.to_json()["dart_count"] == 6
