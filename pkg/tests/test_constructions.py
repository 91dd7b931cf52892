from __future__ import annotations

import itertools
from math import comb

import pytest

from skelrec import constructions as C
from skelrec.complexes import is_normal, is_pseudomanifold, orientability
from skelrec.demos import xy_witness_checks
from skelrec.errors import DomainError
from skelrec.homology import betti

scipy_spatial = pytest.importorskip("scipy.spatial")


@pytest.mark.parametrize("d,n", [(3, 6), (4, 7), (4, 8), (5, 8), (6, 9)])
def test_gale_evenness_matches_convex_hull(d, n):
    pts = [[t ** j for j in range(1, d + 1)] for t in range(n)]
    hull = scipy_spatial.ConvexHull(pts)
    from_hull = {tuple(sorted(int(i) for i in s)) for s in hull.simplices}
    assert from_hull == set(C.gale_evenness(d, n))


def test_facet_list_rejects_nesting():
    with pytest.raises(ValueError):
        C.FacetList("bad", (frozenset("ab"), frozenset("abc")))


@pytest.mark.parametrize(
    "name,f",
    [
        ("octahedron", (6, 12, 8)),
        ("stacked:3:6", (6, 12, 8)),
        ("simplex:4", (5, 10, 10, 5)),
        ("cube:4", (16, 32, 24, 8)),
        ("crosspoly:4", tuple(2 ** (k + 1) * comb(4, k + 1) for k in range(4))),
        ("cyclic:6:9", (9, 36, 84, 117, 90, 30)),
    ],
)
def test_lattice_f_vectors(name, f):
    assert C.fixture(name).lattice().f_vector() == f


def test_simplicial_flag():
    assert C.fixture("crosspoly:4").is_simplicial()
    assert not C.fixture("cube:3").is_simplicial()
    assert not C.fixture("wedgeP:4").is_simplicial()


def test_simplicial_lattice_matches_complex_poset():
    for name in ("simplex:4", "crosspoly:4", "cyclic:4:7"):
        fl = C.fixture(name)
        assert fl.lattice() == fl.complex().face_poset()


def _edges(lat):
    sets = C.face_sets(lat)
    return {sets[e] for e in lat.of_rank(1)}


def test_wedge_d3_figure():
    w, p, q = (x.lattice() for x in C.wedge_family(3))
    assert p.f_vector() == q.f_vector() == (7, 12, 7)
    assert frozenset({"top+e2", "top-e2"}) in _edges(p) - _edges(w)
    assert frozenset({"+e1", "top-e1"}) in _edges(q) - _edges(w)


def test_wedge_d4_new_ridges():
    w, p, q = (x.lattice() for x in C.wedge_family(4))
    sets_w = set(C.face_sets(w).values())

    def ridges(lat):
        s = C.face_sets(lat)
        return {s[r] for r in lat.of_rank(2)}

    assert ridges(p) - sets_w == {frozenset({"top+e2", "top-e2", "top+e3", "top-e3"})}
    assert ridges(q) - sets_w == {frozenset({"+e1", "top-e1", "top+e3", "top-e3"})}
    assert p.f_vector() == q.f_vector() == (11, 29, 29, 11)


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_wedge_vertex_facet_maxima(d):
    _, p, q = C.wedge_family(d)
    assert max(p.vertex_facet_degrees().values()) == 2 ** (d - 2) + 2
    assert max(q.vertex_facet_degrees().values()) == 2 ** (d - 2) + 3


def test_wedge_domain():
    with pytest.raises(DomainError):
        C.wedge_family(2)


def test_mod3_counts_and_circle():
    for d in (2, 3, 4, 5):
        assert len(C.mod3_facets(d)) == 2 * 3 ** (d - 1)
    m1 = C.mod3_pseudomanifold(2)
    assert m1.f_vector() == (6, 6) and betti(m1) == (1, 1)


@pytest.mark.parametrize("d", [3, 4, 5])
def test_mod3_ridge_formula(d):
    m = C.mod3_pseudomanifold(d)
    for ridge in m.faces(d - 2):
        assert set(m.cofacets(ridge)) == set(C.mod3_ridge_cofacets(d, ridge))


@pytest.mark.parametrize("d", [3, 4, 5])
def test_xy_structure(d):
    x, y = C.xy_subdivisions(d)
    for z in (x, y):
        assert is_pseudomanifold(z) and is_normal(z) and orientability(z).orientable
    w = xy_witness_checks(d, x, y)
    assert w["X_degree_d"] == ["v1", "v2"] and w["Y_degree_d"] == ["w1", "w2"]
    assert w["E1"] == ["1:1", "2:0"] and w["E2"] == ["1:0", "2:1"]
    assert w["D1"] == ["1:1", "2:0"] and w["D2"] == ["1:0", "2:2"]


def test_xy_domain():
    with pytest.raises(DomainError):
        C.xy_subdivisions(2)


def test_fixture_registry():
    for name in ("simplex:3", "crosspoly:3", "cube:3", "cyclic:4:6", "stacked:3:6", "octahedron",
                 "wedgeW:3", "wedgeP:3", "wedgeQ:3", "mod3:3", "X:3", "Y:3"):
        assert C.fixture(name).facets
    with pytest.raises(DomainError):
        C.fixture("nonsense:1")


def test_gale_evenness_counts():
    # a cyclic d-polytope with d even has n/(n-m) * C(n-m, m) facets, m = d/2
    for d, n in itertools.product((4, 6), range(7, 11)):
        m = d // 2
        assert len(C.gale_evenness(d, n)) == n * comb(n - m, m) // (n - m)
