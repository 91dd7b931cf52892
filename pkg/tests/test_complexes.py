from __future__ import annotations

import itertools

import pytest

from conftest import pinched_spheres, rp2
from skelrec import constructions as C
from skelrec.complexes import (
    SimplicialComplex,
    check_orientation,
    euler_characteristic,
    is_connected,
    is_normal,
    is_pseudomanifold,
    link,
    orientability,
    stellar_subdivide,
)
from skelrec.errors import DomainError
from skelrec.isomorphism import complex_isomorphic


def sx(n):
    return C.fixture(f"simplex:{n}").complex()


def test_facets_reduced_to_maximal():
    x = SimplicialComplex.from_facets([{"a", "b", "c"}, {"a", "b"}, {"d"}])
    assert x.facets == {frozenset("abc"), frozenset("d")}
    assert not x.is_pure()


def test_face_poset_ids_and_counts():
    p = sx(3).face_poset()
    assert p.f_vector() == (4, 6, 4)
    assert "0|1|2" in p.ranks


def test_json_round_trip():
    x = C.mod3_pseudomanifold(3)
    assert SimplicialComplex.from_json(x.to_json()) == x


def test_link_of_simplex_vertex():
    lk = link(sx(4), ["0"])
    assert lk == SimplicialComplex.from_facets(itertools.combinations("1234", 3))


def test_link_of_m2_vertex_is_hexagon():
    lk = link(C.mod3_pseudomanifold(3), ["1:0"])
    assert lk.f_vector() == (6, 6)
    assert all(len(lk.cofacets([v])) == 2 for v in lk.vertices) and is_connected(lk)


def test_link_of_nonface():
    with pytest.raises(DomainError):
        link(sx(3), ["0", "zz"])


@pytest.mark.parametrize("d", [3, 4, 5])
def test_mod3_links_are_smaller_mod3(d):
    m = C.mod3_pseudomanifold(d)
    for k in range(0, d - 2):
        g = m.faces(k)[0]
        expected = C.mod3_pseudomanifold(d - k - 1)
        assert complex_isomorphic(link(m, g), expected).isomorphic


def test_pseudomanifold():
    assert is_pseudomanifold(sx(4))
    solid = SimplicialComplex.from_facets([{"0", "1", "2", "3"}])
    cert = is_pseudomanifold(solid)
    assert not cert and cert.witnesses


@pytest.mark.parametrize("d", [3, 4, 5])
def test_mod3_is_normal_pseudomanifold(d):
    m = C.mod3_pseudomanifold(d)
    assert is_pseudomanifold(m) and is_normal(m)


def test_pinched_spheres_not_normal():
    cert = is_normal(pinched_spheres())
    assert not cert
    assert "p" in str(cert.witnesses)


def test_cycle_is_normal_vacuously():
    hexagon = SimplicialComplex.from_facets([{str(i), str((i + 1) % 6)} for i in range(6)])
    assert is_normal(hexagon)


@pytest.mark.parametrize("name", ["mod3:3", "X:3", "Y:3", "simplex:3", "simplex:5"])
def test_orientable(name):
    x = C.fixture(name).complex()
    o = orientability(x)
    assert o.orientable
    assert check_orientation(x, o.assignment)


def test_rp2_refuted_with_odd_cycle():
    o = orientability(rp2())
    assert not o.orientable and len(o.odd_cycle) >= 3


def test_explicit_mod3_orientation_rule():
    for d in (2, 3, 4, 5):
        assert check_orientation(C.mod3_pseudomanifold(d), C.mod3_orientation(d))


def test_flipping_one_sign_breaks_orientation():
    asg = dict(C.mod3_orientation(3))
    f = next(iter(asg))
    order, s = asg[f]
    asg[f] = (order, -s)
    assert not check_orientation(C.mod3_pseudomanifold(3), asg)


def test_orientability_rejects_non_pseudomanifold():
    with pytest.raises(DomainError):
        orientability(SimplicialComplex.from_facets([{"a", "b", "c"}]))


def test_stellar_subdivision_of_tetrahedron_boundary():
    y = stellar_subdivide(sx(3), ["0", "1", "2"], "n")
    assert y.f_vector() == (5, 9, 6)
    assert len(y.cofacets(["n"])) == 3
    old = SimplicialComplex.from_facets(f for f in y.facets if "n" not in f)
    assert old.facets == sx(3).facets - {frozenset("012")}


def test_stellar_needs_a_facet():
    with pytest.raises(DomainError):
        stellar_subdivide(sx(3), ["0", "1"])


def test_euler_characteristic():
    assert euler_characteristic(sx(4)) == 0
    assert euler_characteristic(sx(3)) == 2
    x, y = C.xy_subdivisions(3)
    assert euler_characteristic(x) == euler_characteristic(y) == 0
