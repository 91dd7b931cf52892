from __future__ import annotations

import random

import pytest

from conftest import nx_poset_isomorphic, random_relabel
from skelrec import constructions as C
from skelrec.complexes import SimplicialComplex
from skelrec.isomorphism import (
    complex_isomorphic,
    poset_isomorphic,
    verify_complex_map,
    verify_poset_map,
    verify_refuter,
)
from skelrec.poset import slice_poset


def test_relabelled_octahedron():
    lat = C.fixture("octahedron").lattice()
    m = random_relabel(lat.ranks, random.Random(1))
    res = poset_isomorphic(lat, lat.relabel(m))
    assert res.isomorphic and verify_poset_map(lat, lat.relabel(m), res.witness)


def test_octahedron_vs_stacked():
    a, b = C.fixture("octahedron").lattice(), C.fixture("stacked:3:6").lattice()
    for k in range(3):
        assert poset_isomorphic(slice_poset(a, k, k).poset, slice_poset(b, k, k).poset).isomorphic
    res = poset_isomorphic(a, b)
    assert not res.isomorphic and res.refuter["invariant"]
    assert not nx_poset_isomorphic(a, b)


@pytest.mark.parametrize("d", [4, 5])
def test_low_skeleta_of_p_and_q(d):
    _, p, q = C.wedge_family(d)
    sp, sq = slice_poset(p.lattice(), 0, d - 3).poset, slice_poset(q.lattice(), 0, d - 3).poset
    assert poset_isomorphic(sp, sq).isomorphic


def test_m2_grid_shift_is_automorphism():
    m = C.mod3_pseudomanifold(3)
    shift = {f"{i}:{a}": f"{i}:{(a + 1) % 3}" for i in (1, 2, 3) for a in range(3)}
    assert verify_complex_map(m, m, shift)
    assert complex_isomorphic(m, m.relabel(shift)).isomorphic


@pytest.mark.parametrize("d", [3, 4, 5])
def test_x_vs_y(d):
    x, y = C.xy_subdivisions(d)
    assert not poset_isomorphic(x.face_poset(), y.face_poset()).isomorphic
    assert poset_isomorphic(x.face_poset(0, d - 2), y.face_poset(0, d - 2)).isomorphic


def test_x_vs_y_networkx_oracle():
    x, y = C.xy_subdivisions(3)
    assert not nx_poset_isomorphic(x.face_poset(), y.face_poset())
    assert nx_poset_isomorphic(x.face_poset(0, 1), y.face_poset(0, 1))


@pytest.mark.parametrize("seed", range(5))
def test_agrees_with_networkx_on_small_lattices(seed):
    rng = random.Random(seed)
    names = ["octahedron", "stacked:3:6", "wedgeP:3", "wedgeQ:3", "cube:3", "simplex:3"]
    a, b = rng.choice(names), rng.choice(names)
    la, lb = C.fixture(a).lattice(), C.fixture(b).lattice()
    lb = lb.relabel(random_relabel(lb.ranks, rng))
    assert poset_isomorphic(la, lb).isomorphic == nx_poset_isomorphic(la, lb)


def test_cheap_refuters():
    a = C.fixture("simplex:3").lattice()
    b = C.fixture("simplex:4").lattice()
    assert poset_isomorphic(a, b).refuter["invariant"] == "element count"
    c = C.fixture("cube:3").lattice()
    d = C.fixture("crosspoly:3").lattice()
    assert poset_isomorphic(c, d).refuter["invariant"] == "rank sizes"


def test_complex_refuter_and_witness():
    tri = SimplicialComplex.from_facets([{"a", "b"}, {"b", "c"}, {"a", "c"}, {"c", "d"}])
    path = SimplicialComplex.from_facets([{"a", "b"}, {"b", "c"}, {"c", "d"}, {"b", "d"}])
    res = complex_isomorphic(tri, path)
    assert res.isomorphic and verify_complex_map(tri, path, res.witness)
    star = SimplicialComplex.from_facets([{"a", "b"}, {"a", "c"}, {"a", "d"}, {"c", "d"}])
    line = SimplicialComplex.from_facets([{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}])
    assert not complex_isomorphic(star, line).isomorphic


def test_json_verdict():
    lat = C.fixture("simplex:3").lattice()
    out = poset_isomorphic(lat, lat).to_json()
    assert out["verdict"] == "isomorphic" and out["witness"]


@pytest.mark.parametrize(
    "a,b",
    [("simplex:3", "simplex:4"), ("cube:3", "crosspoly:3"), ("octahedron", "stacked:3:6"), ("wedgeP:4", "wedgeQ:4")],
)
def test_refuters_replay(a, b):
    la, lb = C.fixture(a).lattice(), C.fixture(b).lattice()
    ref = poset_isomorphic(la, lb).refuter
    assert verify_refuter(la, lb, ref)
    assert not verify_refuter(la, lb, {**ref, "a": ref["b"]})
