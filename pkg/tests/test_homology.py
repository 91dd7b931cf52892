from __future__ import annotations

import pytest

from conftest import gf2_rank_dense, pinched_spheres, rp2
from skelrec import constructions as C
from skelrec.complexes import SimplicialComplex
from skelrec.errors import BoundsError, DomainError
from skelrec.homology import (
    Z2Matrix,
    betti,
    boundary_matrix,
    check_pseudomanifold_hypotheses,
    is_homology_manifold,
    sphere_betti,
)

FIXTURES = ["simplex:3", "simplex:4", "crosspoly:4", "cyclic:4:7", "mod3:3", "mod3:4", "X:3", "Y:4"]


def test_triangle_boundary_rank():
    tri = SimplicialComplex.from_facets([{"a", "b", "c"}])
    d1 = boundary_matrix(tri, 1)
    assert (d1.rows, d1.cols) == (3, 3) and d1.rank() == 2


def test_tetrahedron_d2_rank():
    d2 = boundary_matrix(C.fixture("simplex:3").complex(), 2)
    assert (d2.rows, d2.cols) == (6, 4) and d2.rank() == 3


def test_boundary_bounds():
    with pytest.raises(BoundsError):
        boundary_matrix(C.fixture("simplex:3").complex(), 3)


@pytest.mark.parametrize("name", FIXTURES)
def test_boundary_squared_is_zero(name):
    x = C.fixture(name).complex()
    for i in range(1, x.dim):
        assert (boundary_matrix(x, i) @ boundary_matrix(x, i + 1)).is_zero()


@pytest.mark.parametrize("name", FIXTURES)
def test_rank_agrees_with_dense_oracle(name):
    x = C.fixture(name).complex()
    for i in range(1, x.dim + 1):
        m = boundary_matrix(x, i)
        assert m.rank() == gf2_rank_dense(m.to_dense())


@pytest.mark.parametrize("name", FIXTURES)
def test_euler_poincare(name):
    x = C.fixture(name).complex()
    f = x.f_vector()
    b = betti(x)
    assert sum((-1) ** i * n for i, n in enumerate(f)) == sum((-1) ** i * n for i, n in enumerate(b))


def test_known_betti_numbers():
    assert betti(C.fixture("simplex:4").complex()) == (1, 0, 0, 1)
    assert betti(C.mod3_pseudomanifold(3)) == (1, 2, 1)
    assert betti(rp2()) == (1, 1, 1)
    solid = SimplicialComplex.from_facets([{"a", "b", "c"}, {"d", "e", "f"}])
    assert betti(solid) == (2, 0, 0)
    hollow = SimplicialComplex.from_facets([{"a", "b"}, {"b", "c"}, {"a", "c"}, {"d", "e"}, {"e", "f"}, {"d", "f"}])
    assert betti(hollow) == (2, 2)


def test_sphere_signature():
    assert sphere_betti(0) == (2,)
    assert sphere_betti(2) == (1, 0, 1)


def test_z2matrix_from_dense():
    m = Z2Matrix.from_dense([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    assert m.rank() == 2 and m[0, 1] == 1 and m[2, 1] == 0


def test_homology_manifold():
    assert is_homology_manifold(C.fixture("simplex:4").complex())
    for z in C.xy_subdivisions(3):
        assert is_homology_manifold(z)
    cert = is_homology_manifold(pinched_spheres())
    assert not cert
    bad = [w for w in cert.witnesses if not w["pass"]]
    assert bad[0]["face"] == ["p"] and bad[0]["betti"][0] == 2


def test_hypotheses_on_cyclic_and_simplex():
    assert check_pseudomanifold_hypotheses(C.fixture("cyclic:6:9").complex(), 6, 4)["pass"]
    assert check_pseudomanifold_hypotheses(C.fixture("simplex:6").complex(), 6, 4)["pass"]


def test_hypotheses_report_on_x5():
    x, _ = C.xy_subdivisions(5)
    rep = check_pseudomanifold_hypotheses(x, 5, 3)
    assert rep["normal"] and rep["links"]
    assert all(set(row) >= {"face", "betti", "pass"} for row in rep["links"])
    assert rep["pass"] == all(row["pass"] for row in rep["links"])


def test_hypotheses_domain():
    x = C.fixture("simplex:4").complex()
    with pytest.raises(DomainError):
        check_pseudomanifold_hypotheses(x, 4, 3)
    with pytest.raises(DomainError):
        check_pseudomanifold_hypotheses(x, 5, 2)
