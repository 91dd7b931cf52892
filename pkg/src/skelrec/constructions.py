"""Combinatorial constructions: standard polytope boundaries, the wedge
family W/P/Q, the mod-3 pseudomanifolds and their subdivisions X/Y.

Everything is built from explicit facet vertex sets with symbolic vertex
names; no coordinates are involved.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .complexes import SimplicialComplex, face_id, stellar_subdivide
from .errors import DomainError
from .poset import GradedFacePoset


@dataclass(frozen=True)
class FacetList:
    name: str
    facets: tuple  # of frozensets
    simplicial: bool = False

    def __post_init__(self):
        fs = tuple(sorted({frozenset(f) for f in self.facets}, key=sorted))
        for f, g in itertools.permutations(fs, 2):
            if f < g:
                raise ValueError(f"facet {sorted(f)} inside {sorted(g)}")
        object.__setattr__(self, "facets", fs)

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(sorted(set().union(*self.facets)))

    def is_simplicial(self) -> bool:
        return self.simplicial

    def complex(self) -> SimplicialComplex:
        return SimplicialComplex.from_facets(self.facets)

    def lattice(self) -> GradedFacePoset:
        return face_lattice_from_facets(self.facets)

    def vertex_facet_degrees(self) -> dict[str, int]:
        return {v: sum(v in f for f in self.facets) for v in self.vertices}


def face_closure(facets: Iterable[Iterable[str]]) -> set[frozenset]:
    """Closure of the facet sets under intersection, without the empty set.

    For a polytope this is exactly the set of proper nonempty faces, each
    named by its vertex set.
    """
    facets = [frozenset(f) for f in facets]
    faces = set(facets)
    frontier = list(facets)
    while frontier:
        nxt = []
        for g in frontier:
            for f in facets:
                h = g & f
                if h and h not in faces:
                    faces.add(h)
                    nxt.append(h)
        frontier = nxt
    return faces


def face_lattice_from_facets(facets: Iterable[Iterable[str]]) -> GradedFacePoset:
    """Face lattice of a polytope boundary given its facets' vertex sets.

    Only valid when every face is an intersection of facets (true for
    polytopes). Rank is the length of the longest chain below a face.
    """
    facets = [frozenset(f) for f in facets]
    faces = face_closure(facets)
    by_size = sorted(faces, key=len)
    children: dict[frozenset, list[frozenset]] = {}
    for g in by_size:
        subs = {g & f for f in facets} - {g, frozenset()}
        # every proper face of g is g & (some face), so facets of g are the maximal subs
        children[g] = [h for h in subs if not any(h < s for s in subs)]
    rank: dict[frozenset, int] = {}
    for g in by_size:
        rank[g] = 1 + max((rank[h] for h in children[g]), default=-1)
    ranks = {face_id(g): r for g, r in rank.items()}
    covers = {(face_id(h), face_id(g)) for g in faces for h in children[g]}
    return GradedFacePoset(ranks, frozenset(covers))


def face_sets(poset: GradedFacePoset) -> dict[str, frozenset]:
    """Invert ``face_id`` naming for lattices built here."""
    return {x: frozenset(x.split("|")) for x in poset.ranks}


# -- standard boundaries ----------------------------------------------------

def simplex_boundary(n: int) -> FacetList:
    verts = [str(i) for i in range(n + 1)]
    return FacetList(f"simplex:{n}", tuple(frozenset(c) for c in itertools.combinations(verts, n)), True)


def crosspolytope_boundary(n: int, names: list[str] | None = None) -> FacetList:
    axes = names or [f"e{i}" for i in range(1, n + 1)]
    facets = [
        frozenset(f"{s}{a}" for s, a in zip(signs, axes))
        for signs in itertools.product("+-", repeat=n)
    ]
    return FacetList(f"crosspoly:{n}", tuple(facets), True)


def cube_boundary(n: int) -> FacetList:
    verts = ["".join(bits) for bits in itertools.product("01", repeat=n)]
    facets = [
        frozenset(v for v in verts if v[i] == b) for i in range(n) for b in "01"
    ]
    return FacetList(f"cube:{n}", tuple(facets))


def gale_evenness(d: int, n: int) -> list[tuple[int, ...]]:
    """Facets of the cyclic d-polytope on n vertices as index tuples 0..n-1."""
    out = []
    for s in itertools.combinations(range(n), d):
        ss = set(s)
        gaps = [i for i in range(n) if i not in ss]
        if all(
            sum(1 for x in s if i < x < j) % 2 == 0
            for i, j in itertools.combinations(gaps, 2)
        ):
            out.append(s)
    return out


def cyclic_boundary(d: int, n: int) -> FacetList:
    if n <= d:
        raise DomainError("cyclic polytope needs n > d")
    return FacetList(
        f"cyclic:{d}:{n}",
        tuple(frozenset(f"c{i}" for i in s) for s in gale_evenness(d, n)),
        True,
    )


def stacked_3polytope_6() -> FacetList:
    """Tetrahedron stacked twice: six vertices, f = (6, 12, 8)."""
    facets = [
        "013", "023", "123",  # tetrahedron minus the stacked faces
        "024", "124",         # over 012 with apex 4
        "015", "045", "145",  # over 014 with apex 5
    ]
    return FacetList("stacked:3:6", tuple(frozenset(f) for f in facets), True)


# -- wedge family -----------------------------------------------------------

def _top(v: str) -> str:
    return "top" + v


def wedge_family(d: int) -> tuple[FacetList, FacetList, FacetList]:
    """The wedge W of two (d-1)-cross-polytopes and its two perturbations P, Q.

    Vertex ``+e1`` is shared by the base cross-polytope F and its lifted copy
    F'. ``top-e1`` is the apex above ``-e1``; ``top+ej`` / ``top-ej`` sit above
    ``+ej`` / ``-ej``. P splits F' along the ridge of all ``top±ej`` (j >= 2);
    Q splits it along the ridge {+e1, top-e1, top±ej (j >= 3)}.
    """
    if d < 3:
        raise DomainError("wedge family needs d >= 3")
    base = crosspolytope_boundary(d - 1)

    def lift(v: str) -> str:
        return v if v == "+e1" else _top(v)

    f_base = frozenset(base.vertices)
    f_top = frozenset(lift(v) for v in f_base)
    lateral = [g | {lift(v) for v in g} for g in base.facets]
    tops_from2 = {_top(f"{s}e{j}") for j in range(2, d) for s in "+-"}
    tops_from3 = {_top(f"{s}e{j}") for j in range(3, d) for s in "+-"}
    a = frozenset({"+e1"} | tops_from2)
    a2 = frozenset({"top-e1"} | tops_from2)
    b = frozenset({"+e1", "top-e1", "top+e2"} | tops_from3)
    b2 = frozenset({"+e1", "top-e1", "top-e2"} | tops_from3)
    w = FacetList(f"wedgeW:{d}", (f_base, f_top, *lateral))
    p = FacetList(f"wedgeP:{d}", (f_base, a, a2, *lateral))
    q = FacetList(f"wedgeQ:{d}", (f_base, b, b2, *lateral))
    return w, p, q


# -- mod-3 pseudomanifolds ----------------------------------------------------

def grid_vertex(i: int, a: int) -> str:
    return f"{i}:{a}"


def mod3_facets(d: int) -> list[frozenset]:
    return [
        frozenset(grid_vertex(i + 1, a) for i, a in enumerate(digits))
        for digits in itertools.product(range(3), repeat=d)
        if sum(digits) % 3
    ]


def mod3_pseudomanifold(d: int) -> SimplicialComplex:
    """The (d-1)-complex on {1..d} x {0,1,2} with transversal facets of sum != 0 mod 3."""
    if d < 2:
        raise DomainError("mod-3 pseudomanifold needs d >= 2")
    return SimplicialComplex.from_facets(mod3_facets(d))


def mod3_ridge_cofacets(d: int, ridge: Iterable[str]) -> tuple[frozenset, frozenset]:
    """The two facets over a ridge, from the closed-form digit formulas."""
    ridge = frozenset(ridge)
    digits = {int(v.split(":")[0]): int(v.split(":")[1]) for v in ridge}
    (n,) = set(range(1, d + 1)) - set(digits)
    s = sum(digits.values())
    return (
        ridge | {grid_vertex(n, (1 - s) % 3)},
        ridge | {grid_vertex(n, (2 - s) % 3)},
    )


def mod3_orientation(d: int) -> dict[frozenset, tuple[tuple[str, ...], int]]:
    """Orientation by digit sum: +1 when the sum is 1 mod 3, -1 when 2 mod 3."""
    out = {}
    for digits in itertools.product(range(3), repeat=d):
        s = sum(digits) % 3
        if s:
            order = tuple(grid_vertex(i + 1, a) for i, a in enumerate(digits))
            out[frozenset(order)] = (order, 1 if s == 1 else -1)
    return out


def _transversal(d: int, first: int, second: int) -> frozenset:
    return frozenset([grid_vertex(1, first), grid_vertex(2, second)] + [grid_vertex(i, 0) for i in range(3, d + 1)])


def xy_subdivisions(d: int) -> tuple[SimplicialComplex, SimplicialComplex]:
    """Two subdivisions of the mod-3 pseudomanifold with isomorphic (d-2)-skeleta.

    X cones facets (1,1)(2,0)(3,0).. and (1,0)(2,1)(3,0).. with new vertices
    v1, v2; Y cones (1,1)(2,0)(3,0).. and (1,0)(2,2)(3,0).. with w1, w2.
    """
    if d < 3:
        raise DomainError("X/Y construction needs d >= 3")
    m = mod3_pseudomanifold(d)
    x = stellar_subdivide(m, _transversal(d, 1, 0), "v1")
    x = stellar_subdivide(x, _transversal(d, 0, 1), "v2")
    y = stellar_subdivide(m, _transversal(d, 1, 0), "w1")
    y = stellar_subdivide(y, _transversal(d, 0, 2), "w2")
    return x, y


def xy_skeleton_map(d: int) -> dict[str, str]:
    """Vertex map X -> Y swapping (2,1) and (2,2) and sending v_i to w_i."""
    x, _ = xy_subdivisions(d)
    m = {v: v for v in x.vertices}
    m.update({"v1": "w1", "v2": "w2", grid_vertex(2, 1): grid_vertex(2, 2), grid_vertex(2, 2): grid_vertex(2, 1)})
    return m


# -- registry ---------------------------------------------------------------

def fixture(name: str) -> FacetList:
    """Named facet lists: ``simplex:n``, ``crosspoly:n``, ``cube:n``,
    ``cyclic:d:n``, ``stacked:3:6``, ``octahedron``, ``wedgeW|P|Q:d``,
    ``mod3:d``, ``X:d``, ``Y:d``.
    """
    kind, *args = name.split(":")
    nums = [int(a) for a in args]
    if kind == "simplex":
        return simplex_boundary(*nums)
    if kind == "crosspoly":
        return crosspolytope_boundary(*nums)
    if kind == "octahedron":
        return FacetList("octahedron", crosspolytope_boundary(3).facets, True)
    if kind == "cube":
        return cube_boundary(*nums)
    if kind == "cyclic":
        return cyclic_boundary(*nums)
    if kind == "stacked" and nums == [3, 6]:
        return stacked_3polytope_6()
    if kind in ("wedgeW", "wedgeP", "wedgeQ"):
        w, p, q = wedge_family(*nums)
        return {"wedgeW": w, "wedgeP": p, "wedgeQ": q}[kind]
    if kind == "mod3":
        return FacetList(name, tuple(mod3_pseudomanifold(*nums).facets), True)
    if kind in ("X", "Y"):
        x, y = xy_subdivisions(*nums)
        return FacetList(name, tuple((x if kind == "X" else y).facets), True)
    raise DomainError(f"unknown fixture {name!r}")


FIXTURE_NAMES = (
    "simplex:n", "crosspoly:n", "cube:n", "cyclic:d:n", "stacked:3:6", "octahedron",
    "wedgeW:d", "wedgeP:d", "wedgeQ:d", "mod3:d", "X:d", "Y:d",
)
