"""Abstract simplicial complexes stored by their facets.

Faces are frozensets of vertex tokens (strings). Face enumeration is lazy
and memoized per complex.
"""

from __future__ import annotations

import itertools
from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from networkx.utils import UnionFind

from .errors import DomainError
from .poset import GradedFacePoset


def face_id(face: Iterable[str]) -> str:
    return "|".join(sorted(face))


@dataclass(frozen=True)
class SimplicialComplex:
    facets: frozenset
    vertices: frozenset = field(default=frozenset())

    def __post_init__(self):
        facets = {frozenset(f) for f in self.facets}
        nonempty = {f for f in facets if f}
        if nonempty:
            # keep maximal sets only
            by_size = sorted(nonempty, key=len, reverse=True)
            kept: list[frozenset] = []
            for f in by_size:
                if not any(f < g for g in kept):
                    kept.append(f)
            facets = set(kept)
        verts = frozenset(self.vertices).union(*facets) if facets else frozenset(self.vertices)
        object.__setattr__(self, "facets", frozenset(facets))
        object.__setattr__(self, "vertices", verts)

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[str]]) -> "SimplicialComplex":
        return cls(frozenset(frozenset(f) for f in facets))

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    @cached_property
    def _faces(self) -> dict[int, tuple[frozenset, ...]]:
        out: dict[int, set] = defaultdict(set)
        for f in self.facets:
            for r in range(1, len(f) + 1):
                out[r - 1].update(frozenset(c) for c in itertools.combinations(sorted(f), r))
        return {r: tuple(sorted(s, key=sorted)) for r, s in out.items()}

    def faces(self, r: int) -> tuple[frozenset, ...]:
        """Faces of dimension ``r``, lexicographic on sorted vertex tuples."""
        return self._faces.get(r, ())

    def all_faces(self) -> set[frozenset]:
        return {f for faces in self._faces.values() for f in faces}

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.faces(r)) for r in range(self.dim + 1))

    def is_face(self, g: Iterable[str]) -> bool:
        g = frozenset(g)
        return any(g <= f for f in self.facets)

    def cofacets(self, g: Iterable[str]) -> list[frozenset]:
        g = frozenset(g)
        return [f for f in self.facets if g <= f]

    def skeleton(self, k: int) -> "SimplicialComplex":
        return SimplicialComplex(frozenset(self.faces(k)) | {f for f in self.facets if len(f) <= k + 1})

    def relabel(self, mapping: Mapping[str, str]) -> "SimplicialComplex":
        return SimplicialComplex(
            frozenset(frozenset(mapping[v] for v in f) for f in self.facets),
            frozenset(mapping[v] for v in self.vertices),
        )

    def face_poset(self, lo: int = 0, hi: int | None = None) -> GradedFacePoset:
        """Face poset restricted to dimensions ``lo..hi``; ids are ``|``-joined vertex names."""
        hi = self.dim if hi is None else hi
        ranks = {}
        covers = set()
        for r in range(lo, hi + 1):
            for f in self.faces(r):
                ranks[face_id(f)] = r
                if r > lo:
                    for v in f:
                        covers.add((face_id(f - {v}), face_id(f)))
        return GradedFacePoset(ranks, frozenset(covers))

    def to_json(self) -> dict:
        return {
            "vertices": sorted(self.vertices),
            "facets": sorted(sorted(f) for f in self.facets),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SimplicialComplex":
        return cls(
            frozenset(frozenset(f) for f in data["facets"]),
            frozenset(data.get("vertices", ())),
        )


@dataclass(frozen=True)
class Certificate:
    """Outcome of a report-style check; truthy iff the check passed."""

    ok: bool
    reason: str = ""
    witnesses: tuple = ()

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {
            "pass": self.ok,
            "reason": self.reason,
            "witnesses": [sorted(w) if isinstance(w, frozenset) else w for w in self.witnesses],
        }


def link(x: SimplicialComplex, g: Iterable[str]) -> SimplicialComplex:
    g = frozenset(g)
    cof = x.cofacets(g)
    if not cof:
        raise DomainError(f"{sorted(g)} is not a face")
    return SimplicialComplex(frozenset(f - g for f in cof))


def is_connected(x: SimplicialComplex) -> bool:
    if not x.vertices:
        return True
    uf = UnionFind(x.vertices)
    for f in x.facets:
        uf.union(*f)
    return len(list(uf.to_sets())) == 1


def _ridge_counts(x: SimplicialComplex) -> dict[frozenset, int]:
    counts: dict[frozenset, int] = defaultdict(int)
    for f in x.facets:
        for v in f:
            counts[f - {v}] += 1
    return counts


def is_pseudomanifold(x: SimplicialComplex) -> Certificate:
    if not x.is_pure():
        sizes = sorted({len(f) - 1 for f in x.facets})
        return Certificate(False, f"not pure: facet dimensions {sizes}")
    bad = sorted(
        ((r, c) for r, c in _ridge_counts(x).items() if c != 2),
        key=lambda rc: sorted(rc[0]),
    )
    if bad:
        return Certificate(
            False,
            "ridges not in exactly two facets",
            tuple({"ridge": sorted(r), "facets": c} for r, c in bad),
        )
    return Certificate(True)


def is_normal(x: SimplicialComplex) -> Certificate:
    """Connected pseudomanifold whose faces of dimension <= dim-2 have connected links."""
    pm = is_pseudomanifold(x)
    if not pm:
        return pm
    if not is_connected(x):
        return Certificate(False, "not connected")
    bad = []
    for r in range(0, x.dim - 1):
        for g in x.faces(r):
            if not is_connected(link(x, g)):
                bad.append(sorted(g))
    if bad:
        return Certificate(False, "disconnected links", tuple(bad))
    return Certificate(True)


def facet_components(x: SimplicialComplex) -> list[list[frozenset]]:
    """Components of the facet-ridge adjacency graph, each sorted, listed by least facet."""
    uf = UnionFind(x.facets)
    by_ridge: dict[frozenset, list] = defaultdict(list)
    for f in x.facets:
        for v in f:
            by_ridge[f - {v}].append(f)
    for fs in by_ridge.values():
        uf.union(*fs)
    comps = [sorted(c, key=sorted) for c in uf.to_sets()]
    return sorted(comps, key=lambda c: sorted(c[0]))


def euler_characteristic(x: SimplicialComplex) -> int:
    return sum((-1) ** i * n for i, n in enumerate(x.f_vector()))


def stellar_subdivide(x: SimplicialComplex, facet: Iterable[str], new_vertex: str | None = None) -> SimplicialComplex:
    """Replace ``facet`` by the cone from a fresh vertex over its boundary."""
    facet = frozenset(facet)
    if facet not in x.facets:
        raise DomainError(f"{sorted(facet)} is not a facet")
    if new_vertex is None:
        n = 0
        while f"s{n}" in x.vertices:
            n += 1
        new_vertex = f"s{n}"
    elif new_vertex in x.vertices:
        raise DomainError(f"vertex {new_vertex!r} already present")
    cone = {(facet - {u}) | {new_vertex} for u in facet}
    return SimplicialComplex((x.facets - {facet}) | cone, x.vertices | {new_vertex})


# -- orientation -----------------------------------------------------------

def _parity(seq: tuple) -> int:
    """0 for an even permutation of sorted(seq), 1 for odd."""
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return inv & 1


@dataclass(frozen=True)
class OrientationResult:
    orientable: bool
    # facet -> (ordered vertex tuple, sign +1/-1)
    assignment: dict = field(default_factory=dict)
    # closed chain of facets along which sign propagation is inconsistent
    odd_cycle: tuple = ()
    components: int = 0

    def __bool__(self):
        return self.orientable

    def signed(self, facet: frozenset) -> int:
        """Sign relative to the sorted vertex order."""
        order, sign = self.assignment[facet]
        return sign * (-1 if _parity(order) else 1)


def induced_ridge_sign(facet: frozenset, sign_sorted: int, v: str) -> int:
    """Sign induced on ``facet - {v}`` (sorted order) by ``facet`` with sign ``sign_sorted``."""
    pos = sorted(facet).index(v)
    return sign_sorted * (-1 if pos & 1 else 1)


def check_orientation(x: SimplicialComplex, assignment: Mapping[frozenset, tuple]) -> Certificate:
    """Every ridge in two facets must receive opposite induced orientations."""
    by_ridge: dict[frozenset, list] = defaultdict(list)
    for f in x.facets:
        order, sign = assignment[f]
        s = sign * (-1 if _parity(tuple(order)) else 1)
        for v in f:
            by_ridge[f - {v}].append(induced_ridge_sign(f, s, v))
    bad = [sorted(r) for r, signs in by_ridge.items() if len(signs) == 2 and signs[0] == signs[1]]
    if bad:
        return Certificate(False, "ridges with equal induced orientation", tuple(sorted(bad)))
    return Certificate(True)


def orientability(x: SimplicialComplex) -> OrientationResult:
    pm = is_pseudomanifold(x)
    if not pm:
        raise DomainError(f"orientability needs a pseudomanifold: {pm.reason}")
    by_ridge: dict[frozenset, list] = defaultdict(list)
    for f in x.facets:
        for v in f:
            by_ridge[f - {v}].append((f, v))
    signs: dict[frozenset, int] = {}
    parent: dict[frozenset, frozenset | None] = {}
    comps = facet_components(x)
    for comp in comps:
        seed = comp[0]
        signs[seed] = 1
        parent[seed] = None
        queue = deque([seed])
        while queue:
            f = queue.popleft()
            for v in sorted(f):
                ridge = f - {v}
                want = -induced_ridge_sign(f, signs[f], v)
                for g, w in by_ridge[ridge]:
                    if g == f:
                        continue
                    # sign s on g induces sign(s) * (-1)^pos(w) on the ridge
                    s = want * (-1 if sorted(g).index(w) & 1 else 1)
                    if g not in signs:
                        signs[g] = s
                        parent[g] = f
                        queue.append(g)
                    elif signs[g] != s:
                        return OrientationResult(
                            False, odd_cycle=_close_cycle(parent, f, g), components=len(comps)
                        )
    assignment = {f: (tuple(sorted(f)), s) for f, s in signs.items()}
    return OrientationResult(True, assignment, components=len(comps))


def _close_cycle(parent, f, g) -> tuple:
    def path(h):
        out = []
        while h is not None:
            out.append(h)
            h = parent[h]
        return out

    pf, pg = path(f), path(g)
    common = set(pf) & set(pg)
    head = [h for h in pf if h not in common]
    tail = [h for h in pg if h not in common]
    meet = next(h for h in pf if h in common)
    return tuple(tuple(sorted(h)) for h in head + [meet] + tail[::-1])
