"""Downward skeleton reconstruction for normal simplicial pseudomanifolds.

Input is the incidence between (k-1)-faces ("ridges" B) and k-faces (A).
A triangular subset is three k-faces A1, A2, A3 and three (k-1)-faces with
Bi below the two A's other than Ai and not below Ai. Triangular subsets
sharing two B's are identified; each resulting class stands for one
(k-2)-face, namely B_i & B_j of any member.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass

from networkx.utils import UnionFind

from .complexes import SimplicialComplex
from .errors import DomainError, HypothesisViolation
from .poset import IncidenceBigraph, mint_id


@dataclass(frozen=True, order=True)
class TriangularSubset:
    k_faces: tuple  # (A1, A2, A3), sorted
    ridges: tuple  # (B1, B2, B3), Bi the one not below Ai

    def ridge_pairs(self):
        return [frozenset(p) for p in itertools.combinations(self.ridges, 2)]


@dataclass(frozen=True)
class TriangleClass:
    id: str
    members: tuple  # sorted TriangularSubsets

    @property
    def ridges(self) -> frozenset:
        return frozenset(b for t in self.members for b in t.ridges)


def triangular_subsets(b: IncidenceBigraph) -> list[TriangularSubset]:
    """Enumerate triangular subsets locally from pairs of k-faces sharing a ridge."""
    below = b.down  # k-face -> its (k-1)-faces
    nbrs: dict[str, set] = defaultdict(set)
    for r in b.low:
        cof = b.up[r]
        for a1, a2 in itertools.combinations(cof, 2):
            nbrs[a1].add(a2)
            nbrs[a2].add(a1)
    out = []
    for a1 in sorted(nbrs):
        for a2 in sorted(x for x in nbrs[a1] if x > a1):
            common = nbrs[a1] & nbrs[a2]
            for a3 in sorted(x for x in common if x > a2):
                s1, s2, s3 = below[a1], below[a2], below[a3]
                for b1 in sorted((s2 & s3) - s1):
                    for b2 in sorted((s1 & s3) - s2):
                        for b3 in sorted((s1 & s2) - s3):
                            out.append(TriangularSubset((a1, a2, a3), (b1, b2, b3)))
    return out


def triangle_classes(ts: list[TriangularSubset], rank: int = 0) -> list[TriangleClass]:
    """Close triangular subsets under "shares two ridges"; ids ``r{rank}.n`` by least member."""
    uf = UnionFind(range(len(ts)))
    by_pair: dict[frozenset, int] = {}
    for i, t in enumerate(ts):
        for p in t.ridge_pairs():
            j = by_pair.setdefault(p, i)
            if j != i:
                uf.union(i, j)
    groups = [sorted(ts[i] for i in g) for g in uf.to_sets()]
    groups.sort(key=lambda g: g[0])
    return [TriangleClass(mint_id(rank, n), tuple(g)) for n, g in enumerate(groups)]


def _check_k(k: int, d: int | None):
    if d is not None and not (2 <= k <= d - 2):
        raise DomainError(f"need 2 <= k <= d-2, got k={k}, d={d}")


def extend_one_down(b: IncidenceBigraph, d: int | None = None) -> IncidenceBigraph:
    """(k-2, k-1) incidences from (k-1, k) incidences.

    ``d`` is the claimed dimension plus one of the unseen pseudomanifold;
    when given, 2 <= k <= d-2 is enforced. Normality cannot be checked from
    the incidences and is assumed.
    """
    k = b.low_rank + 1
    if k < 2:
        raise DomainError(f"input lowRank {b.low_rank} leaves nothing below")
    _check_k(k, d)
    classes = triangle_classes(triangular_subsets(b), rank=k - 2)
    claimed: set[frozenset] = set()
    for c in classes:
        for t in c.members:
            claimed.update(t.ridge_pairs())
    # two ridges of one k-simplex meet in a (k-2)-face, so some class must claim them
    for a in sorted(b.high):
        for p in itertools.combinations(sorted(b.down[a]), 2):
            if frozenset(p) not in claimed:
                raise HypothesisViolation(
                    "ridge pair of a k-face lies in no triangular subset",
                    {"check": "pair coverage", "k_face": a, "ridges": list(p)},
                )
    incident = frozenset((c.id, r) for c in classes for r in c.ridges)
    return IncidenceBigraph(tuple(c.id for c in classes), b.low, incident, k - 2)


def reconstruct_layers(b: IncidenceBigraph, d: int | None = None) -> list[IncidenceBigraph]:
    """Iterate ``extend_one_down`` to rank 0; bottom layer first."""
    layers = [b]
    while layers[-1].low_rank > 0:
        layers.append(extend_one_down(layers[-1], d))
    return layers[::-1]


def reconstruct_skeleton(b: IncidenceBigraph, k: int, d: int | None = None) -> SimplicialComplex:
    """The k-skeleton as a complex on minted vertices, from (k-1, k) incidences.

    Every face's vertex set is the union of its lower faces' vertex sets;
    rank-r faces must get r+1 vertices and incidence must agree with vertex
    set containment, else ``HypothesisViolation``.
    """
    if b.low_rank != k - 1:
        raise DomainError(f"bigraph lowRank {b.low_rank} does not match k={k}")
    if k < 1:
        raise DomainError("k must be at least 1")
    if d is not None and not 1 <= k <= d - 2:
        raise DomainError(f"need 1 <= k <= d-2, got k={k}, d={d}")
    layers = reconstruct_layers(b, d)
    verts: dict[str, frozenset] = {x: frozenset([x]) for x in layers[0].low}
    for layer in layers:
        r = layer.low_rank + 1
        seen: dict[frozenset, str] = {}
        for x in layer.high:
            vs = frozenset().union(*(verts[y] for y in layer.down[x]))
            if len(vs) != r + 1:
                raise HypothesisViolation(
                    f"rank-{r} face with {len(vs)} vertices",
                    {"check": "cardinality", "face": x, "rank": r, "vertices": sorted(vs)},
                )
            if vs in seen:
                raise HypothesisViolation(
                    "two faces with the same vertex set",
                    {"check": "distinct", "faces": [seen[vs], x]},
                )
            seen[vs] = x
            verts[x] = vs
        for lo in layer.low:
            for hi in layer.high:
                if (verts[lo] <= verts[hi]) != ((lo, hi) in layer.incident):
                    raise HypothesisViolation(
                        "incidence disagrees with vertex-set containment",
                        {"check": "containment", "low": lo, "high": hi},
                    )
    return SimplicialComplex(frozenset(verts[a] for a in b.high), frozenset(layers[0].low))
