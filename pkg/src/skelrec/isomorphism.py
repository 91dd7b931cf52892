"""Isomorphism testing for graded posets and simplicial complexes.

Both sides are coloured jointly and refined to an equitable partition using
the multisets of neighbour colours one rank up and one rank down; remaining
ties are broken by individualising one element per side and backtracking.
The search is complete, so an exhausted search is a valid refutation.
"""

from __future__ import annotations

import sys
from collections import Counter
from dataclasses import dataclass
from typing import Mapping

from .complexes import SimplicialComplex
from .poset import GradedFacePoset


@dataclass(frozen=True)
class IsoResult:
    isomorphic: bool
    witness: dict | None = None
    refuter: dict | None = None

    def __bool__(self):
        return self.isomorphic

    def to_json(self) -> dict:
        return {
            "verdict": "isomorphic" if self.isomorphic else "not-isomorphic",
            "witness": dict(sorted(self.witness.items())) if self.witness else None,
            "refuter": self.refuter,
        }


class _Mismatch(Exception):
    def __init__(self, refuter: dict):
        self.refuter = refuter


class _Search:
    """Joint refinement + backtracking over two graded incidence structures."""

    def __init__(self, a_ids, a_rank, a_covers, b_ids, b_rank, b_covers):
        self.a_ids = list(a_ids)
        self.b_ids = list(b_ids)
        self.n = len(self.a_ids)
        index = {("a", x): i for i, x in enumerate(self.a_ids)}
        index.update({("b", y): self.n + i for i, y in enumerate(self.b_ids)})
        total = self.n + len(self.b_ids)
        self.up: list[list[int]] = [[] for _ in range(total)]
        self.down: list[list[int]] = [[] for _ in range(total)]
        for side, covers in (("a", a_covers), ("b", b_covers)):
            for lo, hi in covers:
                i, j = index[(side, lo)], index[(side, hi)]
                self.up[i].append(j)
                self.down[j].append(i)
        self.initial = [a_rank[x] for x in self.a_ids] + [b_rank[y] for y in self.b_ids]
        self.nodes_explored = 0

    def _check(self, colors, what):
        ca, cb = Counter(colors[: self.n]), Counter(colors[self.n:])
        if ca != cb:
            c = min(set(ca) ^ set(cb) | {k for k in ca if ca[k] != cb.get(k)})
            raise _Mismatch({"invariant": what, "color": c, "a": ca.get(c, 0), "b": cb.get(c, 0)})

    def refine(self, colors: list[int], what: str = "refined color histogram") -> list[int]:
        count = len(set(colors))
        rnd = 0
        while True:
            rnd += 1
            sigs = [
                (colors[i], tuple(sorted(colors[j] for j in self.up[i])), tuple(sorted(colors[j] for j in self.down[i])))
                for i in range(len(colors))
            ]
            table = {s: k for k, s in enumerate(sorted(set(sigs)))}
            colors = [table[s] for s in sigs]
            self._check(colors, f"{what} (round {rnd})")
            if len(table) == count:
                return colors
            count = len(table)

    def run(self) -> dict | None:
        if self.n != len(self.b_ids):
            raise _Mismatch({"invariant": "element count", "a": self.n, "b": len(self.b_ids)})
        self._check(self.initial, "rank sizes")
        degs = [(self.initial[i], len(self.up[i]), len(self.down[i])) for i in range(len(self.initial))]
        table = {s: k for k, s in enumerate(sorted(set(degs)))}
        self._check([table[s] for s in degs], "degree multiset")
        colors = self.refine(self.initial)
        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, 4 * len(colors) + 100))
        try:
            return self._search(colors)
        finally:
            sys.setrecursionlimit(limit)

    def _search(self, colors: list[int]) -> dict | None:
        self.nodes_explored += 1
        cells: dict[int, tuple[list[int], list[int]]] = {}
        for i, c in enumerate(colors):
            cells.setdefault(c, ([], []))[0 if i < self.n else 1].append(i)
        open_cells = [(len(a), c) for c, (a, _) in cells.items() if len(a) > 1]
        if not open_cells:
            return {
                self.a_ids[cells[c][0][0]]: self.b_ids[cells[c][1][0] - self.n]
                for c in cells
            }
        _, c = min(open_cells)
        a_side, b_side = cells[c]
        x = a_side[0]
        fresh = max(colors) + 1
        for y in b_side:
            trial = list(colors)
            trial[x] = trial[y] = fresh
            try:
                refined = self.refine(trial)
            except _Mismatch:
                continue
            found = self._search(refined)
            if found is not None:
                return found
        return None


def verify_poset_map(a: GradedFacePoset, b: GradedFacePoset, m: Mapping[str, str]) -> bool:
    if set(m) != set(a.ranks) or set(m.values()) != set(b.ranks) or len(set(m.values())) != len(m):
        return False
    if any(a.ranks[x] != b.ranks[m[x]] for x in m):
        return False
    return {(m[x], m[y]) for x, y in a.covers} == set(b.covers)


def verify_complex_map(x: SimplicialComplex, y: SimplicialComplex, m: Mapping[str, str]) -> bool:
    if set(m) != set(x.vertices) or set(m.values()) != set(y.vertices) or len(set(m.values())) != len(m):
        return False
    return {frozenset(m[v] for v in f) for f in x.facets} == set(y.facets)


def poset_isomorphic(a: GradedFacePoset, b: GradedFacePoset) -> IsoResult:
    search = _Search(sorted(a.ranks), a.ranks, a.covers, sorted(b.ranks), b.ranks, b.covers)
    try:
        m = search.run()
    except _Mismatch as e:
        return IsoResult(False, refuter=e.refuter)
    if m is None:
        return IsoResult(False, refuter={"invariant": "exhausted search", "nodes": search.nodes_explored})
    if not verify_poset_map(a, b, m):
        raise AssertionError("isomorphism witness failed verification")
    return IsoResult(True, witness=m)


def verify_refuter(a: GradedFacePoset, b: GradedFacePoset, refuter: Mapping) -> bool:
    """Replay a cheap-invariant refuter and confirm it separates ``a`` from ``b``.

    Colour ids are recomputed from scratch on the disjoint union, so a refuter
    is only accepted if the stated round really yields the stated counts.
    """
    inv = refuter.get("invariant", "")
    if inv == "element count":
        return len(a.ranks) == refuter["a"] != refuter["b"] == len(b.ranks)
    if inv == "exhausted search":
        return not poset_isomorphic(a, b).isomorphic
    elems = [("a", x) for x in sorted(a.ranks)] + [("b", y) for y in sorted(b.ranks)]
    poset = {"a": a, "b": b}
    color = {e: poset[e[0]].ranks[e[1]] for e in elems}

    def counts(c):
        return (
            sum(1 for e in elems if e[0] == "a" and color[e] == c),
            sum(1 for e in elems if e[0] == "b" and color[e] == c),
        )

    if inv == "rank sizes":
        return counts(refuter["color"]) == (refuter["a"], refuter["b"]) and refuter["a"] != refuter["b"]
    if inv == "degree multiset":
        sig = {e: (color[e], len(poset[e[0]].up[e[1]]), len(poset[e[0]].down[e[1]])) for e in elems}
        names = {s: k for k, s in enumerate(sorted(set(sig.values())))}
        color = {e: names[sig[e]] for e in elems}
        return counts(refuter["color"]) == (refuter["a"], refuter["b"]) and refuter["a"] != refuter["b"]
    if inv.startswith("refined color histogram (round "):
        rounds = int(inv.rsplit(" ", 1)[1].rstrip(")"))
        for _ in range(rounds):
            sig = {
                e: (
                    color[e],
                    tuple(sorted(color[(e[0], u)] for u in poset[e[0]].up[e[1]])),
                    tuple(sorted(color[(e[0], u)] for u in poset[e[0]].down[e[1]])),
                )
                for e in elems
            }
            names = {s: k for k, s in enumerate(sorted(set(sig.values())))}
            color = {e: names[sig[e]] for e in elems}
        return counts(refuter["color"]) == (refuter["a"], refuter["b"]) and refuter["a"] != refuter["b"]
    return False


def _incidence(x: SimplicialComplex, tag: str):
    ranks = {f"v:{v}": 0 for v in x.vertices}
    covers = []
    for f in x.facets:
        fid = f"{tag}:" + "|".join(sorted(f))
        ranks[fid] = 1
        covers.extend((f"v:{v}", fid) for v in f)
    return ranks, covers


def complex_isomorphic(x: SimplicialComplex, y: SimplicialComplex) -> IsoResult:
    """Vertex bijection carrying facets onto facets, via the vertex-facet incidence graph."""
    xr, xc = _incidence(x, "f")
    yr, yc = _incidence(y, "f")
    search = _Search(sorted(xr), xr, xc, sorted(yr), yr, yc)
    try:
        m = search.run()
    except _Mismatch as e:
        return IsoResult(False, refuter=e.refuter)
    if m is None:
        return IsoResult(False, refuter={"invariant": "exhausted search", "nodes": search.nodes_explored})
    vmap = {k[2:]: v[2:] for k, v in m.items() if k.startswith("v:")}
    if not verify_complex_map(x, y, vmap):
        raise AssertionError("isomorphism witness failed verification")
    return IsoResult(True, witness=vmap)
