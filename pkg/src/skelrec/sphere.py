"""Facet recovery for CW 3-spheres from edge-ridge incidences, and the full
4-polytope lattice via the dual sphere.

A ridge set R is a facet boundary iff (1) R's edges form the edge set E,
(2) every edge of E lies in exactly two ridges of R, and (3) both E u R and
its complement have connected incidence graphs. Valid for strongly regular
CW 3-spheres; other inputs only get necessary-condition diagnostics.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass

import networkx as nx

from .errors import ReconstructionError
from .poset import GradedFacePoset, IncidenceBigraph, mint_id

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class CandidateFacet:
    ridges: frozenset
    edges: frozenset

    @property
    def key(self) -> tuple:
        return tuple(sorted(self.ridges))

    def to_json(self) -> dict:
        return {"ridges": sorted(self.ridges), "edges": sorted(self.edges)}


def _candidate(b: IncidenceBigraph, ridges) -> CandidateFacet:
    ridges = frozenset(ridges)
    return CandidateFacet(ridges, frozenset().union(*(b.down[r] for r in ridges)))


def closed_candidates(b: IncidenceBigraph, max_candidate: int | None = None) -> list[CandidateFacet]:
    """All connected ridge sets covering each of their edges exactly twice.

    Seed-grow search: each set is generated from its least ridge, repeatedly
    adding a ridge through the least once-covered edge and pruning on any
    edge covered three times. ``max_candidate`` caps the set size; a cap
    below the largest facet loses completeness.
    """
    if b.low_rank != 1:
        log.debug("closed_candidates called with lowRank %s", b.low_rank)
    if not b.high:
        return []
    order = {r: i for i, r in enumerate(sorted(b.high))}
    limit = len(b.high) if max_candidate is None else max_candidate
    if max_candidate is not None and max_candidate < len(b.high):
        log.warning("candidate cap %d may miss facets with more ridges", max_candidate)
    found: set[tuple] = set()

    def grow(chosen: list, cover: Counter, once: set, floor: int):
        if not once:
            found.add(tuple(sorted(chosen, key=order.__getitem__)))
            return
        if len(chosen) >= limit:
            return
        e = min(once)
        for r in sorted(b.up[e], key=order.__getitem__):
            if order[r] <= floor or r in chosen_set:
                continue
            edges = b.down[r]
            if any(cover[x] >= 2 for x in edges):
                continue
            for x in edges:
                cover[x] += 1
                if cover[x] == 1:
                    once.add(x)
                else:
                    once.discard(x)
            chosen.append(r)
            chosen_set.add(r)
            grow(chosen, cover, once, floor)
            chosen_set.discard(r)
            chosen.pop()
            for x in edges:
                cover[x] -= 1
                if cover[x] == 1:
                    once.add(x)
                else:
                    once.discard(x)

    for seed in sorted(b.high):
        edges = b.down[seed]
        chosen_set = {seed}
        grow([seed], Counter({x: 1 for x in edges}), set(edges), order[seed])
    return [_candidate(b, rs) for rs in sorted(found)]


def _incidence_graph(b: IncidenceBigraph, edges, ridges) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(("e", x) for x in edges)
    g.add_nodes_from(("r", r) for r in ridges)
    ridges = set(ridges)
    for x in edges:
        g.add_edges_from((("e", x), ("r", r)) for r in b.up[x] if r in ridges)
    return g


def is_facet_boundary(b: IncidenceBigraph, c: CandidateFacet) -> bool:
    inside = _incidence_graph(b, c.edges, c.ridges)
    if inside.number_of_nodes() == 0 or not nx.is_connected(inside):
        return False
    outside = _incidence_graph(b, set(b.low) - c.edges, set(b.high) - c.ridges)
    # an empty complement counts as disconnected
    return outside.number_of_nodes() > 0 and nx.is_connected(outside)


def find_facets(b: IncidenceBigraph, max_candidate: int | None = None) -> list[CandidateFacet]:
    facets = [c for c in closed_candidates(b, max_candidate) if is_facet_boundary(b, c)]
    count = Counter(r for c in facets for r in c.ridges)
    bad = sorted(r for r in b.high if count[r] != 2)
    if bad:
        raise ReconstructionError(
            "input not a 3-sphere skeleton: ridges not in exactly two recovered facets",
            {"check": "ridge coverage", "ridges": {r: count[r] for r in bad[:20]}},
        )
    return facets


@dataclass(frozen=True)
class ReconstructedLattice:
    lattice: GradedFacePoset
    provenance: dict  # minted id -> CandidateFacet (vertices come from the dual sphere)


def reconstruct_4polytope(b: IncidenceBigraph, max_candidate: int | None = None) -> ReconstructedLattice:
    """Face lattice (ranks 0..3) of a 4-polytope from its edge-ridge incidences.

    Edge and ridge ids are kept; vertices and facets get minted ids. The
    result is labelled valid for sphere inputs only.
    """
    facets = find_facets(b, max_candidate)
    # in the dual sphere, P's ridges are edges and P's edges are ridges
    dual = b.transpose(low_rank=1)
    try:
        vertices = find_facets(dual, max_candidate)
    except ReconstructionError as e:
        raise ReconstructionError(
            "dual sphere check failed: " + str(e),
            {**e.diagnostic, "check": "dual " + e.diagnostic.get("check", "")},
        ) from None
    ranks: dict[str, int] = {}
    covers: set = set()
    provenance = {}
    for i, v in enumerate(vertices):
        vid = mint_id(0, i)
        ranks[vid] = 0
        provenance[vid] = v
        covers.update((vid, e) for e in v.ridges)
    ranks.update({e: 1 for e in b.low})
    ranks.update({r: 2 for r in b.high})
    covers |= b.incident
    for i, f in enumerate(facets):
        fid = mint_id(3, i)
        ranks[fid] = 3
        provenance[fid] = f
        covers.update((r, fid) for r in f.ridges)
    lattice = GradedFacePoset(ranks, frozenset(covers))
    bad_edges = sorted(e for e in b.low if len(lattice.down[e]) != 2)
    if bad_edges:
        raise ReconstructionError(
            "edges without exactly two vertices",
            {"check": "edge vertices", "edges": bad_edges[:20]},
        )
    f = lattice.f_vector()
    if len(f) != 4 or f[0] - f[1] + f[2] - f[3] != 0:
        raise ReconstructionError(
            "Euler characteristic check failed", {"check": "euler", "f_vector": list(f)}
        )
    return ReconstructedLattice(lattice, provenance)

