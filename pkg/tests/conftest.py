"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the library's own algorithms so that a
bug in one cannot hide a bug in the other.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter, deque

import networkx as nx
import pytest

from skelrec.complexes import SimplicialComplex
from skelrec.poset import GradedFacePoset, IncidenceBigraph


def _connected(nodes: set, adj) -> bool:
    nodes = set(nodes)
    if not nodes:
        return False
    start = next(iter(nodes))
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in adj(u):
            if v in nodes and v not in seen:
                seen.add(v)
                queue.append(v)
    return seen == nodes


def brute_force_facets(b: IncidenceBigraph) -> set[frozenset]:
    """Filter every subset of ridges by the three facet-boundary conditions."""
    ridges = sorted(b.high)
    down = {r: {e for e, rr in b.incident if rr == r} for r in ridges}
    up: dict[str, set] = {e: set() for e in b.low}
    for e, r in b.incident:
        up[e].add(r)

    def adj(u):
        kind, name = u
        return [("r", r) for r in up[name]] if kind == "e" else [("e", e) for e in down[name]]

    out = set()
    for mask in range(1, 1 << len(ridges)):
        chosen = [r for i, r in enumerate(ridges) if mask >> i & 1]
        counts = Counter(e for r in chosen for e in down[r])
        if any(c != 2 for c in counts.values()):
            continue
        edges = set(counts)
        inside = {("e", e) for e in edges} | {("r", r) for r in chosen}
        outside = {("e", e) for e in b.low if e not in edges} | {("r", r) for r in ridges if r not in chosen}
        if _connected(inside, adj) and _connected(outside, adj):
            out.add(frozenset(chosen))
    return out


def hasse_graph(p: GradedFacePoset) -> nx.Graph:
    g = nx.Graph()
    for x, r in p.ranks.items():
        g.add_node(x, rank=r)
    g.add_edges_from(p.covers)
    return g


def nx_poset_isomorphic(a: GradedFacePoset, b: GradedFacePoset) -> bool:
    """Independent check with networkx VF2 on rank-labelled Hasse diagrams."""
    return nx.is_isomorphic(hasse_graph(a), hasse_graph(b), node_match=lambda u, v: u["rank"] == v["rank"])


def gf2_rank_dense(rows: list[list[int]]) -> int:
    m = [r[:] for r in rows]
    rank, ncols = 0, len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                m[i] = [a ^ b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def random_relabel(names, rng: random.Random, prefix: str = "x") -> dict[str, str]:
    names = sorted(names)
    shuffled = names[:]
    rng.shuffle(shuffled)
    return {a: f"{prefix}{i}" for i, a in enumerate(shuffled)}


def pinched_spheres() -> SimplicialComplex:
    """Two tetrahedron boundaries sharing the single vertex 'p'."""
    a = [frozenset(c) for c in itertools.combinations(["p", "a1", "a2", "a3"], 3)]
    b = [frozenset(c) for c in itertools.combinations(["p", "b1", "b2", "b3"], 3)]
    return SimplicialComplex.from_facets(a + b)


# six-vertex real projective plane (hemi-icosahedron)
RP2_FACETS = [
    "012", "023", "034", "045", "051",
    "124", "235", "134", "245", "135",
]


def rp2() -> SimplicialComplex:
    return SimplicialComplex.from_facets([frozenset(f) for f in RP2_FACETS])


@pytest.fixture
def rng():
    return random.Random(20241015)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "CRITERIA", {}) if mod else {}
    if lines:
        terminalreporter.section("acceptance criteria")
        for n in sorted(lines):
            terminalreporter.write_line(lines[n])
