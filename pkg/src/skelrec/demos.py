"""End-to-end demonstrations producing ``CommandReport`` objects.

Each report row is one named claim with a pass flag and a small detail
payload. Reports are deterministic apart from ``wall_time``.
"""

from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass, field

from . import constructions as C
from .complexes import is_normal, link, orientability, euler_characteristic, is_connected, SimplicialComplex
from .errors import DomainError, SkelrecError
from .isomorphism import poset_isomorphic, verify_poset_map, verify_refuter
from .poset import IncidenceBigraph, bigraph_of, dumps, slice_poset
from .skeleton import reconstruct_skeleton
from .sphere import reconstruct_4polytope

EDGE_RIDGE_FIXTURES = ("simplex:4", "cube:4", "crosspoly:4", "wedgeP:4", "wedgeQ:4")


def digest(obj) -> str:
    return hashlib.sha256(dumps(obj).encode()).hexdigest()[:16]


@dataclass
class CommandReport:
    command: str
    inputs: dict = field(default_factory=dict)
    results: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return all(r["pass"] for r in self.results)

    def add(self, theorem: str, claim: str, passed: bool, **detail):
        self.results.append({"theorem": theorem, "claim": claim, "pass": bool(passed), "detail": detail})

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "pass": self.ok,
            "wall_time": round(self.wall_time, 3),
        }

    def to_text(self) -> str:
        lines = [f"# {self.command}"]
        for r in self.results:
            flag = "PASS" if r["pass"] else "FAIL"
            lines.append(f"{flag}  [{r['theorem']}] {r['claim']}")
        lines.append(f"{'PASS' if self.ok else 'FAIL'}  {len(self.results)} claims, {self.wall_time:.2f}s")
        return "\n".join(lines) + "\n"


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.wall_time = time.perf_counter() - t0
        return rep
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def corrupt(b: IncidenceBigraph) -> IncidenceBigraph:
    """Drop the least incidence pair."""
    return IncidenceBigraph(b.low, b.high, b.incident - {min(b.incident)}, b.low_rank)


@_timed
def demo_edge_ridge(fixtures=EDGE_RIDGE_FIXTURES, corrupted: bool = False, max_candidate=None) -> CommandReport:
    rep = CommandReport("demo-edge-ridge" + (" --corrupt" if corrupted else ""))
    for name in fixtures:
        truth = C.fixture(name).lattice()
        b = bigraph_of(slice_poset(truth, 1, 2))
        if corrupted:
            b = corrupt(b)
        rep.inputs[name] = digest(b)
        claim = f"{name}: lattice recovered from edge-ridge incidences"
        try:
            rec = reconstruct_4polytope(b, max_candidate)
        except SkelrecError as e:
            rep.add("edge-ridge", claim, False, error=str(e), diagnostic=e.diagnostic)
            continue
        iso = poset_isomorphic(rec.lattice, truth)
        rep.add("edge-ridge", claim, iso.isomorphic,
                f_vector=list(rec.lattice.f_vector()), refuter=iso.refuter)
    return rep


@_timed
def demo_identical_skeleta(dmax: int, dmin: int = 3) -> CommandReport:
    if dmin < 3 or dmax < dmin:
        raise DomainError("need 3 <= dmin <= dmax")
    rep = CommandReport(f"demo-identical-skeleta --dmax {dmax}")
    for d in range(dmin, dmax + 1):
        _, p, q = C.wedge_family(d)
        lp, lq = p.lattice(), q.lattice()
        rep.inputs[f"P{d}"], rep.inputs[f"Q{d}"] = digest(lp), digest(lq)
        lo = poset_isomorphic(slice_poset(lp, 0, d - 3).poset, slice_poset(lq, 0, d - 3).poset)
        rep.add("identical-skeleta", f"d={d}: (d-3)-skeleta of P and Q isomorphic", lo.isomorphic)
        hi = poset_isomorphic(slice_poset(lp, 2, d - 1).poset, slice_poset(lq, 2, d - 1).poset)
        rep.add("identical-skeleta", f"d={d}: dual (d-3)-skeleta of P and Q isomorphic", hi.isomorphic)
        full = poset_isomorphic(lp, lq)
        rep.add("identical-skeleta", f"d={d}: face lattices of P and Q not isomorphic",
                not full.isomorphic, refuter=full.refuter)
        mp = max(p.vertex_facet_degrees().values())
        mq = max(q.vertex_facet_degrees().values())
        rep.add("identical-skeleta", f"d={d}: max facets per vertex P={mp}, Q={mq}",
                mq == 2 ** (d - 2) + 3 and mp == 2 ** (d - 2) + 2, P=mp, Q=mq)
    return rep


def disjoint_part(faces: set, avoid) -> set:
    """Faces of ``faces`` containing no vertex of ``avoid``."""
    avoid = frozenset(avoid)
    return {f for f in faces if not f & avoid}


def xy_witness_checks(d: int, x: SimplicialComplex, y: SimplicialComplex) -> dict:
    """Degree invariant and link-difference test distinguishing X from Y."""
    def deg_d(z):
        return sorted(v for v in z.vertices if len(z.cofacets([v])) == d)

    lk = {n: link(z, [n]) for z, n in ((x, "v1"), (x, "v2"), (y, "w1"), (y, "w2"))}
    e1 = disjoint_part(lk["v1"].all_faces(), lk["v2"].vertices)
    e2 = disjoint_part(lk["v2"].all_faces(), lk["v1"].vertices)
    d1 = disjoint_part(lk["w1"].all_faces(), lk["w2"].vertices)
    d2 = disjoint_part(lk["w2"].all_faces(), lk["w1"].vertices)

    def top(faces):
        return max(faces, key=len)

    E1, E2, D1, D2 = top(e1), top(e2), top(d1), top(d2)
    x_same = disjoint_part(link(x, E1).all_faces(), {"v1", "v2"}) == disjoint_part(link(x, E2).all_faces(), {"v1", "v2"})
    y_same = disjoint_part(link(y, D1).all_faces(), {"w1", "w2"}) == disjoint_part(link(y, D2).all_faces(), {"w1", "w2"})
    return {
        "X_degree_d": deg_d(x), "Y_degree_d": deg_d(y),
        "E1": sorted(E1), "E2": sorted(E2), "D1": sorted(D1), "D2": sorted(D2),
        "X_links_agree": x_same, "Y_links_agree": y_same,
    }


@_timed
def demo_design_theorem(dmax: int, dmin: int = 3) -> CommandReport:
    if dmax < 3 or dmin < 3:
        raise DomainError("the X/Y construction needs d >= 3")
    rep = CommandReport(f"demo-design-theorem --dmax {dmax}")
    th = "non-reconstructible-pseudomanifolds"
    for d in range(dmin, dmax + 1):
        x, y = C.xy_subdivisions(d)
        rep.inputs[f"X{d}"], rep.inputs[f"Y{d}"] = digest(x), digest(y)
        sx, sy = x.face_poset(0, d - 2), y.face_poset(0, d - 2)
        m = C.xy_skeleton_map(d)
        pmap = {f: "|".join(sorted(m[v] for v in f.split("|"))) for f in sx.ranks}
        rep.add(th, f"d={d}: explicit vertex swap is a (d-2)-skeleton isomorphism",
                verify_poset_map(sx, sy, pmap))
        rep.add(th, f"d={d}: (d-2)-skeleta isomorphic (search)", poset_isomorphic(sx, sy).isomorphic)
        fx, fy = x.face_poset(), y.face_poset()
        full = poset_isomorphic(fx, fy)
        rep.add(th, f"d={d}: face posets of X and Y not isomorphic (refuter replayed)",
                not full.isomorphic and verify_refuter(fx, fy, full.refuter), refuter=full.refuter)
        w = xy_witness_checks(d, x, y)
        rep.add(th, f"d={d}: only v1,v2 / w1,w2 lie in exactly d facets",
                w["X_degree_d"] == ["v1", "v2"] and w["Y_degree_d"] == ["w1", "w2"])
        rep.add(th, f"d={d}: links of E1,E2 agree off v1,v2; links of D1,D2 differ off w1,w2",
                w["X_links_agree"] and not w["Y_links_agree"], E1=w["E1"], E2=w["E2"], D1=w["D1"], D2=w["D2"])
        for name, z in (("X", x), ("Y", y)):
            rep.add(th, f"d={d}: {name} normal", bool(is_normal(z)))
            rep.add(th, f"d={d}: {name} orientable", orientability(z).orientable)
        if d == 3:
            for name, z in (("X", x), ("Y", y)):
                cycles = all(
                    is_connected(lk) and all(len(lk.cofacets([u])) == 2 for u in lk.vertices)
                    for lk in (link(z, [v]) for v in z.vertices)
                )
                chi = euler_characteristic(z)
                rep.add(th, f"d=3: {name} is a torus (chi=0, orientable, vertex links cycles)",
                        chi == 0 and cycles and is_connected(z), chi=chi)
    return rep


@_timed
def demo_skeleton_reconstruction(fixture: str, k: int) -> CommandReport:
    rep = CommandReport(f"demo-skeleton-reconstruction --fixture {fixture} --k {k}")
    fl = C.fixture(fixture)
    if not fl.is_simplicial():
        raise DomainError(f"{fixture} is not simplicial")
    x = fl.complex()
    d = x.dim + 1
    b = bigraph_of(slice_poset(x.face_poset(), k - 1, k))
    rep.inputs[fixture] = digest(b)
    claim = f"{fixture}: {k}-skeleton recovered from ({k - 1},{k}) incidences"
    try:
        rec = reconstruct_skeleton(b, k, d)
    except SkelrecError as e:
        rep.add("skeleton-from-incidences", claim, False, error=str(e), diagnostic=e.diagnostic)
        return rep
    iso = poset_isomorphic(rec.face_poset(), x.face_poset(0, k))
    rep.add("skeleton-from-incidences", claim, iso.isomorphic, f_vector=list(rec.f_vector()))
    return rep
