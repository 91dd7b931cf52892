"""skelrec command line.

    skelrec gen --family fixture --name cube:4 --layer 1 --out b.json
    skelrec reconstruct4 --in b.json --out lattice.json
    skelrec reconstruct-skeleton --in b.json --k 3 --out complex.json
    skelrec iso --a one.json --b two.json
    skelrec check --in complex.json --property normal
    skelrec demo-identical-skeleta --dmax 5 --format text

Exit status is 0 iff every claim passes; validation failures print a JSON
diagnostic and exit 1.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import constructions as C
from .complexes import SimplicialComplex, is_normal, is_pseudomanifold, orientability
from .demos import (
    EDGE_RIDGE_FIXTURES,
    CommandReport,
    demo_design_theorem,
    demo_edge_ridge,
    demo_identical_skeleta,
    demo_skeleton_reconstruction,
)
from .errors import SkelrecError
from .export import to_dot
from .homology import betti, check_pseudomanifold_hypotheses, is_homology_manifold
from .isomorphism import complex_isomorphic, poset_isomorphic
from .poset import GradedFacePoset, IncidenceBigraph, bigraph_of, dumps, slice_poset
from .skeleton import reconstruct_skeleton
from .sphere import reconstruct_4polytope

log = logging.getLogger("skelrec")


def load(path: str):
    """Read any of the three file formats, dispatching on keys."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if "facets" in data:
        return SimplicialComplex.from_json(data)
    if "lowRank" in data:
        return IncidenceBigraph.from_json(data)
    if "faces" in data:
        return GradedFacePoset.from_json(data)
    raise SkelrecError(f"{path}: unrecognised format", {"keys": sorted(data)})


def emit(obj, out: str | None):
    text = dumps(obj)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _as_poset(obj):
    if isinstance(obj, IncidenceBigraph):
        return obj.as_poset()
    if isinstance(obj, SimplicialComplex):
        return obj.face_poset()
    return obj


def cmd_gen(args):
    fam, d = args.family, args.d
    if fam == "fixture":
        if not args.name:
            raise SkelrecError("--name is required for --family fixture")
        fl = C.fixture(args.name)
    elif fam == "wedge":
        w, p, q = C.wedge_family(d)
        fl = {"W": w, "P": p, "Q": q}[args.which or "P"]
    elif fam == "mod3":
        fl = C.fixture(f"mod3:{d}")
    elif fam == "xy":
        fl = C.fixture(f"{args.which or 'X'}:{d}")
    else:
        raise SkelrecError(f"unknown family {fam!r}")
    simplicial = fl.is_simplicial()
    as_ = args.as_ or ("complex" if simplicial else "lattice")
    if as_ == "complex":
        obj = fl.complex()
    else:
        obj = fl.complex().face_poset() if simplicial else fl.lattice()
    if args.layer is not None:
        lattice = obj.face_poset() if isinstance(obj, SimplicialComplex) else obj
        obj = bigraph_of(slice_poset(lattice, args.layer, args.layer + 1))
    emit(obj, args.out)
    return 0


def cmd_reconstruct4(args):
    b = load(args.in_)
    rec = reconstruct_4polytope(b, args.max_candidate)
    emit(rec.lattice, args.out)
    log.info("f-vector %s (valid for 3-sphere inputs)", rec.lattice.f_vector())
    return 0


def cmd_reconstruct_skeleton(args):
    b = load(args.in_)
    emit(reconstruct_skeleton(b, args.k, args.d), args.out)
    return 0


def cmd_iso(args):
    a, b = load(args.a), load(args.b)
    kind = args.kind or ("complex" if isinstance(a, SimplicialComplex) and isinstance(b, SimplicialComplex) else "poset")
    if kind == "complex":
        res = complex_isomorphic(a, b)
    else:
        res = poset_isomorphic(_as_poset(a), _as_poset(b))
    print(dumps(res), end="")
    return 0


def cmd_check(args):
    x = load(args.in_)
    if not isinstance(x, SimplicialComplex):
        raise SkelrecError("check needs a complex file")
    prop = args.property
    if prop == "pseudomanifold":
        out = is_pseudomanifold(x).to_json()
    elif prop == "normal":
        out = is_normal(x).to_json()
    elif prop == "orientable":
        o = orientability(x)
        out = {"pass": o.orientable, "components": o.components, "odd_cycle": [list(f) for f in o.odd_cycle]}
    elif prop == "homology":
        cert = is_homology_manifold(x)
        out = {**cert.to_json(), "betti": list(betti(x))}
    elif prop == "hypotheses":
        out = check_pseudomanifold_hypotheses(x, args.d or x.dim + 1, args.k)
    else:
        raise SkelrecError(f"unknown property {prop!r}")
    print(dumps(out), end="")
    return 0 if out["pass"] else 1


def cmd_dot(args):
    obj = load(args.in_)
    text = to_dot(obj, Path(args.in_).stem)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _report(rep: CommandReport, fmt: str) -> int:
    sys.stdout.write(rep.to_text() if fmt == "text" else dumps(rep))
    return 0 if rep.ok else 1


def cmd_demo_edge_ridge(args):
    fixtures = EDGE_RIDGE_FIXTURES if args.fixtures is None else tuple(f for f in args.fixtures.split(",") if f)
    return _report(demo_edge_ridge(fixtures, args.corrupt, args.max_candidate), args.format)


def cmd_demo_identical(args):
    return _report(demo_identical_skeleta(args.dmax), args.format)


def cmd_demo_design(args):
    return _report(demo_design_theorem(args.dmax), args.format)


def cmd_demo_skeleton(args):
    return _report(demo_skeleton_reconstruction(args.fixture, args.k), args.format)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--config", help="JSON file of flag defaults; explicit flags win")
    common.add_argument("-v", "--verbose", action="store_true")

    ap = argparse.ArgumentParser(prog="skelrec", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="emit a construction or fixture")
    p.add_argument("--family", choices=("wedge", "mod3", "xy", "fixture"), required=True)
    p.add_argument("--d", type=int, default=4)
    p.add_argument("--name", help="fixture name, e.g. cube:4 or cyclic:6:9")
    p.add_argument("--which", choices=("W", "P", "Q", "X", "Y"))
    p.add_argument("--as", dest="as_", choices=("lattice", "complex"))
    p.add_argument("--layer", type=int, help="emit the (L, L+1) incidence bigraph instead")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reconstruct4", parents=[common], help="4-polytope lattice from edge-ridge incidences")
    p.add_argument("--in", dest="in_", required=True)
    p.add_argument("--out")
    p.add_argument("--max-candidate", type=int)
    p.set_defaults(func=cmd_reconstruct4)

    p = sub.add_parser("reconstruct-skeleton", parents=[common], help="k-skeleton from (k-1, k) incidences")
    p.add_argument("--in", dest="in_", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, help="claimed dimension + 1 of the pseudomanifold")
    p.add_argument("--out")
    p.set_defaults(func=cmd_reconstruct_skeleton)

    p = sub.add_parser("iso", parents=[common], help="isomorphism test")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--kind", choices=("poset", "complex"))
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("check", parents=[common], help="complex property checks")
    p.add_argument("--in", dest="in_", required=True)
    p.add_argument("--property", choices=("pseudomanifold", "normal", "orientable", "homology", "hypotheses"), required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("dot", parents=[common], help="DOT export of the 1-skeleton")
    p.add_argument("--in", dest="in_", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("demo-edge-ridge", parents=[common])
    p.add_argument("--fixtures", help="comma-separated fixture names; empty string for none")
    p.add_argument("--corrupt", action="store_true", help="delete one incidence before reconstructing")
    p.add_argument("--max-candidate", type=int)
    p.set_defaults(func=cmd_demo_edge_ridge)

    p = sub.add_parser("demo-identical-skeleta", parents=[common])
    p.add_argument("--dmax", type=int, default=6)
    p.set_defaults(func=cmd_demo_identical)

    p = sub.add_parser("demo-design-theorem", parents=[common])
    p.add_argument("--dmax", type=int, default=5)
    p.set_defaults(func=cmd_demo_design)

    p = sub.add_parser("demo-skeleton-reconstruction", parents=[common])
    p.add_argument("--fixture", default="crosspoly:5")
    p.add_argument("--k", type=int, default=3)
    p.set_defaults(func=cmd_demo_skeleton)
    return ap


def _apply_config(ap: argparse.ArgumentParser, argv: list[str], args: argparse.Namespace) -> argparse.Namespace:
    cfg = json.loads(Path(args.config).read_text(encoding="utf-8"))
    explicit = argparse.Namespace()
    # reparse with every default suppressed to learn which flags were given
    for action in ap._subparsers._group_actions[0].choices[args.command]._actions:
        action.default = argparse.SUPPRESS
    ap.parse_args(argv, namespace=explicit)
    for key, value in cfg.items():
        key = key.replace("-", "_")
        if key == "in":
            key = "in_"
        if not hasattr(explicit, key):
            setattr(args, key, value)
    return args


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.config:
        args = _apply_config(build_parser(), argv, args)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except SkelrecError as e:
        sys.stdout.write(dumps({"error": str(e), "type": type(e).__name__, "diagnostic": e.diagnostic}))
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
