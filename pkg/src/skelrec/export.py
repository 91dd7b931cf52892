"""DOT export of 1-skeleta."""

from __future__ import annotations

from .complexes import SimplicialComplex
from .poset import GradedFacePoset


def one_skeleton_edges(obj) -> list[tuple[str, str]]:
    if isinstance(obj, SimplicialComplex):
        return sorted(tuple(sorted(e)) for e in obj.faces(1))
    if isinstance(obj, GradedFacePoset):
        edges = []
        for e in obj.of_rank(1):
            ends = sorted(obj.down[e])
            if len(ends) != 2:
                raise ValueError(f"edge {e!r} has {len(ends)} vertices")
            edges.append(tuple(ends))
        return sorted(edges)
    raise TypeError(f"cannot take the 1-skeleton of {type(obj).__name__}")


def to_dot(obj, name: str = "skeleton") -> str:
    if isinstance(obj, SimplicialComplex):
        verts = sorted(obj.vertices)
    else:
        verts = list(obj.of_rank(0))
    lines = [f"graph \"{name}\" {{"]
    lines += [f"  \"{v}\";" for v in verts]
    lines += [f"  \"{a}\" -- \"{b}\";" for a, b in one_skeleton_edges(obj)]
    lines.append("}")
    return "\n".join(lines) + "\n"
