"""GF(2) linear algebra on int bitsets and simplicial homology with Z/2 coefficients."""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import Certificate, SimplicialComplex, is_connected, is_normal, is_pseudomanifold, link
from .errors import BoundsError, DomainError


@dataclass(frozen=True)
class Z2Matrix:
    """Dense GF(2) matrix; row ``i`` is an int whose bit ``j`` is entry (i, j)."""

    rows: int
    cols: int
    data: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "data", tuple(self.data) or (0,) * self.rows)
        if len(self.data) != self.rows:
            raise ValueError("row count mismatch")
        limit = 1 << self.cols
        if any(r < 0 or r >= limit for r in self.data):
            raise ValueError("row wider than column count")

    @classmethod
    def from_dense(cls, rows: list[list[int]]) -> "Z2Matrix":
        ncols = len(rows[0]) if rows else 0
        data = tuple(sum(1 << j for j, b in enumerate(r) if b & 1) for r in rows)
        return cls(len(rows), ncols, data)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.data[i] >> j) & 1

    def to_dense(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.data]

    def rank(self) -> int:
        # elimination keyed on each row's lowest set bit
        pivots: dict[int, int] = {}
        for row in self.data:
            while row:
                low = row & -row
                p = pivots.get(low)
                if p is None:
                    pivots[low] = row
                    break
                row ^= p
        return len(pivots)

    def __matmul__(self, other: "Z2Matrix") -> "Z2Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for row in self.data:
            acc = 0
            j = 0
            while row:
                if row & 1:
                    acc ^= other.data[j]
                row >>= 1
                j += 1
            out.append(acc)
        return Z2Matrix(self.rows, other.cols, tuple(out))

    def is_zero(self) -> bool:
        return not any(self.data)


def boundary_matrix(x: SimplicialComplex, i: int) -> Z2Matrix:
    """Boundary map from i-faces (columns) to (i-1)-faces (rows) over GF(2)."""
    if not 0 <= i <= x.dim:
        raise BoundsError(f"boundary index {i} outside 0..{x.dim}")
    cols = x.faces(i)
    if i == 0:
        return Z2Matrix(0, len(cols))
    rows = x.faces(i - 1)
    index = {f: n for n, f in enumerate(rows)}
    data = [0] * len(rows)
    for j, f in enumerate(cols):
        for v in f:
            data[index[f - {v}]] |= 1 << j
    return Z2Matrix(len(rows), len(cols), tuple(data))


def betti(x: SimplicialComplex) -> tuple[int, ...]:
    """Unreduced Z/2 Betti numbers b_0..b_dim."""
    if x.dim < 0:
        return ()
    ranks = [boundary_matrix(x, i).rank() for i in range(x.dim + 1)] + [0]
    return tuple(
        len(x.faces(i)) - ranks[i] - ranks[i + 1] for i in range(x.dim + 1)
    )


def sphere_betti(m: int) -> tuple[int, ...]:
    """Unreduced Z/2 Betti vector of the m-sphere; S^0 is two points."""
    if m == 0:
        return (2,)
    return (1,) + (0,) * (m - 1) + (1,)


def is_homology_manifold(x: SimplicialComplex) -> Certificate:
    """Connected pseudomanifold whose every k-face link has sphere homology.

    The witnesses are per-link report rows ``{"face", "betti", "pass"}`` for
    every failing link.
    """
    pm = is_pseudomanifold(x)
    if not pm:
        return pm
    if not is_connected(x):
        return Certificate(False, "not connected")
    rows = link_report(x, range(0, x.dim))
    bad = tuple(r for r in rows if not r["pass"])
    if bad:
        return Certificate(False, "links without sphere homology", bad)
    return Certificate(True)


def link_report(x: SimplicialComplex, dims) -> list[dict]:
    rows = []
    for k in dims:
        want = sphere_betti(x.dim - k - 1)
        for g in x.faces(k):
            b = betti(link(x, g))
            rows.append({"face": sorted(g), "betti": list(b), "pass": b == want})
    return rows


def _link_is_homology_manifold(x: SimplicialComplex, g, dim: int, extra_zero: int | None = None) -> dict:
    lk = link(x, g)
    ok = lk.dim == dim and bool(is_homology_manifold(lk))
    b = betti(lk)
    if ok and extra_zero is not None:
        ok = extra_zero >= len(b) or b[extra_zero] == 0
    return {"face": sorted(g), "betti": list(b), "pass": ok}


def check_pseudomanifold_hypotheses(x: SimplicialComplex, d: int, k: int) -> dict:
    """Link conditions that license full reconstruction from (k-1, k) incidences.

    Main condition: every (2k-d-1)-face link is a homology (2d-2k-1)-manifold,
    for ceil((d+1)/2) <= k <= d-2. The ``remark_variant`` flag reports the
    alternative: every (2k-d)-face link is a homology (2d-2k-2)-manifold with
    vanishing (d-k-1)-homology.
    """
    if x.dim != d - 1:
        raise DomainError(f"complex has dimension {x.dim}, expected {d - 1}")
    if not -(-(d + 1) // 2) <= k <= d - 2:
        raise DomainError(f"k={k} outside {-(-(d + 1) // 2)}..{d - 2} for d={d}")
    rows = [_link_is_homology_manifold(x, g, 2 * d - 2 * k - 1) for g in x.faces(2 * k - d - 1)]
    remark_rows = [
        _link_is_homology_manifold(x, g, 2 * d - 2 * k - 2, extra_zero=d - k - 1)
        for g in x.faces(2 * k - d)
    ]
    return {
        "d": d,
        "k": k,
        "normal": bool(is_normal(x)),
        "face_dim": 2 * k - d - 1,
        "link_dim": 2 * d - 2 * k - 1,
        "pass": all(r["pass"] for r in rows),
        "links": rows,
        "remark_variant": all(r["pass"] for r in remark_rows),
        "remark_links": remark_rows,
    }
