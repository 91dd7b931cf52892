"""Graded face posets, rank slices and consecutive-rank incidence layers.

Posets hold proper nonempty faces only; the empty face and the whole
polytope are implicit. Every cover joins ranks r and r+1.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .errors import BoundsError, ShapeError, StitchingError


def mint_id(rank: int, ordinal: int) -> str:
    """Deterministic id for a face produced by a reconstruction."""
    return f"r{rank}.{ordinal}"


@dataclass(frozen=True)
class GradedFacePoset:
    ranks: Mapping[str, int]
    covers: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "ranks", dict(self.ranks))
        object.__setattr__(self, "covers", frozenset(tuple(c) for c in self.covers))
        for r in self.ranks.values():
            if r < 0:
                raise ValueError(f"negative rank {r}")
        for lo, hi in self.covers:
            if lo not in self.ranks or hi not in self.ranks:
                raise ValueError(f"cover ({lo!r}, {hi!r}) references an unknown id")
            if self.ranks[hi] != self.ranks[lo] + 1:
                raise ValueError(
                    f"cover ({lo!r}, {hi!r}) joins ranks {self.ranks[lo]} and {self.ranks[hi]}"
                )

    def __hash__(self):
        return hash((frozenset(self.ranks.items()), self.covers))

    def __eq__(self, other):
        if not isinstance(other, GradedFacePoset):
            return NotImplemented
        return self.ranks == other.ranks and self.covers == other.covers

    @classmethod
    def from_elements(cls, elements: Iterable[tuple[str, int]], covers=()) -> "GradedFacePoset":
        ranks: dict[str, int] = {}
        for ident, rank in elements:
            if ident in ranks:
                raise ValueError(f"duplicate id {ident!r}")
            ranks[ident] = rank
        return cls(ranks, frozenset(covers))

    @classmethod
    def empty(cls) -> "GradedFacePoset":
        return cls({})

    def __len__(self):
        return len(self.ranks)

    @property
    def max_rank(self) -> int:
        return max(self.ranks.values(), default=-1)

    @cached_property
    def _by_rank(self) -> dict[int, tuple[str, ...]]:
        out = defaultdict(list)
        for ident, r in self.ranks.items():
            out[r].append(ident)
        return {r: tuple(sorted(ids)) for r, ids in out.items()}

    def of_rank(self, r: int) -> tuple[str, ...]:
        return self._by_rank.get(r, ())

    def f_vector(self) -> tuple[int, ...]:
        if not self.ranks:
            return ()
        lo = min(self.ranks.values())
        return tuple(len(self.of_rank(r)) for r in range(lo, self.max_rank + 1))

    @cached_property
    def up(self) -> dict[str, frozenset]:
        out = {x: set() for x in self.ranks}
        for lo, hi in self.covers:
            out[lo].add(hi)
        return {x: frozenset(s) for x, s in out.items()}

    @cached_property
    def down(self) -> dict[str, frozenset]:
        out = {x: set() for x in self.ranks}
        for lo, hi in self.covers:
            out[hi].add(lo)
        return {x: frozenset(s) for x, s in out.items()}

    def below(self, x: str) -> frozenset:
        """All elements strictly below ``x`` in the transitive closure."""
        seen: set[str] = set()
        stack = list(self.down[x])
        while stack:
            y = stack.pop()
            if y not in seen:
                seen.add(y)
                stack.extend(self.down[y])
        return frozenset(seen)

    def leq(self, x: str, y: str) -> bool:
        return x == y or x in self.below(y)

    def relabel(self, mapping: Mapping[str, str]) -> "GradedFacePoset":
        return GradedFacePoset(
            {mapping[x]: r for x, r in self.ranks.items()},
            frozenset((mapping[a], mapping[b]) for a, b in self.covers),
        )

    def to_json(self) -> dict:
        faces = sorted(self.ranks.items(), key=lambda kv: (kv[1], kv[0]))
        return {
            "ranks": self.max_rank + 1,
            "faces": [{"id": i, "rank": r} for i, r in faces],
            "covers": sorted([list(c) for c in self.covers]),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "GradedFacePoset":
        return cls.from_elements(
            ((f["id"], int(f["rank"])) for f in data["faces"]),
            (tuple(c) for c in data["covers"]),
        )


@dataclass(frozen=True)
class SkeletonSlice:
    poset: GradedFacePoset
    lo: int
    hi: int

    def __post_init__(self):
        for r in self.poset.ranks.values():
            if not self.lo <= r <= self.hi:
                raise ValueError(f"rank {r} outside slice [{self.lo}, {self.hi}]")


@dataclass(frozen=True)
class IncidenceBigraph:
    low: tuple
    high: tuple
    incident: frozenset
    low_rank: int

    def __post_init__(self):
        object.__setattr__(self, "low", tuple(self.low))
        object.__setattr__(self, "high", tuple(self.high))
        pairs = [tuple(p) for p in self.incident]
        object.__setattr__(self, "incident", frozenset(pairs))
        if len(set(self.low)) != len(self.low) or len(set(self.high)) != len(self.high):
            raise ValueError("duplicate ids in bigraph")
        if len(pairs) != len(self.incident):
            raise ValueError("duplicate incidence pairs")
        lows, highs = set(self.low), set(self.high)
        for a, b in self.incident:
            if a not in lows or b not in highs:
                raise ValueError(f"incidence ({a!r}, {b!r}) references an undeclared id")

    @cached_property
    def up(self) -> dict[str, frozenset]:
        out = {x: set() for x in self.low}
        for a, b in self.incident:
            out[a].add(b)
        return {x: frozenset(s) for x, s in out.items()}

    @cached_property
    def down(self) -> dict[str, frozenset]:
        out = {x: set() for x in self.high}
        for a, b in self.incident:
            out[b].add(a)
        return {x: frozenset(s) for x, s in out.items()}

    def transpose(self, low_rank: int | None = None) -> "IncidenceBigraph":
        """Swap the two sides; the order dual of the layer."""
        return IncidenceBigraph(
            self.high,
            self.low,
            frozenset((b, a) for a, b in self.incident),
            self.low_rank if low_rank is None else low_rank,
        )

    def relabel(self, mapping: Mapping[str, str]) -> "IncidenceBigraph":
        return IncidenceBigraph(
            tuple(mapping[x] for x in self.low),
            tuple(mapping[x] for x in self.high),
            frozenset((mapping[a], mapping[b]) for a, b in self.incident),
            self.low_rank,
        )

    def as_poset(self) -> GradedFacePoset:
        ranks = {x: self.low_rank for x in self.low}
        ranks.update({x: self.low_rank + 1 for x in self.high})
        return GradedFacePoset(ranks, self.incident)

    def to_json(self) -> dict:
        return {
            "lowRank": self.low_rank,
            "low": sorted(self.low),
            "high": sorted(self.high),
            "incident": sorted([list(p) for p in self.incident]),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "IncidenceBigraph":
        return cls(
            tuple(data["low"]),
            tuple(data["high"]),
            frozenset(tuple(p) for p in data["incident"]),
            int(data["lowRank"]),
        )


def slice_poset(poset: GradedFacePoset, a: int, b: int) -> SkeletonSlice:
    """Restrict ``poset`` to ranks ``a..b``; ranks keep their original values."""
    if not 0 <= a <= b <= poset.max_rank:
        raise BoundsError(f"slice [{a}, {b}] outside ranks 0..{poset.max_rank}")
    ranks = {x: r for x, r in poset.ranks.items() if a <= r <= b}
    covers = frozenset((x, y) for x, y in poset.covers if x in ranks and y in ranks)
    return SkeletonSlice(GradedFacePoset(ranks, covers), a, b)


def bigraph_of(sl: SkeletonSlice) -> IncidenceBigraph:
    if sl.hi != sl.lo + 1:
        raise ShapeError(f"slice spans ranks {sl.lo}..{sl.hi}, need exactly two")
    p = sl.poset
    return IncidenceBigraph(p.of_rank(sl.lo), p.of_rank(sl.hi), p.covers, sl.lo)


def layers_of(poset: GradedFacePoset) -> list[IncidenceBigraph]:
    """All consecutive-rank layers, bottom first."""
    lo = min(poset.ranks.values(), default=0)
    return [_layer(poset, r) for r in range(lo, poset.max_rank)]


def _layer(poset: GradedFacePoset, r: int) -> IncidenceBigraph:
    low, high = poset.of_rank(r), poset.of_rank(r + 1)
    lows = set(low)
    return IncidenceBigraph(
        low, high, frozenset(c for c in poset.covers if c[0] in lows), r
    )


def assemble(layers: list[IncidenceBigraph]) -> GradedFacePoset:
    """Stack consecutive layers into one poset whose covers are their union."""
    if not layers:
        return GradedFacePoset.empty()
    ranks: dict[str, int] = {}
    covers: set = set()
    for i, layer in enumerate(layers):
        if i:
            prev = layers[i - 1]
            if layer.low_rank != prev.low_rank + 1:
                raise StitchingError(
                    f"layer {i} has lowRank {layer.low_rank}, expected {prev.low_rank + 1}"
                )
            if set(layer.low) != set(prev.high):
                missing = sorted(set(prev.high) ^ set(layer.low))
                raise StitchingError(
                    f"layer {i} low faces differ from layer {i - 1} high faces",
                    {"mismatched_ids": missing[:20]},
                )
        for x in layer.low:
            ranks[x] = layer.low_rank
        for x in layer.high:
            if x in ranks and ranks[x] != layer.low_rank + 1:
                raise StitchingError(f"id {x!r} appears at two ranks")
            ranks[x] = layer.low_rank + 1
        covers |= layer.incident
    return GradedFacePoset(ranks, frozenset(covers))


def dumps(obj) -> str:
    """Byte-deterministic JSON for any object with ``to_json``."""
    data = obj.to_json() if hasattr(obj, "to_json") else obj
    return json.dumps(data, sort_keys=True, indent=1) + "\n"
