"""Result containers shared by the fast solvers and the oracles."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graph import Edge


@dataclass(frozen=True)
class DistanceMap:
    source: int
    dist: Sequence
    predecessor: Sequence[int | None] = field(default=(), repr=False)

    def path_to(self, v: int) -> list[int]:
        path = [v]
        while path[-1] != self.source:
            path.append(self.predecessor[path[-1]])
        return path[::-1]


@dataclass(frozen=True)
class LongestMap:
    source: int
    ldist: Sequence
    predecessor: Sequence[int | None] = field(default=(), repr=False)


@dataclass(frozen=True)
class VertexSet:
    members: frozenset[int]
    objective: object

    def to_dict(self) -> dict:
        return {"members": sorted(self.members), "objective": _num(self.objective)}


@dataclass(frozen=True)
class TwoPartition:
    s1: frozenset[int]
    s2: frozenset[int]
    objective: object

    def __post_init__(self):
        if self.s1 & self.s2:
            raise ValueError("s1 and s2 must be disjoint")

    def to_dict(self) -> dict:
        return {"s1": sorted(self.s1), "s2": sorted(self.s2), "objective": _num(self.objective)}


@dataclass(frozen=True)
class SpanningTreeResult:
    deleted_edges: tuple[Edge, ...]
    height: object
    root: int

    def to_dict(self) -> dict:
        return {
            "deleted_edges": [list(e) for e in self.deleted_edges],
            "root": self.root,
            "height": _num(self.height),
        }


@dataclass(frozen=True)
class VertexLabelling:
    labels: tuple[int, ...]

    @property
    def span(self) -> int:
        return max(self.labels) - min(self.labels) if self.labels else 0

    def to_dict(self) -> dict:
        return {"labels": list(self.labels), "span": self.span}


@dataclass(frozen=True)
class TotalLabelling:
    vertex_labels: tuple[int, ...]
    edge_labels: dict[Edge, int]

    @property
    def span(self) -> int:
        values = list(self.vertex_labels) + list(self.edge_labels.values())
        return max(values) - min(values) if values else 0

    def to_dict(self) -> dict:
        return {
            "vertex_labels": list(self.vertex_labels),
            "edge_labels": [[u, v, c] for (u, v), c in sorted(self.edge_labels.items())],
            "span": self.span,
        }


def _num(x):
    from fractions import Fraction

    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    return x
