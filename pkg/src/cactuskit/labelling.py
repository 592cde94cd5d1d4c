"""L(2,1), L(0,1) and (2,1)-total labellings: constructors and validators.

Constructors walk the block-cut tree from the root.  Each block's new
elements (its vertices other than the entry point, plus its edges for total
labellings) are labelled first-fit from a fixed palette.  When first-fit gets
stuck, the block's new elements are relabelled by exhaustive backtracking
with everything else frozen; if that fails too, every block hanging from the
same entry point is relabelled together.  Both repairs are counted in
:class:`LabelStats`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .decomposition import BlockCutTree
from .graph import Edge, Graph, edge_key, max_degree
from .results import TotalLabelling, VertexLabelling

SCHEMES = ("l21", "l01", "t21")


class LabellingDefect(RuntimeError):
    """No labelling found inside the guaranteed palette; this contradicts the span bound."""


@dataclass
class LabelStats:
    palette: int = 0
    block_repairs: int = 0
    fan_repairs: int = 0
    largest_repair: int = 0  # most elements relabelled by a single repair
    repaired_blocks: list[int] = field(default_factory=list)


def palette_bound(scheme: str, delta: int) -> int:
    """Largest label the constructor may use (the proven upper bound on the span)."""
    if scheme == "l21":
        return delta + 3
    if scheme == "l01":
        return delta
    if scheme == "t21":
        return delta + 2
    raise ValueError(f"unknown scheme {scheme!r}")


class _Problem:
    """Elements to label and the pairwise separations between them.

    Vertices are elements ``0..n-1``; for total labellings edge ``i`` of
    ``g.edges`` is element ``n + i``.
    """

    def __init__(self, g: Graph, scheme: str):
        self.g = g
        self.scheme = scheme
        self.total = scheme == "t21"
        self.edge_id = {e: g.n + i for i, e in enumerate(g.edges)} if self.total else {}
        self.size = g.n + (g.m if self.total else 0)
        self.adj_sets = [set(a) for a in g.adj]

    def neighbours(self, x: int) -> Iterable[tuple[int, int]]:
        """(other element, required separation) for every constraint on ``x``."""
        g = self.g
        if self.scheme == "t21":
            if x < g.n:
                for y in g.adj[x]:
                    yield y, 1
                    yield self.edge_id[edge_key(x, y)], 2
            else:
                u, v = g.edges[x - g.n]
                yield u, 2
                yield v, 2
                for a in (u, v):
                    for b in g.adj[a]:
                        other = self.edge_id[edge_key(a, b)]
                        if other != x:
                            yield other, 1
            return
        sep1 = 2 if self.scheme == "l21" else 0
        near = self.adj_sets[x]
        for y in g.adj[x]:
            if sep1:
                yield y, sep1
            for z in g.adj[y]:
                if z != x and z not in near:
                    yield z, 1


def _fits(prob: _Problem, labels: list, x: int, c: int) -> bool:
    for o, sep in prob.neighbours(x):
        lo = labels[o]
        if lo is not None and abs(c - lo) < sep:
            return False
    return True


def _first_fit(prob: _Problem, labels: list, elems: Sequence[int], top: int) -> bool:
    for x in elems:
        for c in range(top + 1):
            if _fits(prob, labels, x, c):
                labels[x] = c
                break
        else:
            return False
    return True


def _backtrack(prob: _Problem, labels: list, elems: Sequence[int], top: int) -> bool:
    """Exhaustive search over ``elems`` with all other labels frozen."""
    for x in elems:
        labels[x] = None
    stack = [0]
    while stack:
        i = len(stack) - 1
        if i == len(elems):
            return True
        x = elems[i]
        c = stack[-1]
        labels[x] = None
        while c <= top and not _fits(prob, labels, x, c):
            c += 1
        if c > top:
            stack.pop()
            if stack:
                stack[-1] += 1
            continue
        labels[x] = c
        stack[-1] = c
        stack.append(0)
    for x in elems:
        labels[x] = None
    return False


def _block_elements(prob: _Problem, t: BlockCutTree, b: int) -> list[int]:
    block = t.nodes[b]
    vs = block.vertices
    new = list(vs) if b == t.root else list(vs[1:])
    if not prob.total:
        return new
    out = [vs[0]] if b == t.root else []
    k = len(vs)
    for i in range(1, k):
        out.append(prob.edge_id[edge_key(vs[i - 1], vs[i])])
        out.append(vs[i])
    if block.kind == "cycle":
        out.append(prob.edge_id[edge_key(vs[-1], vs[0])])
    return out


def _construct(g: Graph, t: BlockCutTree, scheme: str, top: int | None = None) -> tuple[list, LabelStats]:
    prob = _Problem(g, scheme)
    if top is None:
        top = palette_bound(scheme, max_degree(g))
    stats = LabelStats(palette=top)
    labels: list = [None] * prob.size
    if t.root is None:  # single vertex
        labels[0] = 0
        return labels, stats
    elems_of: dict[int, list[int]] = {}
    for b in t.bfs_order:
        elems = _block_elements(prob, t, b)
        elems_of[b] = elems
        if _first_fit(prob, labels, elems, top):
            continue
        stats.block_repairs += 1
        stats.repaired_blocks.append(b)
        stats.largest_repair = max(stats.largest_repair, len(elems))
        if _backtrack(prob, labels, elems, top):
            continue
        # relabel the whole fan of blocks sharing this entry point
        anchor = t.nodes[b].vertices[0]
        fan = [c for c in t.anchored[anchor] if c in elems_of]
        scope = [x for c in fan for x in elems_of[c]]
        stats.fan_repairs += 1
        stats.largest_repair = max(stats.largest_repair, len(scope))
        if not _backtrack(prob, labels, scope, top):
            raise LabellingDefect(
                f"{scheme}: no labelling with labels 0..{top} around vertex {anchor}"
            )
    return labels, stats


def _check_cactus(g: Graph, t: BlockCutTree) -> None:
    if t.n != g.n:
        raise ValueError("block-cut tree does not belong to this graph")


def label_with_stats(g: Graph, t: BlockCutTree, scheme: str):
    """Run a constructor and also return its repair statistics."""
    _check_cactus(g, t)
    labels, stats = _construct(g, t, scheme)
    if scheme == "t21":
        edge_labels = {e: labels[g.n + i] for i, e in enumerate(g.edges)}
        return TotalLabelling(tuple(labels[: g.n]), edge_labels), stats
    return VertexLabelling(tuple(labels)), stats


def label_l21(g: Graph, t: BlockCutTree) -> VertexLabelling:
    return label_with_stats(g, t, "l21")[0]


def label_l01(g: Graph, t: BlockCutTree) -> VertexLabelling:
    return label_with_stats(g, t, "l01")[0]


def label_t21(g: Graph, t: BlockCutTree) -> TotalLabelling:
    return label_with_stats(g, t, "t21")[0]


# ---------------------------------------------------------------- validation


@dataclass(frozen=True)
class Violation:
    first: object   # vertex id or edge
    second: object
    rule: str       # e.g. "adjacent >= 2"
    difference: int

    def to_dict(self) -> dict:
        def enc(x):
            return list(x) if isinstance(x, tuple) else x

        return {"first": enc(self.first), "second": enc(self.second), "rule": self.rule, "difference": self.difference}


def _vertex_labels(g: Graph, labels) -> list[int]:
    if isinstance(labels, VertexLabelling):
        labels = labels.labels
    labels = list(labels)
    if len(labels) != g.n or any(x is None for x in labels):
        raise ValueError(f"labelling must assign a label to each of the {g.n} vertices")
    for x in labels:
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            raise ValueError(f"labels must be non-negative integers, got {x!r}")
    return labels


def _distance_two(g: Graph) -> list[Edge]:
    pairs = set()
    for u in range(g.n):
        near = set(g.adj[u])
        for y in g.adj[u]:
            for z in g.adj[y]:
                if z > u and z not in near:
                    pairs.add((u, z))
    return sorted(pairs)


def _check_pairs(out: list, pairs, lab: Callable, need: int, rule: str) -> None:
    for a, b in pairs:
        d = abs(lab(a) - lab(b))
        if d < need:
            out.append(Violation(a, b, rule, d))


def _validate_distance(g: Graph, labels, sep1: int, sep2: int) -> list[Violation]:
    lab = _vertex_labels(g, labels)
    out: list[Violation] = []
    if sep1:
        _check_pairs(out, g.edges, lab.__getitem__, sep1, f"adjacent >= {sep1}")
    _check_pairs(out, _distance_two(g), lab.__getitem__, sep2, f"distance two >= {sep2}")
    return out


def validate_l21(g: Graph, labels) -> list[Violation]:
    return _validate_distance(g, labels, 2, 1)


def validate_l01(g: Graph, labels) -> list[Violation]:
    return _validate_distance(g, labels, 0, 1)


def validate_t21(g: Graph, vertex_labels, edge_labels=None) -> list[Violation]:
    """Check a (2,1)-total labelling; accepts a TotalLabelling or two maps."""
    if isinstance(vertex_labels, TotalLabelling):
        vertex_labels, edge_labels = vertex_labels.vertex_labels, vertex_labels.edge_labels
    vl = _vertex_labels(g, vertex_labels)
    el = {edge_key(*e): c for e, c in (edge_labels or {}).items()}
    missing = [e for e in g.edges if e not in el]
    if missing:
        raise ValueError(f"edge {missing[0]} has no label")
    if len(el) != g.m:
        raise ValueError("edge labels given for edges not in the graph")
    for c in el.values():
        if not isinstance(c, int) or isinstance(c, bool) or c < 0:
            raise ValueError(f"labels must be non-negative integers, got {c!r}")
    out: list[Violation] = []
    _check_pairs(out, g.edges, vl.__getitem__, 1, "adjacent vertices distinct")
    for u in range(g.n):
        inc = sorted(edge_key(u, v) for v in g.adj[u])
        for i in range(len(inc)):
            for j in range(i + 1, len(inc)):
                d = abs(el[inc[i]] - el[inc[j]])
                if d < 1:
                    out.append(Violation(inc[i], inc[j], "adjacent edges distinct", d))
    for e in g.edges:
        for x in e:
            d = abs(vl[x] - el[e])
            if d < 2:
                out.append(Violation(x, e, "vertex and incident edge >= 2", d))
    return out
