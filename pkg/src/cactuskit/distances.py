"""Shortest and longest simple paths, eccentricity/elongation, extremal spanning trees."""

from __future__ import annotations

from collections import deque
from typing import Callable

from .decomposition import Block, BlockCutTree, processing_order
from .graph import Edge, Graph, edge_key
from .results import DistanceMap, LongestMap, SpanningTreeResult


def ring_weights(g: Graph, block: Block) -> list:
    """Weights of the block's edges in its cyclic order (an edge block is a 2-ring of one edge)."""
    vs = block.vertices
    if block.kind == "edge":
        return [g.weight(vs[0], vs[1])]
    k = len(vs)
    return [g.weight(vs[i], vs[(i + 1) % k]) for i in range(k)]


class _Rings:
    """Per-block weight lists, computed once per (graph, tree)."""

    def __init__(self, g: Graph, t: BlockCutTree):
        self.weights = [ring_weights(g, b) for b in t.nodes]
        self.index = [{v: i for i, v in enumerate(b.vertices)} if b.kind == "cycle" else None for b in t.nodes]


def _check_source(g: Graph, x: int) -> None:
    if not 0 <= x < g.n:
        raise ValueError(f"source vertex {x} out of range 0..{g.n - 1}")


def _sweep(g: Graph, t: BlockCutTree, x: int, longest: bool, rings: _Rings | None = None):
    """Distances from ``x`` block by block, each block seeded at its entry from ``x``.

    Returns ``(dist, pred, settled_in)`` where ``settled_in[v]`` is the block
    in which ``v`` received its value (``-1`` for ``x``).
    """
    _check_source(g, x)
    n = g.n
    if rings is None:
        rings = _Rings(g, t)
    dist: list = [None] * n
    pred: list = [None] * n
    settled_in = [-1] * n
    dist[x] = 0
    seen = bytearray(len(t.nodes))
    vertex_blocks = t.vertex_blocks
    nodes = t.nodes
    queue = deque()
    for b in vertex_blocks[x]:
        seen[b] = 1
        queue.append((b, x))
    while queue:
        b, e = queue.popleft()
        block = nodes[b]
        vs = block.vertices
        ws = rings.weights[b]
        base = dist[e]
        if block.kind == "edge":
            other = vs[1] if vs[0] == e else vs[0]
            dist[other] = base + ws[0]
            pred[other] = e
            settled_in[other] = b
            new = (other,)
        else:
            k = len(vs)
            s = rings.index[b][e]
            total = sum(ws)
            new = []
            # clockwise prefix sums from e
            p = 0
            cw = [0] * k
            for j in range(1, k):
                p += ws[(s + j - 1) % k]
                cw[j] = p
            for j in range(1, k):
                v = vs[(s + j) % k]
                a = cw[j]
                c = total - a
                before = vs[(s + j - 1) % k]
                after = vs[(s + j + 1) % k]
                if a == c:
                    pick_cw = before < after
                elif longest:
                    pick_cw = a > c
                else:
                    pick_cw = a < c
                dist[v] = base + (a if pick_cw else c)
                pred[v] = before if pick_cw else after
                settled_in[v] = b
                new.append(v)
        for v in new:
            for c in vertex_blocks[v]:
                if not seen[c]:
                    seen[c] = 1
                    queue.append((c, v))
    return dist, pred, settled_in


def sssp(g: Graph, t: BlockCutTree, x: int) -> DistanceMap:
    """Single-source shortest paths on a weighted cactus in linear time."""
    dist, pred, _ = _sweep(g, t, x, longest=False)
    return DistanceMap(x, dist, pred)


def apsp(g: Graph, t: BlockCutTree) -> list[list]:
    """All-pairs distances as ``n`` independent single-source sweeps."""
    rings = _Rings(g, t)
    return [_sweep(g, t, x, False, rings)[0] for x in range(g.n)]


def longest_simple(g: Graph, t: BlockCutTree, x: int) -> LongestMap:
    """Longest simple path lengths from ``x``.

    The block sequence from ``x`` to any vertex is forced in a cactus; only the
    arc taken through each cycle is free, so each cycle contributes its
    longer arc.  ``predecessor`` gives the previous vertex on that route
    within its block, not a tree.
    """
    dist, pred, _ = _sweep(g, t, x, longest=True)
    return LongestMap(x, dist, pred)


# ---------------------------------------------------------------- rerooting


def _window_max(values: list, lo: Callable[[int], int], hi: Callable[[int], int], count: int) -> list:
    """For i in range(count): max(values[lo(i)..hi(i)]) with monotone bounds (None if empty)."""
    out = []
    dq: deque[int] = deque()
    nxt = 0
    for i in range(count):
        a, b = lo(i), hi(i)
        while nxt <= b:
            v = values[nxt]
            while dq and values[dq[-1]] <= v:
                dq.pop()
            dq.append(nxt)
            nxt += 1
        while dq and dq[0] < a:
            dq.popleft()
        out.append(values[dq[0]] if dq and a <= b else None)
    return out


def _ring_far(vals: list, ws: list, longest: bool) -> list:
    """For each ring position i: max over j != i of vals[j] + (shortest or longest arc i..j).

    Linear time via sliding-window maxima over the doubled ring.
    """
    k = len(vals)
    if k == 2:
        return [vals[1] + ws[0], vals[0] + ws[0]]
    total = sum(ws)
    pos = [0] * (2 * k)
    for j in range(1, 2 * k):
        pos[j] = pos[j - 1] + ws[(j - 1) % k]
    plus = [vals[j % k] + pos[j] for j in range(2 * k)]
    minus = [vals[j % k] - pos[j] for j in range(2 * k)]
    if longest:
        a = _window_max(plus, lambda i: i + 1, lambda i: i + k - 1, k)
        b = _window_max(minus, lambda i: i + 1, lambda i: i + k - 1, k)
        return [max(a[i] - pos[i], b[i] + pos[i] + total) for i in range(k)]
    # split[i]: last t in [i, i+k) with 2*(pos[t]-pos[i]) <= total
    split = []
    t = 0
    for i in range(k):
        t = max(t, i)
        while t + 1 < i + k and 2 * (pos[t + 1] - pos[i]) <= total:
            t += 1
        split.append(t)
    a = _window_max(plus, lambda i: i + 1, lambda i: split[i], k)
    b = _window_max(minus, lambda i: split[i] + 1, lambda i: i + k - 1, k)
    out = []
    for i in range(k):
        cands = []
        if a[i] is not None:
            cands.append(a[i] - pos[i])
        if b[i] is not None:
            cands.append(b[i] + pos[i] + total)
        out.append(max(cands))
    return out


def _arc_from_anchor(ws: list, longest: bool) -> list:
    k = len(ws) if len(ws) > 1 else 2
    if k == 2:
        return [0, ws[0]]
    total = sum(ws)
    out = [0]
    p = 0
    for j in range(1, k):
        p += ws[j - 1]
        out.append(max(p, total - p) if longest else min(p, total - p))
    return out


def _farthest_all(g: Graph, t: BlockCutTree, longest: bool) -> list:
    """Eccentricity (shortest) or elongation (longest) of every vertex."""
    n = g.n
    if t.root is None:
        return [0] * n
    rings = _Rings(g, t)
    down = [0] * n
    branch: list = [None] * len(t.nodes)
    order = processing_order(t)
    for b in order:
        block = t.nodes[b]
        arc = _arc_from_anchor(rings.weights[b], longest)
        best = max(arc[j] + down[v] for j, v in enumerate(block.vertices) if j > 0)
        branch[b] = best
        a = block.vertices[0]
        if best > down[a]:
            down[a] = best
    # two best branches per anchor, so "best excluding b" is O(1)
    top1: list = [(0, -1)] * n
    top2 = [0] * n
    for b in order:
        a = t.nodes[b].vertices[0]
        val = branch[b]
        if val > top1[a][0]:
            top2[a] = top1[a][0]
            top1[a] = (val, b)
        elif val > top2[a]:
            top2[a] = val
    up: list = [None] * n
    for b in reversed(order):
        block = t.nodes[b]
        a = block.vertices[0]
        base = top2[a] if top1[a][1] == b else top1[a][0]
        if up[a] is not None and up[a] > base:
            base = up[a]
        vals = [base] + [down[v] for v in block.vertices[1:]]
        far = _ring_far(vals, rings.weights[b], longest)
        for j, v in enumerate(block.vertices):
            if j > 0:
                up[v] = far[j]
    return [down[v] if up[v] is None else max(down[v], up[v]) for v in range(n)]


def eccentricities(g: Graph, t: BlockCutTree) -> list:
    return _farthest_all(g, t, longest=False)


def elongations(g: Graph, t: BlockCutTree) -> list:
    return _farthest_all(g, t, longest=True)


def _argbest(values: list, better: Callable) -> int:
    best = 0
    for v in range(1, len(values)):
        if better(values[v], values[best]):
            best = v
    return best


# ---------------------------------------------------------------- spanning trees


def _tree_height(g: Graph, deleted: set[Edge], root: int):
    dist = {root: 0}
    stack = [root]
    while stack:
        u = stack.pop()
        for v in g.adj[u]:
            if v not in dist and edge_key(u, v) not in deleted:
                dist[v] = dist[u] + g.weight(u, v)
                stack.append(v)
    return max(dist.values())


def min_height_spanning_tree(g: Graph, t: BlockCutTree) -> SpanningTreeResult:
    """Shortest-path tree from the center; its height is the radius."""
    ecc = eccentricities(g, t)
    center = _argbest(ecc, lambda a, b: a < b)
    _, pred, _ = _sweep(g, t, center, longest=False)
    kept = {edge_key(v, p) for v, p in enumerate(pred) if p is not None}
    deleted = tuple(sorted(e for e in g.edges if e not in kept))
    return SpanningTreeResult(deleted, ecc[center], center)


def max_height_spanning_tree(g: Graph, t: BlockCutTree) -> SpanningTreeResult:
    """Keep a longest simple path from the max-elongation vertex; cut one edge per other cycle."""
    el = elongations(g, t)
    root = _argbest(el, lambda a, b: a > b)
    ld, _, settled = _sweep(g, t, root, longest=True)
    far = _argbest(ld, lambda a, b: a > b)
    rings = _Rings(g, t)
    chosen: dict[int, Edge] = {}
    # walk the forced block sequence back from the far end
    v = far
    while v != root:
        b = settled[v]
        block = t.nodes[b]
        vs = block.vertices
        if block.kind == "edge":
            e = vs[0] if vs[1] == v else vs[1]
        else:
            e = _entry_towards(block, v, ld, settled, b)
            chosen[b] = _cut_on_short_arc(block, rings.weights[b], rings.index[b], e, v)
        v = e
    ecc_split = None
    for b, block in enumerate(t.nodes):
        if block.kind != "cycle" or b in chosen:
            continue
        if ecc_split is None:
            ecc_split = _sweep(g, t, root, longest=False)[1]
        # the shortest-path split from the root leaves exactly one edge of this cycle unused
        used = {edge_key(x, ecc_split[x]) for x in block.vertices if ecc_split[x] is not None}
        chosen[b] = next(e for e in block.edges() if e not in used)
    deleted = tuple(sorted(chosen.values()))
    return SpanningTreeResult(deleted, el[root], root)


def _entry_towards(block: Block, v: int, ld: list, settled: list, b: int) -> int:
    # the entry of b is the unique block vertex not settled inside b
    for x in block.vertices:
        if settled[x] != b:
            return x
    raise AssertionError("block without entry")


def _cut_on_short_arc(block: Block, ws: list, index: dict, e: int, v: int) -> Edge:
    vs = block.vertices
    k = len(vs)
    s = index[e]
    i = index[v]
    steps = (i - s) % k
    cw = sum(ws[(s + j) % k] for j in range(steps))
    total = sum(ws)
    before = vs[(i - 1) % k]
    after = vs[(i + 1) % k]
    if cw > total - cw or (cw == total - cw and before < after):
        # path runs clockwise into v; cut the counter-clockwise edge at v
        return edge_key(v, after)
    return edge_key(v, before)


def tree_height(g: Graph, deleted, root: int):
    """Weighted height of the spanning tree ``g - deleted`` rooted at ``root``."""
    return _tree_height(g, {edge_key(*e) for e in deleted}, root)
