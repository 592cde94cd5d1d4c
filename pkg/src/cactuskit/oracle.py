"""Brute-force reference solvers.

Nothing here imports the fast paths (decomposition, distances, selection,
labelling); only the :class:`Graph` type and plain graph traversals are
shared.  Every solver enforces a hard size cap.
"""

from __future__ import annotations

import heapq
import itertools
from collections import deque
from fractions import Fraction
from typing import Callable, Iterator, Literal

from .graph import Edge, Graph, biconnected_components, edge_key
from .results import DistanceMap, LongestMap, TwoPartition, VertexSet


class OracleCapExceeded(ValueError):
    pass


def _cap(value: int, limit: int, what: str) -> None:
    if value > limit:
        raise OracleCapExceeded(f"{what} = {value} exceeds oracle cap {limit}")


# ----------------------------------------------------------------- distances


def oracle_sssp(g: Graph, x: int) -> DistanceMap:
    """Dijkstra with a binary heap."""
    dist: dict[int, object] = {x: 0}
    pred: dict[int, int] = {}
    heap = [(0, x)]
    done: set[int] = set()
    while heap:
        d, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        for v in g.adj[u]:
            nd = d + g.weight(u, v)
            if v not in dist or nd < dist[v]:
                dist[v] = nd
                pred[v] = u
                heapq.heappush(heap, (nd, v))
    return DistanceMap(x, [dist[v] for v in range(g.n)], [pred.get(v) for v in range(g.n)])


def hop_distances(g: Graph, x: int) -> list[int]:
    dist = [-1] * g.n
    dist[x] = 0
    queue = deque([x])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def oracle_longest(g: Graph, x: int, cap: int = 12) -> LongestMap:
    """Longest simple path lengths from ``x`` by exhaustive path enumeration."""
    _cap(g.n, cap, "n")
    best: list = [None] * g.n
    best[x] = 0
    on_path = [False] * g.n
    on_path[x] = True

    def walk(u: int, length) -> None:
        for v in g.adj[u]:
            if on_path[v]:
                continue
            total = length + g.weight(u, v)
            if best[v] is None or total > best[v]:
                best[v] = total
            on_path[v] = True
            walk(v, total)
            on_path[v] = False

    walk(x, 0)
    return LongestMap(x, best)


# ----------------------------------------------------------------- subsets


def dominates(g: Graph, members) -> bool:
    s = set(members)
    return all(v in s or any(u in s for u in g.adj[v]) for v in range(g.n))


def covers_edges_2(g: Graph, members) -> bool:
    """Every edge has a member within hop distance 2 of both endpoints."""
    balls = []
    for z in members:
        d = hop_distances(g, z)
        balls.append(d)
    for u, v in g.edges:
        if not any(0 <= d[u] <= 2 and 0 <= d[v] <= 2 for d in balls):
            return False
    return True


def _remainder(g: Graph, removed) -> tuple[list[int], list[Edge]]:
    s = set(removed)
    keep = [v for v in range(g.n) if v not in s]
    edges = [(u, v) for u, v in g.edges if u not in s and v not in s]
    return keep, edges


def is_acyclic_remainder(g: Graph, removed) -> bool:
    keep, edges = _remainder(g, removed)
    parent = {v: v for v in keep}

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def two_colouring(vertices, edges) -> dict[int, int] | None:
    """Proper 2-colouring of the given subgraph, or ``None`` if it has an odd cycle."""
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    colour: dict[int, int] = {}
    for s in sorted(adj):
        if s in colour:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in colour:
                    colour[v] = 1 - colour[u]
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return None
    return colour


def is_bipartite_remainder(g: Graph, removed) -> bool:
    keep, edges = _remainder(g, removed)
    return two_colouring(keep, edges) is not None


def is_independent(g: Graph, members) -> bool:
    s = set(members)
    return not any(u in s and v in s for u, v in g.edges)


PREDICATES: dict[str, Callable[[Graph, object], bool]] = {
    "dominate": dominates,
    "cover2": covers_edges_2,
    "fvs": is_acyclic_remainder,
    "oct": is_bipartite_remainder,
}


def oracle_min_subset(
    g: Graph,
    predicate: str | Callable[[Graph, object], bool],
    weighted: bool = False,
) -> VertexSet:
    """Smallest (or lightest) vertex subset satisfying ``predicate``.

    Candidates are scanned in increasing size (or weight), then
    lexicographically, so the first hit is the lexicographically smallest
    optimum.
    """
    pred = PREDICATES[predicate] if isinstance(predicate, str) else predicate
    if not weighted:
        _cap(g.n, 18, "n")
        for size in range(g.n + 1):
            for combo in itertools.combinations(range(g.n), size):
                if pred(g, combo):
                    return VertexSet(frozenset(combo), size)
        raise ValueError("no subset satisfies the predicate")
    _cap(g.n, 14, "n")
    w = g.vertex_weights
    subsets = []
    for size in range(g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            subsets.append((sum(w[v] for v in combo), combo))
    subsets.sort()
    for total, combo in subsets:
        if pred(g, combo):
            return VertexSet(frozenset(combo), total)
    raise ValueError("no subset satisfies the predicate")


def oracle_max_independent(g: Graph, k: Literal[1, 2] = 1, weighted: bool = False):
    """Maximum independent set (k=1) or maximum 2-independent set (k=2).

    For k=2 every vertex subset is tested for being a union of two disjoint
    independent sets, i.e. for inducing a bipartite subgraph; the best one is
    split by its 2-colouring.
    """
    w = g.vertex_weights if weighted else (1,) * g.n
    if k == 1:
        _cap(g.n, 18, "n")
        best: tuple | None = None
        for size in range(g.n, -1, -1):
            if best is not None and not weighted:
                break
            for combo in itertools.combinations(range(g.n), size):
                if is_independent(g, combo):
                    val = sum(w[v] for v in combo)
                    if best is None or val > best[0]:
                        best = (val, combo)
                    if not weighted:
                        break
        return VertexSet(frozenset(best[1]), best[0])
    if k != 2:
        raise ValueError("k must be 1 or 2")
    _cap(g.n, 16 if not weighted else 14, "n")
    # best-first over all vertex subsets; the first bipartite one is optimal
    masks = sorted(range(1 << g.n), key=lambda mask: (-sum(w[v] for v in range(g.n) if mask >> v & 1), mask))
    best2: tuple | None = None
    for mask in masks:
        removed = [v for v in range(g.n) if not mask >> v & 1]
        keep, edges = _remainder(g, removed)
        colour = two_colouring(keep, edges)
        if colour is not None:
            best2 = (sum(w[v] for v in keep), colour)
            break
    val, colour = best2
    s1 = frozenset(v for v, c in colour.items() if c == 0)
    s2 = frozenset(v for v, c in colour.items() if c == 1)
    return TwoPartition(s1, s2, val)


# ----------------------------------------------------------------- labelling


def distance_two_pairs(g: Graph) -> tuple[list[Edge], list[Edge]]:
    """Vertex pairs at hop distance exactly 1 and exactly 2."""
    near, far = [], []
    for u in range(g.n):
        d = hop_distances(g, u)
        for v in range(u + 1, g.n):
            if d[v] == 1:
                near.append((u, v))
            elif d[v] == 2:
                far.append((u, v))
    return near, far


def _constraint_system(g: Graph, scheme: str):
    """Variables and pairwise minimum separations for a labelling scheme."""
    if scheme in ("l21", "l01"):
        near, far = distance_two_pairs(g)
        seps: list[tuple[int, int, int]] = [(u, v, 1) for u, v in far]
        if scheme == "l21":
            seps += [(u, v, 2) for u, v in near]
        return g.n, seps, list(range(g.n))
    if scheme == "t21":
        eid = {e: g.n + i for i, e in enumerate(g.edges)}
        seps = []
        for u, v in g.edges:
            seps.append((u, v, 1))
            seps.append((u, eid[(u, v)], 2))
            seps.append((v, eid[(u, v)], 2))
        for x in range(g.n):
            inc = [eid[edge_key(x, y)] for y in g.adj[x]]
            for a, b in itertools.combinations(inc, 2):
                seps.append((a, b, 1))
        return g.n + g.m, seps, list(range(g.n)) + list(eid.values())
    raise ValueError(f"unknown scheme {scheme!r}")


def _search_labelling(count: int, seps, span: int) -> list[int] | None:
    nbrs: list[list[tuple[int, int]]] = [[] for _ in range(count)]
    for a, b, s in seps:
        nbrs[a].append((b, s))
        nbrs[b].append((a, s))
    # most constrained first, then breadth-first so neighbours stay close
    start = max(range(count), key=lambda v: (sum(s for _, s in nbrs[v]), -v)) if count else 0
    order, seen = [], [False] * count
    for s0 in [start] + list(range(count)):
        if seen[s0]:
            continue
        seen[s0] = True
        queue = deque([s0])
        while queue:
            u = queue.popleft()
            order.append(u)
            for v, _ in sorted(nbrs[u], key=lambda p: -len(nbrs[p[0]])):
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
    label = [-1] * count

    def place(i: int) -> bool:
        if i == count:
            return True
        v = order[i]
        for c in range(span + 1):
            if i == 0 and c > span // 2:
                break  # mirror symmetry c -> span - c
            if all(label[u] < 0 or abs(label[u] - c) >= s for u, s in nbrs[v]):
                label[v] = c
                if place(i + 1):
                    return True
        label[v] = -1
        return False

    return list(label) if place(0) else None


def oracle_labelling(g: Graph, scheme: str, cap: int = 10) -> tuple[int, list[int]]:
    """Exact minimum span and one optimal labelling (vertices, then edges for t21)."""
    _cap(g.n, cap, "n")
    count, seps, _ = _constraint_system(g, scheme)
    span = 0
    while True:
        found = _search_labelling(count, seps, span)
        if found is not None:
            return span, found
        span += 1


def oracle_span(g: Graph, scheme: str, cap: int = 10) -> int:
    return oracle_labelling(g, scheme, cap)[0]


# ----------------------------------------------------------------- spanning trees


def cycle_edge_sets(g: Graph) -> list[list[Edge]]:
    comps, _ = biconnected_components(g)
    return [sorted(edge_key(*e) for e in c) for c in comps if len(c) > 1]


def enumerate_spanning_trees(g: Graph, cap: int = 10**5) -> Iterator[tuple[Edge, ...]]:
    """Every spanning tree of a cactus as the tuple of deleted edges (one per cycle)."""
    cycles = cycle_edge_sets(g)
    total = 1
    for c in cycles:
        total *= len(c)
    _cap(total, cap, "spanning tree count")
    return itertools.product(*cycles)


def count_spanning_trees(g: Graph) -> int:
    """Kirchhoff's matrix-tree theorem with exact rational elimination."""
    n = g.n
    if n <= 1:
        return 1
    lap = [[Fraction(0)] * n for _ in range(n)]
    for u, v in g.edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    m = [row[1:] for row in lap[1:]]
    size = n - 1
    det = Fraction(1)
    for c in range(size):
        pivot = next((r for r in range(c, size) if m[r][c] != 0), None)
        if pivot is None:
            return 0
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, size):
            f = m[r][c] / m[c][c]
            if f:
                for j in range(c, size):
                    m[r][j] -= f * m[c][j]
    return int(det)


def _tree_distances(n: int, adj: list[list[int]], weight: Callable[[int, int], object], root: int) -> list:
    dist: list = [None] * n
    dist[root] = 0
    stack = [root]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if dist[v] is None:
                dist[v] = dist[u] + weight(u, v)
                stack.append(v)
    if any(d is None for d in dist):
        raise ValueError("edge set does not span the graph")
    return dist


def _tree_adj(n: int, edges) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def tree_height(n: int, edges, weight: Callable[[int, int], object], root: int) -> object:
    return max(_tree_distances(n, _tree_adj(n, edges), weight, root))


def oracle_spanning_heights(g: Graph) -> tuple[object, object]:
    """(max over trees and roots, min over trees and roots) of rooted tree height.

    Per tree, every vertex's height is its distance to the farther end of a
    longest path, so three traversals give all of them.
    """
    hi = lo = None
    for deleted in enumerate_spanning_trees(g):
        gone = set(deleted)
        adj = _tree_adj(g.n, [e for e in g.edges if e not in gone])
        d0 = _tree_distances(g.n, adj, g.weight, 0)
        a = max(range(g.n), key=d0.__getitem__)
        da = _tree_distances(g.n, adj, g.weight, a)
        b = max(range(g.n), key=da.__getitem__)
        db = _tree_distances(g.n, adj, g.weight, b)
        heights = [max(x, y) for x, y in zip(da, db)]
        h_max, h_min = max(heights), min(heights)
        hi = h_max if hi is None or h_max > hi else hi
        lo = h_min if lo is None or h_min < lo else lo
    return hi, lo


def oracle_cycles(g: Graph, cap: int = 12) -> list[frozenset[Edge]]:
    """All simple cycles as edge sets, by exhaustive path search."""
    _cap(g.n, cap, "n")
    found: set[frozenset[Edge]] = set()
    for s in range(g.n):
        path = [s]
        on = {s}

        def walk(u: int) -> None:
            for v in g.adj[u]:
                if v == s and len(path) >= 3:
                    found.add(frozenset(edge_key(path[i], path[(i + 1) % len(path)]) for i in range(len(path))))
                elif v not in on and v > s:
                    on.add(v)
                    path.append(v)
                    walk(v)
                    path.pop()
                    on.discard(v)

        walk(s)
    return list(found)
