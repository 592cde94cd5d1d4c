"""Graph families and seeded corpora shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction

from cactuskit.generator import GenSpec, random_cactus
from cactuskit.graph import Graph


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(k: int, weights=None) -> Graph:
    edges = [(i, (i + 1) % k) for i in range(k)]
    if weights is not None:
        edges = [(u, v, w) for (u, v), w in zip(edges, weights)]
    return Graph(k, edges)


def star(d: int) -> Graph:
    return Graph(d + 1, [(0, i) for i in range(1, d + 1)])


def sun(k: int) -> Graph:
    """C_k with one pendant vertex on every cycle vertex (2k vertices)."""
    return Graph(2 * k, [(i, (i + 1) % k) for i in range(k)] + [(i, k + i) for i in range(k)])


def flower(lengths, pendants: int = 0, vertex_weights=None) -> Graph:
    """Cycles of the given lengths and some pendant edges, all sharing vertex 0."""
    edges = []
    n = 1
    for k in lengths:
        ring = [0] + list(range(n, n + k - 1))
        n += k - 1
        edges += [(ring[i], ring[(i + 1) % k]) for i in range(k)]
    for _ in range(pendants):
        edges.append((0, n))
        n += 1
    return Graph(n, edges, vertex_weights)


def cycle_of_triangles(k: int) -> Graph:
    """C_k with a triangle hanging at each of its vertices."""
    edges = [(i, (i + 1) % k) for i in range(k)]
    n = k
    for v in range(k):
        edges += [(v, n), (n, n + 1), (v, n + 1)]
        n += 2
    return Graph(n, edges)


def corpus(
    count: int,
    max_n: int,
    key: str,
    *,
    weighted_vertices: bool = False,
    weighted_edges: bool = False,
    max_len: int = 8,
    min_n: int = 1,
    max_cycles: int | None = None,
) -> list[Graph]:
    """``count`` seeded random cacti with ``min_n <= n <= max_n``."""
    rnd = random.Random(key)
    out = []
    while len(out) < count:
        spec = GenSpec(
            block_count=rnd.randint(1, max(1, max_n // 2)),
            cycle_fraction=Fraction(rnd.randint(0, 4), 4),
            min_len=3,
            max_len=rnd.randint(3, max_len),
            edge_weight=(1, rnd.randint(1, 9)) if weighted_edges else (1, 1),
            vertex_weight=(0, rnd.randint(1, 9)) if weighted_vertices else (1, 1),
            seed=rnd.getrandbits(64),
        )
        g = random_cactus(spec)
        if not min_n <= g.n <= max_n:
            continue
        if max_cycles is not None and g.m - g.n + 1 > max_cycles:
            continue
        out.append(g)
    return out
