"""Optimal vertex subsets on cacti by dynamic programming over the block tree.

Every solver follows the same scheme.  The cactus hangs from the root
vertex; each block is *anchored* at its entry vertex and its remaining
vertices own the subtrees below them.  Blocks are folded leaf-to-root: a
vertex table maps the vertex's boundary state to the best cost of its
subtree, a block table maps the anchor's state to the best cost of the
block's other vertices (solved as a chain around the cycle).  Back-pointers
are kept so one optimal witness is rebuilt top-down.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from functools import lru_cache
from typing import Callable, Hashable, Sequence

from .decomposition import Block, BlockCutTree, processing_order
from .graph import Graph
from .results import TwoPartition, VertexSet

INF = math.inf

# A vertex table is (costs, choices): costs[s] is the best subtree cost with
# the vertex in boundary state s; choices[s] = (in_set, keys) names the
# block-table key picked for each block anchored at the vertex.
VertexTable = tuple[list, list]
# A block table maps an anchor-side key to (cost, states of vertices[1:]).
BlockTable = dict


def _require_cactus_tree(g: Graph, t: BlockCutTree) -> None:
    if t.n != g.n:
        raise ValueError("block-cut tree does not belong to this graph")


def _fold(
    g: Graph,
    t: BlockCutTree,
    leaf: Callable[[int], VertexTable],
    combine: Callable[[int, list[BlockTable]], VertexTable],
    solve_block: Callable[[Block, list[VertexTable]], BlockTable],
    root_states: Sequence[int],
) -> tuple[object, set[int]]:
    """Run the leaf-to-root fold and rebuild the chosen vertex set."""
    _require_cactus_tree(g, t)
    vt: list = [None] * g.n
    bt: list = [None] * len(t.nodes)

    def table(v: int) -> VertexTable:
        if vt[v] is None:
            blocks = t.anchored[v]
            vt[v] = combine(v, [bt[b] for b in blocks]) if blocks else leaf(v)
        return vt[v]

    for b in processing_order(t):
        block = t.nodes[b]
        bt[b] = solve_block(block, [table(x) for x in block.vertices[1:]])
    r = t.root_vertex
    costs, _ = table(r)
    best_state = min(root_states, key=lambda s: costs[s])
    best = costs[best_state]
    if best == INF:
        raise AssertionError("no feasible solution found")

    chosen: set[int] = set()
    stack = [(r, best_state)]
    while stack:
        v, s = stack.pop()
        in_set, keys = vt[v][1][s]
        if in_set:
            chosen.add(v)
        for b, key in zip(t.anchored[v], keys):
            _, states = bt[b][key]
            for x, sx in zip(t.nodes[b].vertices[1:], states):
                stack.append((x, sx))
    return best, chosen


def _chain(
    pos_costs: list[list],
    start: Hashable,
    step: Callable[[Hashable, int, int], Hashable | None],
    finish: Callable[[Hashable], Sequence[Hashable]],
) -> BlockTable:
    """Min-cost assignment of states to a sequence of positions.

    ``step(q, i, s)`` returns the successor of chain state ``q`` after giving
    position ``i`` state ``s`` (``None`` if forbidden); ``finish(q)`` lists the
    block keys a final chain state qualifies for.
    """
    layer: dict = {start: (0, None)}
    history = []
    for i, costs in enumerate(pos_costs):
        nxt: dict = {}
        for q, (c, _) in layer.items():
            for s, cs in enumerate(costs):
                if cs == INF:
                    continue
                q2 = step(q, i, s)
                if q2 is None:
                    continue
                total = c + cs
                old = nxt.get(q2)
                if old is None or total < old[0]:
                    nxt[q2] = (total, (q, s))
        history.append(nxt)
        layer = nxt
    best: dict = {}
    for q, (c, _) in layer.items():
        for key in finish(q):
            if key not in best or c < best[key][0]:
                best[key] = (c, q)
    out: BlockTable = {}
    for key, (c, q) in best.items():
        states = []
        for i in range(len(pos_costs) - 1, -1, -1):
            q, s = history[i][q][1]
            states.append(s)
        out[key] = (c, tuple(reversed(states)))
    return out


def _sum_keys(tables: list[BlockTable], key) -> tuple:
    total = 0
    for tb in tables:
        entry = tb.get(key)
        if entry is None:
            return INF
        total += entry[0]
    return total


# ------------------------------------------------------------ dominating set

_I, _D, _F = 0, 1, 2  # in the set / dominated from below / still undominated


def min_dominating_set(g: Graph, t: BlockCutTree) -> VertexSet:
    """Minimum-cardinality dominating set."""

    def leaf(v: int) -> VertexTable:
        return [1, INF, 0], [(True, ()), None, (False, ())]

    def combine(v: int, tables: list[BlockTable]) -> VertexTable:
        k_in = tuple("I" for _ in tables)
        cost_in = 1 + _sum_keys(tables, "I")
        k_free = tuple("N" for _ in tables)
        cost_free = _sum_keys(tables, "N")
        cost_dom, k_dom = INF, None
        for j, tb in enumerate(tables):
            if "D" in tb and cost_free < INF:
                c = cost_free - tb["N"][0] + tb["D"][0]
                if c < cost_dom:
                    cost_dom = c
                    k_dom = k_free[:j] + ("D",) + k_free[j + 1:]
        return (
            [cost_in, cost_dom, cost_free],
            [(True, k_in), (False, k_dom) if k_dom else None, (False, k_free)],
        )

    def solve_block(block: Block, pos: list[VertexTable]) -> BlockTable:
        costs = [p[0] for p in pos]
        last = len(costs) - 1
        out: BlockTable = {}
        for anchor_in in (True, False):
            # chain state: (previous is in set, previous still needs a dominator, first is in set)
            def step(q, i, s):
                prev_in, pending, first_in = q
                if pending and s != _I:
                    return None
                if i == last and s == _F and not prev_in and not anchor_in:
                    return None
                return (s == _I, s == _F and not prev_in, first_in if i else s == _I)

            def finish(q):
                _, _, first_in = q
                if anchor_in:
                    return ["I"]
                last_in = q[0]
                return ["N", "D"] if first_in or last_in else ["N"]

            out.update(_chain(costs, (anchor_in, False, False), step, finish))
        return out

    best, chosen = _fold(g, t, leaf, combine, solve_block, (_I, _D))
    return VertexSet(frozenset(chosen), best)


# ------------------------------------------------------------ independent set


def _max_weight_independent(g: Graph, t: BlockCutTree, weights: Sequence) -> tuple[object, set[int]]:
    # minimise negated weight; states: 0 = in the set, 1 = out
    def leaf(v: int) -> VertexTable:
        return [-weights[v], 0], [(True, ()), (False, ())]

    def combine(v: int, tables: list[BlockTable]) -> VertexTable:
        return (
            [-weights[v] + _sum_keys(tables, 0), _sum_keys(tables, 1)],
            [(True, (0,) * len(tables)), (False, (1,) * len(tables))],
        )

    def solve_block(block: Block, pos: list[VertexTable]) -> BlockTable:
        costs = [p[0] for p in pos]
        last = len(costs) - 1
        out: BlockTable = {}
        for anchor in (0, 1):
            def step(q, i, s):
                if q == 0 and s == 0:
                    return None
                if i == last and s == 0 and anchor == 0:
                    return None
                return s

            out.update(_chain(costs, anchor, step, lambda q, a=anchor: [a]))
        return out

    best, chosen = _fold(g, t, leaf, combine, solve_block, (0, 1))
    return -best, chosen


def max_independent_set(g: Graph, t: BlockCutTree) -> VertexSet:
    """Maximum-cardinality independent set."""
    best, chosen = _max_weight_independent(g, t, (1,) * g.n)
    return VertexSet(frozenset(chosen), best)


# ------------------------------------------------------------ cycle hitting sets


def _min_cycle_hitting(g: Graph, t: BlockCutTree, weights: Sequence, odd_only: bool) -> tuple[object, set[int]]:
    """Lightest vertex set meeting every (odd) cycle block.

    Cycles of a cactus are exactly its cycle blocks, so this is a minimum
    feedback vertex set, or with ``odd_only`` a minimum odd cycle transversal.
    """
    # states: 0 = removed, 1 = kept
    def leaf(v: int) -> VertexTable:
        return [weights[v], 0], [(True, ()), (False, ())]

    def combine(v: int, tables: list[BlockTable]) -> VertexTable:
        return (
            [weights[v] + _sum_keys(tables, 0), _sum_keys(tables, 1)],
            [(True, (0,) * len(tables)), (False, (1,) * len(tables))],
        )

    def solve_block(block: Block, pos: list[VertexTable]) -> BlockTable:
        costs = [p[0] for p in pos]
        must_hit = block.kind == "cycle" and (not odd_only or block.size % 2 == 1)
        out: BlockTable = {}
        for anchor in (0, 1):
            def step(q, i, s):
                return q or s == 0

            def finish(q, a=anchor):
                return [a] if q or not must_hit else []

            out.update(_chain(costs, anchor == 0, step, finish))
        return out

    return _fold(g, t, leaf, combine, solve_block, (0, 1))


def min_weight_fvs(g: Graph, t: BlockCutTree) -> VertexSet:
    """Minimum-weight feedback vertex set."""
    best, chosen = _min_cycle_hitting(g, t, g.vertex_weights, odd_only=False)
    return VertexSet(frozenset(chosen), best)


def _two_colour_rest(g: Graph, removed: set[int]) -> tuple[frozenset[int], frozenset[int]]:
    colour = [-1] * g.n
    for s in range(g.n):
        if s in removed or colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if v in removed:
                    continue
                if colour[v] < 0:
                    colour[v] = 1 - colour[u]
                    queue.append(v)
                elif colour[v] == colour[u]:
                    raise AssertionError("remainder is not bipartite")
    s1 = frozenset(v for v in range(g.n) if colour[v] == 0)
    s2 = frozenset(v for v in range(g.n) if colour[v] == 1)
    return s1, s2


def max_weight_2_colorable(g: Graph, t: BlockCutTree) -> TwoPartition:
    """Heaviest vertex set inducing a bipartite subgraph, split into its two colour classes."""
    w = g.vertex_weights
    if any(x < 0 for x in w):
        raise ValueError("vertex weights must be non-negative")
    lost, removed = _min_cycle_hitting(g, t, w, odd_only=True)
    s1, s2 = _two_colour_rest(g, removed)
    return TwoPartition(s1, s2, sum(w) - lost)


def max_2_independent_set(g: Graph, t: BlockCutTree) -> TwoPartition:
    """Two disjoint independent sets of maximum total size."""
    lost, removed = _min_cycle_hitting(g, t, (1,) * g.n, odd_only=True)
    s1, s2 = _two_colour_rest(g, removed)
    return TwoPartition(s1, s2, g.n - lost)


# ------------------------------------------------------------ 2-neighbourhood cover
#
# Boundary levels of a vertex v with respect to the set C restricted to its
# subtree (all hop distances):
#   3  v is in C
#   2  some neighbour of v below it is in C
#   1  every subtree edge is already covered
#   0  some subtree edge still needs a member of C adjacent to v from above
# Higher levels promise strictly more, so tables are kept monotone.
# A block is solved for the anchor's outside strength sigma: 2 if the anchor
# is in C, 1 if a neighbour of the anchor outside the block is, else 0.  Its
# key (sigma, nbr) records whether a block neighbour of the anchor is in C.

_LEVEL_STRENGTH = (0, 0, 1, 2)
SMALL_RING = 6  # rings up to this length use precomputed feasible patterns


def _ring_feasible(levels: Sequence[int], k: int) -> bool:
    """Direct check of the covering constraints on a ring of length k (k=2: single edge).

    ``levels[0]`` is the anchor, encoded as its strength level.
    """
    strength = [_LEVEL_STRENGTH[x] for x in levels]

    def cd(i: int, j: int) -> int:
        d = abs(i - j)
        return min(d, k - d)

    edges = [(0, 1)] if k == 2 else [(i, (i + 1) % k) for i in range(k)]
    for a, b in edges:
        if not any(
            strength[j] and (2 - strength[j]) + max(cd(j, a), cd(j, b)) <= 2 for j in range(k)
        ):
            return False
    for i in range(1, k):
        if levels[i] == 0 and not any(cd(i, j) == 1 and strength[j] == 2 for j in range(k)):
            return False
    return True


_ANCHOR_LEVEL = {2: 3, 1: 2, 0: 1}


@lru_cache(maxsize=None)
def _ring_patterns(k: int) -> dict:
    """Minimal feasible level tuples for vertices[1:] per block key."""
    out: dict = {}
    for sigma in (2, 1, 0):
        feasible = [
            combo
            for combo in itertools.product(range(4), repeat=k - 1)
            if _ring_feasible((_ANCHOR_LEVEL[sigma],) + combo, k)
        ]
        for nbr in (True, False):
            cands = [c for c in feasible if not nbr or c[0] == 3 or c[-1] == 3]
            minimal = [
                c for c in cands
                if not any(d != c and all(x <= y for x, y in zip(d, c)) for d in cands)
            ]
            out[(sigma, nbr)] = minimal
    return out


def _cover_block_small(k: int, costs: list[list]) -> BlockTable:
    out: BlockTable = {}
    for key, patterns in _ring_patterns(k).items():
        best, arg = INF, None
        for pat in patterns:
            c = 0
            for cs, lv in zip(costs, pat):
                c += cs[lv]
            if c < best:
                best, arg = c, pat
        if arg is not None:
            out[key] = (best, arg)
    return out


def _cover_block_chain(k: int, costs: list[list]) -> BlockTable:
    """Rings of length 4 or >= 6: every edge needs an endpoint within distance 1 of C.

    On 3- and 5-rings a member opposite an edge can cover it, which this
    chain does not model.
    """
    last = k - 1
    out: BlockTable = {}
    for sigma in (2, 1, 0):
        anchor_in = sigma == 2

        # state: (first in C, near(1) or None, prev in C, near(prev) or None, level of current)
        def step(q, i, s):
            if i == 0:
                return (s == 3, None, anchor_in, None, s)
            first_in, near1, pc, pn, cur = q
            cur_in = cur == 3
            nxt_in = s == 3
            near_cur = cur >= 2 or pc or nxt_in
            if cur == 0 and not (pc or nxt_in):
                return None
            if pn is not None and not (pn or near_cur):
                return None
            if i == 1:
                near1 = near_cur
            return (first_in, near1, cur_in, near_cur, s)

        def finish(q, sigma=sigma, anchor_in=anchor_in):
            first_in, near1, pc, pn, cur = q
            cur_in = cur == 3
            near_last = cur >= 2 or pc or anchor_in
            if cur == 0 and not (pc or anchor_in):
                return []
            if not (pn or near_last):
                return []
            near0 = sigma >= 1 or first_in or cur_in
            if not (near0 or near_last) or not (near0 or near1):
                return []
            keys = [(sigma, False)]
            if first_in or cur_in:
                keys.append((sigma, True))
            return keys

        out.update(_chain(costs, None, step, finish))
    return out


def min_2nc_set(g: Graph, t: BlockCutTree) -> VertexSet:
    """Minimum 2-neighbourhood cover: every edge has a member within 2 hops of both ends.

    Edge weights are ignored; distances are hop counts.
    """

    def leaf(v: int) -> VertexTable:
        return [0, 0, 1, 1], [(False, ()), (False, ()), (True, ()), (True, ())]

    def combine(v: int, tables: list[BlockTable]) -> VertexTable:
        nb = len(tables)

        def best_of(sigma: int) -> tuple[object, tuple]:
            total, keys = 0, []
            for tb in tables:
                opts = [(tb[(sigma, nbr)][0], (sigma, nbr)) for nbr in (False, True) if (sigma, nbr) in tb]
                c, key = min(opts)
                total += c
                keys.append(key)
            return total, tuple(keys)

        raw = [INF] * 4
        choice: list = [None] * 4
        c, keys = best_of(2)
        raw[3], choice[3] = 1 + c, (True, keys)
        c, keys = best_of(0)
        raw[1], choice[1] = c, (False, keys)
        c, keys = best_of(1)
        raw[0], choice[0] = c, (False, keys)
        # level 2: one block must supply a neighbour in C
        base, base_keys = c, keys
        for j, tb in enumerate(tables):
            if (1, True) in tb:
                cj = base - tb[base_keys[j]][0] + tb[(1, True)][0]
                if cj < raw[2]:
                    raw[2] = cj
                    choice[2] = (False, base_keys[:j] + ((1, True),) + base_keys[j + 1:])
        assert nb > 0
        costs = list(raw)
        for lv in (2, 1, 0):
            if costs[lv + 1] < costs[lv]:
                costs[lv] = costs[lv + 1]
                choice[lv] = choice[lv + 1]
        return costs, choice

    def solve_block(block: Block, pos: list[VertexTable]) -> BlockTable:
        costs = [p[0] for p in pos]
        k = block.size
        if k <= SMALL_RING:
            return _cover_block_small(k, costs)
        return _cover_block_chain(k, costs)

    if g.m == 0:
        return VertexSet(frozenset(), 0)
    best, chosen = _fold(g, t, leaf, combine, solve_block, (1,))
    return VertexSet(frozenset(chosen), best)
