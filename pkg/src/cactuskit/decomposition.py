"""Blocks, cut vertices and the rooted block-cut tree of a cactus."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Literal, Sequence

from .graph import Graph, NotCactusError, biconnected_components, edge_key

BlockKind = Literal["edge", "cycle"]


@dataclass(frozen=True)
class Block:
    id: int
    kind: BlockKind
    vertices: tuple[int, ...]
    cutvertices: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        if self.kind == "edge":
            return [edge_key(vs[0], vs[1])]
        return [edge_key(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def _cyclic_order(edges: list[tuple[int, int]], start: int) -> tuple[int, ...]:
    nbrs: dict[int, list[int]] = {}
    for u, v in edges:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    first = min(nbrs[start])
    order = [start, first]
    prev, cur = start, first
    while True:
        a, b = nbrs[cur]
        nxt = b if a == prev else a
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return tuple(order)


def _rotate(block: Block, start: int) -> Block:
    if block.kind == "edge":
        a, b = block.vertices
        vs = (a, b) if a == start else (b, a)
        return Block(block.id, block.kind, vs, block.cutvertices)
    vs = block.vertices
    k = len(vs)
    i = vs.index(start)
    left, right = vs[(i - 1) % k], vs[(i + 1) % k]
    if right < left:
        order = vs[i:] + vs[:i]
    else:
        order = tuple(vs[(i - j) % k] for j in range(k))
    return Block(block.id, block.kind, order, block.cutvertices)


def find_blocks(g: Graph) -> tuple[list[Block], frozenset[int]]:
    """Biconnected decomposition of a connected cactus.

    Block ids follow the DFS completion order.  Cycle blocks list their
    vertices in cyclic order starting at the lowest id, heading to its
    lower-id neighbour.
    """
    g.require_connected()
    components, cut = biconnected_components(g)
    blocks: list[Block] = []
    for comp in components:
        verts = {x for e in comp for x in e}
        if len(comp) == 1:
            u, v = comp[0]
            vs = (min(u, v), max(u, v))
            kind: BlockKind = "edge"
        elif len(comp) == len(verts):
            vs = _cyclic_order(comp, min(verts))
            kind = "cycle"
        else:
            raise NotCactusError(edge_key(*comp[0]))
        blocks.append(Block(len(blocks), kind, vs, frozenset(v for v in vs if v in cut)))
    return blocks, frozenset(cut)


@dataclass(frozen=True)
class BlockCutTree:
    """Rooted tree of blocks.

    ``parent[b]`` and ``entry_point[b]`` are ``None`` for the root.  Every
    block has an *anchor*: its entry point, or the first (lowest-id) vertex of
    the root block.  ``anchored[v]`` lists the blocks anchored at ``v``; block
    vertex sequences start at the anchor.
    """

    n: int
    nodes: tuple[Block, ...]
    root: int | None
    parent: tuple[int | None, ...]
    entry_point: tuple[int | None, ...]
    level: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]
    cutvertices: frozenset[int]
    vertex_blocks: tuple[tuple[int, ...], ...]
    anchored: tuple[tuple[int, ...], ...]
    bfs_order: tuple[int, ...]

    @property
    def root_vertex(self) -> int:
        """Vertex at which the whole cactus hangs (0 for the one-vertex graph)."""
        if self.root is None:
            return 0
        return self.nodes[self.root].vertices[0]

    def anchor(self, b: int) -> int:
        return self.nodes[b].vertices[0]


def build_tbc(g: Graph, blocks: Sequence[Block] | None = None, cutvertices=None) -> BlockCutTree:
    """Root the block adjacency structure by breadth-first layering.

    The root is the lowest-id block with at least two cut vertices, or block 0
    when no block qualifies.
    """
    if blocks is None:
        blocks, cutvertices = find_blocks(g)
    cut = frozenset(cutvertices or ())
    n = g.n
    nb = len(blocks)
    vertex_blocks: list[list[int]] = [[] for _ in range(n)]
    for b in blocks:
        for v in b.vertices:
            vertex_blocks[v].append(b.id)
    if nb == 0:
        empty = tuple(() for _ in range(n))
        return BlockCutTree(n, (), None, (), (), (), (), cut, empty, empty, ())

    root = next((b.id for b in blocks if len(b.cutvertices) >= 2), 0)
    parent: list[int | None] = [None] * nb
    entry: list[int | None] = [None] * nb
    level = [0] * nb
    children: list[list[int]] = [[] for _ in range(nb)]
    nodes: list[Block] = list(blocks)
    marked = bytearray(nb)
    marked[root] = 1
    root_block = blocks[root]
    nodes[root] = _rotate(root_block, min(root_block.vertices))
    order = [root]
    queue = deque([root])
    while queue:
        b = queue.popleft()
        for u in nodes[b].vertices:
            if u not in cut:
                continue
            for c in vertex_blocks[u]:
                if marked[c]:
                    continue
                marked[c] = 1
                parent[c] = b
                entry[c] = u
                level[c] = level[b] + 1
                children[b].append(c)
                nodes[c] = _rotate(blocks[c], u)
                order.append(c)
                queue.append(c)
    if len(order) != nb:
        raise ValueError("blocks do not form a connected structure")
    anchored: list[list[int]] = [[] for _ in range(n)]
    for b in order:
        anchored[nodes[b].vertices[0]].append(b)
    return BlockCutTree(
        n=n,
        nodes=tuple(nodes),
        root=root,
        parent=tuple(parent),
        entry_point=tuple(entry),
        level=tuple(level),
        children=tuple(tuple(c) for c in children),
        cutvertices=cut,
        vertex_blocks=tuple(tuple(x) for x in vertex_blocks),
        anchored=tuple(tuple(x) for x in anchored),
        bfs_order=tuple(order),
    )


def decompose(g: Graph) -> BlockCutTree:
    blocks, cut = find_blocks(g)
    return build_tbc(g, blocks, cut)


def processing_order(t: BlockCutTree) -> list[int]:
    """Post-order of the block tree: every block after all of its children."""
    if t.root is None:
        return []
    out: list[int] = []
    stack = [(t.root, False)]
    while stack:
        b, done = stack.pop()
        if done:
            out.append(b)
            continue
        stack.append((b, True))
        for c in reversed(t.children[b]):
            stack.append((c, False))
    return out


def tree_to_dict(t: BlockCutTree) -> dict:
    return {
        "root": t.root,
        "cutvertices": sorted(t.cutvertices),
        "blocks": [
            {
                "id": b.id,
                "kind": b.kind,
                "vertices": list(b.vertices),
                "parent": t.parent[b.id],
                "entry_point": t.entry_point[b.id],
                "level": t.level[b.id],
            }
            for b in t.nodes
        ],
    }
