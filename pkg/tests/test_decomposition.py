from collections import deque

import pytest
from hypothesis import given, settings, strategies as st

from cactuskit.decomposition import build_tbc, decompose, find_blocks, processing_order, tree_to_dict
from cactuskit.generator import GenSpec, random_cactus
from cactuskit.graph import Graph, NotCactusError

from support import corpus, cycle, flower, path


def _cut_vertices_by_removal(g: Graph) -> set[int]:
    out = set()
    for v in range(g.n):
        rest = [u for u in range(g.n) if u != v]
        if len(rest) < 2:
            continue
        seen = {rest[0]}
        queue = deque([rest[0]])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w != v and w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) < len(rest):
            out.add(v)
    return out


def test_path_blocks():
    blocks, cut = find_blocks(path(3))
    assert sorted(b.kind for b in blocks) == ["edge", "edge"]
    assert cut == {1}


def test_cycle_single_block():
    blocks, cut = find_blocks(cycle(5))
    assert len(blocks) == 1 and blocks[0].kind == "cycle" and cut == frozenset()
    assert blocks[0].vertices == (0, 1, 2, 3, 4)


def test_two_triangles_share_cutvertex():
    blocks, cut = find_blocks(flower([3, 3]))
    assert [b.kind for b in blocks] == ["cycle", "cycle"]
    assert cut == {0} == _cut_vertices_by_removal(flower([3, 3]))


def test_non_cactus_rejected():
    k4 = Graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    with pytest.raises(NotCactusError):
        find_blocks(k4)


@pytest.mark.parametrize("g", corpus(80, 10, "dec-removal", min_n=2), ids=lambda g: f"n{g.n}m{g.m}")
def test_cutvertices_match_vertex_removal(g):
    _, cut = find_blocks(g)
    assert set(cut) == _cut_vertices_by_removal(g)


def test_single_block_tree():
    t = decompose(cycle(5))
    assert t.root == 0 and t.level == (0,) and t.entry_point == (None,)
    assert processing_order(t) == [0]


def test_star_of_triangles():
    t = decompose(flower([3, 3, 3]))
    _check_tree(flower([3, 3, 3]), t)
    non_root = [b for b in range(3) if b != t.root]
    assert all(t.level[b] == 1 and t.entry_point[b] == 0 for b in non_root)


def test_chain_root_is_middle_block():
    # triangle - edge - triangle: only the middle edge touches two cut vertices
    g = Graph(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
    t = decompose(g)
    assert t.nodes[t.root].kind == "edge" and set(t.nodes[t.root].vertices) == {2, 3}


def test_root_fallback_without_qualifying_block():
    t = decompose(path(3))
    assert t.root == 0


def test_single_vertex():
    t = decompose(Graph(1, []))
    assert t.root is None and t.nodes == () and processing_order(t) == []
    assert t.root_vertex == 0


def test_cycle_order_starts_at_entry_towards_lower_neighbour():
    # triangle 0-1-2 with a 4-cycle 2-5-4-3 hanging at 2
    g = Graph(6, [(0, 1), (1, 2), (0, 2), (2, 5), (5, 4), (4, 3), (3, 2)])
    t = decompose(g)
    ring = next(b for b in t.nodes if b.size == 4)
    assert ring.vertices == (2, 3, 4, 5)


def _check_tree(g: Graph, t) -> None:
    n_blocks = len(t.nodes)
    # parent relation is a tree rooted at t.root
    for b in range(n_blocks):
        seen = set()
        x = b
        while t.parent[x] is not None:
            assert x not in seen
            seen.add(x)
            x = t.parent[x]
        assert x == t.root
    for b in range(n_blocks):
        p = t.parent[b]
        if p is None:
            assert t.level[b] == 0 and t.entry_point[b] is None
            continue
        e = t.entry_point[b]
        assert e in t.nodes[b].vertices and e in t.nodes[p].vertices
        assert len(set(t.nodes[b].vertices) & set(t.nodes[p].vertices)) == 1
        assert t.level[b] == t.level[p] + 1
        assert t.nodes[b].vertices[0] == e
    # every edge in exactly one block
    owner = {}
    for blk in t.nodes:
        for e in blk.edges():
            assert e not in owner
            owner[e] = blk.id
        if blk.kind == "edge":
            assert blk.size == 2
        else:
            assert len(blk.edges()) == blk.size >= 3
    assert set(owner) == set(g.edges)
    assert sum(b.size - 1 for b in t.nodes) == g.n - 1
    counts = [len(vb) for vb in t.vertex_blocks]
    for v in range(g.n):
        assert (counts[v] >= 2) == (v in t.cutvertices)
    order = processing_order(t)
    pos = {b: i for i, b in enumerate(order)}
    assert sorted(order) == list(range(n_blocks)) and order[-1] == t.root
    assert all(pos[b] < pos[t.parent[b]] for b in range(n_blocks) if t.parent[b] is not None)


def _separation_holds(g: Graph, t) -> bool:
    root_vs = set(t.nodes[t.root].vertices)
    for b, e in enumerate(t.entry_point):
        if e is None:
            continue
        start = next(v for v in t.nodes[b].vertices if v != e)
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w != e and w not in seen:
                    seen.add(w)
                    queue.append(w)
        if seen & (root_vs - {e}):
            return False
    return True


@settings(max_examples=80, deadline=None)
@given(blocks=st.integers(1, 25), frac=st.fractions(0, 1, max_denominator=4), hi=st.integers(3, 8), seed=st.integers(0, 2**64 - 1))
def test_tree_invariants_on_generated_cacti(blocks, frac, hi, seed):
    g = random_cactus(GenSpec(blocks, frac, max_len=hi, seed=seed))
    t = decompose(g)
    assert len(t.nodes) == blocks
    _check_tree(g, t)
    assert _separation_holds(g, t)


def test_build_tbc_accepts_precomputed_blocks():
    g = flower([4, 3], pendants=1)
    blocks, cut = find_blocks(g)
    assert build_tbc(g, blocks, cut) == decompose(g)


def test_tree_to_dict_schema():
    d = tree_to_dict(decompose(flower([3, 4])))
    assert set(d) == {"root", "cutvertices", "blocks"}
    assert d["cutvertices"] == [0]
    assert {tuple(sorted(b)) for b in d["blocks"]} == {("entry_point", "id", "kind", "level", "parent", "vertices")}
