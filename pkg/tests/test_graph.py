from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cactuskit.generator import GenSpec, random_cactus
from cactuskit.graph import (
    CactusReport,
    DisconnectedGraphError,
    Graph,
    GraphFormatError,
    is_cactus,
    max_degree,
    parse_graph,
    serialize_graph,
    to_dot,
)
from cactuskit.oracle import oracle_cycles

from support import corpus, cycle, flower, star


def test_parse_k2():
    g = parse_graph(b'{"n":2,"edges":[[0,1]]}')
    assert (g.n, g.m, max_degree(g)) == (2, 1, 1)
    assert g.weight(0, 1) == 1
    assert g.vertex_weights == (1, 1)


def test_parse_triangle():
    g = parse_graph('{"n":3,"edges":[[0,1],[1,2],[0,2]]}')
    assert g.m == 3 and is_cactus(g).is_cactus


@pytest.mark.parametrize(
    "text, fragment, location",
    [
        ('{"n":3,"edges":[[0,1],[0,1],[1,2]]}', "duplicate edge", "$.edges[1]"),
        ('{"n":3,"edges":[[0,1],[1,0]]}', "duplicate edge", "$.edges[1]"),
        ('{"n":2,"edges":[[1,1]]}', "self-loop", "$.edges[0]"),
        ('{"n":2,"edges":[[0,5]]}', "unknown vertex", "$.edges[0][1]"),
        ('{"n":2,"edges":[[0,1,0]]}', "positive", "$.edges[0][2]"),
        ('{"n":2,"edges":[[0,1,-3]]}', "positive", "$.edges[0][2]"),
        ('{"n":2,"edges":[[0,1,1.5]]}', "rational", "$.edges[0][2]"),
        ('{"n":2,"edges":[[0,1]],"vertex_weights":[1,-1]}', "non-negative", "$.vertex_weights[1]"),
        ('{"n":2,"edges":[[0,1]],"vertex_weights":[1]}', "expected 2", "$.vertex_weights"),
        ('{"edges":[]}', "missing key", "$"),
        ('{"n":2,"edges":[[0,1]', "malformed JSON", "line 1"),
        ('[1,2]', "top level", "$"),
    ],
)
def test_parse_errors_carry_location(text, fragment, location):
    with pytest.raises(GraphFormatError) as info:
        parse_graph(text)
    assert fragment in str(info.value)
    assert info.value.location.startswith(location)


def test_rational_weights_are_exact():
    g = parse_graph('{"n":3,"edges":[[0,1,"3/2"],[1,2,2]],"vertex_weights":["1/3",0,"4"]}')
    assert g.weight(0, 1) == Fraction(3, 2)
    assert isinstance(g.weight(1, 2), int)
    assert g.vertex_weights == (Fraction(1, 3), 0, 4)


@settings(max_examples=60, deadline=None)
@given(
    blocks=st.integers(1, 15),
    frac=st.fractions(0, 1, max_denominator=4),
    seed=st.integers(0, 2**64 - 1),
    hi=st.integers(1, 5),
)
def test_round_trip(blocks, frac, seed, hi):
    g = random_cactus(GenSpec(blocks, frac, edge_weight=(1, hi), vertex_weight=(0, hi), seed=seed))
    again = parse_graph(serialize_graph(g))
    assert again == g
    assert serialize_graph(again) == serialize_graph(g)


def test_round_trip_keeps_names_and_fractions():
    g = Graph(3, [(0, 1, Fraction(1, 2)), (1, 2)], [Fraction(5, 3), 1, 0], names=["a", "b", "c"])
    assert parse_graph(serialize_graph(g)) == g


def test_disconnected_is_flagged():
    g = Graph(4, [(0, 1), (2, 3)])
    assert not g.is_connected()
    with pytest.raises(DisconnectedGraphError):
        is_cactus(g)


def test_is_cactus_examples():
    assert is_cactus(cycle(3)) == CactusReport(True)
    k4 = Graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    rep = is_cactus(k4)
    assert not rep.is_cactus and k4.has_edge(*rep.witness)
    assert is_cactus(flower([3, 3])).is_cactus


def test_cactus_report_invariant():
    with pytest.raises(ValueError):
        CactusReport(True, (0, 1))
    with pytest.raises(ValueError):
        CactusReport(False)


def test_theta_graph_is_not_cactus():
    # two vertices joined by three internally disjoint paths
    g = Graph(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])
    rep = is_cactus(g)
    assert not rep.is_cactus
    cycles = oracle_cycles(g)
    assert sum(rep.witness in c for c in cycles) >= 2


def _random_graph(n: int, extra: int, seed: int) -> Graph:
    import random

    rnd = random.Random(seed)
    edges = {(rnd.randrange(v), v) for v in range(1, n)}  # spanning tree keeps it connected
    while len(edges) < n - 1 + extra:
        u, v = sorted(rnd.sample(range(n), 2))
        edges.add((u, v))
    return Graph(n, sorted(edges))


@pytest.mark.parametrize("seed", range(60))
def test_is_cactus_matches_cycle_enumeration(seed):
    g = _random_graph(4 + seed % 8, seed % 4, seed)
    cycles = oracle_cycles(g)
    shared = any(sum(e in c for c in cycles) > 1 for e in g.edges)
    rep = is_cactus(g)
    assert rep.is_cactus == (not shared)
    if not rep.is_cactus:
        assert sum(rep.witness in c for c in cycles) > 1


def test_generated_graphs_are_cacti():
    for g in corpus(50, 60, "graph-gen"):
        assert is_cactus(g).is_cactus


def test_max_degree_examples():
    assert max_degree(star(5)) == 5
    assert max_degree(cycle(7)) == 2
    assert max_degree(flower([3, 3])) == 4
    assert max_degree(Graph(1, [])) == 0


def test_dot_export_marks_members():
    g = Graph(3, [(0, 1, 2), (1, 2)], names=["a", "b", "c"])
    dot = to_dot(g, highlight=[1])
    assert dot.startswith("graph G {")
    assert '1 [label="b", style=filled]' in dot
    assert '0 -- 1 [label="2"];' in dot
    assert "1 -- 2;" in dot
