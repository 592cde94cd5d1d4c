import pytest
from hypothesis import given, settings, strategies as st

from cactuskit import labelling, oracle
from cactuskit.decomposition import decompose, find_blocks
from cactuskit.generator import GenSpec, random_cactus
from cactuskit.graph import Graph, max_degree
from cactuskit.results import TotalLabelling, VertexLabelling

from support import corpus, cycle, cycle_of_triangles, flower, path, star, sun

VALIDATORS = {"l21": labelling.validate_l21, "l01": labelling.validate_l01, "t21": labelling.validate_t21}


# ---------------------------------------------------------------- validators


def test_triangle_l21_valid():
    assert labelling.validate_l21(cycle(3), [0, 2, 4]) == []


def test_k2_adjacent_gap_too_small():
    out = labelling.validate_l21(path(2), [0, 1])
    assert len(out) == 1
    assert (out[0].first, out[0].second, out[0].difference) == (0, 1, 1)
    assert out[0].to_dict()["rule"] == "adjacent >= 2"


def test_l01_ignores_adjacent_pairs():
    assert labelling.validate_l01(path(2), [0, 0]) == []
    assert len(labelling.validate_l01(path(3), [0, 5, 0])) == 1


@pytest.mark.parametrize("labels", [[0, 2], [0, 2, None], [0, -2, 4], [0, 2, 1.5]])
def test_incomplete_labelling_rejected(labels):
    with pytest.raises(ValueError):
        labelling.validate_l21(cycle(3), labels)


def test_t21_validator():
    g = path(2)
    assert labelling.validate_t21(g, [0, 1], {(0, 1): 3}) == []
    bad = labelling.validate_t21(g, [0, 1], {(1, 0): 2})
    assert [(v.first, v.second, v.rule) for v in bad] == [(1, (0, 1), "vertex and incident edge >= 2")]
    with pytest.raises(ValueError):
        labelling.validate_t21(g, [0, 1], {})
    with pytest.raises(ValueError):
        labelling.validate_t21(g, [0, 1], {(0, 1): 3, (0, 2): 5})


def test_t21_accepts_total_labelling_object():
    lab = TotalLabelling((0, 1), {(0, 1): 3})
    assert labelling.validate_t21(path(2), lab) == []


def test_validators_match_oracle_constraints():
    # any labelling the oracle calls optimal must pass the validator
    for g in corpus(20, 8, "lab-oracle-valid", min_n=2):
        for scheme, check in VALIDATORS.items():
            span, labels = oracle.oracle_labelling(g, scheme)
            if scheme == "t21":
                edges = {e: labels[g.n + i] for i, e in enumerate(g.edges)}
                assert check(g, labels[: g.n], edges) == []
            else:
                assert check(g, labels) == []
                assert max(labels) == span


# ---------------------------------------------------------------- constructors


def test_palette_bounds():
    assert [labelling.palette_bound(s, 4) for s in labelling.SCHEMES] == [7, 4, 6]
    with pytest.raises(ValueError):
        labelling.palette_bound("l11", 3)


def test_single_vertex_and_edge():
    g = Graph(1, [])
    assert labelling.label_l21(g, decompose(g)) == VertexLabelling((0,))
    g = path(2)
    lab = labelling.label_t21(g, decompose(g))
    assert labelling.validate_t21(g, lab) == [] and lab.span <= 3


@pytest.mark.parametrize("scheme", labelling.SCHEMES)
@pytest.mark.parametrize(
    "g",
    [cycle(3), cycle(8), star(6), sun(5), flower([3, 3, 3, 3]), flower([4, 5], pendants=3), cycle_of_triangles(5)],
    ids=["C3", "C8", "K1_6", "sun5", "F4", "flower", "ring-of-triangles"],
)
def test_constructor_families(g, scheme):
    lab, stats = labelling.label_with_stats(g, decompose(g), scheme)
    assert VALIDATORS[scheme](g, lab) == []
    assert lab.span <= labelling.palette_bound(scheme, max_degree(g))
    assert stats.fan_repairs == 0


@settings(max_examples=60, deadline=None)
@given(
    blocks=st.integers(1, 60),
    frac=st.fractions(0, 1, max_denominator=4),
    hi=st.integers(3, 9),
    seed=st.integers(0, 2**64 - 1),
    scheme=st.sampled_from(labelling.SCHEMES),
)
def test_constructor_valid_within_bound(blocks, frac, hi, seed, scheme):
    g = random_cactus(GenSpec(blocks, frac, max_len=hi, seed=seed))
    lab, stats = labelling.label_with_stats(g, decompose(g), scheme)
    assert VALIDATORS[scheme](g, lab) == []
    assert lab.span <= labelling.palette_bound(scheme, max_degree(g))
    assert stats.palette == labelling.palette_bound(scheme, max_degree(g))


def test_constructor_never_beats_optimum():
    for g in corpus(40, 9, "lab-opt", min_n=2):
        t = decompose(g)
        for scheme in labelling.SCHEMES:
            got = getattr(labelling, f"label_{scheme}")(g, t).span
            assert got >= oracle.oracle_span(g, scheme)


# ---------------------------------------------------------------- exact values (brute force, frozen)


@pytest.mark.parametrize("k, expected", [(1, 4), (2, 5), (3, 7), (4, 9)])
def test_friendship_graph_l21(k, expected):
    assert oracle.oracle_span(flower([3] * k), "l21") == expected


def test_triangle_with_triangles_l21():
    assert oracle.oracle_span(cycle_of_triangles(3), "l21") == 6


def test_sun_t21():
    assert oracle.oracle_span(sun(3), "t21", cap=12) == 5


def test_two_triangles_l01():
    assert oracle.oracle_span(flower([3, 3]), "l01") == 1


def _disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, list(g.edges) + [(u + g.n, v + g.n) for u, v in h.edges])


def _join(g: Graph, h: Graph) -> Graph:
    cross = [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    return Graph(g.n + h.n, list(g.edges) + [(u + g.n, v + g.n) for u, v in h.edges] + cross)


SMALL = [Graph(1, []), path(2), path(3), cycle(3), cycle(4), star(3)]


@pytest.mark.parametrize("i", range(len(SMALL)))
@pytest.mark.parametrize("j", range(len(SMALL)))
def test_union_is_max(i, j):
    g, h = SMALL[i], SMALL[j]
    if g.n + h.n > 9:
        pytest.skip("too large for brute force")
    assert oracle.oracle_span(_disjoint_union(g, h), "l21") == max(oracle.oracle_span(g, "l21"), oracle.oracle_span(h, "l21"))


@pytest.mark.parametrize("i", range(len(SMALL)))
@pytest.mark.parametrize("j", range(len(SMALL)))
def test_join_formula(i, j):
    g, h = SMALL[i], SMALL[j]
    if i > j or g.n + h.n > 8:
        pytest.skip("symmetric or too large")
    expected = max(g.n - 1, oracle.oracle_span(g, "l21")) + max(h.n - 1, oracle.oracle_span(h, "l21")) + 2
    assert oracle.oracle_span(_join(g, h), "l21") == expected


def test_join_k2_k1_is_triangle():
    assert oracle.oracle_span(_join(path(2), Graph(1, [])), "l21") == 4


@pytest.mark.parametrize("g", corpus(25, 8, "lab-mono", min_n=3), ids=lambda g: f"n{g.n}m{g.m}")
def test_span_monotone_on_induced_subgraphs(g):
    # deleting a non-cut vertex leaves an induced subgraph that is still a cactus
    _, cut = find_blocks(g)
    full = oracle.oracle_span(g, "l21")
    for v in range(g.n):
        if v not in cut:
            assert oracle.oracle_span(g.subgraph_without([v]), "l21") <= full


def test_l01_is_not_edge_monotone():
    # an edge inside a triangle hides a distance-2 pair
    assert oracle.oracle_span(cycle(3), "l01") == 0
    assert oracle.oracle_span(path(3), "l01") == 1
