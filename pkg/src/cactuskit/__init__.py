"""Exact algorithms on cactus graphs: decomposition, distances, optimal vertex
subsets, spanning trees of extremal height and distance-constrained labellings,
each paired with a brute-force oracle."""

from .decomposition import Block, BlockCutTree, build_tbc, decompose, find_blocks, processing_order
from .distances import (
    apsp,
    eccentricities,
    elongations,
    longest_simple,
    max_height_spanning_tree,
    min_height_spanning_tree,
    sssp,
    tree_height,
)
from .generator import GenSpec, SplitMix64, random_cactus
from .graph import (
    CactusReport,
    DisconnectedGraphError,
    Graph,
    GraphError,
    GraphFormatError,
    NotCactusError,
    is_cactus,
    max_degree,
    parse_graph,
    serialize_graph,
    to_dot,
)
from .labelling import (
    LabellingDefect,
    label_l01,
    label_l21,
    label_t21,
    validate_l01,
    validate_l21,
    validate_t21,
)
from .results import (
    DistanceMap,
    LongestMap,
    SpanningTreeResult,
    TotalLabelling,
    TwoPartition,
    VertexLabelling,
    VertexSet,
)
from .selection import (
    max_2_independent_set,
    max_independent_set,
    max_weight_2_colorable,
    min_2nc_set,
    min_dominating_set,
    min_weight_fvs,
)

__version__ = "0.1.0"
