"""Weighted star-convex graphs: cores, witness trees, graph operations and
convex-sequence spiders, each checked against a brute-force oracle."""

from .core import (
    AlignmentViolation,
    CoreReport,
    ExtremalReport,
    check_leaf_core_alignment,
    core,
    extremal_locus_check,
    is_star_convex,
)
from .errors import (
    DisconnectedGraphError,
    DomainError,
    GraphFormatError,
    InvariantViolation,
    NoLeavesError,
    NotATreeError,
    NotStarConvexError,
    StarConvexError,
    UnknownVertexError,
    WeightConflictError,
)
from .graph import (
    ValidationReport,
    WeightedGraph,
    export_dot,
    leaves,
    parse_graph,
    serialize_graph,
    validate,
)
from .ops import (
    OverlapReport,
    ProbeResult,
    graph_intersection,
    graph_union,
    overlap_analysis,
    subgraph_core_probe,
)
from .paths import (
    Direction,
    MonotonePath,
    PathRejected,
    classify_path,
    monotone_path,
    oriented_digraph,
    reach_set,
)
from .sequences import (
    ConvexSequenceClass,
    SpiderSpec,
    build_spider,
    embed,
    is_convex_sequence,
    validate_class,
)
from .witness import WitnessTree, extract_witness_tree, steiner_subtree, verify_witness

__version__ = "0.1.0"
