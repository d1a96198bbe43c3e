"""Support networks of rooted binary phylogenetic networks."""

from .families import (
    Family,
    SequenceKind,
    count_family,
    enumerate_family,
    enumerate_trail_options,
    is_admissible,
    is_tree_based,
    sequence_value,
    trail_option_count,
)
from .network import (
    EdgeSelection,
    GraphView,
    PhyloNetwork,
    ValidationError,
    VertexKind,
    classify_vertex,
    induce_subgraph,
    smooth,
    tier,
    validate_network,
)
from .optimize import blocks, level, min_level_exact, min_level_heuristic, min_tier
from .randgen import GenParams, random_network
from .zigzag import Trail, TrailDecomposition, TrailType, classify_trail, decompose

__version__ = "0.1.0"
