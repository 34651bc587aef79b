"""nimcolor: NIM edges of edge-colored complete graphs.

An edge of a k-colored K_n is NIM for a pattern H when it lies in no
monochromatic copy of H.  This package builds, verifies and searches
colorings with many NIM edges, and computes the Turan numbers the edge
counts are measured against.
"""

__version__ = "0.1.0"

from .errors import NotBipartiteError, ResourceLimitError, TuranUnavailableError
from .graphs import (
    EdgeColoring,
    SimpleGraph,
    complement,
    components,
    disjoint_union,
    edge_index,
    edge_unindex,
    is_isomorphic,
    join,
    to_dot,
)
from .nim import NimReport, contains, contains_through_edge, nim_edges, nim_edges_anchored
from .patterns import (
    PatternGraph,
    bipartition,
    custom_pattern,
    custom_pattern_from_json,
    find_tails,
    forest_union,
    has_perfect_matching_forest,
    is_balanced,
    make_double_broom,
    make_double_star,
    make_path,
    make_spider,
    make_star,
    parse_pattern,
)
from .constructions import (
    P2kConstructionLayout,
    extremal_overlay,
    p2k_expected_nim,
    p2k_multicoloring,
    tail_coloring_for,
    tail_forest_coloring,
    verify_layout,
)
from .search import SearchResult, compare_to_turan, exhaustive_f, hill_climb_f, merge_shards
from .turan import (
    TuranResult,
    ex_balanced_forest,
    ex_path,
    extremal_path_graph,
    lemma_gap,
    near_extremal_path_graph,
    turan_oracle,
    turan_value,
)

__all__ = [name for name in dir() if not name.startswith("_")]
