"""Broadcast domination and multipacking on small graphs.

Exact solvers, certificate checkers, the every-third-vertex and two-path
multipacking constructions, and a harness for checking bounds relating the
multipacking number ``mp`` and the broadcast number ``gb``.
"""

from .certify import (
    Broadcast,
    Multipacking,
    Violation,
    is_dominating_broadcast,
    is_multipacking,
    lemma1_bound_check,
    pairwise_sufficient_condition,
    verify_broadcast,
    verify_multipacking,
    verify_multipacking_direct,
)
from .construct import (
    Configuration,
    ConstructionTrace,
    approx_multipacking,
    diam_rad_bound,
    find_configuration,
    make_configuration,
    theorem2_construct,
    third_vertex_packing,
)
from .distance import (
    UNREACHABLE,
    DistanceMatrix,
    PathWitness,
    all_pairs,
    bfs_distances,
    radius_diameter,
    shortest_path,
)
from .exact import ExactResult, gb_exact, mp_exact
from .generators import generate, parse_generator
from .graph import (
    Graph,
    connected_components,
    encode_graph6,
    format_edge_list,
    is_connected,
    parse_edge_list,
    parse_graph6,
)
from .harness import BoundsReport, compute_bounds, sweep

__version__ = "0.1.0"
