"""Distance preserving spanning trees from two roots.

Decide whether a weighted graph has one spanning tree that preserves
all distances from two given vertices, build it when it exists, and
check candidates against a brute-force search.
"""

from ._dptree import (
    CapExceededError,
    ConditionReport,
    ConstructResult,
    BruteForceResult,
    CrossEdgeWitness,
    DistanceMap,
    Edge,
    InducedSubgraph,
    ParseError,
    Partition,
    PathWitness,
    SetDistance,
    SpanningTree,
    TieWitness,
    TreeError,
    ValidationError,
    Verdict,
    VerifyFailure,
    Weight,
    WeightedGraph,
    brute_force_common_dp_tree,
    build_partition,
    check_conditions,
    construct_common_dp_tree,
    distances_from_set,
    enumerate_spanning_trees,
    induced_subgraph,
    parse_graph,
    parse_tree,
    potential,
    random_connected_graph,
    serialize_graph,
    serialize_tree,
    sssp,
    tree_distances,
    unique_shortest_path,
    verify_dp_tree,
)

__all__ = [
    "CapExceededError",
    "ConditionReport",
    "ConstructResult",
    "BruteForceResult",
    "CrossEdgeWitness",
    "DistanceMap",
    "Edge",
    "InducedSubgraph",
    "ParseError",
    "Partition",
    "PathWitness",
    "SetDistance",
    "SpanningTree",
    "TieWitness",
    "TreeError",
    "ValidationError",
    "Verdict",
    "VerifyFailure",
    "Weight",
    "WeightedGraph",
    "brute_force_common_dp_tree",
    "build_partition",
    "check_conditions",
    "construct_common_dp_tree",
    "distances_from_set",
    "enumerate_spanning_trees",
    "induced_subgraph",
    "parse_graph",
    "parse_tree",
    "potential",
    "random_connected_graph",
    "serialize_graph",
    "serialize_tree",
    "sssp",
    "tree_distances",
    "unique_shortest_path",
    "verify_dp_tree",
]
