"""Partially disjoint k shortest paths.

Near-shortest path enumeration with pair-diversity checks, and exact
shortest paths with bounded or minimized sharing of sensitive edges via
flow networks on the shortest-path DAG.
"""

from .diversity import MeasureKind, best_pair, check_guarantees, measure
from .disjoint import (
    CostBase,
    CostMode,
    DisjointSolution,
    Variant,
    build_network,
    overload_profile,
    reduce_sensitive_nodes,
    solve,
)
from .flow import Flow, FlowArc, FlowNetwork, InfeasibleFlowError, decompose, max_flow, min_cost_flow
from .generators import (
    gen_example1a,
    gen_example1b,
    gen_example2,
    gen_example2_boundary,
    gen_random,
)
from .graph import (
    Arc,
    GraphValidationError,
    Path,
    SensitiveSet,
    WeightedGraph,
    WeightVector,
    compare_lengths,
    validate_graph,
)
from .io import GraphFormatError, parse_graph, parse_sensitive, serialize_graph
from .shortest import PathStream, k_shortest_paths, make_path, path_length, shortest_tree
from .spdag import ShortestPathDag, build_spdag, is_shortest_path

__version__ = "0.1.0"
