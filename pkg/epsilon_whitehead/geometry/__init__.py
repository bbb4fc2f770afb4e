from epsilon_whitehead.geometry.construction import (
    GAMMA,
    build_fk,
    build_Gk,
    canonical_tree,
    edge_length,
)
from epsilon_whitehead.geometry.epsilon import (
    chord_length,
    diameter,
    epsilon,
    epsilon_of_fk,
    epsilon_table,
    evaluate,
    find_k_for_epsilon,
    is_eps_map,
    preimage,
    sampled_epsilon,
)
from epsilon_whitehead.geometry.models import (
    BACKWARD,
    FORWARD,
    CirclePoint,
    EdgeKind,
    GeometryError,
    GraphPoint,
    InvalidLoopError,
    InvalidParameterError,
    InvalidTreeError,
    MetricEdge,
    MetricGraph,
    PLLoop,
    SpanningTree,
    Step,
)
from epsilon_whitehead.geometry.records import graph_record, loop_record
from epsilon_whitehead.geometry.tracing import trace_word

__all__ = [
    "BACKWARD",
    "FORWARD",
    "GAMMA",
    "CirclePoint",
    "EdgeKind",
    "GeometryError",
    "GraphPoint",
    "InvalidLoopError",
    "InvalidParameterError",
    "InvalidTreeError",
    "MetricEdge",
    "MetricGraph",
    "PLLoop",
    "SpanningTree",
    "Step",
    "build_Gk",
    "build_fk",
    "canonical_tree",
    "chord_length",
    "diameter",
    "edge_length",
    "epsilon",
    "epsilon_of_fk",
    "epsilon_table",
    "evaluate",
    "find_k_for_epsilon",
    "graph_record",
    "is_eps_map",
    "loop_record",
    "preimage",
    "sampled_epsilon",
    "trace_word",
]
