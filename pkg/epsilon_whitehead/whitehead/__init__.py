from epsilon_whitehead.whitehead.classify import (
    ConnectivityStatus,
    EmptyGraphError,
    GraphStatus,
    WhiteheadGraphError,
    classify,
)
from epsilon_whitehead.whitehead.graph import (
    MINUS,
    PLUS,
    WhiteheadGraph,
    WhiteheadGraphRecord,
    build_whitehead_graph,
    to_dot,
    to_json,
    vertex_id,
)

__all__ = [
    "MINUS",
    "PLUS",
    "ConnectivityStatus",
    "EmptyGraphError",
    "GraphStatus",
    "WhiteheadGraph",
    "WhiteheadGraphError",
    "WhiteheadGraphRecord",
    "build_whitehead_graph",
    "classify",
    "to_dot",
    "to_json",
    "vertex_id",
]
