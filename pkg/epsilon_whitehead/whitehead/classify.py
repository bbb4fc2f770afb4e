from dataclasses import dataclass, field
from enum import Enum

import networkx as nx

from epsilon_whitehead.whitehead.graph import WhiteheadGraph


class WhiteheadGraphError(Exception):
    pass


class EmptyGraphError(WhiteheadGraphError):
    def __init__(self) -> None:
        super().__init__("empty: the Whitehead graph has no edges")


class GraphStatus(str, Enum):
    DISCONNECTED = "disconnected"
    CUT_VERTEX = "cut_vertex"
    TWO_CONNECTED = "two_connected"


@dataclass(frozen=True)
class ConnectivityStatus:
    kind: GraphStatus
    components: tuple[frozenset[int], ...] = ()
    cut_vertex: int | None = None
    isolated_letters: frozenset[int] = field(default_factory=frozenset)

    @property
    def is_two_connected(self) -> bool:
        return self.kind == GraphStatus.TWO_CONNECTED

    @property
    def admits_primitive(self) -> bool:
        """True for the statuses Whitehead's necessary condition allows."""
        return self.kind in (GraphStatus.DISCONNECTED, GraphStatus.CUT_VERTEX)


def classify(g: WhiteheadGraph) -> ConnectivityStatus:
    """Connectivity of the subgraph on degree-positive vertices.

    Raises:
        EmptyGraphError: if the graph has no edges
    """
    if not g.edges:
        raise EmptyGraphError()

    degrees = g.degrees()
    isolated = frozenset(
        gen for gen in range(g.rank) if degrees[2 * gen] + degrees[2 * gen + 1] == 0
    )
    active = [v for v in g.vertices if degrees[v] > 0]
    graph = g.simple_graph().subgraph(active)

    components = sorted(
        (frozenset(c) for c in nx.connected_components(graph)),
        key=min,
    )
    if len(components) > 1:
        return ConnectivityStatus(
            kind=GraphStatus.DISCONNECTED,
            components=tuple(components),
            isolated_letters=isolated,
        )

    if graph.number_of_nodes() >= 3:
        cut_vertices = sorted(nx.articulation_points(graph))
        if cut_vertices:
            return ConnectivityStatus(
                kind=GraphStatus.CUT_VERTEX,
                components=tuple(components),
                cut_vertex=cut_vertices[0],
                isolated_letters=isolated,
            )

    return ConnectivityStatus(
        kind=GraphStatus.TWO_CONNECTED,
        components=tuple(components),
        isolated_letters=isolated,
    )
