from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import networkx as nx

FORWARD = 1
BACKWARD = -1


class GeometryError(Exception):
    pass


class InvalidLoopError(GeometryError):
    pass


class InvalidTreeError(GeometryError):
    pass


class InvalidParameterError(GeometryError, ValueError):
    pass


class EdgeKind(str, Enum):
    LOOP = "loop"
    ARC = "arc"


@dataclass(frozen=True)
class MetricEdge:
    """An edge from tail to head; lengths are in circle units (1 = 2*pi)."""

    id: str
    tail: str
    head: str
    length: Fraction
    kind: EdgeKind = EdgeKind.ARC

    def endpoints(self, direction: int) -> tuple[str, str]:
        return (self.tail, self.head) if direction == FORWARD else (self.head, self.tail)


@dataclass(frozen=True)
class GraphPoint:
    """A point at distance offset from the tail of an edge."""

    edge: str
    offset: Fraction

    def __post_init__(self) -> None:
        if self.offset < 0:
            raise GeometryError(f"negative offset {self.offset} on edge {self.edge}")


@dataclass(frozen=True, order=True)
class CirclePoint:
    """A point of the unit circle as a fraction of a full turn, in [0, 1)."""

    position: Fraction

    def __post_init__(self) -> None:
        if not 0 <= self.position < 1:
            raise GeometryError(f"circle position {self.position} outside [0, 1)")

    def distance(self, other: "CirclePoint") -> Fraction:
        """Arc distance in circle units; at most 1/2."""
        gap = abs(self.position - other.position)
        return min(gap, 1 - gap)


@dataclass(frozen=True)
class MetricGraph:
    vertices: tuple[str, ...]
    edges: tuple[MetricEdge, ...]
    _by_id: dict[str, MetricEdge] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        by_id: dict[str, MetricEdge] = {}
        known = set(self.vertices)
        for edge in self.edges:
            if edge.id in by_id:
                raise GeometryError(f"duplicate edge id {edge.id}")
            if edge.length <= 0:
                raise GeometryError(f"edge {edge.id} has non-positive length {edge.length}")
            if edge.tail not in known or edge.head not in known:
                raise GeometryError(f"edge {edge.id} has an endpoint outside the vertex set")
            by_id[edge.id] = edge
        object.__setattr__(self, "_by_id", by_id)

    def edge(self, edge_id: str) -> MetricEdge:
        try:
            return self._by_id[edge_id]
        except KeyError:
            raise GeometryError(f"unknown edge {edge_id!r}") from None

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.edges)

    @property
    def total_length(self) -> Fraction:
        return sum((e.length for e in self.edges), Fraction(0))

    def vertex_at(self, p: GraphPoint) -> str | None:
        """The vertex a point sits on, if its offset is an endpoint of the edge."""
        edge = self.edge(p.edge)
        if p.offset > edge.length:
            raise GeometryError(f"offset {p.offset} beyond edge {edge.id} of length {edge.length}")
        if p.offset == 0:
            return edge.tail
        if p.offset == edge.length:
            return edge.head
        return None

    def same_point(self, p: GraphPoint, q: GraphPoint) -> bool:
        v, w = self.vertex_at(p), self.vertex_at(q)
        if v is not None or w is not None:
            return v == w
        return p == q

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for e in self.edges:
            graph.add_edge(e.tail, e.head, key=e.id, length=e.length)
        return graph


@dataclass(frozen=True)
class Step:
    edge: str
    direction: int = FORWARD


@dataclass(frozen=True)
class PLLoop:
    """Closed edge path; step i maps [i/m, (i+1)/m) of the circle isometrically onto its edge."""

    graph: MetricGraph
    steps: tuple[Step, ...]
    start: str
    _by_edge: dict[str, tuple[int, ...]] = field(init=False, repr=False, compare=False, hash=False)
    _starts: tuple[str, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if not self.steps:
            raise InvalidLoopError("a loop needs at least one step")
        if self.start not in self.graph.vertices:
            raise InvalidLoopError(f"start vertex {self.start!r} is not in the graph")

        m = len(self.steps)
        arc = Fraction(1, m)
        starts: list[str] = []
        by_edge: dict[str, list[int]] = {}
        position = self.start
        for i, step in enumerate(self.steps):
            if step.direction not in (FORWARD, BACKWARD):
                raise InvalidLoopError(f"step {i}: direction must be +1 or -1")
            edge = self.graph.edge(step.edge)
            if edge.length != arc:
                raise InvalidLoopError(
                    f"step {i}: edge {edge.id} has length {edge.length}, circle arc is {arc}"
                )
            tail, head = edge.endpoints(step.direction)
            if tail != position:
                raise InvalidLoopError(f"step {i}: starts at {tail}, previous step ends at {position}")
            starts.append(tail)
            by_edge.setdefault(edge.id, []).append(i)
            position = head
        if position != self.start:
            raise InvalidLoopError(f"loop ends at {position}, not at its start {self.start}")

        object.__setattr__(self, "_starts", tuple(starts))
        object.__setattr__(self, "_by_edge", {k: tuple(v) for k, v in by_edge.items()})

    def __len__(self) -> int:
        return len(self.steps)

    def step_start(self, i: int) -> str:
        return self._starts[i % len(self.steps)]

    def steps_on(self, edge_id: str) -> tuple[int, ...]:
        return self._by_edge.get(edge_id, ())

    def cover_counts(self) -> Counter[str]:
        return Counter({edge_id: len(idx) for edge_id, idx in self._by_edge.items()})

    def is_surjective(self) -> bool:
        return all(edge_id in self._by_edge for edge_id in self.graph.edge_ids)


@dataclass(frozen=True)
class SpanningTree:
    """Tree edges plus a (generator name, orientation) label for every other edge."""

    graph: MetricGraph
    root: str
    tree_edges: frozenset[str]
    labels: dict[str, tuple[str, int]] = field(hash=False)

    def __post_init__(self) -> None:
        unknown = self.tree_edges - set(self.graph.edge_ids)
        if unknown:
            raise InvalidTreeError(f"tree edges not in the graph: {sorted(unknown)}")
        if self.root not in self.graph.vertices:
            raise InvalidTreeError(f"root {self.root!r} is not a vertex")

        full = self.graph.to_networkx()
        tree = nx.MultiGraph()
        tree.add_nodes_from(full)
        tree.add_edges_from(
            (u, v, key) for u, v, key in full.edges(keys=True) if key in self.tree_edges
        )
        if not nx.is_tree(tree):
            raise InvalidTreeError("tree edges do not form a spanning tree")

        non_tree = set(self.graph.edge_ids) - self.tree_edges
        if set(self.labels) != non_tree:
            raise InvalidTreeError("every non-tree edge needs exactly one generator label")
        for edge_id, (_, orientation) in self.labels.items():
            if orientation not in (FORWARD, BACKWARD):
                raise InvalidTreeError(f"edge {edge_id}: orientation must be +1 or -1")
