from pydantic import BaseModel, Field

from epsilon_whitehead.geometry.models import EdgeKind, MetricGraph, PLLoop
from epsilon_whitehead.utils.rationals import RationalRecord, circle_to_pi, rational_record


class EdgeRecord(BaseModel):
    id: str
    tail: str
    head: str
    kind: EdgeKind
    length: RationalRecord


class StepRecord(BaseModel):
    edge: str
    dir: int


class MetricGraphRecord(BaseModel):
    vertices: list[str]
    edges: list[EdgeRecord]


class LoopRecord(BaseModel):
    start: str
    graph: MetricGraphRecord
    steps: list[StepRecord] = Field(default_factory=list)


def graph_record(graph: MetricGraph) -> MetricGraphRecord:
    return MetricGraphRecord(
        vertices=list(graph.vertices),
        edges=[
            EdgeRecord(
                id=e.id,
                tail=e.tail,
                head=e.head,
                kind=e.kind,
                length=rational_record(circle_to_pi(e.length), unit="pi"),
            )
            for e in graph.edges
        ],
    )


def loop_record(loop: PLLoop) -> LoopRecord:
    return LoopRecord(
        start=loop.start,
        graph=graph_record(loop.graph),
        steps=[StepRecord(edge=s.edge, dir=s.direction) for s in loop.steps],
    )
