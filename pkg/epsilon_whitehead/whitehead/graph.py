from collections import Counter
from dataclasses import dataclass

import networkx as nx
from pydantic import BaseModel

from epsilon_whitehead.free_group.models import POSITIVE, Alphabet, CyclicWord, Letter

PLUS = 0
MINUS = 1

Edge = tuple[int, int]


class WhiteheadGraphRecord(BaseModel):
    """JSON edge-list export."""

    rank: int
    edges: list[list[str]]


def vertex_id(gen: int, side: int) -> int:
    return 2 * gen + side


def left_vertex(x: Letter) -> int:
    return vertex_id(x.gen, MINUS if x.sign == POSITIVE else PLUS)


def right_vertex(x: Letter) -> int:
    return vertex_id(x.gen, PLUS if x.sign == POSITIVE else MINUS)


@dataclass(frozen=True, slots=True)
class WhiteheadGraph:
    """Multigraph on the 2n vertices x+, x- with one edge per circular adjacency.

    Vertex 2g is generator g's plus side, 2g + 1 its minus side. Each edge is stored as a
    sorted pair; parallel edges repeat.
    """

    alphabet: Alphabet
    edges: tuple[Edge, ...]

    @property
    def rank(self) -> int:
        return self.alphabet.rank

    @property
    def vertices(self) -> range:
        return range(2 * self.rank)

    def vertex_name(self, v: int) -> str:
        name = self.alphabet.names[v // 2]
        return f"{name}+" if v % 2 == PLUS else f"{name}-"

    def dot_name(self, v: int) -> str:
        name = self.alphabet.names[v // 2]
        return f"{name}_p" if v % 2 == PLUS else f"{name}_m"

    def degree(self, v: int) -> int:
        return sum((a == v) + (b == v) for a, b in self.edges)

    def degrees(self) -> list[int]:
        counts = [0] * (2 * self.rank)
        for a, b in self.edges:
            counts[a] += 1
            counts[b] += 1
        return counts

    def edge_multiset(self) -> Counter[Edge]:
        return Counter(self.edges)

    def to_multigraph(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph

    def simple_graph(self) -> nx.Graph:
        """Parallel edges collapsed; cut vertices do not depend on multiplicity."""
        return nx.Graph(self.to_multigraph())


def build_whitehead_graph(c: CyclicWord, alphabet: Alphabet) -> WhiteheadGraph:
    """Join right(x) to left(y) for every circularly adjacent pair (x, y).

    A positive letter has its minus side on the left and plus side on the right; an inverse
    letter the other way round. The wraparound pair (last, first) is included.
    """
    edges: list[Edge] = []
    for x, y in c.circular_pairs():
        a, b = right_vertex(x), left_vertex(y)
        edges.append((a, b) if a <= b else (b, a))
    return WhiteheadGraph(alphabet=alphabet, edges=tuple(edges))


def to_dot(g: WhiteheadGraph, name: str = "whitehead") -> str:
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        lines.append(f'  {g.dot_name(v)} [label="{g.vertex_name(v)}"];')
    for a, b in g.edges:
        lines.append(f"  {g.dot_name(a)} -- {g.dot_name(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_record(g: WhiteheadGraph) -> WhiteheadGraphRecord:
    return WhiteheadGraphRecord(
        rank=g.rank,
        edges=[[g.dot_name(a), g.dot_name(b)] for a, b in g.edges],
    )


def to_json(g: WhiteheadGraph) -> str:
    return to_record(g).model_dump_json()
