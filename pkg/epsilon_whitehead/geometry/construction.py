from fractions import Fraction

from epsilon_whitehead.geometry.models import (
    BACKWARD,
    FORWARD,
    EdgeKind,
    InvalidParameterError,
    MetricEdge,
    MetricGraph,
    PLLoop,
    SpanningTree,
    Step,
)

GAMMA = "g"
STEPS_PER_BLOCK = 6


def vertex_name(i: int) -> str:
    return f"y{i}"


def loop_edge(i: int) -> str:
    return f"a{i}"


def arc_edge(i: int) -> str:
    return f"e{i}"


def _check_k(k: int) -> None:
    if k < 1:
        raise InvalidParameterError(f"k must be a positive integer, got {k}")


def edge_length(k: int) -> Fraction:
    """pi/(6k) in circle units."""
    return Fraction(1, 12 * k)


def build_Gk(k: int) -> MetricGraph:
    """Circle of 2k arcs y_i -> y_(i+1) with a small loop a_i at every y_i.

    Increasing index is the clockwise direction; every edge has length pi/(6k).
    """
    _check_k(k)
    n = 2 * k
    length = edge_length(k)
    vertices = tuple(vertex_name(i) for i in range(1, n + 1))
    edges: list[MetricEdge] = []
    for i in range(1, n + 1):
        y = vertex_name(i)
        edges.append(MetricEdge(loop_edge(i), y, y, length, EdgeKind.LOOP))
    for i in range(1, n + 1):
        edges.append(
            MetricEdge(arc_edge(i), vertex_name(i), vertex_name(i % n + 1), length, EdgeKind.ARC)
        )
    return MetricGraph(vertices=vertices, edges=tuple(edges))


def _block(first: int, second: int, arc: int) -> list[Step]:
    """Loop, arc out, loop, arc back, loop, arc out: the letters first, second, first."""
    return [
        Step(loop_edge(first), FORWARD),
        Step(arc_edge(arc), FORWARD),
        Step(loop_edge(second), FORWARD),
        Step(arc_edge(arc), BACKWARD),
        Step(loop_edge(first), FORWARD),
        Step(arc_edge(arc), FORWARD),
    ]


def build_fk(k: int) -> PLLoop:
    """The 12k-step loop f_k on G_k based at y_1."""
    _check_k(k)
    n = 2 * k
    steps: list[Step] = []
    for i in range(1, n):
        steps.extend(_block(i, i + 1, i))
    # The closing arc e_2k runs y_2k -> y_1, so a_1 here is seen from across gamma.
    steps.extend(_block(n, 1, n))
    return PLLoop(graph=build_Gk(k), steps=tuple(steps), start=vertex_name(1))


def canonical_tree(k: int) -> SpanningTree:
    """Tree {e_1, ..., e_(2k-1)}; loops read as a_i and the closing arc e_2k as gamma."""
    _check_k(k)
    n = 2 * k
    labels = {loop_edge(i): (f"a{i}", FORWARD) for i in range(1, n + 1)}
    labels[arc_edge(n)] = (GAMMA, FORWARD)
    return SpanningTree(
        graph=build_Gk(k),
        root=vertex_name(1),
        tree_edges=frozenset(arc_edge(i) for i in range(1, n)),
        labels=labels,
    )
