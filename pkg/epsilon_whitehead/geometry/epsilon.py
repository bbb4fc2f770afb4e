import logging
import math
from collections.abc import Iterable
from fractions import Fraction
from itertools import combinations

from epsilon_whitehead.config import WhiteheadConfig
from epsilon_whitehead.geometry.construction import build_fk
from epsilon_whitehead.geometry.models import (
    FORWARD,
    CirclePoint,
    GeometryError,
    GraphPoint,
    InvalidParameterError,
    PLLoop,
)

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)

# A preimage point on an edge moves as c + d * offset around the circle.
Track = tuple[Fraction, int]


def evaluate(loop: PLLoop, theta: CirclePoint) -> GraphPoint:
    m = len(loop)
    scaled = theta.position * m
    i = math.floor(scaled)
    step = loop.steps[i]
    length = loop.graph.edge(step.edge).length
    along = (scaled - i) * length
    offset = along if step.direction == FORWARD else length - along
    return GraphPoint(edge=step.edge, offset=offset)


def preimage(loop: PLLoop, p: GraphPoint) -> set[CirclePoint]:
    """All circle points mapped to p.

    A vertex collects the step boundaries where the loop passes through it; an interior
    point gets one preimage per step covering its edge. Uncovered edges give the empty set.
    """
    m = len(loop)
    vertex = loop.graph.vertex_at(p)
    if vertex is not None:
        return {CirclePoint(Fraction(i, m)) for i in range(m) if loop.step_start(i) == vertex}

    length = loop.graph.edge(p.edge).length
    points: set[CirclePoint] = set()
    for i in loop.steps_on(p.edge):
        along = p.offset if loop.steps[i].direction == FORWARD else length - p.offset
        points.add(CirclePoint((i + along / length) / m))
    return points


def diameter(points: Iterable[CirclePoint]) -> Fraction:
    return max(
        (p.distance(q) for p, q in combinations(points, 2)),
        default=Fraction(0),
    )


def _tracks(loop: PLLoop, edge_id: str) -> list[Track]:
    m = len(loop)
    tracks: list[Track] = []
    for i in loop.steps_on(edge_id):
        if loop.steps[i].direction == FORWARD:
            tracks.append((Fraction(i, m), 1))
        else:
            tracks.append((Fraction(i + 1, m), -1))
    return tracks


def _half_turn_offsets(first: Track, second: Track, length: Fraction) -> list[Fraction]:
    """Offsets in [0, length] where the two tracks sit exactly half a turn apart."""
    (c1, d1), (c2, d2) = first, second
    slope = d2 - d1
    if slope == 0:
        return []
    gap = c2 - c1
    lo, hi = sorted((gap, gap + slope * length))
    return [
        (HALF + j - gap) / slope
        for j in range(math.ceil(lo - HALF), math.floor(hi - HALF) + 1)
    ]


def _edge_supremum(loop: PLLoop, edge_id: str) -> Fraction:
    """Sup of preimage diameters over the open edge.

    Pairwise arc distances are piecewise affine in the offset and only peak where a raw
    gap equals half a turn, so the sup is a max over endpoints and those offsets.
    """
    tracks = _tracks(loop, edge_id)
    if len(tracks) < 2:
        return Fraction(0)
    length = loop.graph.edge(edge_id).length
    offsets = {Fraction(0), length}
    for first, second in combinations(tracks, 2):
        offsets.update(_half_turn_offsets(first, second, length))
    return max(
        diameter(CirclePoint((c + d * t) % 1) for c, d in tracks)
        for t in offsets
    )


def epsilon(loop: PLLoop) -> Fraction:
    """Exact sup of point-preimage diameters, in circle units (1 = 2*pi)."""
    edge_sups = (_edge_supremum(loop, edge_id) for edge_id in loop.graph.edge_ids)
    m = len(loop)
    by_vertex: dict[str, list[CirclePoint]] = {}
    for i in range(m):
        by_vertex.setdefault(loop.step_start(i), []).append(CirclePoint(Fraction(i, m)))
    vertex_diams = (diameter(points) for points in by_vertex.values())
    return max(max(edge_sups, default=Fraction(0)), max(vertex_diams, default=Fraction(0)))


def is_eps_map(loop: PLLoop, eps: Fraction) -> bool:
    return loop.is_surjective() and epsilon(loop) < eps


def sampled_epsilon(
    loop: PLLoop,
    probes: int | None = None,
    config: WhiteheadConfig | None = None,
) -> Fraction:
    """Max preimage diameter over probes + 1 evenly spaced points per edge, endpoints included.

    probes defaults to the configured probe_count.
    """
    if probes is None:
        probes = (config or WhiteheadConfig()).probe_count
    if probes < 1:
        raise InvalidParameterError(f"probe count must be positive, got {probes}")
    best = Fraction(0)
    for edge in loop.graph.edges:
        for j in range(probes + 1):
            point = GraphPoint(edge=edge.id, offset=edge.length * Fraction(j, probes))
            best = max(best, diameter(preimage(loop, point)))
    return best


def chord_length(arc: Fraction) -> float:
    """Chord of the unit circle subtending an arc given in circle units."""
    return 2 * math.sin(math.pi * float(arc))


def epsilon_of_fk(k: int) -> Fraction:
    return epsilon(build_fk(k))


def epsilon_table(k_max: int) -> list[tuple[int, Fraction]]:
    return [(k, epsilon_of_fk(k)) for k in range(1, k_max + 1)]


def find_k_for_epsilon(eps: Fraction, config: WhiteheadConfig | None = None) -> int:
    """Least k whose loop f_k is an eps-map; eps is in circle units.

    Since epsilon(f_k) <= 1/k, the search stops by ceil(1/eps) + 1.

    Raises:
        InvalidParameterError: if eps <= 0 or the bound exceeds the configured search cap
    """
    config = config or WhiteheadConfig()
    if eps <= 0:
        raise InvalidParameterError(f"epsilon must be positive, got {eps}")
    bound = math.ceil(1 / eps) + 1
    if bound > config.epsilon_search_cap:
        raise InvalidParameterError(
            f"epsilon {eps} needs k up to {bound}, above the search cap {config.epsilon_search_cap}"
        )
    for k in range(1, bound + 1):
        value = epsilon_of_fk(k)
        logger.debug("epsilon(f_%d) = %s", k, value)
        if value < eps:
            return k
    raise GeometryError(f"no k <= {bound} reaches epsilon {eps}")
