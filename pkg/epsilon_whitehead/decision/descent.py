import logging

from epsilon_whitehead.config import WhiteheadConfig
from epsilon_whitehead.decision.models import (
    DecisionMethod,
    DescentStep,
    DescentTrace,
    NonPrimitiveGraphCertificate,
    NonPrimitiveMinimalCertificate,
    PrimitiveCertificate,
    PrimitivityCertificate,
    PrimitivityResult,
    WhiteheadScan,
)
from epsilon_whitehead.decision.scan import measure_whitehead, scan_whitehead
from epsilon_whitehead.free_group.automorphisms import (
    WhiteheadAut,
    apply_whitehead_aut,
    whitehead_aut_count,
)
from epsilon_whitehead.free_group.models import Alphabet, CyclicWord, Word, letters_of_rank
from epsilon_whitehead.free_group.parsing import serialize
from epsilon_whitehead.free_group.reduction import to_cyclic
from epsilon_whitehead.whitehead.classify import classify
from epsilon_whitehead.whitehead.graph import build_whitehead_graph

logger = logging.getLogger(__name__)


class DecisionError(Exception):
    pass


class UndecidedError(DecisionError):
    def __init__(self, rank: int, guard: int):
        super().__init__(
            f"undecided at rank {rank}: above the enumeration guard {guard} "
            "and the Whitehead graph gives no certificate"
        )
        self.rank = rank
        self.guard = guard


def best_move(scan: WhiteheadScan) -> tuple[WhiteheadAut, CyclicWord] | None:
    """The tie-break winner of a scan and its image, or None if nothing shortens the word."""
    if not scan.shortens():
        return None
    i = scan.lengths.index(scan.least_length)
    aut = WhiteheadAut.from_mask(scan.rank, letters_of_rank(scan.rank)[i], scan.masks[i])
    image = to_cyclic(apply_whitehead_aut(aut, scan.word.as_word()))
    if len(image) != scan.least_length:
        raise DecisionError(
            f"scan predicted cyclic length {scan.least_length}, the chosen move gives {len(image)}"
        )
    return aut, image


def reduce_once(
    c: CyclicWord,
    alphabet: Alphabet,
    config: WhiteheadConfig | None = None,
) -> tuple[WhiteheadAut, CyclicWord] | None:
    """Apply the type II automorphism with the largest cyclic-length drop, if any.

    Ties go to the first candidate in enumeration order: multiplier letter index, then
    support mask.

    Raises:
        RankGuardExceededError: if the rank is above the configured guard
    """
    return best_move(scan_whitehead(c, alphabet, config))


def reduce_once_naive(
    c: CyclicWord,
    alphabet: Alphabet,
    config: WhiteheadConfig | None = None,
) -> tuple[WhiteheadAut, CyclicWord] | None:
    """reduce_once by applying and measuring every candidate automorphism."""
    return best_move(measure_whitehead(c, alphabet, config))


def _descend(
    start: CyclicWord,
    alphabet: Alphabet,
    config: WhiteheadConfig | None,
) -> tuple[DescentTrace, WhiteheadScan]:
    current = start
    steps: list[DescentStep] = []
    while True:
        scan = scan_whitehead(current, alphabet, config)
        move = best_move(scan)
        if move is None:
            return DescentTrace(start=start, steps=tuple(steps)), scan
        aut, current = move
        steps.append(DescentStep(automorphism=aut, word=current, length=len(current)))
        logger.debug(
            "descent step %d: %s -> %s (length %d)",
            len(steps),
            aut.describe(alphabet),
            serialize(current, alphabet),
            len(current),
        )


def minimize(
    w: Word,
    alphabet: Alphabet,
    config: WhiteheadConfig | None = None,
) -> tuple[CyclicWord, DescentTrace]:
    """Greedy Whitehead descent to a word of minimal cyclic length in the orbit."""
    trace, _ = _descend(to_cyclic(w), alphabet, config)
    return trace.final, trace


def graph_certificate(c: CyclicWord, alphabet: Alphabet) -> NonPrimitiveGraphCertificate | None:
    """A two-connected Whitehead graph witness, offered only for cyclic length >= 2."""
    if len(c) < 2:
        return None
    graph = build_whitehead_graph(c, alphabet)
    status = classify(graph)
    if not status.is_two_connected:
        return None
    return NonPrimitiveGraphCertificate(word=c, graph=graph, status=status)


def is_primitive(
    w: Word,
    alphabet: Alphabet,
    config: WhiteheadConfig | None = None,
) -> PrimitivityResult:
    """Decide whether w belongs to some free basis.

    Descent runs whenever the rank is within the guard; the graph witness is attached
    independently whenever the Whitehead graph is two-connected.

    Raises:
        UndecidedError: if the rank is above the guard and there is no graph certificate
    """
    config = config or WhiteheadConfig()
    c = to_cyclic(w)

    if len(c) == 0:
        certificate = NonPrimitiveMinimalCertificate(
            trace=DescentTrace(start=c), automorphisms_checked=0
        )
        return PrimitivityResult(
            primitive=False, method=DecisionMethod.DESCENT, certificates=(certificate,)
        )
    if len(c) == 1:
        return PrimitivityResult(
            primitive=True,
            method=DecisionMethod.DESCENT,
            certificates=(PrimitiveCertificate(trace=DescentTrace(start=c)),),
        )

    graph_cert = graph_certificate(c, alphabet)

    if alphabet.rank > config.rank_guard:
        if graph_cert is None:
            raise UndecidedError(alphabet.rank, config.rank_guard)
        logger.info("rank %d above guard; non-primitive by graph certificate", alphabet.rank)
        return PrimitivityResult(
            primitive=False, method=DecisionMethod.GRAPH, certificates=(graph_cert,)
        )

    trace, final_scan = _descend(c, alphabet, config)
    minimal = trace.final
    if len(minimal) == 1:
        if graph_cert is not None:
            raise DecisionError("descent reached a basis element but the graph is two-connected")
        logger.info("primitive after %d descent steps", len(trace))
        return PrimitivityResult(
            primitive=True,
            method=DecisionMethod.DESCENT,
            certificates=(PrimitiveCertificate(trace=trace),),
        )

    certificates: tuple[PrimitivityCertificate, ...] = (
        NonPrimitiveMinimalCertificate(
            trace=trace,
            automorphisms_checked=whitehead_aut_count(alphabet.rank),
            best_lengths=final_scan.lengths,
        ),
    )
    method = DecisionMethod.DESCENT
    if graph_cert is not None:
        certificates = (*certificates, graph_cert)
        method = DecisionMethod.BOTH
    logger.info("non-primitive: minimal cyclic length %d (%s)", len(minimal), method.value)
    return PrimitivityResult(primitive=False, method=method, certificates=certificates)
