from dataclasses import dataclass
from enum import Enum

from pydantic import BaseModel, Field

from epsilon_whitehead.free_group.automorphisms import WhiteheadAut
from epsilon_whitehead.free_group.models import Alphabet, CyclicWord
from epsilon_whitehead.free_group.parsing import serialize
from epsilon_whitehead.whitehead.classify import ConnectivityStatus
from epsilon_whitehead.whitehead.graph import WhiteheadGraph


class DecisionMethod(str, Enum):
    DESCENT = "descent"
    GRAPH = "graph"
    BOTH = "both"


@dataclass(frozen=True)
class DescentStep:
    automorphism: WhiteheadAut
    word: CyclicWord
    length: int


@dataclass(frozen=True)
class DescentTrace:
    """Whitehead moves from a start word; cyclic lengths strictly decrease."""

    start: CyclicWord
    steps: tuple[DescentStep, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def final(self) -> CyclicWord:
        return self.steps[-1].word if self.steps else self.start

    @property
    def lengths(self) -> list[int]:
        return [len(self.start)] + [step.length for step in self.steps]


@dataclass(frozen=True)
class WhiteheadScan:
    """Least image cyclic length per multiplier letter over every non-identity support.

    Entry i belongs to the multiplier with letter index i; masks[i] is the first support mask
    in enumeration order reaching lengths[i]. A multiplier with no non-identity support
    (rank 1) reports the word's own length and mask 0.
    """

    word: CyclicWord
    rank: int
    lengths: tuple[int, ...]
    masks: tuple[int, ...]

    @property
    def least_length(self) -> int:
        return min(self.lengths, default=len(self.word))

    def shortens(self) -> bool:
        return self.least_length < len(self.word)


@dataclass(frozen=True)
class PrimitiveCertificate:
    trace: DescentTrace


@dataclass(frozen=True)
class NonPrimitiveMinimalCertificate:
    """No enumerated type II automorphism shortens the final word of the trace.

    best_lengths holds the least image length per multiplier letter found by the final
    enumeration; it is empty for the empty word.
    """

    trace: DescentTrace
    automorphisms_checked: int
    best_lengths: tuple[int, ...] = ()

    @property
    def minimal_word(self) -> CyclicWord:
        return self.trace.final


@dataclass(frozen=True)
class NonPrimitiveGraphCertificate:
    word: CyclicWord
    graph: WhiteheadGraph
    status: ConnectivityStatus


PrimitivityCertificate = (
    PrimitiveCertificate | NonPrimitiveMinimalCertificate | NonPrimitiveGraphCertificate
)


@dataclass(frozen=True)
class PrimitivityResult:
    primitive: bool
    method: DecisionMethod
    certificates: tuple[PrimitivityCertificate, ...]

    @property
    def certificate(self) -> PrimitivityCertificate:
        """The descent certificate when descent ran, otherwise the graph witness."""
        return self.certificates[0]

    def find(self, kind: type[PrimitivityCertificate]) -> PrimitivityCertificate | None:
        return next((c for c in self.certificates if isinstance(c, kind)), None)


class TraceStepRecord(BaseModel):
    automorphism: str
    word: str
    length: int


class CertificateRecord(BaseModel):
    """JSON form of a primitivity verdict and its evidence."""

    verdict: str = Field(description="primitive or non_primitive")
    method: DecisionMethod
    trace: list[TraceStepRecord] = Field(default_factory=list)
    minimal_word: str | None = None
    graph_status: str | None = None
    automorphisms_checked: int | None = None
    multiplier_lengths: dict[str, int] | None = None


def certificate_record(result: PrimitivityResult, alphabet: Alphabet) -> CertificateRecord:
    record = CertificateRecord(
        verdict="primitive" if result.primitive else "non_primitive",
        method=result.method,
    )
    for cert in result.certificates:
        match cert:
            case PrimitiveCertificate(trace=trace):
                record.trace = _trace_records(trace, alphabet)
            case NonPrimitiveMinimalCertificate(trace=trace):
                record.trace = _trace_records(trace, alphabet)
                record.minimal_word = serialize(cert.minimal_word, alphabet)
                record.automorphisms_checked = cert.automorphisms_checked
                if cert.best_lengths:
                    record.multiplier_lengths = {
                        alphabet.letter_name(x): length
                        for x, length in zip(alphabet.letters(), cert.best_lengths, strict=True)
                    }
            case NonPrimitiveGraphCertificate(status=status):
                record.graph_status = status.kind.value
    return record


def _trace_records(trace: DescentTrace, alphabet: Alphabet) -> list[TraceStepRecord]:
    return [
        TraceStepRecord(
            automorphism=step.automorphism.describe(alphabet),
            word=serialize(step.word, alphabet),
            length=step.length,
        )
        for step in trace.steps
    ]
