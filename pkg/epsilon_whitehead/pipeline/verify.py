import logging
from fractions import Fraction

from pydantic import BaseModel, Field

from epsilon_whitehead.config import WhiteheadConfig
from epsilon_whitehead.decision.descent import is_primitive
from epsilon_whitehead.decision.models import CertificateRecord, DecisionMethod, certificate_record
from epsilon_whitehead.free_group.abelian import abelianize, homology_primitive
from epsilon_whitehead.free_group.parsing import serialize
from epsilon_whitehead.free_group.reduction import to_cyclic
from epsilon_whitehead.geometry.construction import build_fk, canonical_tree
from epsilon_whitehead.geometry.epsilon import epsilon, find_k_for_epsilon
from epsilon_whitehead.geometry.tracing import trace_word
from epsilon_whitehead.pipeline.word_family import gen_wk, wk_alphabet
from epsilon_whitehead.utils.rationals import RationalRecord, rational_record
from epsilon_whitehead.whitehead.classify import GraphStatus, classify
from epsilon_whitehead.whitehead.graph import build_whitehead_graph

logger = logging.getLogger(__name__)


class VerificationReport(BaseModel):
    """Everything checked for one member of the word family."""

    k: int = Field(ge=1)
    word: str
    length: int
    abelianization: list[int]
    homology_primitive: bool
    graph_status: GraphStatus
    primitive: bool
    method: DecisionMethod
    certificates: list[CertificateRecord]
    epsilon: RationalRecord | None = None
    surjective: bool | None = None
    trace_matches: bool | None = None

    @property
    def epsilon_value(self) -> Fraction | None:
        if self.epsilon is None:
            return None
        return Fraction(self.epsilon.num, self.epsilon.den)

    def is_consistent(self) -> bool:
        if self.graph_status == GraphStatus.TWO_CONNECTED and self.length >= 2 and self.primitive:
            return False
        return self.homology_primitive or not self.primitive


def verify(k: int, config: WhiteheadConfig | None = None) -> VerificationReport:
    """Run the algebraic and geometric checks for w_k.

    Descent runs when the rank 2k+1 is within the guard; beyond it the graph certificate
    alone settles the verdict.

    Raises:
        InvalidParameterError: if k < 1
        UndecidedError: if the rank is above the guard and the graph is not two-connected
    """
    config = config or WhiteheadConfig()
    alphabet = wk_alphabet(k)
    w = gen_wk(k)

    vector = abelianize(w, alphabet)
    status = classify(build_whitehead_graph(to_cyclic(w), alphabet))
    result = is_primitive(w, alphabet, config)
    logger.info("k=%d: rank %d, graph %s, method %s", k, alphabet.rank, status.kind.value, result.method.value)

    loop = build_fk(k)
    eps = epsilon(loop)
    traced = trace_word(loop, canonical_tree(k), alphabet)

    return VerificationReport(
        k=k,
        word=serialize(w, alphabet),
        length=len(w),
        abelianization=list(vector.entries),
        homology_primitive=homology_primitive(vector),
        graph_status=status.kind,
        primitive=result.primitive,
        method=result.method,
        certificates=[certificate_record(result, alphabet)],
        epsilon=rational_record(eps, unit="2pi", with_decimal=True),
        surjective=loop.is_surjective(),
        trace_matches=traced == w,
    )


def verify_for_epsilon(
    eps: Fraction, config: WhiteheadConfig | None = None
) -> VerificationReport:
    """Find the least k with epsilon(f_k) < eps (circle units) and verify it."""
    config = config or WhiteheadConfig()
    k = find_k_for_epsilon(eps, config)
    logger.info("epsilon %s reached at k=%d", eps, k)
    return verify(k, config)
