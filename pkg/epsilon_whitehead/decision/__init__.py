from epsilon_whitehead.decision.descent import (
    DecisionError,
    UndecidedError,
    best_move,
    graph_certificate,
    is_primitive,
    minimize,
    reduce_once,
    reduce_once_naive,
)
from epsilon_whitehead.decision.models import (
    CertificateRecord,
    DecisionMethod,
    DescentStep,
    DescentTrace,
    NonPrimitiveGraphCertificate,
    NonPrimitiveMinimalCertificate,
    PrimitiveCertificate,
    PrimitivityCertificate,
    PrimitivityResult,
    WhiteheadScan,
    certificate_record,
)
from epsilon_whitehead.decision.nielsen import nielsen_primitive_corpus
from epsilon_whitehead.decision.scan import measure_whitehead, scan_whitehead
from epsilon_whitehead.decision.validators import (
    ValidationResult,
    check_certificate,
    check_result,
    replay_trace,
)

__all__ = [
    "CertificateRecord",
    "DecisionError",
    "DecisionMethod",
    "DescentStep",
    "DescentTrace",
    "NonPrimitiveGraphCertificate",
    "NonPrimitiveMinimalCertificate",
    "PrimitiveCertificate",
    "PrimitivityCertificate",
    "PrimitivityResult",
    "UndecidedError",
    "ValidationResult",
    "WhiteheadScan",
    "best_move",
    "certificate_record",
    "check_certificate",
    "check_result",
    "graph_certificate",
    "is_primitive",
    "measure_whitehead",
    "minimize",
    "nielsen_primitive_corpus",
    "reduce_once",
    "reduce_once_naive",
    "replay_trace",
    "scan_whitehead",
]
