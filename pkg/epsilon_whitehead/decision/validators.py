from dataclasses import dataclass, field

from epsilon_whitehead.config import WhiteheadConfig
from epsilon_whitehead.decision.models import (
    DescentTrace,
    NonPrimitiveGraphCertificate,
    NonPrimitiveMinimalCertificate,
    PrimitiveCertificate,
    PrimitivityCertificate,
    PrimitivityResult,
)
from epsilon_whitehead.decision.scan import measure_whitehead
from epsilon_whitehead.free_group.automorphisms import apply_whitehead_aut
from epsilon_whitehead.free_group.models import Alphabet, CyclicWord, Word
from epsilon_whitehead.free_group.reduction import to_cyclic
from epsilon_whitehead.whitehead.classify import classify
from epsilon_whitehead.whitehead.graph import build_whitehead_graph


@dataclass
class ValidationResult:
    is_valid: bool
    errors: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.is_valid

    def merge(self, other: "ValidationResult") -> "ValidationResult":
        """Merge another ValidationResult into this one."""
        return ValidationResult(
            is_valid=self.is_valid and other.is_valid,
            errors=self.errors + other.errors,
            warnings=self.warnings + other.warnings,
        )


def replay_trace(trace: DescentTrace, start: CyclicWord) -> ValidationResult:
    errors: list[str] = []

    if trace.start != start:
        errors.append("trace does not start at the cyclic reduction of the input")

    current = start
    for i, step in enumerate(trace.steps, 1):
        image = to_cyclic(apply_whitehead_aut(step.automorphism, current.as_word()))
        if image != step.word:
            errors.append(f"step {i}: automorphism does not produce the recorded word")
        if len(image) != step.length:
            errors.append(f"step {i}: recorded length {step.length}, actual {len(image)}")
        if len(image) >= len(current):
            errors.append(f"step {i}: cyclic length did not decrease")
        current = image

    return ValidationResult(is_valid=len(errors) == 0, errors=errors)


def validate_primitive(cert: PrimitiveCertificate, start: CyclicWord) -> ValidationResult:
    result = replay_trace(cert.trace, start)
    if len(cert.trace.final) != 1:
        result = result.merge(
            ValidationResult(is_valid=False, errors=["trace does not end at cyclic length 1"])
        )
    return result


def validate_minimal(
    cert: NonPrimitiveMinimalCertificate,
    start: CyclicWord,
    alphabet: Alphabet,
    config: WhiteheadConfig | None = None,
) -> ValidationResult:
    result = replay_trace(cert.trace, start)
    errors: list[str] = []
    warnings: list[str] = []

    minimal = cert.minimal_word
    if len(minimal) == 1:
        errors.append("minimal word has cyclic length 1")
    elif len(minimal) == 0:
        warnings.append("empty word is non-primitive by definition")
    else:
        measured = measure_whitehead(minimal, alphabet, config)
        if measured.shortens():
            errors.append("a Whitehead automorphism still shortens the minimal word")
        if cert.best_lengths and cert.best_lengths != measured.lengths:
            errors.append("recorded per-multiplier lengths differ from a fresh enumeration")

    return result.merge(ValidationResult(is_valid=not errors, errors=errors, warnings=warnings))


def validate_graph(cert: NonPrimitiveGraphCertificate, alphabet: Alphabet) -> ValidationResult:
    errors: list[str] = []

    if len(cert.word) < 2:
        errors.append("graph certificates require cyclic length >= 2")
    graph = build_whitehead_graph(cert.word, alphabet)
    if graph.edge_multiset() != cert.graph.edge_multiset():
        errors.append("recorded graph differs from the graph of the word")
    if not classify(graph).is_two_connected:
        errors.append("Whitehead graph is not two-connected")

    return ValidationResult(is_valid=len(errors) == 0, errors=errors)


def check_certificate(
    w: Word,
    alphabet: Alphabet,
    certificate: PrimitivityCertificate,
    config: WhiteheadConfig | None = None,
) -> ValidationResult:
    """Re-verify one certificate for w from scratch."""
    start = to_cyclic(w)
    match certificate:
        case PrimitiveCertificate():
            return validate_primitive(certificate, start)
        case NonPrimitiveMinimalCertificate():
            return validate_minimal(certificate, start, alphabet, config)
        case NonPrimitiveGraphCertificate():
            result = validate_graph(certificate, alphabet)
            if certificate.word != start:
                result = result.merge(
                    ValidationResult(is_valid=False, errors=["witness word differs from input"])
                )
            return result


def check_result(
    w: Word,
    alphabet: Alphabet,
    result: PrimitivityResult,
    config: WhiteheadConfig | None = None,
) -> ValidationResult:
    combined = ValidationResult(is_valid=True)
    for certificate in result.certificates:
        combined = combined.merge(check_certificate(w, alphabet, certificate, config))
    return combined
