from epsilon_whitehead.decision.descent import is_primitive
from epsilon_whitehead.decision.models import (
    DescentTrace,
    NonPrimitiveGraphCertificate,
    NonPrimitiveMinimalCertificate,
    PrimitiveCertificate,
)
from epsilon_whitehead.decision.validators import (
    ValidationResult,
    check_certificate,
    check_result,
    replay_trace,
)
from epsilon_whitehead.free_group.models import Alphabet
from epsilon_whitehead.free_group.parsing import parse_word
from epsilon_whitehead.free_group.reduction import to_cyclic
from epsilon_whitehead.pipeline.word_family import gen_wk, wk_alphabet


class TestValidationResult:
    def test_valid_is_truthy(self):
        result = ValidationResult(is_valid=True)
        assert result
        assert bool(result) is True

    def test_invalid_is_falsy(self):
        result = ValidationResult(is_valid=False)
        assert not result

    def test_merge_keeps_warnings(self):
        r1 = ValidationResult(is_valid=True, warnings=["warn1"])
        r2 = ValidationResult(is_valid=True, warnings=["warn2"])
        merged = r1.merge(r2)
        assert merged.is_valid
        assert merged.warnings == ["warn1", "warn2"]

    def test_merge_invalid_result(self):
        merged = ValidationResult(is_valid=True).merge(
            ValidationResult(is_valid=False, errors=["error1"])
        )
        assert not merged.is_valid
        assert "error1" in merged.errors


class TestCheckCertificate:
    def test_primitive_certificate_replays(self):
        alphabet = Alphabet.standard(2)
        w = parse_word("a1 a2 a1 a2 a2", alphabet)
        result = is_primitive(w, alphabet)
        assert result.primitive
        assert check_result(w, alphabet, result)

    def test_word_family_certificates_replay(self):
        alphabet = wk_alphabet(1)
        w = gen_wk(1)
        result = is_primitive(w, alphabet)
        assert len(result.certificates) == 2
        assert check_result(w, alphabet, result)

    def test_forged_primitive_certificate(self):
        alphabet = wk_alphabet(1)
        w = gen_wk(1)
        forged = PrimitiveCertificate(trace=DescentTrace(start=to_cyclic(w)))
        outcome = check_certificate(w, alphabet, forged)
        assert not outcome
        assert any("length 1" in e for e in outcome.errors)

    def test_forged_minimal_certificate(self):
        alphabet = Alphabet.standard(2)
        w = parse_word("a1 a2 a1", alphabet)
        forged = NonPrimitiveMinimalCertificate(
            trace=DescentTrace(start=to_cyclic(w)), automorphisms_checked=12
        )
        outcome = check_certificate(w, alphabet, forged)
        assert not outcome
        assert any("still shortens" in e for e in outcome.errors)

    def test_graph_witness_for_other_word(self):
        alphabet = wk_alphabet(1)
        witness = is_primitive(gen_wk(1), alphabet).find(NonPrimitiveGraphCertificate)
        assert isinstance(witness, NonPrimitiveGraphCertificate)
        other = parse_word("a1 a2 g", alphabet)
        outcome = check_certificate(other, alphabet, witness)
        assert not outcome
        assert "witness word differs from input" in outcome.errors

    def test_trace_from_wrong_start(self):
        alphabet = Alphabet.standard(2)
        trace = DescentTrace(start=to_cyclic(parse_word("a1 a1 a2", alphabet)))
        outcome = replay_trace(trace, to_cyclic(parse_word("a2", alphabet)))
        assert not outcome

    def test_recorded_lengths_must_match_enumeration(self):
        alphabet = Alphabet.standard(2)
        w = parse_word("a1 a2 A1 A2", alphabet)
        honest = is_primitive(w, alphabet).find(NonPrimitiveMinimalCertificate)
        assert isinstance(honest, NonPrimitiveMinimalCertificate)
        assert honest.best_lengths == (4, 4, 4, 4)
        assert check_certificate(w, alphabet, honest)

        forged = NonPrimitiveMinimalCertificate(
            trace=honest.trace,
            automorphisms_checked=honest.automorphisms_checked,
            best_lengths=(4, 4, 4, 6),
        )
        outcome = check_certificate(w, alphabet, forged)
        assert not outcome
        assert any("per-multiplier" in e for e in outcome.errors)
