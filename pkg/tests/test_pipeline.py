import json
from fractions import Fraction

import pytest

from epsilon_whitehead.config import WhiteheadConfig
from epsilon_whitehead.decision.models import DecisionMethod
from epsilon_whitehead.free_group.abelian import abelianize
from epsilon_whitehead.free_group.parsing import serialize
from epsilon_whitehead.free_group.reduction import to_cyclic
from epsilon_whitehead.geometry.models import InvalidParameterError
from epsilon_whitehead.pipeline.verify import verify, verify_for_epsilon
from epsilon_whitehead.pipeline.word_family import gen_wk, wk_alphabet
from epsilon_whitehead.whitehead.classify import GraphStatus


class TestWordFamily:
    def test_w1(self):
        assert serialize(gen_wk(1), wk_alphabet(1)) == "a1 a2 a1 a2 g a1 g^-1 a2 g"

    def test_w2(self):
        assert serialize(gen_wk(2), wk_alphabet(2)) == (
            "a1 a2 a1 a2 a3 a2 a3 a4 a3 a4 g a1 g^-1 a4 g"
        )

    def test_lengths_and_canonical_form(self):
        for k in range(1, 51):
            w = gen_wk(k)
            assert len(w) == 6 * k + 3
            assert to_cyclic(w).letters == w.letters

    def test_alphabet(self):
        assert wk_alphabet(2).names == ("a1", "a2", "a3", "a4", "g")

    def test_abelianization(self):
        for k in range(1, 51):
            vector = abelianize(gen_wk(k), wk_alphabet(k))
            assert vector.entries == (3,) * (2 * k) + (1,)
            assert vector.gcd() == 1

    def test_k_must_be_positive(self):
        with pytest.raises(InvalidParameterError):
            gen_wk(0)


class TestVerify:
    def test_k1(self):
        report = verify(1)
        assert report.word == "a1 a2 a1 a2 g a1 g^-1 a2 g"
        assert report.length == 9
        assert report.abelianization == [3, 3, 1]
        assert report.homology_primitive
        assert report.graph_status == GraphStatus.TWO_CONNECTED
        assert not report.primitive
        assert report.method == DecisionMethod.BOTH
        assert report.epsilon_value == Fraction(5, 12)
        assert report.surjective
        assert report.trace_matches
        assert report.is_consistent()

    def test_k3_by_descent(self):
        report = verify(3)
        assert not report.primitive
        assert report.method == DecisionMethod.BOTH
        assert report.certificates[0].automorphisms_checked == 57330

    def test_k25_graph_only(self):
        report = verify(25)
        assert not report.primitive
        assert report.method == DecisionMethod.GRAPH
        assert report.certificates[0].trace == []
        assert report.epsilon_value == Fraction(3, 100)
        assert report.trace_matches

    def test_json_shape(self):
        data = json.loads(verify(1).model_dump_json())
        assert data["graph_status"] == "two_connected"
        assert data["epsilon"]["unit"] == "2pi"
        assert data["epsilon"]["num"] == 5
        assert data["epsilon"]["den"] == 12
        assert data["epsilon"]["decimal"] == pytest.approx(5 / 12)

    def test_deterministic(self):
        assert verify(2).model_dump_json() == verify(2).model_dump_json()

    @pytest.mark.parametrize(
        "eps", [Fraction(1), Fraction(1, 2), Fraction(1, 10), Fraction(1, 100)]
    )
    def test_for_epsilon(self, eps: Fraction):
        report = verify_for_epsilon(eps)
        assert report.epsilon_value is not None
        assert report.epsilon_value < eps
        assert not report.primitive

    def test_small_guard_uses_graph(self):
        report = verify(1, WhiteheadConfig(rank_guard=2))
        assert report.method == DecisionMethod.GRAPH
