import random

import pytest

from epsilon_whitehead.free_group.models import (
    NEGATIVE,
    POSITIVE,
    Alphabet,
    EmptyBaseError,
    Letter,
    MalformedExponentError,
    UnknownGeneratorError,
    Word,
)
from epsilon_whitehead.free_group.parsing import MAX_EXPONENT, parse_word, serialize
from epsilon_whitehead.free_group.reduction import free_reduce, to_cyclic


@pytest.fixture
def alphabet() -> Alphabet:
    return Alphabet.standard(2)


class TestParseWord:
    def test_space_separated(self, alphabet: Alphabet):
        w = parse_word("a1 a2 a1", alphabet)
        assert w == Word((Letter(0), Letter(1), Letter(0)))

    def test_uppercase_is_inverse(self, alphabet: Alphabet):
        assert parse_word("A1", alphabet) == Word((Letter(0, NEGATIVE),))

    def test_caret_exponents(self, alphabet: Alphabet):
        assert parse_word("a1^3", alphabet) == Word((Letter(0),) * 3)
        assert parse_word("a2^-2", alphabet) == Word((Letter(1, NEGATIVE),) * 2)
        assert parse_word("a1^0", alphabet).is_identity()

    def test_star_separator(self, alphabet: Alphabet):
        assert parse_word("a1*a2", alphabet) == parse_word("a1 a2", alphabet)

    def test_reduces_freely(self, alphabet: Alphabet):
        assert parse_word("a1 a2 a2^-1 a1^-1", alphabet).is_identity()

    def test_empty_text(self, alphabet: Alphabet):
        assert parse_word("   ", alphabet).is_identity()

    def test_empty_base(self, alphabet: Alphabet):
        with pytest.raises(EmptyBaseError):
            parse_word("a1 ^2", alphabet)

    def test_unknown_generator(self, alphabet: Alphabet):
        with pytest.raises(UnknownGeneratorError, match="a3"):
            parse_word("a1 a3", alphabet)

    def test_malformed_name(self, alphabet: Alphabet):
        with pytest.raises(UnknownGeneratorError, match="malformed"):
            parse_word("1a", alphabet)

    def test_malformed_exponent(self, alphabet: Alphabet):
        with pytest.raises(MalformedExponentError):
            parse_word("a1^x", alphabet)

    def test_exponent_cap(self, alphabet: Alphabet):
        assert len(parse_word(f"a1^{MAX_EXPONENT}", alphabet)) == MAX_EXPONENT
        with pytest.raises(MalformedExponentError, match="larger than"):
            parse_word(f"a1^{MAX_EXPONENT + 1}", alphabet)
        with pytest.raises(MalformedExponentError, match="larger than"):
            parse_word("a1^-999999999", alphabet)
        with pytest.raises(MalformedExponentError, match="larger than"):
            parse_word("a2^" + "9" * 5000, alphabet)

    def test_leading_zeros(self, alphabet: Alphabet):
        assert parse_word("a1^0000002", alphabet) == parse_word("a1 a1", alphabet)


class TestSerialize:
    def test_inverse_notation(self, alphabet: Alphabet):
        assert serialize(parse_word("a1 a2 A1", alphabet), alphabet) == "a1 a2 a1^-1"

    def test_cyclic_word(self, alphabet: Alphabet):
        c = to_cyclic(parse_word("a2 a1 a1", alphabet))
        assert serialize(c, alphabet) == "a1 a1 a2"

    def test_reparses(self):
        alphabet = Alphabet.from_names(["a1", "a2", "g"])
        text = "a1 a2 a1 a2 g a1 g^-1 a2 g"
        assert serialize(parse_word(text, alphabet), alphabet) == text

    def test_random_round_trip(self):
        rng = random.Random(13)
        alphabet = Alphabet.from_names(["a1", "a2", "g"])
        for _ in range(500):
            letters = [
                Letter(rng.randrange(3), rng.choice((POSITIVE, NEGATIVE)))
                for _ in range(rng.randint(0, 20))
            ]
            w = free_reduce(letters)
            assert parse_word(serialize(w, alphabet), alphabet) == w
