import random

import pytest

from epsilon_whitehead.free_group.abelian import abelianize, homology_primitive
from epsilon_whitehead.free_group.models import (
    NEGATIVE,
    POSITIVE,
    AbelianVector,
    Alphabet,
    AlphabetMismatchError,
    CyclicWord,
    InvalidAlphabetError,
    Letter,
    UnknownGeneratorError,
    Word,
)
from epsilon_whitehead.free_group.reduction import (
    cyclic_length,
    cyclic_reduce,
    free_reduce,
    least_rotation,
    to_cyclic,
)

A1 = Letter(0, POSITIVE)
A1_INV = Letter(0, NEGATIVE)
A2 = Letter(1, POSITIVE)
A2_INV = Letter(1, NEGATIVE)


def random_word(rng: random.Random, rank: int, max_len: int) -> Word:
    letters = [
        Letter(rng.randrange(rank), rng.choice((POSITIVE, NEGATIVE)))
        for _ in range(rng.randint(0, max_len))
    ]
    return free_reduce(letters)


class TestLetter:
    def test_index_orders_plus_before_minus(self):
        assert A1.index == 0
        assert A1_INV.index == 1
        assert A2.index == 2
        assert A2_INV.index == 3

    def test_inverse(self):
        assert A1.inverse() == A1_INV
        assert A1.is_inverse_of(A1_INV)
        assert not A1.is_inverse_of(A2_INV)

    def test_rejects_bad_sign(self):
        with pytest.raises(ValueError, match="sign"):
            Letter(0, 2)


class TestAlphabet:
    def test_standard(self):
        alphabet = Alphabet.standard(3)
        assert alphabet.names == ("a1", "a2", "a3")
        assert alphabet.rank == 3
        assert len(alphabet.letters()) == 6

    def test_letter_lookup(self):
        alphabet = Alphabet.from_names(["x", "y"])
        assert alphabet.letter("y", NEGATIVE) == Letter(1, NEGATIVE)
        assert alphabet.letter_name(Letter(1, NEGATIVE)) == "y^-1"

    def test_unknown_generator(self):
        with pytest.raises(UnknownGeneratorError, match="unknown generator"):
            Alphabet.standard(2).index_of("a3")

    def test_empty_alphabet(self):
        with pytest.raises(InvalidAlphabetError, match="at least one"):
            Alphabet(())

    def test_duplicate_names(self):
        with pytest.raises(InvalidAlphabetError, match="duplicate"):
            Alphabet(("a", "a"))

    def test_uppercase_initial_rejected(self):
        with pytest.raises(InvalidAlphabetError, match="lowercase"):
            Alphabet(("A1",))


class TestWord:
    def test_rejects_unreduced_letters(self):
        with pytest.raises(ValueError, match="freely reduced"):
            Word((A1, A1_INV))

    def test_product_reduces(self):
        u = Word((A1, A2))
        v = Word((A2_INV, A1))
        assert u * v == Word((A1, A1))

    def test_inverse(self):
        w = Word((A1, A2))
        assert w.inverse() == Word((A2_INV, A1_INV))
        assert (w * w.inverse()).is_identity()

    def test_cyclic_word_rejects_wraparound_cancellation(self):
        with pytest.raises(ValueError, match="cyclically reduced"):
            CyclicWord((A1, A2, A1_INV))

    def test_circular_pairs_include_wraparound(self):
        c = CyclicWord((A1, A2))
        assert list(c.circular_pairs()) == [(A1, A2), (A2, A1)]


class TestFreeReduce:
    def test_cancels_nested_pairs(self):
        assert free_reduce([A1, A2, A2_INV, A1_INV, A2]) == Word((A2,))

    def test_empty(self):
        assert free_reduce([]).is_identity()

    def test_idempotent_and_subadditive(self):
        rng = random.Random(3)
        for _ in range(1000):
            rank = rng.randint(1, 4)
            u = random_word(rng, rank, 16)
            v = random_word(rng, rank, 16)
            assert free_reduce(u.letters) == u
            product = free_reduce(u.letters + v.letters)
            assert free_reduce(product.letters) == product
            assert len(product) <= len(u) + len(v)


class TestCyclicReduce:
    def test_strips_conjugator(self):
        w = Word((A2, A1, A2_INV))
        c, conjugator = cyclic_reduce(w)
        assert c == CyclicWord((A1,))
        assert conjugator == Word((A2,))

    def test_canonical_rotation(self):
        assert to_cyclic(Word((A2, A1, A1))) == CyclicWord((A1, A1, A2))
        assert least_rotation([A2, A1, A1]) == 1

    def test_cyclic_length(self):
        assert cyclic_length([A2, A1, A1, A2_INV]) == 2
        assert cyclic_length([A2, A1, A2_INV]) == 1
        assert cyclic_length([]) == 0

    def test_conjugates_share_a_cyclic_word(self):
        w = Word((A1, A1, A2))
        conjugated = Word((A2_INV,)) * w * Word((A2,))
        assert to_cyclic(conjugated) == to_cyclic(w)

    def test_random_round_trip(self):
        rng = random.Random(7)
        for _ in range(1000):
            w = random_word(rng, rng.randint(1, 4), 16)
            c, conjugator = cyclic_reduce(w)
            assert conjugator * c.as_word() * conjugator.inverse() == w
            assert to_cyclic(c.as_word()) == c


class TestAbelianize:
    def test_counts_exponents(self):
        w = Word((A1, A2, A1, A2_INV, A2_INV))
        assert abelianize(w, Alphabet.standard(3)) == AbelianVector((2, -1, 0))

    def test_rank_mismatch(self):
        with pytest.raises(AlphabetMismatchError):
            abelianize(Word((A2,)), Alphabet.standard(1))

    def test_homology_primitive(self):
        assert homology_primitive(AbelianVector((3, 3, 1)))
        assert not homology_primitive(AbelianVector((2, 4)))
        assert not homology_primitive(AbelianVector.zero(2))

    def test_vector_rank_mismatch(self):
        with pytest.raises(AlphabetMismatchError):
            AbelianVector((1,)) + AbelianVector((1, 2))

    def test_additive_on_random_pairs(self):
        rng = random.Random(11)
        alphabet = Alphabet.standard(3)
        for _ in range(1000):
            u = random_word(rng, 3, 12)
            v = random_word(rng, 3, 12)
            assert abelianize(u * v, alphabet) == abelianize(u, alphabet) + abelianize(v, alphabet)
