from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from epsilon_whitehead.config import WhiteheadConfig
from epsilon_whitehead.free_group.models import (
    Alphabet,
    AlphabetMismatchError,
    Letter,
    RankGuardExceededError,
    Word,
    letters_of_rank,
)

ImageTable = tuple[tuple[Letter, ...], ...]


@dataclass(frozen=True, slots=True)
class WhiteheadAut:
    """Type II Whitehead automorphism: multiplier letter a and a support set A containing a.

    Every letter x other than a, a^-1 maps to a^alpha * x * a^-beta, where alpha = 1 iff
    x is in A and beta = 1 iff x^-1 is in A.
    """

    rank: int
    multiplier: Letter
    support: frozenset[Letter]

    def __post_init__(self) -> None:
        if self.multiplier not in self.support:
            raise ValueError("the multiplier must belong to the support")
        if self.multiplier.inverse() in self.support:
            raise ValueError("the support must not contain the inverse of the multiplier")
        if any(x.gen >= self.rank for x in self.support):
            raise AlphabetMismatchError(f"support uses generators outside rank {self.rank}")

    @classmethod
    def from_mask(cls, rank: int, multiplier: Letter, mask: int) -> "WhiteheadAut":
        """Support is the multiplier plus the letters off its generator picked by mask bits."""
        others = _others(rank, multiplier)
        chosen = [x for i, x in enumerate(others) if mask >> i & 1]
        return cls(rank=rank, multiplier=multiplier, support=frozenset([multiplier, *chosen]))

    @property
    def bitmask(self) -> int:
        return sum(1 << x.index for x in self.support)

    @property
    def mask(self) -> int:
        """Inverse of from_mask: one bit per letter off the multiplier generator."""
        others = _others(self.rank, self.multiplier)
        return sum(1 << i for i, x in enumerate(others) if x in self.support)

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (*self.multiplier.sort_key, self.bitmask)

    def is_identity(self) -> bool:
        return len(self.support) == 1

    def inverse(self) -> "WhiteheadAut":
        a = self.multiplier
        return WhiteheadAut(
            rank=self.rank,
            multiplier=a.inverse(),
            support=(self.support - {a}) | {a.inverse()},
        )

    def image(self, x: Letter) -> tuple[Letter, ...]:
        a = self.multiplier
        if x.gen == a.gen:
            return (x,)
        head = (a,) if x in self.support else ()
        tail = (a.inverse(),) if x.inverse() in self.support else ()
        return (*head, x, *tail)

    def image_table(self) -> ImageTable:
        """Images of all 2n letters, indexed by Letter.index."""
        return tuple(self.image(x) for x in letters_of_rank(self.rank))

    def describe(self, alphabet: Alphabet) -> str:
        support = ", ".join(
            alphabet.letter_name(x) for x in sorted(self.support, key=lambda y: y.sort_key)
        )
        return f"({alphabet.letter_name(self.multiplier)}; {{{support}}})"


def apply_table(table: ImageTable, letters: Sequence[Letter]) -> list[Letter]:
    """Substitute images letter by letter and freely reduce on the fly."""
    out: list[Letter] = []
    for x in letters:
        for y in table[x.index]:
            if out and out[-1].is_inverse_of(y):
                out.pop()
            else:
                out.append(y)
    return out


def apply_whitehead_aut(aut: WhiteheadAut, w: Word) -> Word:
    if w.max_gen() >= aut.rank:
        raise AlphabetMismatchError(
            f"word uses generators outside the automorphism's rank {aut.rank}"
        )
    return Word(tuple(apply_table(aut.image_table(), w.letters)))


def whitehead_aut_count(rank: int) -> int:
    """Number of non-identity type II automorphisms: 2n * (2^(2n-2) - 1)."""
    return 2 * rank * (2 ** (2 * rank - 2) - 1)


def _others(rank: int, multiplier: Letter) -> list[Letter]:
    return [x for x in letters_of_rank(rank) if x.gen != multiplier.gen]


def check_rank_guard(alphabet: Alphabet, config: WhiteheadConfig | None = None) -> None:
    config = config or WhiteheadConfig()
    if alphabet.rank > config.rank_guard:
        raise RankGuardExceededError(alphabet.rank, config.rank_guard)


def _iter_auts(alphabet: Alphabet) -> Iterator[WhiteheadAut]:
    rank = alphabet.rank
    for a in alphabet.letters():
        # Masks ascend, so full support bitmasks ascend as well.
        for mask in range(1, 2 ** (2 * rank - 2)):
            yield WhiteheadAut.from_mask(rank, a, mask)


def enumerate_whitehead_auts(
    alphabet: Alphabet,
    config: WhiteheadConfig | None = None,
) -> Iterator[WhiteheadAut]:
    """Every non-identity type II automorphism, in tie-break order.

    Order: multiplier generator index, multiplier sign (+ first), support bitmask.
    Type I automorphisms (permutations and inversions) are not produced.

    Raises:
        RankGuardExceededError: if the rank is above the configured guard
    """
    check_rank_guard(alphabet, config)
    return _iter_auts(alphabet)
