import math
import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import lru_cache
import sys

if sys.version_info >= (3, 11):
    from typing import Self
else:  # pragma: no cover
    from typing_extensions import Self

POSITIVE = 1
NEGATIVE = -1

NAME_PATTERN = re.compile(r"^[a-z][A-Za-z0-9]*$")


class WordError(Exception):
    pass


class InvalidAlphabetError(WordError):
    pass


class UnknownGeneratorError(WordError):
    pass


class MalformedExponentError(WordError):
    pass


class EmptyBaseError(WordError):
    pass


class AlphabetMismatchError(WordError):
    pass


class RankGuardExceededError(WordError):
    def __init__(self, rank: int, guard: int):
        super().__init__(f"rank {rank} exceeds the enumeration guard {guard}")
        self.rank = rank
        self.guard = guard


@dataclass(frozen=True, slots=True)
class Letter:
    """A generator or its inverse: generator index plus sign."""

    gen: int
    sign: int = POSITIVE

    def __post_init__(self) -> None:
        if self.gen < 0:
            raise ValueError(f"generator index must be non-negative, got {self.gen}")
        if self.sign not in (POSITIVE, NEGATIVE):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    @property
    def index(self) -> int:
        """Position in letter order: a1, a1^-1, a2, a2^-1, ..."""
        return 2 * self.gen + (0 if self.sign == POSITIVE else 1)

    @property
    def sort_key(self) -> tuple[int, int]:
        return (self.gen, 0 if self.sign == POSITIVE else 1)

    def inverse(self) -> "Letter":
        return Letter(self.gen, -self.sign)

    def is_inverse_of(self, other: "Letter") -> bool:
        return self.gen == other.gen and self.sign != other.sign


@dataclass(frozen=True, slots=True)
class Alphabet:
    """Ordered generator names of a free group; the rank is the number of names."""

    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.names:
            raise InvalidAlphabetError("alphabet must contain at least one generator")
        for name in self.names:
            if not NAME_PATTERN.match(name):
                raise InvalidAlphabetError(
                    f"generator name {name!r} must be an identifier starting with a lowercase letter"
                )
        if len(set(self.names)) != len(self.names):
            raise InvalidAlphabetError(f"duplicate generator names in {list(self.names)}")

    @classmethod
    def from_names(cls, names: Iterable[str]) -> Self:
        return cls(tuple(names))

    @classmethod
    def standard(cls, rank: int, prefix: str = "a") -> Self:
        return cls(tuple(f"{prefix}{i}" for i in range(1, rank + 1)))

    @property
    def rank(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownGeneratorError(
                f"unknown generator {name!r}; expected one of {', '.join(self.names)}"
            ) from None

    def letter(self, name: str, sign: int = POSITIVE) -> Letter:
        return Letter(self.index_of(name), sign)

    def letters(self) -> tuple[Letter, ...]:
        """All 2n letters in letter order."""
        return letters_of_rank(self.rank)

    def letter_name(self, letter: Letter) -> str:
        name = self.names[letter.gen]
        return name if letter.sign == POSITIVE else f"{name}^-1"


@lru_cache(maxsize=64)
def letters_of_rank(rank: int) -> tuple[Letter, ...]:
    return tuple(Letter(g, s) for g in range(rank) for s in (POSITIVE, NEGATIVE))


def reduce_letters(letters: Iterable[Letter]) -> list[Letter]:
    """Cancel adjacent inverse pairs with a single stack pass."""
    out: list[Letter] = []
    for x in letters:
        if out and out[-1].is_inverse_of(x):
            out.pop()
        else:
            out.append(x)
    return out


def _check_freely_reduced(letters: tuple[Letter, ...]) -> None:
    for left, right in zip(letters, letters[1:], strict=False):
        if left.is_inverse_of(right):
            raise ValueError("letters are not freely reduced")


@dataclass(frozen=True, slots=True)
class Word:
    """A freely reduced word. Build through free_reduce or parse_word."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        _check_freely_reduced(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, i: int) -> Letter:
        return self.letters[i]

    def __mul__(self, other: "Word") -> "Word":
        return Word(tuple(reduce_letters(self.letters + other.letters)))

    def inverse(self) -> "Word":
        return Word(tuple(x.inverse() for x in reversed(self.letters)))

    def is_identity(self) -> bool:
        return not self.letters

    def max_gen(self) -> int:
        return max((x.gen for x in self.letters), default=-1)


@dataclass(frozen=True, slots=True)
class CyclicWord:
    """A cyclically reduced word stored as its least rotation."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        _check_freely_reduced(self.letters)
        if len(self.letters) > 1 and self.letters[-1].is_inverse_of(self.letters[0]):
            raise ValueError("letters are not cyclically reduced")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def as_word(self) -> Word:
        return Word(self.letters)

    def circular_pairs(self) -> Iterator[tuple[Letter, Letter]]:
        """Adjacent pairs read circularly, the wraparound (last, first) included."""
        n = len(self.letters)
        for i in range(n):
            yield self.letters[i], self.letters[(i + 1) % n]


@dataclass(frozen=True, slots=True)
class AbelianVector:
    """Exponent sum per generator."""

    entries: tuple[int, ...]

    @classmethod
    def zero(cls, rank: int) -> Self:
        return cls((0,) * rank)

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __add__(self, other: "AbelianVector") -> "AbelianVector":
        if self.rank != other.rank:
            raise AlphabetMismatchError(f"rank {self.rank} vector added to rank {other.rank}")
        return AbelianVector(tuple(a + b for a, b in zip(self.entries, other.entries, strict=True)))

    def gcd(self) -> int:
        return math.gcd(*self.entries) if self.entries else 0
