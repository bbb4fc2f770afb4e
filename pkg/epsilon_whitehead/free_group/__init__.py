from epsilon_whitehead.free_group.abelian import abelianize, homology_primitive
from epsilon_whitehead.free_group.automorphisms import (
    WhiteheadAut,
    apply_whitehead_aut,
    enumerate_whitehead_auts,
    whitehead_aut_count,
)
from epsilon_whitehead.free_group.models import (
    NEGATIVE,
    POSITIVE,
    AbelianVector,
    Alphabet,
    AlphabetMismatchError,
    CyclicWord,
    EmptyBaseError,
    InvalidAlphabetError,
    Letter,
    MalformedExponentError,
    RankGuardExceededError,
    UnknownGeneratorError,
    Word,
    WordError,
)
from epsilon_whitehead.free_group.parsing import parse_word, serialize
from epsilon_whitehead.free_group.reduction import cyclic_length, cyclic_reduce, free_reduce, to_cyclic

__all__ = [
    "NEGATIVE",
    "POSITIVE",
    "AbelianVector",
    "Alphabet",
    "AlphabetMismatchError",
    "CyclicWord",
    "EmptyBaseError",
    "InvalidAlphabetError",
    "Letter",
    "MalformedExponentError",
    "RankGuardExceededError",
    "UnknownGeneratorError",
    "WhiteheadAut",
    "Word",
    "WordError",
    "abelianize",
    "apply_whitehead_aut",
    "cyclic_length",
    "cyclic_reduce",
    "enumerate_whitehead_auts",
    "free_reduce",
    "homology_primitive",
    "parse_word",
    "serialize",
    "to_cyclic",
    "whitehead_aut_count",
]
