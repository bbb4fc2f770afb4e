from collections.abc import Iterator

from epsilon_whitehead.free_group.models import Alphabet, CyclicWord, Letter, Word
from epsilon_whitehead.free_group.reduction import to_cyclic

Basis = tuple[Word, ...]


def _nielsen_moves(basis: Basis) -> Iterator[Basis]:
    """Elementary Nielsen moves: invert one element, or right-multiply it by another."""
    n = len(basis)
    for i in range(n):
        yield basis[:i] + (basis[i].inverse(),) + basis[i + 1 :]
    for i in range(n):
        for j in range(n):
            if i != j:
                yield basis[:i] + (basis[i] * basis[j],) + basis[i + 1 :]


def nielsen_primitive_corpus(alphabet: Alphabet, depth: int, max_len: int) -> set[CyclicWord]:
    """Cyclic reductions of the first basis element after at most depth Nielsen moves.

    Every element is primitive by construction; words longer than max_len are dropped.
    """
    initial: Basis = tuple(Word((Letter(g),)) for g in range(alphabet.rank))
    seen = {initial}
    frontier = [initial]
    for _ in range(depth):
        next_frontier: list[Basis] = []
        for basis in frontier:
            for moved in _nielsen_moves(basis):
                if moved not in seen:
                    seen.add(moved)
                    next_frontier.append(moved)
        frontier = next_frontier

    corpus: set[CyclicWord] = set()
    for basis in seen:
        c = to_cyclic(basis[0])
        if len(c) <= max_len:
            corpus.add(c)
    return corpus
