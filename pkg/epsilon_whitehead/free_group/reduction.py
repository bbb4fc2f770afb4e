from collections.abc import Iterable, Sequence

from epsilon_whitehead.free_group.models import CyclicWord, Letter, Word, reduce_letters


def free_reduce(letters: Iterable[Letter]) -> Word:
    return Word(tuple(reduce_letters(letters)))


def cyclic_core_bounds(letters: Sequence[Letter]) -> tuple[int, int]:
    """(start, stop) of the cyclically reduced core of a freely reduced sequence."""
    start, stop = 0, len(letters)
    while stop - start > 1 and letters[start].is_inverse_of(letters[stop - 1]):
        start += 1
        stop -= 1
    return start, stop


def cyclic_length(letters: Sequence[Letter]) -> int:
    start, stop = cyclic_core_bounds(letters)
    return stop - start


def least_rotation(letters: Sequence[Letter]) -> int:
    """Offset of the lexicographically least rotation, generator index first, + before -."""
    n = len(letters)
    if n < 2:
        return 0
    keys = [x.sort_key for x in letters]
    doubled = keys + keys
    return min(range(n), key=lambda r: doubled[r : r + n])


def cyclic_reduce(w: Word) -> tuple[CyclicWord, Word]:
    """Split w as conjugator * c * conjugator^-1 with c cyclically reduced and canonical."""
    letters = w.letters
    start, stop = cyclic_core_bounds(letters)
    core = letters[start:stop]
    r = least_rotation(core)
    rotated = core[r:] + core[:r]
    conjugator = free_reduce(letters[:start] + core[:r])
    return CyclicWord(rotated), conjugator


def to_cyclic(w: Word) -> CyclicWord:
    return cyclic_reduce(w)[0]
