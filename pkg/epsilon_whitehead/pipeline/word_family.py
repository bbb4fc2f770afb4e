from epsilon_whitehead.free_group.models import NEGATIVE, Alphabet, Letter, Word
from epsilon_whitehead.geometry.construction import GAMMA, loop_edge
from epsilon_whitehead.geometry.models import InvalidParameterError


def wk_alphabet(k: int) -> Alphabet:
    """Generators a1..a_2k followed by g for the closing arc."""
    if k < 1:
        raise InvalidParameterError(f"k must be a positive integer, got {k}")
    return Alphabet((*(loop_edge(i) for i in range(1, 2 * k + 1)), GAMMA))


def gen_wk(k: int) -> Word:
    """w_k = a1 a2 a1 . a2 a3 a2 ... a_(2k-1) a_2k a_(2k-1) . a_2k g a1 g^-1 a_2k g."""
    alphabet = wk_alphabet(k)
    n = 2 * k

    def a(i: int) -> Letter:
        return alphabet.letter(loop_edge(i))

    g = alphabet.letter(GAMMA)
    letters: list[Letter] = []
    for i in range(1, n):
        letters.extend((a(i), a(i + 1), a(i)))
    letters.extend((a(n), g, a(1), alphabet.letter(GAMMA, NEGATIVE), a(n), g))
    return Word(tuple(letters))
