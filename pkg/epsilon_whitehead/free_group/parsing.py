import re

from epsilon_whitehead.free_group.models import (
    NEGATIVE,
    POSITIVE,
    Alphabet,
    CyclicWord,
    EmptyBaseError,
    Letter,
    MalformedExponentError,
    UnknownGeneratorError,
    Word,
)
from epsilon_whitehead.free_group.reduction import free_reduce

SEPARATOR_PATTERN = re.compile(r"[\s*]+")
NAME_PATTERN = re.compile(r"^[A-Za-z][A-Za-z0-9]*$")
EXPONENT_PATTERN = re.compile(r"^-?\d+$")
MAX_EXPONENT = 100_000


def _parse_token(token: str, alphabet: Alphabet) -> list[Letter]:
    base, caret, exponent = token.partition("^")
    if not base:
        raise EmptyBaseError(f"exponent without a generator in {token!r}")
    if not NAME_PATTERN.match(base):
        raise UnknownGeneratorError(f"malformed generator name {base!r}")

    if caret:
        if not EXPONENT_PATTERN.match(exponent):
            raise MalformedExponentError(f"malformed exponent in {token!r}")
        digits = exponent.lstrip("-").lstrip("0") or "0"
        if len(digits) > len(str(MAX_EXPONENT)) or int(digits) > MAX_EXPONENT:
            raise MalformedExponentError(
                f"exponent in {token!r} is larger than {MAX_EXPONENT} in absolute value"
            )
        power = int(exponent)
    else:
        power = 1

    # An uppercase initial names the inverse of the lowercase-initial generator.
    sign = POSITIVE
    if base[0].isupper():
        base = base[0].lower() + base[1:]
        sign = NEGATIVE

    gen = alphabet.index_of(base)
    if power < 0:
        sign = -sign
    return [Letter(gen, sign)] * abs(power)


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Parse e.g. "a1 a2 A1" or "a1^2 * g^-1" and freely reduce the result."""
    letters: list[Letter] = []
    for token in SEPARATOR_PATTERN.split(text.strip()):
        if token:
            letters.extend(_parse_token(token, alphabet))
    return free_reduce(letters)


def serialize(w: Word | CyclicWord, alphabet: Alphabet) -> str:
    return " ".join(alphabet.letter_name(x) for x in w)
