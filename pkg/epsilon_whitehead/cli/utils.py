import argparse
from fractions import Fraction
from pathlib import Path

from epsilon_whitehead.free_group.models import Alphabet, InvalidAlphabetError
from epsilon_whitehead.utils.rationals import parse_rational

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_UNDECIDED = 3


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def rational_arg(text: str) -> Fraction:
    """argparse type for epsilon given as a fraction of the full circle."""
    try:
        value = parse_rational(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"epsilon must be positive, got {text!r}")
    return value


def alphabet_for_rank(rank: int) -> Alphabet:
    if rank < 1:
        raise InvalidAlphabetError(f"rank must be at least 1, got {rank}")
    return Alphabet.standard(rank)


def write_text(path: Path, text: str) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    return path
