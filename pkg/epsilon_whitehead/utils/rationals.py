import math
import re
from fractions import Fraction

from pydantic import BaseModel

RATIONAL_PATTERN = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")


class RationalRecord(BaseModel):
    """Exact rational in a named unit, e.g. 1/6 of pi."""

    num: int
    den: int
    unit: str
    decimal: float | None = None


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or an integer. Decimal strings are accepted as exact decimals."""
    match = RATIONAL_PATTERN.match(text)
    if match:
        num, den = match.groups()
        if den is not None and int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den) if den else 1)
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"not a rational number: {text!r}") from e


def circle_to_pi(value: Fraction) -> Fraction:
    """Circle units (1 = 2*pi) to multiples of pi."""
    return value * 2


def rational_record(value: Fraction, unit: str, with_decimal: bool = False) -> RationalRecord:
    return RationalRecord(
        num=value.numerator,
        den=value.denominator,
        unit=unit,
        decimal=float(value) if with_decimal else None,
    )


def format_circle_fraction(value: Fraction) -> str:
    if value == 0:
        return "0"
    if value.denominator == 1:
        return f"{value.numerator}·2π"
    return f"{value.numerator}/{value.denominator}·2π"


def radians(value: Fraction) -> float:
    return float(value) * 2 * math.pi
