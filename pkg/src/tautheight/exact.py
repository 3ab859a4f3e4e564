"""Exact fraction formatting and parsing used by every I/O surface."""

from __future__ import annotations

import re
from fractions import Fraction

_FRACTION_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


class FractionFormatError(ValueError):
    pass


def format_fraction(x) -> str:
    """Lowest-terms ``p/q`` with ``q > 0``; bare ``p`` when ``q == 1``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text) -> Fraction:
    if isinstance(text, bool):
        raise FractionFormatError(f"not a fraction: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise FractionFormatError(f"not a fraction string: {text!r}")
    match = _FRACTION_RE.match(text)
    if match is None:
        raise FractionFormatError(f"malformed fraction: {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise FractionFormatError(f"zero denominator: {text!r}")
    return Fraction(num, den)
