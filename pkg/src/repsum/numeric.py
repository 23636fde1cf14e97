"""Exact integer and rational primitives shared by every other module.

Values are plain Python ints and ``fractions.Fraction``; both are arbitrary
precision and immutable, so everything built on top is safe to use from any
number of threads without synchronization.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

__all__ = ["binom", "make_rational", "parse_rational", "format_rational"]


def binom(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), total on all integer pairs.

    Out-of-range arguments (k < 0, n < 0, or k > n) yield 0 instead of an
    error, so closed forms whose index bookkeeping wanders outside the
    classical triangle can be evaluated verbatim.
    """
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def make_rational(num: int, den: int) -> Fraction:
    """Exact rational num/den in canonical form (positive denominator, gcd 1)."""
    if den == 0:
        raise ValueError("zero denominator")
    return Fraction(num, den)


# Wire format: optional sign, integer numerator, optional /denominator.
# Deliberately rejects decimals and exponents.
_RATIONAL_RE = re.compile(r"[+-]?[0-9]+(?:/[+-]?[0-9]+)?\Z")


def parse_rational(text: str) -> Fraction:
    """Parse the ``p/q`` text form (``q`` omitted when 1), e.g. ``-1/2`` or ``715``."""
    body = text.strip()
    if not _RATIONAL_RE.fullmatch(body):
        raise ValueError(f"not a rational literal: {text!r}")
    num, sep, den = body.partition("/")
    if not sep:
        return Fraction(int(num))
    return make_rational(int(num), int(den))


def format_rational(value: Fraction | int) -> str:
    """Render a rational in the ``p/q`` text form used by all file and CLI output."""
    return str(Fraction(value))
