"""Backward-difference calculus over finite sequences.

The first difference of ``x`` at ``n`` is ``x_n - x_{n-1}``; higher orders
iterate that. All boundary reads use the zero extension (``x_i = 0`` for
``i <= 0``), which keeps every difference row defined from index 1 onward
and makes rows themselves valid inputs for further differencing.

A sequence whose order-m difference is one constant ``delta`` at *every*
index from 1 up (under the zero extension) has the closed form
``delta * C(n + m - 1, m)``; detection, term evaluation, and nested-sum
evaluation of such sequences live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .numeric import binom
from .sequences import Sequence

__all__ = [
    "DifferenceTable",
    "RepeatedSequenceSpec",
    "difference",
    "difference_table",
    "difference_explicit",
    "detect_repeated_degree",
    "repeated_sequence_term",
    "repeated_sequence_repsum",
]


@dataclass(frozen=True)
class RepeatedSequenceSpec:
    """Degree and constant order-m difference of a constant-difference sequence.

    The first term of such a sequence always equals delta.
    """

    degree: int
    delta: Fraction

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError(f"degree must be >= 0, got {self.degree}")


@dataclass(frozen=True)
class DifferenceTable:
    """Rows 0..M of iterated differences over the base sequence's index range."""

    base: Sequence
    rows: tuple[Sequence, ...]

    @property
    def max_order(self) -> int:
        return len(self.rows) - 1

    def row(self, m: int) -> Sequence:
        return self.rows[m]


def _first_difference(seq: Sequence) -> Sequence:
    values = tuple(
        seq.at_or_zero(i) - seq.at_or_zero(i - 1) for i in seq.indices()
    )
    return Sequence(seq.first_index, values)


def difference(seq: Sequence, m: int = 1) -> Sequence:
    """Order-m difference of ``seq`` over its own index range.

    Order 0 is the identity. Boundary reads fall back to the zero extension,
    so a sequence starting at index 1 (or lower) never runs out of data on
    the left.
    """
    if m < 0:
        raise ValueError(f"difference order must be >= 0, got {m}")
    row = seq
    for _ in range(m):
        row = _first_difference(row)
    return row


def difference_table(seq: Sequence, max_order: int) -> DifferenceTable:
    """Difference rows 0..max_order, each derived from the previous one."""
    if max_order < 0:
        raise ValueError(f"max order must be >= 0, got {max_order}")
    rows = [seq]
    for _ in range(max_order):
        rows.append(_first_difference(rows[-1]))
    return DifferenceTable(base=seq, rows=tuple(rows))


def difference_explicit(seq: Sequence, m: int, p: int, n: int) -> Fraction:
    """Order-m difference at index n via the alternating-sign expansion.

    Expands m levels of differencing as p explicit levels over the order
    (m - p) row: sum_j (-1)^j C(p, j) * D^(m-p) x_{n-j}. With p = m the row
    is the raw sequence and the expansion involves only its elements.
    """
    if p < 0 or m < 0:
        raise ValueError("orders must be >= 0")
    if p > m:
        raise ValueError(f"expansion depth {p} exceeds difference order {m}")
    if n not in seq.indices():
        raise IndexError(f"index {n} outside sequence range")
    row = difference(seq, m - p)
    total = Fraction(0)
    for j in range(p + 1):
        coeff = binom(p, j)
        if j % 2:
            coeff = -coeff
        total += coeff * row.at_or_zero(n - j)
    return total


def detect_repeated_degree(seq: Sequence, max_degree: int) -> Optional[RepeatedSequenceSpec]:
    """Smallest m <= max_degree whose order-m difference row is one constant.

    Constancy is required at every index from 1 to the end, under the zero
    extension; that boundary condition is what separates genuinely
    constant-difference sequences from ordinary polynomial ones (n^2 fails
    at n = 1). A sequence of length L can only witness degrees below L, so
    candidates are capped there and None is returned when nothing fits.
    """
    if seq.first_index != 1:
        raise ValueError(
            f"detection requires a sequence starting at index 1, got {seq.first_index}"
        )
    if max_degree < 0:
        raise ValueError(f"max degree must be >= 0, got {max_degree}")
    row = seq
    for m in range(min(max_degree, len(seq) - 1) + 1):
        first = row.values[0]
        if all(v == first for v in row.values):
            return RepeatedSequenceSpec(degree=m, delta=first)
        row = _first_difference(row)
    return None


def repeated_sequence_term(spec: RepeatedSequenceSpec, n: int) -> Fraction:
    """n-th term of the constant-difference sequence: delta * C(n + m - 1, m)."""
    if n < 1:
        raise ValueError(f"term index must be >= 1, got {n}")
    return spec.delta * binom(n + spec.degree - 1, spec.degree)


def repeated_sequence_repsum(spec: RepeatedSequenceSpec, k: int, n: int) -> Fraction:
    """k-fold nested sum (from 1) of the sequence's terms: delta * C(n+m+k-1, m+k).

    Summing k times simply raises the degree by k, so this equals the n-th
    term of the degree (m + k) sequence with the same delta.
    """
    if k < 1:
        raise ValueError(f"nesting order must be >= 1, got {k}")
    if n < 1:
        raise ValueError(f"upper bound must be >= 1, got {n}")
    m = spec.degree
    return spec.delta * binom(n + m + k - 1, m + k)
