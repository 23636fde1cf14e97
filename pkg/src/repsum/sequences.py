"""Finite indexed sequences of exact rationals, plus their on-disk formats.

A sequence file is either one rational per line in ``p/q`` form, or a JSON
array of rational strings. The first index is supplied by the caller (CLI
flag ``--first-index``, default 1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Union

from .numeric import format_rational, parse_rational

__all__ = [
    "Sequence",
    "SequenceFormatError",
    "make_sequence",
    "parse_sequence_text",
    "parse_sequence_file",
]


class SequenceFormatError(ValueError):
    """A sequence file or literal could not be parsed."""


@dataclass(frozen=True)
class Sequence:
    """Values a_first .. a_last with an explicit lower index.

    Reads at indices <= 0 that are not stored return 0 (the implicit zero
    extension used by the difference operators). Reads in the gap
    0 < i < first_index are errors: data is genuinely missing there.
    """

    first_index: int
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.values:
            raise ValueError("sequence must be non-empty")

    @property
    def last_index(self) -> int:
        return self.first_index + len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)

    def indices(self) -> range:
        return range(self.first_index, self.last_index + 1)

    def covers(self, lo: int, hi: int) -> bool:
        return self.first_index <= lo and hi <= self.last_index

    def at(self, i: int) -> Fraction:
        """Stored value at index i; raises outside the stored range."""
        if not self.first_index <= i <= self.last_index:
            raise IndexError(
                f"index {i} outside stored range [{self.first_index}, {self.last_index}]"
            )
        return self.values[i - self.first_index]

    def at_or_zero(self, i: int) -> Fraction:
        """Value at index i under the zero extension (0 for unstored i <= 0)."""
        if self.first_index <= i <= self.last_index:
            return self.values[i - self.first_index]
        if i <= 0:
            return Fraction(0)
        raise IndexError(
            f"index {i} is below the stored range [{self.first_index}, "
            f"{self.last_index}] but positive; no value is defined there"
        )

    def to_strings(self) -> list[str]:
        return [format_rational(v) for v in self.values]


def make_sequence(
    values: Iterable[Union[Fraction, int, str]], first_index: int = 1
) -> Sequence:
    """Build a Sequence, accepting ints, Fractions, or ``p/q`` strings."""
    converted = tuple(
        parse_rational(v) if isinstance(v, str) else Fraction(v) for v in values
    )
    return Sequence(first_index, converted)


def parse_sequence_text(text: str, first_index: int = 1) -> Sequence:
    """Parse sequence data from line-oriented ``p/q`` text or a JSON string array."""
    if not text.strip():
        raise SequenceFormatError("empty sequence input")
    if text.lstrip().startswith("["):
        return _parse_json_sequence(text, first_index)

    values: list[Fraction] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        body = line.strip()
        if not body:
            continue
        try:
            values.append(parse_rational(body))
        except ValueError as exc:
            raise SequenceFormatError(f"line {line_no}: {exc}") from exc
    if not values:
        raise SequenceFormatError("empty sequence input")
    return Sequence(first_index, tuple(values))


def _parse_json_sequence(text: str, first_index: int) -> Sequence:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SequenceFormatError(f"invalid JSON sequence: {exc}") from exc
    if not isinstance(data, list):
        raise SequenceFormatError("JSON sequence must be an array of rational strings")
    if not data:
        raise SequenceFormatError("empty sequence input")
    values: list[Fraction] = []
    for pos, item in enumerate(data, start=1):
        if not isinstance(item, str):
            raise SequenceFormatError(
                f"element {pos}: expected a rational string, got {type(item).__name__}"
            )
        try:
            values.append(parse_rational(item))
        except ValueError as exc:
            raise SequenceFormatError(f"element {pos}: {exc}") from exc
    return Sequence(first_index, tuple(values))


def parse_sequence_file(path: Union[str, Path], first_index: int = 1) -> Sequence:
    """Read and parse a sequence file (line-oriented or JSON)."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SequenceFormatError(f"cannot read {path}: {exc}") from exc
    return parse_sequence_text(text, first_index)
