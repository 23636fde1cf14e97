"""Independent brute-force oracles used to pin expected values.

Everything here is deliberately dumb: factorial quotients, literal nested
loops, cumulative summation. None of it shares code with the library's
closed forms, so agreement is evidence rather than tautology.
"""

from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction
from math import factorial
from typing import Callable, Union

Number = Union[int, Fraction]


def binom_by_factorials(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return factorial(n) // (factorial(k) * factorial(n - k))


def nested_sum(depth: int, lo: int, hi: int, term: Callable[[int], Number]) -> Number:
    """depth-fold literal nest; each inner upper bound is the outer index."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if depth == 1:
        total: Number = 0
        for i in range(lo, hi + 1):
            total += term(i)
        return total
    total = 0
    for bound in range(lo, hi + 1):
        total += nested_sum(depth - 1, lo, bound, term)
    return total


def nested_ones(depth: int, lo: int, hi: int) -> int:
    return nested_sum(depth, lo, hi, lambda _: 1)


def harmonic(n: int) -> Fraction:
    total = Fraction(0)
    for i in range(1, n + 1):
        total += Fraction(1, i)
    return total


def harmonic_between(lo: int, hi: int) -> Fraction:
    total = Fraction(0)
    for i in range(lo, hi + 1):
        total += Fraction(1, i)
    return total


def cumulative_repeated_sequence(degree: int, delta: Fraction, length: int) -> list[Fraction]:
    """Terms 1..length of the degree-m constant-difference sequence, by summation."""
    row = [delta] * length
    for _ in range(degree):
        acc = Fraction(0)
        out = []
        for v in row:
            acc += v
            out.append(acc)
        row = out
    return row


def leaf_multiset(depth: int, lo: int, hi: int) -> Counter:
    """Multiset of innermost indices visited by the literal nest."""
    leaves: Counter = Counter()

    def walk(level: int, bound: int) -> None:
        if level == 1:
            for i in range(lo, bound + 1):
                leaves[i] += 1
            return
        for nxt in range(lo, bound + 1):
            walk(level - 1, nxt)

    walk(depth, hi)
    return leaves


def random_fractions(rng: random.Random, length: int, max_num: int = 9, max_den: int = 9) -> list[Fraction]:
    return [
        Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
        for _ in range(length)
    ]
