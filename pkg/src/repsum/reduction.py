"""Repeated-sum evaluation: literal nesting vs single-sum reduction.

A repeated sum of order m nests m summations, each inner upper bound riding
the next outer index. Evaluated literally that touches C(n-q+m, m) sequence
elements; the reduction rewrites it as one weighted pass,
sum_i C(n+m-1-i, m-1) * a_i, touching each of the n-q+1 elements once.
Both evaluators are exposed so they can be raced and cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .numeric import binom
from .sequences import Sequence

__all__ = [
    "DEFAULT_NAIVE_CEILING",
    "NaiveBudgetError",
    "SumSpec",
    "EvalReport",
    "naive_repeated_sum",
    "reduce_repeated_sum",
    "term_multiplicity",
    "variation_full",
    "variation_partial",
    "naive_binomial_sequence_sum",
    "reduce_binomial_sequence_sum",
]

DEFAULT_NAIVE_CEILING = 10**7


class NaiveBudgetError(RuntimeError):
    """Literal evaluation refused: its expanded term count exceeds the ceiling."""

    def __init__(self, term_count: int, ceiling: int):
        super().__init__(
            f"naive evaluation would expand to {term_count} terms, "
            f"over the ceiling of {ceiling}"
        )
        self.term_count = term_count
        self.ceiling = ceiling


@dataclass(frozen=True)
class SumSpec:
    """Order and bounds of a repeated sum: order-fold nesting over [lower, upper]."""

    order: int
    lower: int
    upper: int

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError(f"order must be >= 1, got {self.order}")
        if self.lower < 0:
            raise ValueError(f"lower bound must be >= 0, got {self.lower}")
        if self.upper < self.lower:
            raise ValueError(
                f"upper bound {self.upper} below lower bound {self.lower}"
            )

    @property
    def width(self) -> int:
        return self.upper - self.lower + 1

    def naive_term_count(self) -> int:
        """Number of sequence-element reads a fully expanded evaluation performs."""
        return binom(self.upper - self.lower + self.order, self.order)


@dataclass(frozen=True)
class EvalReport:
    value: Fraction
    terms_touched: int
    method: str  # "naive" or "reduced"


def _check_coverage(seq: Sequence, lo: int, hi: int) -> None:
    if not seq.covers(lo, hi):
        raise ValueError(
            f"sequence covers [{seq.first_index}, {seq.last_index}], "
            f"needs [{lo}, {hi}]"
        )


def naive_repeated_sum(
    seq: Sequence,
    spec: SumSpec,
    *,
    ceiling: int = DEFAULT_NAIVE_CEILING,
    literal: bool = False,
) -> EvalReport:
    """Evaluate the repeated sum by its recursive definition.

    The default mode caches inner sums (one running-prefix pass per nesting
    level) but still reports terms_touched as the full expanded count, which
    is what a memoryless evaluation would read. ``literal=True`` switches to
    genuinely memoryless recursion that visits and counts every leaf; use it
    only at small sizes. Either mode refuses to run when the expanded count
    exceeds ``ceiling``.
    """
    _check_coverage(seq, spec.lower, spec.upper)
    count = spec.naive_term_count()
    if count > ceiling:
        raise NaiveBudgetError(count, ceiling)
    if literal:
        value, reads = _literal_eval(seq, spec)
        assert reads == count
        return EvalReport(value=value, terms_touched=reads, method="naive")

    row = [seq.at(i) for i in range(spec.lower, spec.upper + 1)]
    for _ in range(spec.order):
        acc = Fraction(0)
        prefix = []
        for v in row:
            acc += v
            prefix.append(acc)
        row = prefix
    return EvalReport(value=row[-1], terms_touched=count, method="naive")


def _literal_eval(seq: Sequence, spec: SumSpec) -> tuple[Fraction, int]:
    values = seq.values
    offset = seq.first_index
    q = spec.lower
    zero = Fraction(0)
    reads = 0

    def nest(order: int, upper: int) -> Fraction:
        nonlocal reads
        if order == 1:
            reads += upper - q + 1
            return sum(values[q - offset : upper - offset + 1], zero)
        total = zero
        for bound in range(q, upper + 1):
            total += nest(order - 1, bound)
        return total

    return nest(spec.order, spec.upper), reads


def reduce_repeated_sum(seq: Sequence, spec: SumSpec) -> EvalReport:
    """Evaluate the repeated sum as a single weighted pass over [lower, upper]."""
    _check_coverage(seq, spec.lower, spec.upper)
    total = Fraction(0)
    for i in range(spec.lower, spec.upper + 1):
        total += binom(spec.upper + spec.order - 1 - i, spec.order - 1) * seq.at(i)
    return EvalReport(value=total, terms_touched=spec.width, method="reduced")


def term_multiplicity(i: int, spec: SumSpec) -> int:
    """How many times a_i occurs in the fully expanded repeated sum."""
    if not spec.lower <= i <= spec.upper:
        raise ValueError(f"index {i} outside [{spec.lower}, {spec.upper}]")
    return binom(spec.upper + spec.order - 1 - i, spec.order - 1)


def variation_full(seq: Sequence, spec: SumSpec) -> Fraction:
    """Extend the upper bound by one using every lower-order sum at the old bound.

    Computes sum_{k=1}^{order} S_k(lower, upper) + a_{upper+1} and asserts it
    equals the directly reduced order-m sum over [lower, upper+1].
    """
    _check_coverage(seq, spec.lower, spec.upper + 1)
    total = seq.at(spec.upper + 1)
    for k in range(1, spec.order + 1):
        total += reduce_repeated_sum(seq, SumSpec(k, spec.lower, spec.upper)).value
    direct = reduce_repeated_sum(
        seq, SumSpec(spec.order, spec.lower, spec.upper + 1)
    ).value
    assert total == direct, f"variation mismatch for {spec}"
    return total


def variation_partial(seq: Sequence, spec: SumSpec, p: int) -> Fraction:
    """Extend the upper bound by one using only orders above p at the old bound.

    Computes sum_{k=p+1}^{order} S_k(lower, upper) + S_p(lower, upper+1); the
    p = order case degenerates to the extended sum itself.
    """
    if p < 1:
        raise ValueError(f"partial order must be >= 1, got {p}")
    if p > spec.order:
        raise ValueError(f"partial order {p} exceeds sum order {spec.order}")
    _check_coverage(seq, spec.lower, spec.upper + 1)
    total = reduce_repeated_sum(seq, SumSpec(p, spec.lower, spec.upper + 1)).value
    for k in range(p + 1, spec.order + 1):
        total += reduce_repeated_sum(seq, SumSpec(k, spec.lower, spec.upper)).value
    direct = reduce_repeated_sum(
        seq, SumSpec(spec.order, spec.lower, spec.upper + 1)
    ).value
    assert total == direct, f"partial variation mismatch for {spec}, p={p}"
    return total


def naive_binomial_sequence_sum(
    seq: Sequence, nesting: int, weight_order: int, lower: int, upper: int
) -> Fraction:
    """Literal k-fold nested sum whose innermost term is C(N2-N1+w, w) * a_N1.

    N2 is the index one level above the innermost; for nesting = 1 there is
    no such level and the weight is anchored at the overall upper bound,
    which matches what the reduced form degenerates to.
    """
    if nesting < 1:
        raise ValueError(f"nesting order must be >= 1, got {nesting}")
    if weight_order < 0:
        raise ValueError(f"weight order must be >= 0, got {weight_order}")
    if upper < lower:
        raise ValueError(f"upper bound {upper} below lower bound {lower}")
    _check_coverage(seq, lower, upper)

    def weighted_inner(anchor: int) -> Fraction:
        total = Fraction(0)
        for i in range(lower, anchor + 1):
            total += binom(anchor - i + weight_order, weight_order) * seq.at(i)
        return total

    if nesting == 1:
        return weighted_inner(upper)

    def nest(depth: int, bound: int) -> Fraction:
        if depth == 2:
            total = Fraction(0)
            for anchor in range(lower, bound + 1):
                total += weighted_inner(anchor)
            return total
        total = Fraction(0)
        for nxt in range(lower, bound + 1):
            total += nest(depth - 1, nxt)
        return total

    return nest(nesting, upper)


def reduce_binomial_sequence_sum(
    seq: Sequence, nesting: int, weight_order: int, lower: int, upper: int
) -> Fraction:
    """Single weighted pass equal to naive_binomial_sequence_sum.

    The nest and the inner binomial weight merge into one weight of order
    weight_order + nesting - 1 anchored at the upper bound.
    """
    if nesting < 1:
        raise ValueError(f"nesting order must be >= 1, got {nesting}")
    if weight_order < 0:
        raise ValueError(f"weight order must be >= 0, got {weight_order}")
    if upper < lower:
        raise ValueError(f"upper bound {upper} below lower bound {lower}")
    _check_coverage(seq, lower, upper)
    w = weight_order + nesting - 1
    total = Fraction(0)
    for i in range(lower, upper + 1):
        total += binom(upper - i + w, w) * seq.at(i)
    return total
