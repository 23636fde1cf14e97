"""Exact-arithmetic evaluation and closed-form reduction of repeated sums.

A repeated sum nests m summations with each inner upper bound riding the
next outer index; evaluated literally it touches C(n-q+m, m) terms, while
the closed-form reduction touches each of the n-q+1 sequence elements once.
This package provides the reduction, the binomial and harmonic closed forms
behind it, difference-calculus classification of constant-difference
sequences, and a CLI (``repsum``) exposing evaluation, detection, identity
sweeps, and a naive-vs-reduced benchmark.

Everything is computed over arbitrary-precision integers and
``fractions.Fraction``; all public functions are pure and thread-safe.
"""

from .binomial_sums import (
    binom_as_ones_sum,
    binomial_sum_closed,
    ones_repeated_sum_closed,
    product_sum_closed,
    repeated_binomial_sum_closed,
)
from .differences import (
    DifferenceTable,
    RepeatedSequenceSpec,
    detect_repeated_degree,
    difference,
    difference_explicit,
    difference_table,
    repeated_sequence_repsum,
    repeated_sequence_term,
)
from .harmonic import (
    binomial_harmonic_closed,
    harmonic_identity_t53,
    harmonic_identity_t54,
    harmonic_range,
    repeated_binomial_harmonic_closed,
    repeated_harmonic_closed,
)
from .identities import IDENTITY_IDS, IdentityFailure, IdentityReport, run_identity
from .numeric import binom, format_rational, make_rational, parse_rational
from .reduction import (
    DEFAULT_NAIVE_CEILING,
    EvalReport,
    NaiveBudgetError,
    SumSpec,
    naive_binomial_sequence_sum,
    naive_repeated_sum,
    reduce_binomial_sequence_sum,
    reduce_repeated_sum,
    term_multiplicity,
    variation_full,
    variation_partial,
)
from .sequences import (
    Sequence,
    SequenceFormatError,
    make_sequence,
    parse_sequence_file,
    parse_sequence_text,
)

__all__ = [
    "DEFAULT_NAIVE_CEILING",
    "DifferenceTable",
    "EvalReport",
    "IDENTITY_IDS",
    "IdentityFailure",
    "IdentityReport",
    "NaiveBudgetError",
    "RepeatedSequenceSpec",
    "Sequence",
    "SequenceFormatError",
    "SumSpec",
    "binom",
    "binom_as_ones_sum",
    "binomial_harmonic_closed",
    "binomial_sum_closed",
    "detect_repeated_degree",
    "difference",
    "difference_explicit",
    "difference_table",
    "format_rational",
    "harmonic_identity_t53",
    "harmonic_identity_t54",
    "harmonic_range",
    "make_rational",
    "make_sequence",
    "naive_binomial_sequence_sum",
    "naive_repeated_sum",
    "ones_repeated_sum_closed",
    "parse_rational",
    "parse_sequence_file",
    "parse_sequence_text",
    "product_sum_closed",
    "reduce_binomial_sequence_sum",
    "reduce_repeated_sum",
    "repeated_binomial_harmonic_closed",
    "repeated_binomial_sum_closed",
    "repeated_harmonic_closed",
    "repeated_sequence_repsum",
    "repeated_sequence_term",
    "run_identity",
    "term_multiplicity",
    "variation_full",
    "variation_partial",
]

__version__ = "0.1.0"
