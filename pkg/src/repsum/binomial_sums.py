"""Closed forms for sums and nested sums of binomial coefficients.

Every function here collapses a sum (or an m-fold nest of sums) of binomial
coefficients into a fixed number of binomial-coefficient evaluations. The
test suite checks each one against literal nested-loop evaluation, so the
formulas are stated without further commentary.
"""

from __future__ import annotations

from .numeric import binom

__all__ = [
    "binomial_sum_closed",
    "repeated_binomial_sum_closed",
    "ones_repeated_sum_closed",
    "product_sum_closed",
    "binom_as_ones_sum",
]


def _check_bounds(q: int, n: int) -> None:
    if q < 0:
        raise ValueError(f"lower bound must be >= 0, got {q}")
    if n < q:
        raise ValueError(f"upper bound {n} below lower bound {q}")


def binomial_sum_closed(q: int, n: int, k: int) -> int:
    """Sum of C(i, k) for i = q..n, evaluated as C(n+1, k+1) - C(q, k+1)."""
    _check_bounds(q, n)
    if k < 0:
        raise ValueError(f"column index must be >= 0, got {k}")
    return binom(n + 1, k + 1) - binom(q, k + 1)


def repeated_binomial_sum_closed(m: int, q: int, n: int, k: int) -> int:
    """m-fold nested sum of C(N_1, k), each inner bound riding the next outer index.

    Equals C(n+m, k+m) minus a correction that vanishes entirely when q = 0.
    """
    _check_bounds(q, n)
    if m < 1:
        raise ValueError(f"nesting order must be >= 1, got {m}")
    if k < 0:
        raise ValueError(f"column index must be >= 0, got {k}")
    correction = sum(
        binom(q - 1 + j, k + j) * binom(n - q + m - j, m - j) for j in range(1, m + 1)
    )
    return binom(n + m, k + m) - correction


def ones_repeated_sum_closed(m: int, q: int, n: int) -> int:
    """m-fold nested sum of ones from q to n: C(n - q + m, m)."""
    _check_bounds(q, n)
    if m < 1:
        raise ValueError(f"nesting order must be >= 1, got {m}")
    return binom(n - q + m, m)


def product_sum_closed(m: int, q: int, n: int) -> int:
    """Value of sum_{j=1}^{m} C(q-1+j, j) * C(n-q+m-j, m-j), as a two-term closed form."""
    _check_bounds(q, n)
    if m < 1:
        raise ValueError(f"nesting order must be >= 1, got {m}")
    return binom(n + m, m) - binom(n - q + m, m)


def binom_as_ones_sum(n: int, k: int) -> int:
    """C(n, k) rebuilt as a k-fold nested sum of ones with upper bound n - k + 1."""
    if k < 1:
        raise ValueError(f"need at least one nested sum, got k={k}")
    if n < k:
        raise ValueError(f"upper index {n} must be >= column index {k}")
    value = ones_repeated_sum_closed(k, 1, n - k + 1)
    assert value == binom(n, k)
    return value
