"""Exact harmonic ranges and closed forms for binomial-harmonic sums.

A harmonic range is sum(1/i) over an integer interval, kept as an exact
Fraction. The closed forms below rewrite (possibly nested) sums of
``C(N+m, m) * harmonic_range(1+m, N+m)`` terms into a handful of such
ranges, and two standalone identities re-express plain harmonic numbers.
"""

from __future__ import annotations

from fractions import Fraction

from .numeric import binom

__all__ = [
    "harmonic_range",
    "binomial_harmonic_closed",
    "repeated_binomial_harmonic_closed",
    "repeated_harmonic_closed",
    "harmonic_identity_t53",
    "harmonic_identity_t54",
]


def harmonic_range(lo: int, hi: int) -> Fraction:
    """Exact sum of 1/i for i = lo..hi; an empty range (hi < lo) is 0.

    The empty-sum convention is load-bearing: the closed forms below hit
    hi = lo - 1 (and, with a zero coefficient, hi = lo - 2) at their lower
    base cases.
    """
    if lo < 1:
        raise ValueError(f"harmonic range must start at 1 or above, got lo={lo}")
    total = Fraction(0)
    for i in range(lo, hi + 1):
        total += Fraction(1, i)
    return total


def binomial_harmonic_closed(m: int, p: int, n: int) -> Fraction:
    """Closed form of sum_{N=p}^{n} C(N+m, m) * harmonic_range(1+m, N+m)."""
    if m < 0 or p < 0:
        raise ValueError("shift and lower bound must be >= 0")
    if n < p:
        raise ValueError(f"upper bound {n} below lower bound {p}")
    head = binom(n + m + 1, m + 1) * harmonic_range(2 + m, n + m + 1)
    tail = binom(p + m, m + 1) * harmonic_range(2 + m, p + m)
    return head - tail


def repeated_binomial_harmonic_closed(k: int, m: int, p: int, n: int) -> Fraction:
    """Closed form of the k-fold nested version of binomial_harmonic_closed.

    The correction sum runs over j = 0..k-1; at p = 1 every correction range
    is empty and only the leading term survives.
    """
    if k < 1:
        raise ValueError(f"nesting order must be >= 1, got {k}")
    if m < 0 or p < 0:
        raise ValueError("shift and lower bound must be >= 0")
    if n < p:
        raise ValueError(f"upper bound {n} below lower bound {p}")
    head = binom(n + m + k, m + k) * harmonic_range(1 + m + k, n + m + k)
    tail = Fraction(0)
    for j in range(k):
        coeff = binom(n - p + j, j) * binom(p - 1 + m + k - j, m + k - j)
        if coeff:
            tail += coeff * harmonic_range(1 + m + k - j, p - 1 + m + k - j)
    return head - tail


def repeated_harmonic_closed(order: int, n: int) -> Fraction:
    """order-fold nested harmonic sum as C(n+m, m) * harmonic_range(1+m, n+m), m = order-1.

    Also evaluates the equivalent single weighted sum
    sum_i C(n + order - 1 - i, order - 1) / i and asserts both agree.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    if n < 1:
        raise ValueError(f"upper bound must be >= 1, got {n}")
    m = order - 1
    closed = binom(n + m, m) * harmonic_range(1 + m, n + m)
    weighted = Fraction(0)
    for i in range(1, n + 1):
        weighted += Fraction(binom(n + order - 1 - i, order - 1), i)
    assert weighted == closed, f"weighted form mismatch at order={order}, n={n}"
    return closed


def harmonic_identity_t53(n: int, m: int) -> tuple[Fraction, Fraction]:
    """Both sides of identity T5.3: weighted-ratio sum vs a shifted harmonic range.

    lhs = sum_{i=1}^{n} [C(n,i)/C(n+m,i)] / i, rhs = harmonic_range(1+m, n+m).
    The running product form prod_{k<i} (n-k)/(n+m-k) is asserted equal to
    the binomial ratio term by term. Returns (lhs, rhs) so callers can report
    counterexamples; equality itself is the caller's check.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    lhs = Fraction(0)
    product = Fraction(1)
    for i in range(1, n + 1):
        product *= Fraction(n - (i - 1), n + m - (i - 1))
        ratio = Fraction(binom(n, i), binom(n + m, i))
        assert product == ratio, f"product form diverges at n={n}, m={m}, i={i}"
        lhs += ratio / i
    rhs = harmonic_range(1 + m, n + m)
    return lhs, rhs


def harmonic_identity_t54(n: int) -> tuple[Fraction, Fraction]:
    """Both sides of identity T5.4: ((n+1)/2) * sum_i 1/((n+1-i)*i) vs H_n.

    Internally asserts the even-n half-range form and all three odd-n
    split-sum forms against the lhs before returning (lhs, rhs).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    lhs = Fraction(n + 1, 2) * sum(
        (Fraction(1, (n + 1 - i) * i) for i in range(1, n + 1)), Fraction(0)
    )
    rhs = harmonic_range(1, n)
    if n % 2 == 0:
        k = n // 2
        half = (2 * k + 1) * sum(
            (Fraction(1, (2 * k + 1 - i) * i) for i in range(1, k + 1)), Fraction(0)
        )
        assert half == lhs, f"even half-range form mismatch at n={n}"
    else:
        k = (n + 1) // 2
        to_k = sum(
            (Fraction(1, (2 * k - i) * i) for i in range(1, k + 1)), Fraction(0)
        )
        below_k = sum(
            (Fraction(1, (2 * k - i) * i) for i in range(1, k)), Fraction(0)
        )
        full = sum(
            (Fraction(1, (2 * k - i) * i) for i in range(1, 2 * k)), Fraction(0)
        )
        inv_k = Fraction(1, k)
        assert 2 * k * to_k - inv_k == lhs, f"odd form (minus 1/k) mismatch at n={n}"
        assert 2 * k * below_k + inv_k == lhs, f"odd form (plus 1/k) mismatch at n={n}"
        assert k * full == lhs, f"odd full-range form mismatch at n={n}"
    return lhs, rhs
