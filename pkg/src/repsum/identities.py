"""Sweepable identity checks: every closed form raced against literal evaluation.

Each registry entry evaluates both sides of one identity over a finite
parameter grid and records exact-equality failures with the offending
parameters, so the CLI can print counterexamples instead of a bare boolean.
Grid bounds have per-identity defaults and can be overridden; random
sequences are drawn from a seeded generator so sweeps are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Union

from .binomial_sums import (
    binom_as_ones_sum,
    binomial_sum_closed,
    ones_repeated_sum_closed,
    product_sum_closed,
    repeated_binomial_sum_closed,
)
from .differences import (
    RepeatedSequenceSpec,
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
from .numeric import binom, format_rational
from .reduction import (
    SumSpec,
    naive_binomial_sequence_sum,
    naive_repeated_sum,
    reduce_binomial_sequence_sum,
    reduce_repeated_sum,
)
from .sequences import Sequence

__all__ = ["IdentityFailure", "IdentityReport", "IDENTITY_IDS", "run_identity"]

_DELTAS = (Fraction(1), Fraction(-2), Fraction(3, 7))


@dataclass(frozen=True)
class IdentityFailure:
    params: dict
    lhs: str
    rhs: str


@dataclass
class IdentityReport:
    identity: str
    grid: dict
    cases: int = 0
    failures: list[IdentityFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "identity": self.identity,
            "grid": self.grid,
            "cases": self.cases,
            "failures": [
                {"params": f.params, "lhs": f.lhs, "rhs": f.rhs}
                for f in self.failures
            ],
        }

    def check(
        self,
        params: dict,
        lhs: Union[Fraction, int],
        rhs: Union[Fraction, int],
    ) -> None:
        self.cases += 1
        if lhs != rhs:
            self.failures.append(
                IdentityFailure(params, format_rational(lhs), format_rational(rhs))
            )


def _nested(depth: int, lo: int, hi: int, term: Callable[[int], Union[Fraction, int]]):
    """Literal nest: depth summations, each inner bound riding the outer index."""
    if depth == 1:
        return sum(term(i) for i in range(lo, hi + 1))
    total = 0
    for bound in range(lo, hi + 1):
        total += _nested(depth - 1, lo, bound, term)
    return total


def _cumulative_terms(degree: int, delta: Fraction, length: int) -> list[Fraction]:
    """Terms 1..length of the constant-difference sequence, built by summation only."""
    row = [delta] * length
    for _ in range(degree):
        acc = Fraction(0)
        out = []
        for v in row:
            acc += v
            out.append(acc)
        row = out
    return row


def _random_sequence(rng: random.Random, first_index: int, length: int) -> Sequence:
    values = tuple(
        Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(length)
    )
    return Sequence(first_index, values)


def _run_t21(g: dict) -> IdentityReport:
    rep = IdentityReport("T2.1", g)
    for k in range(g["max_k"] + 1):
        for q in range(g["max_n"] + 1):
            for n in range(q, g["max_n"] + 1):
                direct = sum(binom(i, k) for i in range(q, n + 1))
                rep.check({"k": k, "q": q, "n": n}, direct, binomial_sum_closed(q, n, k))
    return rep


def _run_t22(g: dict) -> IdentityReport:
    rep = IdentityReport("T2.2", g)
    for m in range(1, g["max_m"] + 1):
        for k in range(g["max_k"] + 1):
            for q in range(g["max_n"] + 1):
                for n in range(q, g["max_n"] + 1):
                    params = {"m": m, "k": k, "q": q, "n": n}
                    closed = repeated_binomial_sum_closed(m, q, n, k)
                    oracle = _nested(m, q, n, lambda i: binom(i, k))
                    rep.check(params, oracle, closed)
                    # second printed form of the correction term
                    alt = binom(n + m, k + m) - sum(
                        binom(q - 1 + j, q - 1 - k) * binom(n - q + m - j, n - q)
                        for j in range(1, m + 1)
                    )
                    rep.check({**params, "form": "alternate"}, alt, closed)
    return rep


def _run_c25(g: dict) -> IdentityReport:
    rep = IdentityReport("C2.5", g)
    for m in range(1, g["max_m"] + 1):
        for q in range(g["max_n"] + 1):
            for n in range(q, g["max_n"] + 1):
                params = {"m": m, "q": q, "n": n}
                closed = product_sum_closed(m, q, n)
                first = sum(
                    binom(q - 1 + j, j) * binom(n - q + m - j, m - j)
                    for j in range(1, m + 1)
                )
                second = sum(
                    binom(q - 1 + j, q - 1) * binom(n - q + m - j, n - q)
                    for j in range(1, m + 1)
                )
                rep.check(params, first, closed)
                rep.check({**params, "form": "alternate"}, second, closed)
    return rep


def _run_t31(g: dict) -> IdentityReport:
    rep = IdentityReport("T3.1", g)
    for m in range(1, g["max_m"] + 1):
        for n in range(1, g["max_n"] + 1):
            rep.check(
                {"m": m, "n": n, "q": 1},
                _nested(m, 1, n, lambda i: 1),
                binom(n + m - 1, m),
            )
            rep.check(
                {"m": m, "n": n, "q": 0},
                _nested(m, 0, n, lambda i: 1),
                binom(n + m, m),
            )
            rep.check(
                {"m": m, "n": n, "q": 1, "form": "closed"},
                ones_repeated_sum_closed(m, 1, n),
                binom(n + m - 1, m),
            )
    return rep


def _run_t33(g: dict) -> IdentityReport:
    rep = IdentityReport("T3.3", g)
    for n in range(1, g["max_n"] + 1):
        for k in range(1, n + 1):
            rep.check(
                {"n": n, "k": k},
                _nested(k, 1, n - k + 1, lambda i: 1),
                binom_as_ones_sum(n, k),
            )
    return rep


def _run_t35(g: dict) -> IdentityReport:
    rep = IdentityReport("T3.5", g)
    for m in range(g["max_m"] + 1):
        for delta in _DELTAS:
            spec = RepeatedSequenceSpec(m, delta)
            built = _cumulative_terms(m, delta, g["max_n"])
            for n in range(1, g["max_n"] + 1):
                rep.check(
                    {"m": m, "delta": format_rational(delta), "n": n},
                    built[n - 1],
                    repeated_sequence_term(spec, n),
                )
    return rep


def _run_t36(g: dict) -> IdentityReport:
    rep = IdentityReport("T3.6", g)
    for m in range(g["max_m"] + 1):
        for k in range(1, g["max_k"] + 1):
            for delta in _DELTAS:
                spec = RepeatedSequenceSpec(m, delta)
                terms = _cumulative_terms(m, delta, g["max_n"])
                for n in range(1, g["max_n"] + 1):
                    params = {
                        "m": m,
                        "k": k,
                        "delta": format_rational(delta),
                        "n": n,
                    }
                    closed = repeated_sequence_repsum(spec, k, n)
                    oracle = _nested(k, 1, n, lambda i: terms[i - 1])
                    rep.check(params, oracle, closed)
                    rep.check(
                        {**params, "form": "ones"},
                        delta * ones_repeated_sum_closed(m + k, 1, n),
                        closed,
                    )
    return rep


def _run_t41(g: dict) -> IdentityReport:
    rep = IdentityReport("T4.1", g)
    for m in range(g["max_m"] + 1):
        for p in range(g["max_n"] + 1):
            for n in range(p, g["max_n"] + 1):
                direct = sum(
                    (
                        binom(N + m, m) * harmonic_range(1 + m, N + m)
                        for N in range(p, n + 1)
                    ),
                    Fraction(0),
                )
                rep.check(
                    {"m": m, "p": p, "n": n},
                    direct,
                    binomial_harmonic_closed(m, p, n),
                )
    return rep


def _run_t42(g: dict) -> IdentityReport:
    rep = IdentityReport("T4.2", g)
    for k in range(1, g["max_k"] + 1):
        for m in range(g["max_m"] + 1):
            for p in range(g["max_n"] + 1):
                for n in range(p, g["max_n"] + 1):
                    oracle = _nested(
                        k,
                        p,
                        n,
                        lambda i: binom(i + m, m) * harmonic_range(1 + m, i + m),
                    )
                    rep.check(
                        {"k": k, "m": m, "p": p, "n": n},
                        oracle,
                        repeated_binomial_harmonic_closed(k, m, p, n),
                    )
    return rep


def _run_c43(g: dict) -> IdentityReport:
    rep = IdentityReport("C4.3", g)
    oracle_cutoff = min(g["max_n"], 12)
    for order in range(1, g["max_m"] + 1):
        for n in range(1, oracle_cutoff + 1):
            oracle = _nested(order, 1, n, lambda i: Fraction(1, i))
            rep.check(
                {"order": order, "n": n, "side": "nested"},
                oracle,
                repeated_harmonic_closed(order, n),
            )
        for n in range(1, g["max_n"] + 1):
            single = Fraction(0)
            for i in range(1, n + 1):
                single += Fraction(binom(n + order - 1 - i, order - 1), i)
            rep.check(
                {"order": order, "n": n, "side": "single-pass"},
                single,
                repeated_harmonic_closed(order, n),
            )
    return rep


def _run_t51(g: dict) -> IdentityReport:
    rep = IdentityReport("T5.1", g)
    rng = random.Random(g["seed"])
    for trial in range(g["trials"]):
        seq = _random_sequence(rng, 0, g["max_n"] + 1)
        for m in range(1, g["max_m"] + 1):
            for q in range(g["max_n"] + 1):
                for n in range(q, g["max_n"] + 1):
                    spec = SumSpec(m, q, n)
                    rep.check(
                        {"trial": trial, "m": m, "q": q, "n": n},
                        naive_repeated_sum(seq, spec).value,
                        reduce_repeated_sum(seq, spec).value,
                    )
    return rep


def _run_t52(g: dict) -> IdentityReport:
    rep = IdentityReport("T5.2", g)
    for order in range(1, g["max_m"] + 1):
        for n in range(1, g["max_n"] + 1):
            closed = repeated_harmonic_closed(order, n)
            oracle = _nested(order, 1, n, lambda i: Fraction(1, i))
            rep.check({"order": order, "n": n}, oracle, closed)
            shifted = binom(n + order - 1, order - 1) * harmonic_range(
                order, n + order - 1
            )
            rep.check({"order": order, "n": n, "form": "shifted"}, shifted, closed)
    return rep


def _run_t53(g: dict) -> IdentityReport:
    rep = IdentityReport("T5.3", g)
    for n in range(1, g["max_n"] + 1):
        for m in range(g["max_m"] + 1):
            lhs, rhs = harmonic_identity_t53(n, m)
            rep.check({"n": n, "m": m}, lhs, rhs)
    return rep


def _run_t54(g: dict) -> IdentityReport:
    rep = IdentityReport("T5.4", g)
    for n in range(1, g["max_n"] + 1):
        lhs, rhs = harmonic_identity_t54(n)
        rep.check({"n": n}, lhs, rhs)
    return rep


def _run_t55(g: dict) -> IdentityReport:
    rep = IdentityReport("T5.5", g)
    rng = random.Random(g["seed"])
    for trial in range(g["trials"]):
        seq = _random_sequence(rng, 0, g["max_n"] + 1)
        for m in range(1, g["max_m"] + 1):
            for q in range(g["max_n"] + 1):
                for n in range(q, g["max_n"] + 1):
                    params = {"trial": trial, "m": m, "q": q, "n": n}
                    naive = naive_binomial_sequence_sum(seq, 2, m - 1, q, n)
                    stated = sum(
                        (
                            binom(n - N + m, m) * seq.at(N)
                            for N in range(q, n + 1)
                        ),
                        Fraction(0),
                    )
                    rep.check(params, naive, stated)
                    rep.check(
                        {**params, "form": "reduced"},
                        reduce_binomial_sequence_sum(seq, 2, m - 1, q, n),
                        stated,
                    )
    return rep


def _run_t56(g: dict) -> IdentityReport:
    rep = IdentityReport("T5.6", g)
    rng = random.Random(g["seed"])
    for trial in range(g["trials"]):
        seq = _random_sequence(rng, 0, g["max_n"] + 1)
        for k in range(1, g["max_k"] + 1):
            for w in range(g["max_m"] + 1):
                for q in range(g["max_n"] + 1):
                    for n in range(q, g["max_n"] + 1):
                        rep.check(
                            {"trial": trial, "k": k, "w": w, "q": q, "n": n},
                            naive_binomial_sequence_sum(seq, k, w, q, n),
                            reduce_binomial_sequence_sum(seq, k, w, q, n),
                        )
    return rep


def _run_var1(g: dict) -> IdentityReport:
    rep = IdentityReport("VAR1", g)
    rng = random.Random(g["seed"])
    for trial in range(g["trials"]):
        seq = _random_sequence(rng, 0, g["max_n"] + 2)
        for m in range(1, g["max_m"] + 1):
            for q in range(g["max_n"] + 1):
                for n in range(q, g["max_n"] + 1):
                    stepped = seq.at(n + 1) + sum(
                        (
                            reduce_repeated_sum(seq, SumSpec(k, q, n)).value
                            for k in range(1, m + 1)
                        ),
                        Fraction(0),
                    )
                    direct = reduce_repeated_sum(seq, SumSpec(m, q, n + 1)).value
                    rep.check({"trial": trial, "m": m, "q": q, "n": n}, stepped, direct)
    return rep


def _run_var2(g: dict) -> IdentityReport:
    rep = IdentityReport("VAR2", g)
    rng = random.Random(g["seed"])
    for trial in range(g["trials"]):
        seq = _random_sequence(rng, 0, g["max_n"] + 2)
        for m in range(1, g["max_m"] + 1):
            for p in range(1, m + 1):
                for q in range(g["max_n"] + 1):
                    for n in range(q, g["max_n"] + 1):
                        stepped = reduce_repeated_sum(
                            seq, SumSpec(p, q, n + 1)
                        ).value + sum(
                            (
                                reduce_repeated_sum(seq, SumSpec(k, q, n)).value
                                for k in range(p + 1, m + 1)
                            ),
                            Fraction(0),
                        )
                        direct = reduce_repeated_sum(seq, SumSpec(m, q, n + 1)).value
                        rep.check(
                            {"trial": trial, "m": m, "p": p, "q": q, "n": n},
                            stepped,
                            direct,
                        )
    return rep


# identity id -> (default grid, runner)
_REGISTRY: dict[str, tuple[dict, Callable[[dict], IdentityReport]]] = {
    "T2.1": ({"max_n": 12, "max_k": 4}, _run_t21),
    "T2.2": ({"max_n": 12, "max_m": 4, "max_k": 4}, _run_t22),
    "C2.5": ({"max_n": 12, "max_m": 4}, _run_c25),
    "T3.1": ({"max_n": 12, "max_m": 4}, _run_t31),
    "T3.3": ({"max_n": 12}, _run_t33),
    "T3.5": ({"max_n": 12, "max_m": 4}, _run_t35),
    "T3.6": ({"max_n": 10, "max_m": 3, "max_k": 3}, _run_t36),
    "T4.1": ({"max_n": 10, "max_m": 3}, _run_t41),
    "T4.2": ({"max_n": 10, "max_m": 3, "max_k": 3}, _run_t42),
    "C4.3": ({"max_n": 100, "max_m": 6}, _run_c43),
    "T5.1": ({"max_n": 12, "max_m": 5, "trials": 20, "seed": 0}, _run_t51),
    "T5.2": ({"max_n": 12, "max_m": 4}, _run_t52),
    "T5.3": ({"max_n": 50, "max_m": 10}, _run_t53),
    "T5.4": ({"max_n": 200}, _run_t54),
    "T5.5": ({"max_n": 10, "max_m": 4, "trials": 5, "seed": 0}, _run_t55),
    "T5.6": ({"max_n": 10, "max_m": 3, "max_k": 3, "trials": 3, "seed": 0}, _run_t56),
    "VAR1": ({"max_n": 12, "max_m": 5, "trials": 5, "seed": 0}, _run_var1),
    "VAR2": ({"max_n": 12, "max_m": 5, "trials": 5, "seed": 0}, _run_var2),
}

IDENTITY_IDS = tuple(_REGISTRY)


def run_identity(
    identity: str,
    *,
    max_n: Optional[int] = None,
    max_m: Optional[int] = None,
    max_k: Optional[int] = None,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
) -> IdentityReport:
    """Run one registry identity over its default grid, with optional overrides.

    Overrides that do not apply to the chosen identity are rejected, so a
    typo cannot silently shrink a sweep to nothing.
    """
    if identity not in _REGISTRY:
        raise KeyError(identity)
    defaults, runner = _REGISTRY[identity]
    grid = dict(defaults)
    overrides = {
        "max_n": max_n,
        "max_m": max_m,
        "max_k": max_k,
        "trials": trials,
        "seed": seed,
    }
    for name, value in overrides.items():
        if value is None:
            continue
        if name not in grid:
            raise ValueError(f"identity {identity} does not take {name}")
        grid[name] = value
    return runner(grid)
