"""Command-line surface: evaluate, reduce, analyze, sweep, and benchmark.

Exit codes: 0 success, 1 data or identity failure, 2 usage error, 3 naive
evaluation refused because its expanded term count exceeds the ceiling.
All rationals are printed exactly in ``p/q`` form, never as decimals.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from fractions import Fraction
from typing import Optional

from .differences import detect_repeated_degree, difference, difference_table
from .identities import IDENTITY_IDS, run_identity
from .numeric import binom, format_rational
from .reduction import (
    DEFAULT_NAIVE_CEILING,
    EvalReport,
    NaiveBudgetError,
    SumSpec,
    naive_binomial_sequence_sum,
    naive_repeated_sum,
    reduce_binomial_sequence_sum,
    reduce_repeated_sum,
)
from .sequences import Sequence, SequenceFormatError, make_sequence, parse_sequence_file

__all__ = ["main", "run", "parse_sequence_file"]

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

CEILING_ENV_VAR = "REPSUM_NAIVE_CEILING"

BENCH_CSV_HEADER = "m,q,n,naive_terms,reduced_terms,naive_wall_ns,reduced_wall_ns"


def _default_ceiling() -> int:
    raw = os.environ.get(CEILING_ENV_VAR)
    if raw is None:
        return DEFAULT_NAIVE_CEILING
    try:
        value = int(raw)
    except ValueError as exc:
        raise SequenceFormatError(
            f"{CEILING_ENV_VAR} must be a positive integer, got {raw!r}"
        ) from exc
    if value < 1:
        raise SequenceFormatError(f"{CEILING_ENV_VAR} must be positive, got {value}")
    return value


def _add_sequence_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--sequence", required=True, help="sequence file (p/q lines or JSON array)")
    sub.add_argument(
        "--first-index",
        type=int,
        default=1,
        help="index of the first stored value (default 1)",
    )


def _add_output_flag(sub: argparse.ArgumentParser, default: str) -> None:
    sub.add_argument(
        "--output",
        choices=("json", "csv", "plain"),
        default=default,
        help=f"output format (default {default})",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="repsum",
        description="Exact evaluation and closed-form reduction of repeated sums.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    ev = commands.add_parser("eval", help="evaluate a repeated sum over a sequence")
    _add_sequence_flags(ev)
    ev.add_argument("--order", type=int, help="nesting order of the repeated sum")
    ev.add_argument("--nesting", type=int, help="nesting order of a weighted (binomial-sequence) sum")
    ev.add_argument(
        "--weight-order",
        type=int,
        default=0,
        help="inner binomial weight order for --nesting (default 0)",
    )
    ev.add_argument("--lower", type=int, help="lower bound (default: first stored index)")
    ev.add_argument("--upper", type=int, help="upper bound (default: last stored index)")
    ev.add_argument("--mode", choices=("naive", "reduced", "both"), default="both")
    ev.add_argument("--naive-ceiling", type=int, default=None)
    _add_output_flag(ev, "json")
    ev.set_defaults(handler=_cmd_eval)

    df = commands.add_parser("diff", help="difference rows of a sequence")
    _add_sequence_flags(df)
    df.add_argument("--order", type=int, default=1, help="difference order (default 1)")
    df.add_argument("--table", action="store_true", help="print all rows 0..order")
    _add_output_flag(df, "json")
    df.set_defaults(handler=_cmd_diff)

    dt = commands.add_parser("detect", help="detect a constant higher-order difference")
    _add_sequence_flags(dt)
    dt.add_argument(
        "--max-degree",
        type=int,
        default=None,
        help="largest degree to try (default: sequence length - 1)",
    )
    dt.add_argument("--verbose", action="store_true", help="include difference rows")
    _add_output_flag(dt, "json")
    dt.set_defaults(handler=_cmd_detect)

    hm = commands.add_parser("harmonic", help="exact repeated harmonic sum")
    hm.add_argument("--order", type=int, required=True, help="nesting order")
    hm.add_argument("--n", type=int, required=True, help="upper bound")
    hm.add_argument(
        "--check",
        action="store_true",
        help="re-evaluate by literal nesting and compare (small n only)",
    )
    hm.add_argument("--naive-ceiling", type=int, default=None)
    _add_output_flag(hm, "plain")
    hm.set_defaults(handler=_cmd_harmonic)

    ido = commands.add_parser("identity", help="sweep one registered identity")
    ido.add_argument("--id", required=True, help=f"one of: {', '.join(IDENTITY_IDS)}")
    ido.add_argument("--max-n", type=int, default=None)
    ido.add_argument("--max-m", type=int, default=None)
    ido.add_argument("--max-k", type=int, default=None)
    ido.add_argument("--trials", type=int, default=None)
    ido.add_argument("--seed", type=int, default=None)
    _add_output_flag(ido, "json")
    ido.set_defaults(handler=_cmd_identity)

    bn = commands.add_parser("bench", help="naive vs reduced term counts and wall time")
    bn.add_argument("--sequence", default=None, help="sequence file (default: all ones)")
    bn.add_argument("--first-index", type=int, default=1)
    bn.add_argument("--orders", default="1,2,5,10", help="comma-separated orders")
    bn.add_argument("--uppers", default="10", help="comma-separated upper bounds")
    bn.add_argument("--lower", type=int, default=1)
    bn.add_argument("--naive-ceiling", type=int, default=None)
    _add_output_flag(bn, "csv")
    bn.set_defaults(handler=_cmd_bench)

    return parser


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def _report_dict(report: EvalReport) -> dict:
    return {
        "value": format_rational(report.value),
        "terms_touched": report.terms_touched,
        "method": report.method,
    }


def _resolve_bounds(seq: Sequence, lower: Optional[int], upper: Optional[int]) -> tuple[int, int]:
    lo = seq.first_index if lower is None else lower
    hi = seq.last_index if upper is None else upper
    return lo, hi


def _cmd_eval(args: argparse.Namespace) -> int:
    if (args.order is None) == (args.nesting is None):
        raise UsageError("eval needs exactly one of --order or --nesting")
    ceiling = args.naive_ceiling if args.naive_ceiling is not None else _default_ceiling()
    seq = parse_sequence_file(args.sequence, args.first_index)
    lo, hi = _resolve_bounds(seq, args.lower, args.upper)

    reports: dict[str, EvalReport] = {}
    if args.order is not None:
        spec = SumSpec(args.order, lo, hi)
        if args.mode in ("naive", "both"):
            reports["naive"] = naive_repeated_sum(seq, spec, ceiling=ceiling)
        if args.mode in ("reduced", "both"):
            reports["reduced"] = reduce_repeated_sum(seq, spec)
    else:
        k, w = args.nesting, args.weight_order
        if args.mode in ("naive", "both"):
            count = binom(hi - lo + k, k)
            if count > ceiling:
                raise NaiveBudgetError(count, ceiling)
            value = naive_binomial_sequence_sum(seq, k, w, lo, hi)
            reports["naive"] = EvalReport(value, count, "naive")
        if args.mode in ("reduced", "both"):
            value = reduce_binomial_sequence_sum(seq, k, w, lo, hi)
            reports["reduced"] = EvalReport(value, hi - lo + 1, "reduced")

    if args.mode == "both":
        assert reports["naive"].value == reports["reduced"].value

    if args.output == "json":
        if args.mode == "both":
            _emit(json.dumps({name: _report_dict(r) for name, r in reports.items()}))
        else:
            _emit(json.dumps(_report_dict(reports[args.mode])))
    elif args.output == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["method", "value", "terms_touched"])
        for rep in reports.values():
            writer.writerow([rep.method, format_rational(rep.value), rep.terms_touched])
        sys.stdout.write(buf.getvalue())
    else:
        for rep in reports.values():
            _emit(
                f"{rep.method}: value={format_rational(rep.value)} "
                f"terms_touched={rep.terms_touched}"
            )
    return EXIT_OK


def _cmd_diff(args: argparse.Namespace) -> int:
    if args.order < 0:
        raise UsageError("--order must be >= 0")
    seq = parse_sequence_file(args.sequence, args.first_index)
    if args.table:
        rows = [list(r.to_strings()) for r in difference_table(seq, args.order).rows]
    else:
        rows = [list(difference(seq, args.order).to_strings())]

    if args.output == "json":
        payload = {"first_index": seq.first_index, "order": args.order}
        if args.table:
            payload["rows"] = rows
        else:
            payload["values"] = rows[0]
        _emit(json.dumps(payload))
    elif args.output == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["order", "index", "value"])
        base = 0 if args.table else args.order
        for offset, row in enumerate(rows):
            for pos, value in enumerate(row):
                writer.writerow([base + offset, seq.first_index + pos, value])
        sys.stdout.write(buf.getvalue())
    else:
        for row in rows:
            _emit(" ".join(row))
    return EXIT_OK


def _cmd_detect(args: argparse.Namespace) -> int:
    seq = parse_sequence_file(args.sequence, args.first_index)
    max_degree = args.max_degree if args.max_degree is not None else len(seq) - 1
    spec = detect_repeated_degree(seq, max_degree)

    if args.output == "json":
        if spec is None:
            _emit("null")
        else:
            payload = {"degree": spec.degree, "delta": format_rational(spec.delta)}
            if args.verbose:
                payload["rows"] = [
                    list(r.to_strings())
                    for r in difference_table(seq, spec.degree).rows
                ]
            _emit(json.dumps(payload))
    elif args.output == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["degree", "delta"])
        if spec is not None:
            writer.writerow([spec.degree, format_rational(spec.delta)])
        sys.stdout.write(buf.getvalue())
    else:
        if spec is None:
            _emit("none")
        else:
            _emit(f"degree={spec.degree} delta={format_rational(spec.delta)}")
            if args.verbose:
                for order, row in enumerate(difference_table(seq, spec.degree).rows):
                    _emit(f"  order {order}: " + " ".join(row.to_strings()))
    return EXIT_OK


def _cmd_harmonic(args: argparse.Namespace) -> int:
    from .harmonic import repeated_harmonic_closed

    value = repeated_harmonic_closed(args.order, args.n)
    checked = False
    if args.check:
        ceiling = (
            args.naive_ceiling if args.naive_ceiling is not None else _default_ceiling()
        )
        seq = make_sequence([Fraction(1, i) for i in range(1, args.n + 1)])
        spec = SumSpec(args.order, 1, args.n)
        oracle = naive_repeated_sum(seq, spec, ceiling=ceiling, literal=True)
        assert oracle.value == value
        checked = True

    if args.output == "json":
        _emit(
            json.dumps(
                {
                    "order": args.order,
                    "n": args.n,
                    "value": format_rational(value),
                    "checked": checked,
                }
            )
        )
    elif args.output == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["order", "n", "value", "checked"])
        writer.writerow([args.order, args.n, format_rational(value), checked])
        sys.stdout.write(buf.getvalue())
    else:
        _emit(format_rational(value))
    return EXIT_OK


def _cmd_identity(args: argparse.Namespace) -> int:
    if args.id not in IDENTITY_IDS:
        sys.stderr.write(
            f"unknown identity {args.id!r}; known ids: {', '.join(IDENTITY_IDS)}\n"
        )
        return EXIT_USAGE
    try:
        report = run_identity(
            args.id,
            max_n=args.max_n,
            max_m=args.max_m,
            max_k=args.max_k,
            trials=args.trials,
            seed=args.seed,
        )
    except ValueError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE

    if args.output == "json":
        _emit(json.dumps(report.to_json_dict()))
    elif args.output == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["identity", "cases", "failures"])
        writer.writerow([report.identity, report.cases, len(report.failures)])
        sys.stdout.write(buf.getvalue())
    else:
        _emit(
            f"{report.identity}: {report.cases} cases, "
            f"{len(report.failures)} failures (grid {report.grid})"
        )
        for failure in report.failures[:10]:
            _emit(f"  FAIL {failure.params}: lhs={failure.lhs} rhs={failure.rhs}")
    return EXIT_OK if report.ok else EXIT_FAILURE


def _cmd_bench(args: argparse.Namespace) -> int:
    ceiling = args.naive_ceiling if args.naive_ceiling is not None else _default_ceiling()
    try:
        orders = [int(x) for x in args.orders.split(",") if x.strip()]
        uppers = [int(x) for x in args.uppers.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"bad integer list: {exc}") from exc
    if not orders or not uppers:
        raise UsageError("need at least one order and one upper bound")

    if args.sequence is not None:
        seq = parse_sequence_file(args.sequence, args.first_index)
    else:
        length = max(uppers) - args.lower + 1
        seq = make_sequence([1] * length, first_index=args.lower)

    rows = []
    for m in orders:
        for n in uppers:
            spec = SumSpec(m, args.lower, n)
            naive_terms = spec.naive_term_count()
            naive_ns: Optional[int] = None
            naive_value = None
            if naive_terms <= ceiling:
                t0 = time.perf_counter_ns()
                naive_value = naive_repeated_sum(
                    seq, spec, ceiling=ceiling, literal=True
                ).value
                naive_ns = time.perf_counter_ns() - t0
            t0 = time.perf_counter_ns()
            reduced = reduce_repeated_sum(seq, spec)
            reduced_ns = time.perf_counter_ns() - t0
            if naive_value is not None:
                assert naive_value == reduced.value
            rows.append(
                {
                    "m": m,
                    "q": args.lower,
                    "n": n,
                    "naive_terms": naive_terms,
                    "reduced_terms": reduced.terms_touched,
                    "naive_wall_ns": naive_ns,
                    "reduced_wall_ns": reduced_ns,
                }
            )

    if args.output == "json":
        _emit(json.dumps(rows))
    elif args.output == "plain":
        for row in rows:
            _emit(" ".join(f"{key}={value}" for key, value in row.items()))
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(BENCH_CSV_HEADER.split(","))
        for row in rows:
            writer.writerow(
                [
                    row["m"],
                    row["q"],
                    row["n"],
                    row["naive_terms"],
                    row["reduced_terms"],
                    "" if row["naive_wall_ns"] is None else row["naive_wall_ns"],
                    row["reduced_wall_ns"],
                ]
            )
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


class UsageError(ValueError):
    """Bad flag combination caught after argparse."""


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles --help and usage errors
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except NaiveBudgetError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_BUDGET
    except (SequenceFormatError, ValueError, IndexError) as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_FAILURE


def run() -> None:
    sys.exit(main())
