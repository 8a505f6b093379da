"""Command line front end: sequence tables, series dumps, bijection
listings, and verification sweeps.

Subcommands
    table      rows (n, value) for a counting operation
    gf         series coefficients, bivariate ones as (n, y_exp, coeff)
    verify     run the identity checks and report pass/fail per check
    bijection  list the red/blue tilings of a given size with their
               involutions and 231 witnesses

Everything is flags-only and deterministic: the same invocation always
produces the same bytes.  Exit codes: 0 success, 1 verification failure,
2 usage error.  Counts are emitted as decimal strings so arbitrary
precision survives every format.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

from . import checks as checks_mod
from . import enumeration as enum_mod
from .bijection import enumerate_redblue, format_tiling, tiling_to_involution
from .fibonacci import count_bounded_tilings, fib_k
from .layered import Composition, decompose_layered, format_composition, parse_composition
from .perms import DEFAULT_INVOLUTION_CAP, CapExceededError, PATTERN_231, find_occurrence
from .series import BiSeries, DEFAULT_TRUNC, UniSeries


class UsageError(Exception):
    """Bad arguments; reported on stderr with exit code 2."""


# --------------------------------------------------------------------------
# parameter parsing
# --------------------------------------------------------------------------

def _parse_int(raw: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"expected an integer, got {raw!r}") from None


def _parse_pattern(raw: str) -> Composition:
    """Accept a composition like [1,4] or the digits of a layered
    permutation like 15432."""
    if raw.startswith("["):
        return parse_composition(raw)
    if raw.isdigit():
        comp = decompose_layered(tuple(int(ch) for ch in raw))
        if comp is None:
            raise ValueError(f"permutation {raw!r} is not layered")
        return comp
    raise ValueError(
        f"pattern must be a [..] composition or layered permutation digits, "
        f"got {raw!r}")


def _parse_kv(tokens: Sequence[str], schema: dict[str, Callable[[str], object]],
              op: str) -> dict:
    values: dict[str, object] = {}
    for token in tokens:
        key, sep, raw = token.partition("=")
        if not sep:
            raise UsageError(f"expected key=value arguments, got {token!r}")
        if key not in schema:
            raise UsageError(
                f"unknown parameter {key!r} for {op}; expected "
                + ", ".join(sorted(schema)))
        if key in values:
            raise UsageError(f"parameter {key!r} given twice")
        try:
            values[key] = schema[key](raw)
        except ValueError as exc:
            raise UsageError(f"bad value for {key}: {exc}") from None
    missing = sorted(set(schema) - set(values))
    if missing:
        raise UsageError(f"{op} needs parameters: " + ", ".join(missing))
    return values


# --------------------------------------------------------------------------
# operation registries
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class TableOp:
    params: dict[str, Callable[[str], object]]
    describe: str
    values: Callable[..., list[int]]


def _series_values(series: UniSeries, n_max: int) -> list[int]:
    return [series.coeff(n) for n in range(n_max + 1)]


def _involution_counts(n_max: int) -> list[int]:
    counts = [1, 1]
    for n in range(2, n_max + 1):
        counts.append(counts[n - 1] + (n - 1) * counts[n - 2])
    return counts[: n_max + 1]


TABLE_OPS: dict[str, TableOp] = {
    "fib": TableOp(
        {"k": _parse_int}, "generalized Fibonacci numbers of order k",
        lambda n_max, trunc, k: [fib_k(k, n) for n in range(n_max + 1)]),
    "tilings": TableOp(
        {"k": _parse_int}, "tilings of a strip by tiles of length <= k",
        lambda n_max, trunc, k: [count_bounded_tilings(n, k)
                                 for n in range(n_max + 1)]),
    "involutions": TableOp(
        {}, "involutions of length n",
        lambda n_max, trunc: _involution_counts(n_max)),
    "avoid231": TableOp(
        {}, "involutions avoiding 231 (2^(n-1))",
        lambda n_max, trunc: [1] + [2 ** (n - 1) for n in range(1, n_max + 1)]),
    "one231": TableOp(
        {}, "involutions containing exactly one 231",
        lambda n_max, trunc: [enum_mod.count_one231(n)
                              for n in range(n_max + 1)]),
    "avoid231_contain_k21": TableOp(
        {"k": _parse_int, "r": _parse_int},
        "avoid 231, contain k..21 exactly r times",
        lambda n_max, trunc, k, r: [enum_mod.count_avoid231_contain_k21(n, k, r)
                                    for n in range(n_max + 1)]),
    "avoid231_once": TableOp(
        {"pat": _parse_pattern},
        "avoid 231, contain a layered pattern exactly once",
        lambda n_max, trunc, pat: [enum_mod.count_avoid231_once_layered(n, pat)
                                   for n in range(n_max + 1)]),
    "avoid231_once_ones_block": TableOp(
        {"k": _parse_int, "l": _parse_int},
        "avoid 231, contain the k-singletons-then-block pattern once",
        lambda n_max, trunc, k, l: [enum_mod.count_avoid231_once_ones_block(n, k, l)
                                    for n in range(n_max + 1)]),
    "avoid231_avoid": TableOp(
        {"pat": _parse_pattern}, "avoid both 231 and a layered pattern",
        lambda n_max, trunc, pat: [enum_mod.count_avoid231_avoid_layered(n, pat)
                                   for n in range(n_max + 1)]),
    "one231_avoid_k21": TableOp(
        {"k": _parse_int}, "one 231, avoid k..21",
        lambda n_max, trunc, k: [enum_mod.count_one231_avoid_k21(n, k)
                                 for n in range(n_max + 1)]),
    "one231_avoid": TableOp(
        {"pat": _parse_pattern}, "one 231, avoid a layered pattern",
        lambda n_max, trunc, pat: _series_values(
            enum_mod.gf_one231_avoid_layered(pat, max(trunc, n_max)), n_max)),
    "one231_contain_k21": TableOp(
        {"k": _parse_int, "r": _parse_int},
        "one 231, contain k..21 exactly r times",
        lambda n_max, trunc, k, r: [enum_mod.count_one231_contain_k21(n, k, r)
                                    for n in range(n_max + 1)]),
    "one231_once": TableOp(
        {"pat": _parse_pattern},
        "one 231, contain a layered pattern exactly once",
        lambda n_max, trunc, pat: _series_values(
            enum_mod.gf_one231_once_layered(pat, max(trunc, n_max)), n_max)),
    "avoid132213": TableOp(
        {"a": _parse_int, "b": _parse_int, "c": _parse_int},
        "S_n avoiding 132, 213, and the dec/inc/dec pattern of sizes a,b,c",
        lambda n_max, trunc, a, b, c: [
            enum_mod.count_avoid_132_213_dec_inc_dec(n, a, b, c)
            for n in range(n_max + 1)]),
}


@dataclass(frozen=True)
class GfOp:
    params: dict[str, Callable[[str], object]]
    describe: str
    series: Callable[..., UniSeries | BiSeries]


GF_OPS: dict[str, GfOp] = {
    "fib": GfOp({"k": _parse_int}, "x/(1 - x - ... - x^k)",
                lambda trunc, k: enum_mod.gf_fib_k(k, trunc)),
    "avoid231_contain_k21": GfOp(
        {"k": _parse_int, "r": _parse_int},
        "avoid 231, contain k..21 exactly r times",
        lambda trunc, k, r: enum_mod.gf_avoid231_contain_k21(k, r, trunc)),
    "avoid231_contain_k21_xy": GfOp(
        {"k": _parse_int},
        "bivariate: y marks occurrences of k..21 among 231-avoiders",
        lambda trunc, k: enum_mod.gf_avoid231_contain_k21_xy(k, trunc)),
    "avoid231_once": GfOp(
        {"pat": _parse_pattern},
        "avoid 231, contain a layered pattern exactly once",
        lambda trunc, pat: enum_mod.gf_avoid231_once_layered(pat, trunc)),
    "avoid231_avoid": GfOp(
        {"pat": _parse_pattern}, "avoid both 231 and a layered pattern",
        lambda trunc, pat: enum_mod.gf_avoid231_avoid_layered(pat, trunc)),
    "one231_avoid_k21": GfOp(
        {"k": _parse_int}, "one 231, avoid k..21",
        lambda trunc, k: enum_mod.gf_one231_avoid_k21(k, trunc)),
    "one231_avoid": GfOp(
        {"pat": _parse_pattern}, "one 231, avoid a layered pattern",
        lambda trunc, pat: enum_mod.gf_one231_avoid_layered(pat, trunc)),
    "one231_contain_k21": GfOp(
        {"k": _parse_int, "r": _parse_int},
        "one 231, contain k..21 exactly r times",
        lambda trunc, k, r: enum_mod.gf_one231_contain_k21(k, r, trunc)),
    "one231_contain_k21_xy": GfOp(
        {"k": _parse_int},
        "bivariate: y marks occurrences of k..21 among one-231 involutions",
        lambda trunc, k: enum_mod.gf_one231_contain_k21_xy(k, trunc)),
    "one231_once": GfOp(
        {"pat": _parse_pattern},
        "one 231, contain a layered pattern exactly once",
        lambda trunc, pat: enum_mod.gf_one231_once_layered(pat, trunc)),
}


# --------------------------------------------------------------------------
# rendering
# --------------------------------------------------------------------------

def _render_rows(headers: Sequence[str], rows: Sequence[Sequence[object]],
                 fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(headers)
        writer.writerows(rows)
        return buf.getvalue()
    if fmt == "json":
        payload = [dict(zip(headers, row)) for row in rows]
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "markdown":
        lines = ["| " + " | ".join(str(h) for h in headers) + " |",
                 "| " + " | ".join("---" for _ in headers) + " |"]
        lines.extend("| " + " | ".join(str(cell) for cell in row) + " |"
                     for row in rows)
        return "\n".join(lines) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _render_perm(p: Sequence[int]) -> str:
    if len(p) <= 9:
        return "".join(str(v) for v in p)
    return ",".join(str(v) for v in p)


def _params_label(params: dict) -> str:
    parts = []
    for key, value in params.items():
        if isinstance(value, tuple):
            parts.append(f"{key}={format_composition(value)}")
        else:
            parts.append(f"{key}={value}")
    return " ".join(parts)


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------

def cmd_table(args: argparse.Namespace) -> int:
    op = TABLE_OPS.get(args.op)
    if op is None:
        raise UsageError(f"unknown table operation {args.op!r}; available: "
                         + ", ".join(sorted(TABLE_OPS)))
    if args.n_max < 0:
        raise UsageError("--n-max must be nonnegative")
    params = _parse_kv(args.params, op.params, args.op)
    values = op.values(args.n_max, args.trunc, **params)
    rows = [(n, str(v)) for n, v in enumerate(values)]
    _emit(_render_rows(("n", "value"), rows, args.format), args.out)
    if args.plot:
        from .plotting import save_sequence_plot
        title = f"{args.op} {_params_label(params)}".strip()
        save_sequence_plot(list(enumerate(values)), title, args.plot)
    return 0


def cmd_gf(args: argparse.Namespace) -> int:
    op = GF_OPS.get(args.op)
    if op is None:
        raise UsageError(f"unknown series operation {args.op!r}; available: "
                         + ", ".join(sorted(GF_OPS)))
    if args.trunc < 0:
        raise UsageError("--trunc must be nonnegative")
    params = _parse_kv(args.params, op.params, args.op)
    series = op.series(args.trunc, **params)
    title = f"{args.op} {_params_label(params)}".strip()
    if isinstance(series, BiSeries):
        triples = list(series.terms())
        rows = [(n, e, str(c)) for n, e, c in triples]
        _emit(_render_rows(("n", "y_exp", "coeff"), rows, args.format),
              args.out)
        if args.plot:
            from .plotting import save_bivariate_plot
            save_bivariate_plot(triples, title, args.plot)
    else:
        rows = [(n, str(series.coeff(n))) for n in range(series.trunc + 1)]
        _emit(_render_rows(("n", "coeff"), rows, args.format), args.out)
        if args.plot:
            from .plotting import save_sequence_plot
            save_sequence_plot(
                [(n, series.coeff(n)) for n in range(series.trunc + 1)],
                title, args.plot)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if not 0 <= args.n_max <= DEFAULT_INVOLUTION_CAP:
        raise UsageError(
            f"--n-max must be between 0 and {DEFAULT_INVOLUTION_CAP}: "
            f"the sweeps are exhaustive")
    if args.trunc < args.n_max:
        raise UsageError("--trunc must be at least --n-max so series "
                         "coefficients cover the oracle range")
    results = checks_mod.run_checks(args.n_max, args.trunc, args.only)
    if not results:
        raise UsageError(f"--only {args.only!r} matched no checks; ids: "
                         + ", ".join(c.check_id for c in checks_mod.ALL_CHECKS))
    rows = [(r.check_id, r.scope, "pass" if r.passed else "FAIL", r.detail)
            for r in results]
    _emit(_render_rows(("check", "scope", "status", "counterexample"), rows,
                       args.format), args.out)
    return 0 if all(r.passed for r in results) else 1


def cmd_bijection(args: argparse.Namespace) -> int:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    if args.n > DEFAULT_INVOLUTION_CAP:
        raise UsageError(f"--n capped at {DEFAULT_INVOLUTION_CAP} "
                         f"(exhaustive listing)")
    tilings = list(enumerate_redblue(args.n))
    if args.n < 4:
        print(f"note: no tilings of size {args.n}; the red tile needs 4 "
              f"squares", file=sys.stderr)
    rows = []
    for tiling in tilings:
        image = tiling_to_involution(tiling)
        positions = find_occurrence(image, PATTERN_231)
        witness_vals = tuple(image[i - 1] for i in positions)
        rows.append((format_tiling(tiling), _render_perm(image),
                     ",".join(str(i) for i in positions),
                     ",".join(str(v) for v in witness_vals)))
    _emit(_render_rows(
        ("tiling", "involution", "witness_positions", "witness_values"),
        rows, args.format), args.out)
    if args.plot and tilings:
        from .plotting import save_tiling_plot
        save_tiling_plot(tilings, f"red/blue tilings of {args.n}", args.plot)
    return 0


# --------------------------------------------------------------------------
# entry point
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="inv231",
        description="Exact enumeration of involutions restricted by the "
                    "pattern 231.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, plot: bool = True) -> None:
        p.add_argument("--format", choices=("csv", "json", "markdown"),
                       default="csv", help="output format (default csv)")
        p.add_argument("--out", metavar="PATH",
                       help="write output to a file instead of stdout")
        if plot:
            p.add_argument("--plot", metavar="PATH",
                           help="also save a matplotlib figure")

    p_table = sub.add_parser(
        "table", help="sequence table (n, value) for a counting operation")
    p_table.add_argument("op", help="operation name, e.g. one231 or fib")
    p_table.add_argument("params", nargs="*", metavar="key=value",
                         help="operation parameters, e.g. k=4 r=1 pat=[1,4]")
    p_table.add_argument("--n-max", type=int, default=16, dest="n_max")
    p_table.add_argument("--trunc", type=int, default=DEFAULT_TRUNC)
    common(p_table)
    p_table.set_defaults(func=cmd_table)

    p_gf = sub.add_parser(
        "gf", help="series coefficients for a generating function")
    p_gf.add_argument("op", help="operation name, e.g. avoid231_contain_k21")
    p_gf.add_argument("params", nargs="*", metavar="key=value")
    p_gf.add_argument("--trunc", type=int, default=DEFAULT_TRUNC)
    common(p_gf)
    p_gf.set_defaults(func=cmd_gf)

    p_verify = sub.add_parser(
        "verify", help="run the verification sweeps")
    p_verify.add_argument("--n-max", type=int, default=9, dest="n_max")
    p_verify.add_argument("--trunc", type=int, default=DEFAULT_TRUNC)
    p_verify.add_argument("--only", metavar="SUBSTRING",
                          help="run only checks whose id contains this")
    common(p_verify, plot=False)
    p_verify.set_defaults(func=cmd_verify)

    p_bij = sub.add_parser(
        "bijection", help="list red/blue tilings with their involutions")
    p_bij.add_argument("--n", type=int, default=6,
                       help="size of the tilings (default 6)")
    common(p_bij)
    p_bij.set_defaults(func=cmd_bijection)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, CapExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
