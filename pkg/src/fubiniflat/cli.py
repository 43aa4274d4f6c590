"""Command-line interface.

Subcommands: table, verify, check, witness, oeis, enumerate.  Exit codes
follow one contract everywhere: 0 success/agreement, 1 operational error
(bad input, unreadable file, ceiling exceeded, non-convergence), 2 a
mathematical mismatch (formula vs oracle, conjecture vs data, sequence vs
catalog).  Identical invocations produce byte-identical csv/json output.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Sequence

from .analysis import (
    InadmissibleContent,
    construct_canonical,
    construct_flat_runs,
    construct_min_runs_wflat_runs,
)
from .config import CeilingExceeded, Limits, resolve_limits
from .conjectures import (
    ConvergenceFailure,
    DESCENT_CONVENTIONS,
    K_RULES,
    check_eulerian_conjecture,
    check_genfunc,
)
from .core import (
    FlattenVariant,
    InvalidContentError,
    NotFubiniError,
    Ranking,
    ReducedContent,
    classify,
    runs,
)
from .enumeration import count_filtered, count_table, fubini_by_reduced_content, fubini_stream
from .formulas import fubini_number, weakly_monotone_count
from .oeis import BFileParseError, compare_prefix, load_bfile
from .verify import FORMULA_NAMES, verify_formula

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2

_VARIANT_NAMES = [v.cli_name for v in FlattenVariant]


def _parse_int_csv(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.replace(" ", "").split(",") if p != "")
    except ValueError:
        raise ValueError(f"expected a comma-separated list of integers, got {text!r}") from None


def _generator_fubini(n_max: int, limits: Limits) -> dict[int, int]:
    return {n: fubini_number(n) for n in range(n_max + 1)}


def _generator_weakly_increasing(n_max: int, limits: Limits) -> dict[int, int]:
    return {n: weakly_monotone_count(n) for n in range(1, n_max + 1)}


def _make_total_generator(variant: FlattenVariant) -> Callable[[int, Limits], dict[int, int]]:
    def gen(n_max: int, limits: Limits) -> dict[int, int]:
        values = {0: 1}
        for n in range(1, n_max + 1):
            values[n] = sum(count_filtered(n, variant, limits=limits))
        return values

    return gen


# name -> (producer, uses exhaustive enumeration)
GENERATORS: dict[str, tuple[Callable[[int, Limits], dict[int, int]], bool]] = {
    "fubini": (_generator_fubini, False),
    "weakly-increasing": (_generator_weakly_increasing, False),
    "flat-runs-total": (_make_total_generator(FlattenVariant.FLAT_RUNS), True),
    "flat-wruns-total": (_make_total_generator(FlattenVariant.FLAT_WRUNS), True),
    "wflat-runs-total": (_make_total_generator(FlattenVariant.WFLAT_RUNS), True),
    "wflat-wruns-total": (_make_total_generator(FlattenVariant.WFLAT_WRUNS), True),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fubiniflat",
        description="Enumerate, count, verify, and stress-test flattened Fubini rankings.",
    )
    parser.add_argument("--n-ceiling", type=int, default=None, help="enumeration length ceiling")
    parser.add_argument(
        "--stirling-ceiling", type=int, default=None, help="Stirling permutation order ceiling"
    )
    parser.add_argument(
        "--allow-empty", action="store_true", help="accept length n = 0 where it has a meaning"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="emit the (n, k) count table of one family")
    p_table.add_argument("--variant", required=True, choices=_VARIANT_NAMES)
    p_table.add_argument("--n-max", type=int, required=True)
    p_table.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p_table.set_defaults(handler=_cmd_table)

    p_verify = sub.add_parser("verify", help="compare a closed form against brute force")
    p_verify.add_argument("formula", choices=sorted(FORMULA_NAMES))
    p_verify.add_argument("--n-max", type=int, required=True)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(handler=_cmd_verify)

    p_check = sub.add_parser("check", help="run a conjecture checker and report")
    p_check.add_argument("conjecture", choices=("genfunc", "eulerian"))
    p_check.add_argument("--n-max", type=int, default=8, help="genfunc: compare up to this n")
    p_check.add_argument(
        "--j", type=int, nargs="+", default=[2, 3, 4], help="eulerian: tested j values"
    )
    p_check.add_argument("--k-rule", choices=K_RULES + ("both",), default="both")
    p_check.add_argument(
        "--convention", choices=DESCENT_CONVENTIONS + ("both",), default="both"
    )
    p_check.add_argument("--format", choices=("text", "json"), default="text")
    p_check.set_defaults(handler=_cmd_check)

    p_witness = sub.add_parser("witness", help="construct a ranking with prescribed content")
    p_witness.add_argument("kind", choices=("flat-runs", "canonical", "min-runs"))
    p_witness.add_argument("--rc", type=str, default=None, help="reduced content, e.g. 1,2,3")
    p_witness.add_argument(
        "--content", type=str, default=None, help="full content with zeros, e.g. 3,0,0,2,0"
    )
    p_witness.set_defaults(handler=_cmd_witness)

    p_oeis = sub.add_parser("oeis", help="compare a computed sequence against a local b-file")
    p_oeis.add_argument("sequence_id")
    p_oeis.add_argument("--bfile", required=True)
    p_oeis.add_argument("--generator", required=True, choices=sorted(GENERATORS))
    p_oeis.add_argument(
        "--offset",
        type=int,
        default=0,
        help="computed index i is compared with b-file index i + offset",
    )
    p_oeis.add_argument("--n-max", type=int, default=None)
    p_oeis.add_argument("--format", choices=("text", "json"), default="text")
    p_oeis.set_defaults(handler=_cmd_oeis)

    p_enum = sub.add_parser("enumerate", help="stream rankings, one per line")
    p_enum.add_argument("--n", type=int, default=None)
    p_enum.add_argument("--rc", type=str, default=None, help="restrict to one reduced content")
    p_enum.add_argument("--variant", choices=_VARIANT_NAMES, default=None)
    p_enum.set_defaults(handler=_cmd_enumerate)

    return parser


def _cmd_table(args, limits: Limits) -> int:
    if args.n_max < 1:
        raise ValueError("--n-max must be at least 1")
    table = count_table(args.n_max, FlattenVariant.from_cli_name(args.variant), limits=limits)
    if args.format == "csv":
        sys.stdout.write(table.to_csv())
    elif args.format == "json":
        sys.stdout.write(table.to_json())
    else:
        sys.stdout.write(table.to_text())
    return EXIT_OK


def _cmd_verify(args, limits: Limits) -> int:
    if args.n_max < 1:
        raise ValueError("--n-max must be at least 1")
    check = verify_formula(args.formula, args.n_max, limits)
    sys.stdout.write(check.to_json() if args.format == "json" else check.to_text())
    return EXIT_OK if check.ok else EXIT_MISMATCH


def _cmd_check(args, limits: Limits) -> int:
    if args.conjecture == "genfunc":
        reports = [check_genfunc(args.n_max, limits=limits)]
    else:
        k_rules = K_RULES if args.k_rule == "both" else (args.k_rule,)
        conventions = DESCENT_CONVENTIONS if args.convention == "both" else (args.convention,)
        reports = [
            check_eulerian_conjecture(args.j, k_rule, convention, limits=limits)
            for k_rule in k_rules
            for convention in conventions
        ]
    for report in reports:
        sys.stdout.write(report.to_json() if args.format == "json" else report.to_text())
    return EXIT_OK if any(r.ok for r in reports) else EXIT_MISMATCH


def _describe(ranking: Ranking) -> str:
    families = sorted(v.cli_name for v in classify(ranking))
    strict_k = runs(ranking, FlattenVariant.FLAT_RUNS.run_mode).k
    weak_k = runs(ranking, FlattenVariant.WFLAT_WRUNS.run_mode).k
    return (
        f"ranking: {','.join(str(x) for x in ranking)}\n"
        f"strict runs: {strict_k}, weak runs: {weak_k}\n"
        f"families: {', '.join(families) if families else 'none'}\n"
    )


def _cmd_witness(args, limits: Limits) -> int:
    if args.kind == "min-runs":
        if args.content is not None:
            witness = construct_min_runs_wflat_runs(_parse_int_csv(args.content))
        elif args.rc is not None:
            witness = construct_min_runs_wflat_runs(
                ReducedContent(_parse_int_csv(args.rc)).to_content()
            )
        else:
            raise ValueError("min-runs needs --content (or --rc)")
    else:
        if args.rc is None:
            raise ValueError(f"{args.kind} needs --rc")
        rc = ReducedContent(_parse_int_csv(args.rc))
        witness = construct_flat_runs(rc) if args.kind == "flat-runs" else construct_canonical(rc)
    sys.stdout.write(_describe(witness))
    return EXIT_OK


def _cmd_oeis(args, limits: Limits) -> int:
    bfile = load_bfile(args.bfile, sequence_id=args.sequence_id)
    producer, enumerative = GENERATORS[args.generator]
    if args.n_max is not None:
        n_max = args.n_max
    elif enumerative:
        n_max = min(limits.n_ceiling, 8)
    else:
        n_max = max(bfile.index_max - args.offset, 0)
    if enumerative:
        limits.check_length(n_max)
    comparison = compare_prefix(
        producer(n_max, limits), bfile, generator=args.generator, offset=args.offset
    )
    sys.stdout.write(comparison.to_json() if args.format == "json" else comparison.to_text())
    return EXIT_OK if comparison.ok else EXIT_MISMATCH


def _cmd_enumerate(args, limits: Limits) -> int:
    if args.rc is not None:
        stream = fubini_by_reduced_content(_parse_int_csv(args.rc), limits=limits)
    elif args.n is not None:
        if args.n == 0 and not limits.allow_empty:
            raise ValueError("n = 0 needs --allow-empty (or FUBINI_ALLOW_EMPTY=1)")
        stream = fubini_stream(args.n, limits=limits)
    else:
        raise ValueError("enumerate needs --n or --rc")
    variant = FlattenVariant.from_cli_name(args.variant) if args.variant else None
    for ranking in stream:
        if variant is not None and variant not in classify(ranking):
            continue
        sys.stdout.write(",".join(str(x) for x in ranking) + "\n")
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        limits = resolve_limits(
            n_ceiling=args.n_ceiling,
            stirling_ceiling=args.stirling_ceiling,
            allow_empty=True if args.allow_empty else None,
        )
        return args.handler(args, limits)
    except CeilingExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ConvergenceFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (
        NotFubiniError,
        InvalidContentError,
        InadmissibleContent,
        BFileParseError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
