"""Command line front end.

Subcommands
-----------
branch   one multiplicity (--mu) or the full decomposition table
dim      irreducible dimension by product/determinant formula, or both
table    recompute the two built-in golden decomposition tables
verify   determinant formulas vs the character oracle for one input
compare  cross-family multiplicities on coupled rank windows

All output data goes to stdout (pretty text, JSON with stable key order
and decimal-string multiplicities, or CSV with a pair,lambda,mu,mult
header); diagnostics go to stderr.  Exit codes: 0 success/agreement,
1 usage error, 2 verification mismatch, 3 oracle scale cap exceeded.
The oracle cap defaults to BRANCHKIT_MAX_DIM (else 50000).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import __version__
from .branching import (
    MultiplicityTable,
    branch_determinant,
    compare_pairs,
    decompose,
    dimension_sum,
    interlaces,
    iter_dominant,
    multiplicity,
)
from .core import (
    BranchingError,
    BranchPair,
    DominantWeight,
    format_weight,
    make_weight,
    parse_group,
    parse_pair,
    parse_weight,
)
from .oracle import ScaleExceeded, fold_mirror_rows, restrict_and_decompose
from .weyl import weyl_dim_det, weyl_dim_product

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_SCALE = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad arguments; remap to the usage code
    def error(self, message):
        raise _UsageError(message)


# golden decomposition tables reproduced by `table`
TABLE2_LAMBDA = (2, 1, 0)
TABLE2_MUS = ((0,), (1,), (2,))
TABLE2 = {
    "Sp:6/Sp:2": (20, 16, 4),
    "SO:7/SO:3": (20, 20, 5),
    "SO:6/SO:2": (24, 16, 4),
    "SO:6/SO:3": (8, 12, 4),
    "SO:7/SO:2": (45, 25, 5),
    "GL:3/GL:1": (2, 4, 2),
}
TABLE3_LAMBDA = (3, 1, 0, 0)
TABLE3_MUS = ((0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (3, 0), (3, 1))
TABLE3 = {
    "Sp:8/Sp:4": (45, 40, 10, 16, 4, 4, 1),
    "SO:9/SO:5": (45, 40, 10, 16, 4, 4, 1),
    "SO:8/SO:4": (45, 40, 10, 16, 4, 4, 1),
}


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _meta() -> dict:
    return {"formula": "determinant", "tool": "branchkit", "version": __version__}


def _weight_label(parts) -> str:
    return format_weight(parts) or "-"


def _parse_weights(pair: BranchPair, args) -> tuple[DominantWeight, DominantWeight | None]:
    lam = make_weight(pair.big, parse_weight(args.lam))
    mu = None
    if args.mu is not None:
        mu = make_weight(pair.small, parse_weight(args.mu))
    return lam, mu


def _emit_csv(rows) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["pair", "lambda", "mu", "mult"])
    for pair_enc, lam, mu, mult in rows:
        writer.writerow([pair_enc, format_weight(lam), format_weight(mu), str(mult)])


def _cmd_branch(args) -> int:
    pair = parse_pair(args.pair)
    lam, mu = _parse_weights(pair, args)
    if mu is not None:
        value = multiplicity(pair, lam, mu)
        if args.format == "json":
            sys.stdout.write(
                _dumps(
                    {
                        "pair": pair.encode(),
                        "lambda": list(lam.parts),
                        "mu": list(mu.parts),
                        "mult": str(value),
                        "meta": _meta(),
                    }
                )
            )
        elif args.format == "csv":
            _emit_csv([(pair.encode(), lam.parts, mu.parts, value)])
        else:
            print(value)
        return EXIT_OK

    table = decompose(pair, lam)
    lhs = dimension_sum(table)
    rhs = weyl_dim_product(pair.big, lam)
    ok = lhs == rhs
    if args.format == "json":
        record = {
            "pair": pair.encode(),
            "lambda": list(lam.parts),
            "rows": [{"mu": list(r[0]), "mult": str(r[1])} for r in table.rows],
            "dim_check": {"lhs": str(lhs), "rhs": str(rhs), "ok": ok},
            "meta": _meta(),
        }
        sys.stdout.write(_dumps(record))
    elif args.format == "csv":
        _emit_csv([(pair.encode(), lam.parts, mu_, c) for mu_, c in table.rows])
    else:
        print(f"pair {pair.encode()}  lambda {_weight_label(lam.parts)}")
        for mu_, c in table.rows:
            print(f"  mu {_weight_label(mu_):<12} {c}")
        print(f"dim check: {lhs} = {rhs} {'OK' if ok else 'MISMATCH'}")
    if not ok:
        print(f"dimension sum {lhs} != {rhs}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def _cmd_dim(args) -> int:
    group = parse_group(args.group)
    lam = make_weight(group, parse_weight(args.lam))
    if args.method == "product":
        print(weyl_dim_product(group, lam))
        return EXIT_OK
    if args.method == "det":
        print(weyl_dim_det(group, lam))
        return EXIT_OK
    a = weyl_dim_product(group, lam)
    b = weyl_dim_det(group, lam)
    if a == b:
        print(f"{a} = {b} OK")
        return EXIT_OK
    print(f"{a} != {b} MISMATCH")
    return EXIT_MISMATCH


def _golden(which: int):
    if which == 2:
        return TABLE2_LAMBDA, TABLE2_MUS, TABLE2
    return TABLE3_LAMBDA, TABLE3_MUS, TABLE3


def _cmd_table(args) -> int:
    lam_parts, mus, golden = _golden(args.paper)
    computed: dict[str, tuple[int, ...]] = {}
    mismatches: list[str] = []
    for enc, expected in golden.items():
        pair = parse_pair(enc)
        lam = make_weight(pair.big, lam_parts)
        got = tuple(
            multiplicity(pair, lam, make_weight(pair.small, mu)) for mu in mus
        )
        computed[enc] = got
        if got != expected:
            mismatches.append(f"{enc}: computed {got}, expected {expected}")

    if args.format == "json":
        record = {
            "table": args.paper,
            "lambda": list(lam_parts),
            "columns": [list(mu) for mu in mus],
            "rows": {enc: [str(v) for v in vals] for enc, vals in computed.items()},
            "ok": not mismatches,
            "meta": _meta(),
        }
        sys.stdout.write(_dumps(record))
    elif args.format == "csv":
        flat = []
        for enc, vals in computed.items():
            flat.extend((enc, lam_parts, mu, v) for mu, v in zip(mus, vals))
        _emit_csv(flat)
    else:
        head = "  ".join(f"{_weight_label(mu):>6}" for mu in mus)
        print(f"lambda {_weight_label(lam_parts)}")
        print(f"{'pair':<12}{head}")
        for enc, vals in computed.items():
            body = "  ".join(f"{v:>6}" for v in vals)
            print(f"{enc:<12}{body}")
    for line in mismatches:
        print(line, file=sys.stderr)
    return EXIT_MISMATCH if mismatches else EXIT_OK


def _cmd_verify(args) -> int:
    pair = parse_pair(args.pair)
    lam = make_weight(pair.big, parse_weight(args.lam))
    if pair.big.so_even and len(lam) and lam.parts[-1] > 0:
        print(
            f"note: lambda_n = {lam.parts[-1]} > 0 for even orthogonal {pair.big}; "
            "this corner has no worked reference values, comparing anyway",
            file=sys.stderr,
        )
    problems: list[str] = []

    table = decompose(pair, lam)
    lhs = dimension_sum(table)
    rhs = weyl_dim_product(pair.big, lam)
    if lhs != rhs:
        problems.append(f"dimension sum {lhs} != dim {rhs}")

    # the determinant must be positive exactly on the interlacing window
    bound = lam.parts[0] if len(lam) else 0
    for mu_parts in iter_dominant(pair.m, bound):
        mu = make_weight(pair.small, mu_parts)
        det = branch_determinant(pair, lam, mu)
        window = interlaces(pair, lam, mu)
        if (det > 0) != window:
            problems.append(
                f"mu={_weight_label(mu_parts)}: determinant {det} vs window {window}"
            )

    if args.oracle:
        oracle_table = restrict_and_decompose(pair, lam, max_dim=args.max_dim)
        folded = fold_mirror_rows(pair, oracle_table.rows)
        if dict(folded) != table.as_dict():
            want = table.as_dict()
            have = dict(folded)
            for mu_parts in sorted(set(want) | set(have), reverse=True):
                a, b = want.get(mu_parts, 0), have.get(mu_parts, 0)
                if a != b:
                    problems.append(
                        f"mu={_weight_label(mu_parts)}: formula {a}, oracle {b}"
                    )

    if problems:
        for line in problems:
            print(line, file=sys.stderr)
        print(f"DISAGREE ({len(problems)} problems)")
        return EXIT_MISMATCH
    print(f"AGREE ({len(table.rows)} rows)")
    return EXIT_OK


def _cmd_compare(args) -> int:
    report = compare_pairs(args.n, args.m, parse_weight(args.lam), parse_weight(args.mu))
    print(
        f"n={report.n} m={report.m} lambda={_weight_label(report.lam)} "
        f"mu={_weight_label(report.mu)}"
    )
    for enc, value in report.values:
        shown = "-" if value is None else value
        print(f"  {enc:<14} {shown}")

    def verdict(flag: bool | None) -> str:
        if flag is None:
            return "n/a"
        return "holds" if flag else "FAILS"

    print(f"  short-mu:      {verdict(report.clause_short_mu)}")
    print(f"  short-lambda:  {verdict(report.clause_short_lambda)}")
    print(f"  sp-so:         {verdict(report.clause_sp_so)}")
    failed = False in (
        report.clause_short_mu,
        report.clause_short_lambda,
        report.clause_sp_so,
    )
    return EXIT_MISMATCH if failed else EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="branchkit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"branchkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    env_cap = int(os.environ.get("BRANCHKIT_MAX_DIM", "50000"))

    p = sub.add_parser("branch", help="multiplicity or full decomposition")
    p.add_argument("--pair", required=True, help="e.g. Sp:6/Sp:2")
    p.add_argument("--lambda", dest="lam", required=True, help="e.g. 2,1,0")
    p.add_argument("--mu", help="subgroup weight; omit for the full table")
    p.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    p.set_defaults(func=_cmd_branch)

    p = sub.add_parser("dim", help="irreducible dimension")
    p.add_argument("--group", required=True, help="e.g. SO:7")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--method", choices=("product", "det", "both"), default="both")
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("table", help="recompute a built-in golden table")
    p.add_argument("--paper", type=int, choices=(2, 3), required=True)
    p.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="formula self-checks and oracle comparison")
    p.add_argument("--pair", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--oracle", action="store_true", help="also run the character oracle")
    p.add_argument("--max-dim", type=int, default=env_cap, help="oracle dimension cap")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("compare", help="coupled rank windows across families")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.set_defaults(func=_cmd_compare)

    return parser


def run(argv: list[str]) -> int:
    """Parse argv (no program name) and execute; returns the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, BranchingError) as exc:
        if isinstance(exc, ScaleExceeded):
            print(f"scale cap: {exc}", file=sys.stderr)
            return EXIT_SCALE
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv: list[str] | None = None) -> None:
    sys.exit(run(sys.argv[1:] if argv is None else argv))
