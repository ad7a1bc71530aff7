"""Command-line interface: construct, verify, and classify.

Exit codes: 0 success / GH property holds, 1 verification failure,
2 bad input (file format, field parameters, construction guards).
"""

from __future__ import annotations

import argparse
import os
import sys

from .constructions import gh_cubic, gh_linear, gh_quadratic
from .field import Field
from .functions import classify_functions
from .matrix_io import MatrixFormatError, read_matrix, render_pretty, write_matrix
from .verifier import verify_gh

_CONSTRUCTIONS = {
    "3.1": gh_quadratic,
    "3.2": gh_linear,
    "3.3": gh_cubic,
}


def _parse_modulus(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"modulus must be comma-separated integers, got {text!r}"
        )


def _cmd_construct(args) -> int:
    field = Field(args.p, args.n, args.modulus)
    matrix = _CONSTRUCTIONS[args.theorem](field)
    write_matrix(matrix, args.out)
    print(
        f"wrote {args.out}: order={matrix.order} lambda={matrix.claimed_lambda} "
        f"provenance={matrix.provenance}"
    )
    if args.pretty:
        print(render_pretty(matrix), end="")
    return 0


def _cmd_verify(args) -> int:
    matrix = read_matrix(args.path)
    threads = args.threads if args.threads else os.cpu_count() or 1
    report = verify_gh(matrix, lam=args.lam, collect_all=args.all_failures, threads=threads)
    if report.passed:
        print(
            f"PASS u={report.u} lambda={report.lam} k={report.order} "
            f"pairs={report.checked_pairs}"
        )
        return 0
    print(
        f"FAIL u={report.u} lambda={report.lam} k={report.order} "
        f"pairs={report.checked_pairs}"
    )
    shown = report.failures if args.all_failures else (report.first_failure,)
    for failure in shown:
        print(
            f"rows ({failure.row_i}, {failure.row_l}): "
            f"histogram {list(failure.histogram)}"
        )
    return 1


def _cmd_classify(args) -> int:
    field = Field(args.p, args.n)
    counts = classify_functions(field)
    print(f"type I: {counts.type_i}, type II: {counts.type_ii}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghforge",
        description="Construct and brute-force-verify generalized Hadamard "
        "matrices over additive groups of finite fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    con = sub.add_parser("construct", help="build a matrix and write it to a file")
    con.add_argument(
        "--theorem",
        required=True,
        choices=sorted(_CONSTRUCTIONS),
        help="construction to run: 3.1 quadratic blocks (odd characteristic, "
        "order q^2), 3.2 scalar-multiple blocks (order q^2), "
        "3.3 shifted copies of 3.2 (order q^3)",
    )
    con.add_argument("--p", type=int, required=True, help="prime characteristic")
    con.add_argument("--n", type=int, default=1, help="extension degree (default 1)")
    con.add_argument(
        "--modulus",
        type=_parse_modulus,
        default=None,
        help="comma-separated modulus coefficients c0,...,cn (default: "
        "smallest monic irreducible)",
    )
    con.add_argument("--out", required=True, help="output path")
    con.add_argument(
        "--pretty",
        action="store_true",
        help="also print the matrix with symbolic elements (GF(4): 0,1,a,a+1)",
    )
    con.set_defaults(func=_cmd_construct)

    ver = sub.add_parser("verify", help="check the GH property of a matrix file")
    ver.add_argument("path", help="matrix file to verify")
    ver.add_argument(
        "--lambda",
        dest="lam",
        type=int,
        default=None,
        help="lambda to verify against (default: file header value)",
    )
    ver.add_argument(
        "--threads",
        type=int,
        default=0,
        help="worker threads (default: all available); result is identical "
        "for every thread count",
    )
    ver.add_argument(
        "--all-failures",
        action="store_true",
        help="scan every row pair and report all violations",
    )
    ver.set_defaults(func=_cmd_verify)

    cls = sub.add_parser(
        "classify", help="exhaustively count type I / type II maps on GF(p^n)"
    )
    cls.add_argument("--p", type=int, required=True, help="prime characteristic")
    cls.add_argument("--n", type=int, default=1, help="extension degree (default 1)")
    cls.set_defaults(func=_cmd_classify)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MatrixFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
