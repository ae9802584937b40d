"""Command-line front end with deterministic, scriptable output.

Subcommands: expand, fpoly, gvector, euler, verify, path.

Exit codes: 0 success, 1 bad arguments or invalid parameters, 2 resource-cap
breach, 3 engine mismatch or verification failure.  Expected errors print a
one-line message to stderr, never a stack trace.  The environment variable
``CLUSTER_COMB_BUDGET`` overrides the default configuration budget; an
explicit ``--config-budget`` flag wins over both.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import cluster, render
from .caps import (
    DEFAULT_BRUTEFORCE_EDGE_CAP,
    DEFAULT_MAX_EXPONENT,
    config_budget_from_env,
)
from .dyck import build_path, classify
from .errors import BruteForceCapError, ConfigBudgetError, ExponentOverflowError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAP = 2
EXIT_MISMATCH = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad arguments; our contract is exit 1."""

    def error(self, message: str):  # noqa: D102 - argparse hook
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _overlay_pair(text: str) -> tuple[int, int]:
    try:
        i_text, k_text = text.split(",")
        return int(i_text), int(k_text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected 'i,k' with integers, got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="rank2cluster",
        description="Exact rank-2 cluster variables via maximal Dyck path combinatorics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, with_n: bool = True) -> None:
        p.add_argument("--r", type=int, required=True, help="recursion exponent r")
        if with_n:
            p.add_argument("--n", type=int, required=True, help="cluster variable index n")
        p.add_argument("--out", type=str, default=None, help="write output to this file")
        p.add_argument("--max-exponent", type=int, default=DEFAULT_MAX_EXPONENT)
        p.add_argument("--bruteforce-edge-cap", type=int, default=DEFAULT_BRUTEFORCE_EDGE_CAP)
        p.add_argument("--config-budget", type=int, default=None)

    p_expand = sub.add_parser("expand", help="Laurent expansion of x_n")
    add_common(p_expand)
    p_expand.add_argument("--engine", choices=("formula", "oracle", "both"), default="formula")
    p_expand.add_argument("--format", choices=("plain", "latex", "json"), default="plain")

    p_fpoly = sub.add_parser("fpoly", help="F-polynomial of x_n in (y1, y2)")
    add_common(p_fpoly)
    p_fpoly.add_argument("--format", choices=("plain", "latex", "json"), default="plain")

    p_gvec = sub.add_parser("gvector", help="g-vector of x_n")
    add_common(p_gvec)
    p_gvec.add_argument("--format", choices=("plain",), default="plain")

    p_euler = sub.add_parser("euler", help="Euler characteristic table (CSV)")
    add_common(p_euler)
    p_euler.add_argument("--sign", choices=("positive", "negative"), default="positive")
    p_euler.add_argument("--format", choices=("csv",), default="csv")

    p_verify = sub.add_parser("verify", help="sweep formula vs. recursion oracle")
    p_verify.add_argument("--sum-cap", type=int, default=10, help="check all r+n <= sum-cap")
    p_verify.add_argument("--r-max", type=int, default=None, help="largest r (default: sum-cap - 4)")
    p_verify.add_argument("--out", type=str, default=None)
    p_verify.add_argument("--max-exponent", type=int, default=DEFAULT_MAX_EXPONENT)
    p_verify.add_argument("--config-budget", type=int, default=None)

    p_path = sub.add_parser("path", help="render the maximal Dyck path")
    add_common(p_path)
    style = p_path.add_mutually_exclusive_group()
    style.add_argument("--ascii", action="store_true", help="ASCII art (default)")
    style.add_argument("--svg", action="store_true")
    style.add_argument("--tikz", action="store_true")
    style.add_argument("--json", action="store_true", help="path serialization schema")
    p_path.add_argument("--overlay", type=_overlay_pair, default=None, metavar="i,k",
                        help="highlight the classified subpath for vertices i < k")
    return parser


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _budget(args: argparse.Namespace) -> int:
    if args.config_budget is not None:
        if args.config_budget <= 0:
            raise ValueError("--config-budget must be positive")
        return args.config_budget
    return config_budget_from_env()


def _cmd_expand(args: argparse.Namespace) -> int:
    if args.engine in ("formula", "both") and args.r < 2:
        raise ValueError("the formula engine requires r >= 2 (use --engine oracle for r = 1)")
    budget = _budget(args)
    if args.engine == "oracle":
        value = cluster.oracle(args.r, args.n, max_exponent=args.max_exponent)
    else:
        value = cluster.cluster_variable(
            args.r, args.n, config_budget=budget, max_exponent=args.max_exponent
        ).value
    if args.engine == "both":
        reference = cluster.oracle(args.r, args.n, max_exponent=args.max_exponent)
        if value != reference:
            _emit(
                "DIFF\n"
                f"formula: {value.render(args.format)}\n"
                f"oracle: {reference.render(args.format)}\n",
                args.out,
            )
            return EXIT_MISMATCH
    _emit(value.render(args.format) + "\n", args.out)
    return EXIT_OK


def _cmd_fpoly(args: argparse.Namespace) -> int:
    value = cluster.f_polynomial(
        args.r, args.n, config_budget=_budget(args), max_exponent=args.max_exponent
    )
    _emit(value.render(args.format, names=("y1", "y2")) + "\n", args.out)
    return EXIT_OK


def _cmd_gvector(args: argparse.Namespace) -> int:
    _emit(str(cluster.g_vector(args.r, args.n, max_exponent=args.max_exponent)) + "\n", args.out)
    return EXIT_OK


def _cmd_euler(args: argparse.Namespace) -> int:
    table = cluster.euler_table(
        args.r, args.n, sign=args.sign,
        config_budget=_budget(args), max_exponent=args.max_exponent,
    )
    _emit(table.to_csv(), args.out)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    r_max = args.r_max if args.r_max is not None else max(args.sum_cap - 4, 1)
    if r_max < 2:
        print("note: the formula engine requires r >= 2; nothing to verify", file=sys.stderr)
    rows = cluster.verify_range(
        r_max, args.sum_cap,
        config_budget=_budget(args), max_exponent=args.max_exponent,
    )
    text = "".join(json.dumps(row) + "\n" for row in rows)
    _emit(text, args.out)
    failures = sum(1 for row in rows if row["status"] == "fail")
    return EXIT_MISMATCH if failures else EXIT_OK


def _cmd_path(args: argparse.Namespace) -> int:
    path = build_path(args.r, args.n, max_exponent=args.max_exponent)
    overlay = None
    if args.overlay is not None:
        overlay = classify(path, args.overlay[0], args.overlay[1])
    if args.json:
        if overlay is not None:
            raise ValueError("--overlay does not apply to --json output")
        _emit(json.dumps(path.to_json_dict()) + "\n", args.out)
    elif args.svg:
        _emit(render.svg_path(path, overlay), args.out)
    elif args.tikz:
        _emit(render.tikz_path(path, overlay), args.out)
    else:
        _emit(render.ascii_path(path, overlay), args.out)
    return EXIT_OK


_HANDLERS = {
    "expand": _cmd_expand,
    "fpoly": _cmd_fpoly,
    "gvector": _cmd_gvector,
    "euler": _cmd_euler,
    "verify": _cmd_verify,
    "path": _cmd_path,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except (ConfigBudgetError, BruteForceCapError, ExponentOverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
