"""Command line front end.

Exit codes: 0 success / all checks pass, 1 a check failed (or was skipped
under ``--strict``), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .core import ParseError, multisegment_to_json, parse_multisegment, parse_points
from .mwa import Trace, mwa_dual
from .poset import enumerate_with_support, hasse, is_leq, to_dot
from .ring import format_ring, ring_to_json
from .speh import DEFAULT_BUDGET, bar_u, char_F, dodgson_check, rect
from .verify import SUITES, run_suite

# lets "-1,0,1" or "-1/2" through as positional arguments
_NEGATIVE_ARG = re.compile(r"^-\d[\d/,:\s.-]*$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE_ARG

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _global_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON output")
    p.add_argument("--strict", action="store_true", default=argparse.SUPPRESS, help="treat skipped checks as failures")
    p.add_argument("--budget", type=int, default=argparse.SUPPRESS, help="largest support size for exhaustive checks")
    return p


def build_parser() -> argparse.ArgumentParser:
    flags = _global_flags()
    parser = _Parser(prog="spehlab", description="Multisegment calculus for Speh representations.", parents=[flags])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("dual", parents=[flags], help="dual multisegment by the Moeglin-Waldspurger algorithm")
    p.add_argument("multisegment")
    p.add_argument("--trace", action="store_true", help="emit the extraction rounds as JSON")

    p = sub.add_parser("char", parents=[flags], help="character F(l,k) in the standard basis")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("speh", parents=[flags], help="rectangle multisegment")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, default=1, help="centre spacing 1/s (bar-u)")

    p = sub.add_parser("leq", parents=[flags], help="is A <= B in the elementary-operation order")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("enumerate", parents=[flags], help="all multisegments with a given support")
    p.add_argument("points", help="comma-separated rationals, e.g. -1,0,0,1/2")

    p = sub.add_parser("hasse", parents=[flags], help="Hasse diagram in DOT")
    p.add_argument("points")

    p = sub.add_parser("dodgson", parents=[flags], help="check the quadratic identity for F(l,k)")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("verify", parents=[flags], help="run a verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--max-l", type=int)
    p.add_argument("--max-k", type=int)
    p.add_argument("--points", type=int, help="corpus suites: number of points (monotonicity: max support size)")
    p.add_argument("--mult", type=int, help="corpus suites: max multiplicity per point")
    return parser


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _budget(args) -> int:
    if hasattr(args, "budget"):
        return args.budget
    env = os.environ.get("SPEHLAB_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"SPEHLAB_BUDGET must be an integer, got {env!r}") from None
    return DEFAULT_BUDGET


def _reports_exit(reports, strict: bool) -> int:
    if any(r.status == "fail" for r in reports):
        return 1
    if strict and any(r.status == "skipped" for r in reports):
        return 1
    return 0


def run(args) -> int:
    as_json = getattr(args, "json", False)
    strict = getattr(args, "strict", False)
    cmd = args.command

    if cmd == "dual":
        M = parse_multisegment(args.multisegment)
        if args.trace:
            trace = Trace()
            D = mwa_dual(M, trace)
            _emit({"input": str(M), "dual": str(D), "rounds": trace.to_json()})
        else:
            D = mwa_dual(M)
            if as_json:
                _emit(multisegment_to_json(D))
            else:
                print(D)
        return 0

    if cmd == "char":
        if args.l < 0 or args.k < 0:
            raise UsageError("--l and --k must be non-negative")
        F = char_F(args.l, args.k)
        if as_json:
            _emit(ring_to_json(F))
        else:
            print(format_ring(F))
        return 0

    if cmd == "speh":
        if args.l < 0 or args.k < 0 or args.s < 1:
            raise UsageError("need --l, --k >= 0 and --s >= 1")
        M = rect(args.l, args.k) if args.s == 1 else bar_u(args.l, args.k, args.s)
        if as_json:
            _emit(multisegment_to_json(M))
        else:
            print(M)
        return 0

    if cmd == "leq":
        ans = is_leq(parse_multisegment(args.a), parse_multisegment(args.b))
        if as_json:
            _emit({"leq": ans})
        else:
            print("true" if ans else "false")
        return 0

    if cmd == "enumerate":
        Ms = sorted(enumerate_with_support(parse_points(args.points)))
        if as_json:
            _emit([multisegment_to_json(M) for M in Ms])
        else:
            for M in Ms:
                print(M)
        return 0

    if cmd == "hasse":
        g = hasse(parse_points(args.points))
        sys.stdout.write(to_dot(g))
        return 0

    if cmd == "dodgson":
        if args.l < 1 or args.k < 1:
            raise UsageError("--l and --k must be at least 1")
        r = dodgson_check(args.l, args.k)
        _emit([r.to_json()])
        return _reports_exit([r], strict)

    if cmd == "verify":
        if args.suite not in SUITES:
            raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
        reports = run_suite(
            args.suite, max_l=args.max_l, max_k=args.max_k, budget=_budget(args),
            points=args.points, mult=args.mult,
        )
        _emit([r.to_json() for r in reports])
        return _reports_exit(reports, strict)

    raise UsageError(f"unknown command {cmd!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return run(args)
    except UsageError as exc:
        print(f"spehlab: error: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"spehlab: parse error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
