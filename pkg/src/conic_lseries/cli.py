"""Command-line entry point: ``count``, ``series`` and ``verify``.

Exit codes: 0 success, 1 usage error, 2 failed verification, 3 I/O error.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import re
import sys

from . import config
from .counting import CSV_COLUMNS, CrossCheckError, count_total, scan_primes, write_csv
from .field_arith import InvalidInputError
from .lseries import (
    euler_product,
    zeta_accelerated,
    zeta_hat_closed_form,
    zeta_hat_partial,
    zeta_partial,
)
from .verify import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_FAILED, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_int(text: str) -> int:
    """Accept 4096, 10^5, 2**12 and 1e5 style integers."""
    t = text.strip()
    m = re.fullmatch(r"(\d+)\s*(?:\^|\*\*)\s*(\d+)", t)
    if m:
        return int(m.group(1)) ** int(m.group(2))
    if re.fullmatch(r"\d+", t):
        return int(t)
    m = re.fullmatch(r"(\d+)[eE](\d+)", t)
    if m:
        return int(m.group(1)) * 10 ** int(m.group(2))
    raise argparse.ArgumentTypeError(f"not an integer: {text!r}")


def positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="conic-lseries", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("count", help="point counts of x^2 + y^2 = z^2 over F_q")
    c.add_argument("q", nargs="?", type=parse_int, help="prime power q")
    c.add_argument("--scan", type=parse_int, metavar="LIMIT", help="all odd primes <= LIMIT")
    c.add_argument("--workers", type=int, default=1)
    c.add_argument("--cross-check-limit", type=parse_int, default=config.ENUMERATION_BOUND,
                   help="brute-force confirm primes up to this bound during --scan")
    c.add_argument("--format", choices=("csv", "json", "plain"), default="csv")
    c.add_argument("--out", help="output file (default stdout)")

    s = sub.add_parser("series", help="evaluate zeta(M, s) or zeta_hat(M, s)")
    s.add_argument("which", choices=("zeta", "zeta-hat"))
    s.add_argument("--s", type=float, default=1.0, dest="s")
    s.add_argument("--method", choices=("partial", "accelerated", "euler-product", "closed-form"),
                   default="accelerated")
    s.add_argument("--terms", type=parse_int)
    s.add_argument("--primes", type=parse_int)
    s.add_argument("--out")

    v = sub.add_parser("verify", help="run identity checks and write a JSON report")
    v.add_argument("--suite", choices=SUITES, default="all")
    v.add_argument("--tol", type=positive_float, help="override closed-form tolerances")
    v.add_argument("--q-limit", type=parse_int, default=4096)
    v.add_argument("--report", help="JSON report path (default stdout)")
    v.add_argument("--quiet", action="store_true", help="no per-check lines on stderr")
    return parser


@contextlib.contextmanager
def _output(path: str | None):
    if path is None:
        yield sys.stdout
        return
    buf = io.StringIO()
    yield buf
    # newline="" keeps the bytes identical to what was written
    with open(path, "w", newline="", encoding="utf-8") as fh:
        fh.write(buf.getvalue())


def cmd_count(args) -> int:
    if (args.q is None) == (args.scan is None):
        raise UsageError("give exactly one of q or --scan LIMIT")
    if args.workers < 1:
        raise UsageError("--workers must be >= 1")
    try:
        if args.scan is not None:
            counts = list(scan_primes(args.scan, args.workers, args.cross_check_limit))
        else:
            counts = [count_total(args.q)]
    except InvalidInputError as exc:
        raise UsageError(str(exc)) from exc
    except CrossCheckError as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    with _output(args.out) as out:
        if args.format == "csv":
            write_csv(counts, out)
        elif args.format == "json":
            json.dump([pc.as_dict() for pc in counts], out, indent=2)
            out.write("\n")
        else:
            out.write(" ".join(f"{c:>12}" for c in CSV_COLUMNS) + "\n")
            for pc in counts:
                out.write(" ".join(f"{v:>12}" for v in pc.row()) + "\n")
    return EXIT_OK


_SERIES_METHODS = {
    ("zeta", "partial"): lambda a: zeta_partial(a.s, a.terms or 10**6),
    ("zeta", "accelerated"): lambda a: zeta_accelerated(a.s, a.terms or config.ACCELERATED_TERMS),
    ("zeta", "euler-product"): lambda a: euler_product("zeta", a.s, a.primes or 10**6),
    ("zeta-hat", "partial"): lambda a: zeta_hat_partial(a.s, a.terms or 10**6),
    ("zeta-hat", "closed-form"): lambda a: zeta_hat_closed_form(a.s),
    ("zeta-hat", "euler-product"): lambda a: euler_product("zeta_hat", a.s, a.primes or 10**6),
}


def cmd_series(args) -> int:
    fn = _SERIES_METHODS.get((args.which, args.method))
    if fn is None:
        raise UsageError(f"method {args.method} is not available for {args.which}")
    try:
        est = fn(args)
    except InvalidInputError as exc:
        raise UsageError(str(exc)) from exc
    with _output(args.out) as out:
        out.write(json.dumps(est.as_dict(), indent=2) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.tol, args.q_limit)
    if not args.quiet:
        for c in report.checks:
            if not c.passed:
                print(c.summary(), file=sys.stderr)
        print(f"{args.suite}: {len(report.checks)} checks, "
              f"{sum(not c.passed for c in report.checks)} failed", file=sys.stderr)
    with _output(args.report) as out:
        out.write(report.to_json())
    return EXIT_OK if report.passed else EXIT_FAILED


COMMANDS = {"count": cmd_count, "series": cmd_series, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"conic-lseries: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"conic-lseries: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
