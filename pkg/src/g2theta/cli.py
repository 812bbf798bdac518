"""Command-line front end: ``g2theta eval|f-eval|zeros|verify|catalog``.

Exit status is 0 on success or a passing verification, 1 on a failing
verification, and 2 on usage or validation errors.
"""
from __future__ import annotations

import argparse
import re
import sys
from typing import Sequence

from .core import Characteristic, EvalOptions, ThetaError, make_period_matrix, theta
from .harness import FAMILY_NAMES, InvalidConfig, SuiteConfig, run_suite
from .hyperelliptic import F
from .identities import IDENTITY_IDS, UnknownIdentity, export_catalog, odd_half_periods

__all__ = ["parse_complex", "format_complex", "cli", "main"]

_DEC = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX = re.compile(rf"([+-]?{_DEC})([+-]{_DEC})i")


class UsageError(Exception):
    pass


def parse_complex(text: str) -> complex:
    """Parse ``[+-]RE(+|-)IMi`` with no whitespace, e.g. ``-0.25+1.5i``."""
    m = _COMPLEX.fullmatch(text)
    if m is None:
        raise argparse.ArgumentTypeError(f"malformed complex literal {text!r} (expected e.g. 0.5-1.25i)")
    return complex(float(m.group(1)), float(m.group(2)))


def _positive(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def format_complex(value: complex, zero_below: float = 0.0) -> str:
    """``RE±IMi`` with 17 significant digits; tiny values print as zero."""
    if abs(value) < zero_below:
        value = 0j
    re_part = value.real + 0.0  # drop negative zero
    im_part = value.imag + 0.0
    return f"{re_part:.17g}{im_part:+.17g}i"


def _moduli_args(p: argparse.ArgumentParser) -> None:
    for name in ("tau1", "tau2", "tau12"):
        p.add_argument(f"--{name}", type=parse_complex, required=True)


def _point_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--char", required=True, help="characteristic as four digits acbd")
    p.add_argument("--u", type=parse_complex, required=True)
    p.add_argument("--v", type=parse_complex, required=True)
    _moduli_args(p)
    p.add_argument("--tail-tol", type=_positive, default=1e-12)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="g2theta", description="Genus-2 theta functions and their addition formulas.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    _point_args(sub.add_parser("eval", help="evaluate theta[acbd](u, v)"))
    _point_args(sub.add_parser("f-eval", help="evaluate F[acbd](u, v) = theta[acbd]/theta[0011]"))

    zeros = sub.add_parser("zeros", help="the six odd half-periods where theta[0000] vanishes")
    _moduli_args(zeros)

    verify = sub.add_parser("verify", help="seeded residual checks of identity families")
    verify.add_argument("--family", default="all",
                        help=f"'all' or a comma-separated subset of {','.join(FAMILY_NAMES)}")
    verify.add_argument("--trials", type=int, default=100)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--tol", type=float, default=1e-7)
    verify.add_argument("--tail-tol", type=float, default=1e-12)
    verify.add_argument("--json", metavar="PATH", help="write the JSON report here")

    catalog = sub.add_parser("catalog", help="print identity tables in text form")
    catalog.add_argument("ids", nargs="*", help="identity ids (default: all)")
    return parser


def _run(args) -> int:
    if args.command in ("eval", "f-eval"):
        ch = Characteristic.from_string(args.char)
        omega = make_period_matrix(args.tau1, args.tau2, args.tau12)
        opts = EvalOptions(tail_tolerance=args.tail_tol)
        if args.command == "eval":
            value = theta(ch, args.u, args.v, omega, opts)
        else:
            value = F(ch, args.u, args.v, omega, opts)
        print(format_complex(value, args.tail_tol))
        return 0
    if args.command == "zeros":
        omega = make_period_matrix(args.tau1, args.tau2, args.tau12)
        for alpha, beta in odd_half_periods(omega):
            print(format_complex(alpha), format_complex(beta))
        return 0
    if args.command == "verify":
        families = FAMILY_NAMES if args.family == "all" else tuple(args.family.split(","))
        config = SuiteConfig(families=families, trials=args.trials, seed=args.seed,
                             tol=args.tol, tail_tolerance=args.tail_tol)
        report = run_suite(config)
        if args.json:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(report.to_json())
        print(report.summary())
        return 0 if report.passed else 1
    if args.command == "catalog":
        print(export_catalog(args.ids or IDENTITY_IDS), end="")
        return 0
    raise UsageError(f"unknown command {args.command!r}")


def cli(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return its exit status."""
    try:
        args = build_parser().parse_args(argv)
        return _run(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except (ThetaError, InvalidConfig, UnknownIdentity, ValueError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"g2theta: error: {message}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"g2theta: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli())
