"""Argument parser for the refinedfloors command line"""
import argparse
import json
from typing import List


class UsageError(Exception):
    """Malformed command line (exit code 1)."""


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting with status 2."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be >= 0")
    return value


def _positive(text: str) -> int:
    value = _non_negative(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return value


def _pairing(text: str) -> List[List[int]]:
    try:
        pairs = json.loads(text)
    except json.JSONDecodeError as e:
        raise argparse.ArgumentTypeError(f"pairing is not JSON: {e}")
    if not isinstance(pairs, list) or not all(isinstance(p, list) for p in pairs):
        raise argparse.ArgumentTypeError("pairing must be a list of [i, i+1] pairs")
    return pairs


def _add_polygon(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("polygon", help='Inline JSON ([[x,y],...] or {"vertices": ...}) or a JSON file path')


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="refinedfloors",
        description="Refined tropical invariants of h-transverse polygons via floor diagrams",
    )
    parser.add_argument("--budget", type=_positive, default=None,
                        help="Maximum enumeration nodes (default REFINED_FLOOR_BUDGET or 10^8)")
    parser.add_argument("--threads", type=_positive, default=None,
                        help="Worker threads for per-diagram sums (default REFINED_FLOOR_THREADS or cpu count)")
    parser.add_argument("--pretty", action="store_true", help="Human-readable output instead of JSON")
    parser.add_argument("--log-run", metavar="ID", default=None, help="Write logs/run_<ID>.log")

    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub = commands.add_parser("info", help="Floor-diagram data of the polygon")
    _add_polygon(sub)

    sub = commands.add_parser("diagrams", help="Floor diagram classes")
    _add_polygon(sub)
    sub.add_argument("--max-codegree", type=_non_negative, default=None)
    sub.add_argument("--markings", action="store_true", help="Also count the markings of each class")

    sub = commands.add_parser("invariant", help="G_Delta(s) or one of its coefficients")
    _add_polygon(sub)
    sub.add_argument("--s", type=_non_negative, default=0)
    sub.add_argument("--pairing", type=_pairing, default=None)
    sub.add_argument("--coeff", type=_non_negative, default=None, help="Print only <G>_I")

    sub = commands.add_parser("star", help="Denominator-free invariant G*_Delta(S)")
    _add_polygon(sub)
    sub.add_argument("--s", type=_non_negative, default=0)
    sub.add_argument("--pairing", type=_pairing, default=None)

    sub = commands.add_parser("tilde", help="Check tilde(G) = A0^s A1^(y-2-2s) G*")
    _add_polygon(sub)
    sub.add_argument("--s", type=_non_negative, default=0)

    sub = commands.add_parser("universal", help="Universal polynomials P_0..P_I (or Q_0..Q_I)")
    sub.add_argument("--i", type=_non_negative, required=True)
    sub.add_argument("--singular", action="store_true", help="Print Q_i instead of P_i")

    sub = commands.add_parser("verify", help="Compare <G>_i with the universal polynomial")
    _add_polygon(sub)
    sub.add_argument("--s", type=_non_negative, default=0)
    sub.add_argument("--i", type=_non_negative, required=True)
    sub.add_argument("--star", action="store_true", help="Also compare G* with the denominator-free series")

    sub = commands.add_parser("lemmas", help="Run the combinatorial property suites")
    sub.add_argument("--max", type=_non_negative, default=12, dest="max_i")

    sub = commands.add_parser("blowup", help="Cut a corner of the polygon")
    _add_polygon(sub)
    sub.add_argument("--b", type=_positive, required=True)
    sub.add_argument("--m", type=_positive, default=1)
    sub.add_argument("--i", type=_non_negative, default=None, help="Also compare |C_i| before and after")

    sub = commands.add_parser("welschinger", help="G(1) and G(-1)")
    _add_polygon(sub)
    sub.add_argument("--s", type=_non_negative, default=0)

    return parser
