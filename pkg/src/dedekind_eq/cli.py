"""Command-line interface.

Exit codes: 0 for success or an affirmative verdict, 1 for a negative
verdict, 2 for any error (bad input, failed precondition, bound exceeded).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import List, Optional

from . import __version__
from .arith import (
    _lift_str_digit_limit,
    format_int,
    format_rational,
    is_prime_certain,
    parse_int,
)
from .census import (
    DEFAULT_SWEEP_BOUND,
    full_census,
    hits_to_csv,
    hits_to_json,
    search_suitable_pairs,
)
from .construct import build_family, validate_input, verify_family_exact_count
from .core import dedekind_S
from .equality import condition2, criterion_value, least_positive_t, theorem1_decide
from .suitable import DEFAULT_MAX_STEPS, SuitableSet, generate_sequence, ratio_trace


class UsageError(Exception):
    pass


def _int(text: str) -> int:
    try:
        return parse_int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _common_flags(defaults: bool) -> argparse.ArgumentParser:
    # Registered on the main parser and on every subparser so the flags may
    # appear on either side of the subcommand name.
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p.add_argument("--format", choices=("json", "csv", "text"), default=d(None))
    p.add_argument("--naive", action="store_true", default=d(False),
                   help="evaluate sums with the defining O(b) sum")
    p.add_argument("--sweep-bound", type=_int, default=d(DEFAULT_SWEEP_BOUND))
    p.add_argument("--max-steps", type=_int, default=d(DEFAULT_MAX_STEPS))
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dedekind-eq",
        description="Exact Dedekind sums and their equalities.",
        parents=[_common_flags(True)],
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    flags = _common_flags(False)

    p = sub.add_parser("eval", parents=[flags], help="print S(c, b) and s(c, b)")
    p.add_argument("c", type=_int)
    p.add_argument("b", type=_int)

    p = sub.add_parser("check", parents=[flags], help="decide S(c, b) = S(d, b)")
    p.add_argument("c", type=_int)
    p.add_argument("d", type=_int)
    p.add_argument("b", type=_int)

    p = sub.add_parser("sequence", parents=[flags], help="iterate a suitable set")
    p.add_argument("c", type=_int)
    p.add_argument("d", type=_int)
    p.add_argument("b", type=_int)
    p.add_argument("n", type=_int)

    p = sub.add_parser("construct", parents=[flags], help="CRT family for given primes")
    p.add_argument("head", type=_int, nargs="+", metavar="PRIME")
    p.add_argument("--tail", type=_int, nargs="*", default=[], metavar="PRIME")
    p.add_argument("--verify", action="store_true",
                   help="confirm the family by an exhaustive sweep")

    p = sub.add_parser("census", parents=[flags], help="equality classes for modulus b")
    p.add_argument("b", type=_int)
    p.add_argument("--workers", type=_int, default=1)

    p = sub.add_parser("search", parents=[flags], help="suitable sets for b = p q")
    p.add_argument("pmin", type=_int)
    p.add_argument("pmax", type=_int)
    return parser


def _coprime_check(c: int, b: int) -> None:
    if b < 1:
        raise UsageError(f"modulus must be >= 1, got {b}")
    if math.gcd(c, b) != 1:
        raise UsageError(f"gcd({c}, {b}) = {math.gcd(c, b)}; argument must be coprime to modulus")


def cmd_eval(args, out) -> int:
    _coprime_check(args.c, args.b)
    S = dedekind_S(args.c, args.b, naive=args.naive)
    if args.format == "json":
        out.write(json.dumps({
            "b": format_int(args.b), "c": format_int(args.c),
            "S": format_rational(S), "s": format_rational(S / 12),
        }) + "\n")
    else:
        out.write(f"S = {format_rational(S)}\ns = {format_rational(S / 12)}\n")
    return 0


def cmd_check(args, out) -> int:
    b, c, d = args.b, args.c, args.d
    _coprime_check(c, b)
    _coprime_check(d, b)
    if (c - d) % b == 0:
        raise UsageError(f"{c} = {d} (mod {b}); the arguments must differ mod b")
    if not condition2(b, c, d):
        product = (c - d) * (c * d - 1)
        raise UsageError(
            f"condition fails: {b} does not divide (c - d)(cd - 1) = {product}; "
            "it is necessary for equality, so the sums differ"
        )
    t = least_positive_t(b, c, d)
    equal = theorem1_decide(b, c, d)
    criterion = dedekind_S(1 + c * t, b * t)
    target = criterion_value(b, t)
    lines = [
        "condition: holds",
        f"t = {format_int(t)}",
        f"S({format_int(1 + c * t)}, {format_int(b * t)}) = {format_rational(criterion)}",
        f"target = {format_rational(target)}",
    ]
    if args.naive:
        direct = dedekind_S(c, b, naive=True) == dedekind_S(d, b, naive=True)
        lines.append(f"direct (naive) comparison: {'equal' if direct else 'different'}")
    lines.append("EQUAL" if equal else "NOT EQUAL")
    out.write("\n".join(lines) + "\n")
    return 0 if equal else 1


def cmd_sequence(args, out) -> int:
    seed = SuitableSet.make(args.b, args.c, args.d)
    states = generate_sequence(seed, args.n, max_steps=args.max_steps)
    ratios = ratio_trace(states)
    header = ["i", "b", "c", "d", "t", "value", "t/b"]
    rows = [
        [str(s.index), format_int(s.b), format_int(s.c), format_int(s.d),
         format_int(s.t), format_rational(s.common_value), format_rational(r)]
        for s, r in zip(states, ratios)
    ]
    if args.format == "json":
        out.write(json.dumps([dict(zip(header, row)) for row in rows], indent=2) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        out.write(buf.getvalue())
    else:
        out.write("\t".join(header) + "\n")
        for row in rows:
            out.write("\t".join(row) + "\n")
    return 0


def cmd_construct(args, out) -> int:
    inp = validate_input(args.head, args.tail)
    fam = build_family(inp)
    primes = list(inp.head_primes) + list(inp.tail_primes)
    doc = {
        "b": format_int(fam.b),
        "t": format_int(fam.t),
        "k": fam.k,
        "r": fam.r,
        "target_value": format_rational(fam.target_value),
        "members": [format_int(m) for m in fam.members],
        "witness_roots": [format_int(a) for a in fam.witness_roots],
        "primality": "proven" if all(is_prime_certain(p) for p in primes) else "probable",
    }
    if args.verify:
        doc["verified_exhaustively"] = verify_family_exact_count(fam, bound=args.sweep_bound)
    if args.format == "text":
        for key, value in doc.items():
            if isinstance(value, list):
                value = " ".join(value)
            out.write(f"{key}: {value}\n")
    else:
        out.write(json.dumps(doc, indent=2) + "\n")
    return 0 if doc.get("verified_exhaustively", True) else 1


def cmd_census(args, out) -> int:
    report = full_census(args.b, workers=args.workers, naive=args.naive, bound=args.sweep_bound)
    if args.format == "csv":
        out.write(report.to_csv())
    elif args.format == "text":
        out.write(f"b = {format_int(report.b)}\n")
        out.write(f"distinct values: {len(report.classes)}\n")
        out.write(f"distinct positive values: {report.distinct_positive_count}\n")
        out.write(f"max N: {report.max_count}\n")
        nontrivial = " ".join(format_rational(v) for v in report.nontrivial_values)
        out.write(f"nontrivial values: {nontrivial}\n")
    else:
        out.write(report.to_json() + "\n")
    return 0


def cmd_search(args, out) -> int:
    hits = search_suitable_pairs(args.pmin, args.pmax, bound=args.sweep_bound)
    if args.format == "csv":
        out.write(hits_to_csv(hits))
    elif args.format == "text":
        for h in hits:
            out.write(f"{h.b} = {h.p}*{h.q}: {{{h.c}, {h.d}}} S = {format_rational(h.common_value)}\n")
    else:
        out.write(hits_to_json(hits) + "\n")
    return 0


COMMANDS = {
    "eval": cmd_eval,
    "check": cmd_check,
    "sequence": cmd_sequence,
    "construct": cmd_construct,
    "census": cmd_census,
    "search": cmd_search,
}


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    _lift_str_digit_limit()
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, ValueError, ArithmeticError) as exc:
        err.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
