"""Command-line interface.

Subcommands: ``verify <suite>`` runs a named check suite; ``namba
classify <file>`` reads a branch-arrangement file and reports its cover
group; ``lattice search/quotient/member`` query the congruence group;
``dm enumerate/periods`` handle weight tuples and period integrals.  The
``--format`` option (json or md) works on every subcommand.

Exit codes: 0 when the command succeeds and, for ``verify``, every check
passes; 1 when checks fail or a computation gives up (quadrature,
closure budget); 2 for usage and input errors, including malformed
arrangement files (reported with their line number).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Sequence

from . import congruence, covers, hypergeometric, suites

_FORMATS = ("json", "md")


# ------------------------------------------------------------ rendering


def _emit_payload(title: str, payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    lines = [f"# {title}", ""]
    for key, value in payload.items():
        lines.extend(_markdown_item(key, value, 0))
    return "\n".join(lines) + "\n"


def _markdown_item(key: str, value: object, depth: int) -> list[str]:
    pad = "  " * depth
    if isinstance(value, dict):
        lines = [f"{pad}- {key}:"]
        for inner_key, inner in value.items():
            lines.extend(_markdown_item(inner_key, inner, depth + 1))
        return lines
    if isinstance(value, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple)) for v in value):
            body = ", ".join(_markdown_scalar(v) for v in value)
            return [f"{pad}- {key}: [{body}]"]
        lines = [f"{pad}- {key}:"]
        for index, inner in enumerate(value):
            lines.extend(_markdown_item(str(index), inner, depth + 1))
        return lines
    return [f"{pad}- {key}: {_markdown_scalar(value)}"]


def _markdown_scalar(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    return str(value)


# ------------------------------------------------------------- parsing


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot read {text!r} as a rational number") from exc


def _parse_complex(text: str) -> complex:
    cleaned = text.strip().replace("I", "j").replace("i", "j")
    try:
        return complex(cleaned)
    except ValueError as exc:
        raise ValueError(f"cannot read {text!r} as a complex number") from exc


def _parse_matrix(text: str) -> congruence.EisensteinMatrix:
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    if len(tokens) != 9:
        raise ValueError(f"a matrix needs 9 entries, got {len(tokens)}")
    return congruence.EisensteinMatrix.from_tokens(tokens)


def _format_complex(value: complex) -> str:
    return f"{value.real:.12e}{value.imag:+.12e}j"


# ------------------------------------------------------------ handlers


def _cmd_verify(args: argparse.Namespace, fmt: str) -> int:
    report = suites.run_suite(args.suite)
    text = suites.emit_json(report) if fmt == "json" else suites.emit_markdown(report)
    sys.stdout.write(text)
    return 0 if report.all_passed else 1


def _cmd_namba_classify(args: argparse.Namespace, fmt: str) -> int:
    arrangement = covers.load_arrangement(args.file)
    group = covers.divisor_cover_group(arrangement)
    payload = {
        "file": args.file,
        "rank": arrangement.lattice.rank,
        "gram": [list(row) for row in arrangement.lattice.gram],
        "canonical": [str(c) for c in arrangement.lattice.canonical.coefficients],
        "branch_divisors": [
            {
                "label": label,
                "weight": weight,
                "class": [str(c) for c in cls.coefficients],
            }
            for label, (cls, weight) in zip(arrangement.labels,
                                            arrangement.branch)
        ],
        "cover_group": group.describe(),
        "order": group.order,
    }
    sys.stdout.write(_emit_payload("namba classify", payload, fmt))
    return 0


def _cmd_lattice_search(args: argparse.Namespace, fmt: str) -> int:
    members = congruence.enumerate_gamma(args.height)
    payload = {
        "height": args.height,
        "count": len(members),
        "members": [list(m.to_tokens()) for m in members],
    }
    sys.stdout.write(_emit_payload("lattice search", payload, fmt))
    return 0


def _cmd_lattice_quotient(args: argparse.Namespace, fmt: str) -> int:
    pool = [congruence.reflection(v)
            for v in congruence.height_one_reflection_vectors()]
    report = congruence.finite_group_analysis(pool, args.level,
                                              budget=args.budget)
    payload = {
        "level": args.level,
        "generators": "height-1 reflections",
        "order": report.order,
        "derived_order": report.derived_order,
        "abelianization": report.abelianization.describe(),
    }
    if args.mod_scalars:
        quotiented = congruence.finite_group_analysis(
            pool, args.level, budget=args.budget,
            modulo=congruence.scalar_classes())
        payload["abelianization_mod_scalars"] = \
            quotiented.abelianization.describe()
    sys.stdout.write(_emit_payload("lattice quotient", payload, fmt))
    return 0


def _cmd_lattice_member(args: argparse.Namespace, fmt: str) -> int:
    matrix = _parse_matrix(args.matrix)
    level = congruence.congruence_level(matrix)
    payload = {
        "matrix": list(matrix.to_tokens()),
        "unitary": congruence.is_unitary(matrix),
        "congruence_level": "infinite" if level == float("inf") else level,
        "member": congruence.in_gamma(matrix),
    }
    sys.stdout.write(_emit_payload("lattice member", payload, fmt))
    return 0


def _cmd_dm_enumerate(args: argparse.Namespace, fmt: str) -> int:
    found = hypergeometric.enumerate_int(args.max_den,
                                         args.half_integers_for_equal)
    payload = {
        "max_denominator": args.max_den,
        "half_integers_for_equal": args.half_integers_for_equal,
        "count": len(found),
        "tuples": [[str(v) for v in mu.values] for mu in found],
    }
    sys.stdout.write(_emit_payload("dm enumerate", payload, fmt))
    return 0


def _split_tokens(raw: Sequence[str], what: str, count: int) -> list[str]:
    tokens = [piece.strip() for chunk in raw for piece in chunk.split(",")
              if piece.strip()]
    if len(tokens) != count:
        raise ValueError(f"need exactly {count} {what}, got {len(tokens)}")
    return tokens


def _cmd_dm_periods(args: argparse.Namespace, fmt: str) -> int:
    mu = hypergeometric.validate_mu(
        [_parse_fraction(t) for t in _split_tokens(args.mu, "weights", 5)])
    points = hypergeometric.PointConfig(
        tuple(_parse_complex(t)
              for t in _split_tokens(args.points, "points", 5)))
    if args.pair is not None:
        i, j = args.pair
        if not (0 <= i < 5 and 0 <= j < 5) or i == j:
            raise ValueError("--pair needs two distinct indices in 0..4")
        pairs = [(i, j)]
    else:
        pairs = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    values = [
        {
            "i": i,
            "j": j,
            "value": _format_complex(
                hypergeometric.period(points, i, j, mu,
                                      rel_tol=args.rel_tol)),
        }
        for i, j in pairs
    ]
    payload = {
        "mu": [str(v) for v in mu.values],
        "points": [_format_complex(p) for p in points.points],
        "rel_tol": args.rel_tol,
        "periods": values,
    }
    sys.stdout.write(_emit_payload("dm periods", payload, fmt))
    return 0


# -------------------------------------------------------------- parser


def _format_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=_FORMATS,
                        default=argparse.SUPPRESS,
                        help="report format (default: json)")
    return parent


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fanoball",
        description="Exact-arithmetic verification suites and queries.")
    parser.add_argument("--format", choices=_FORMATS, default="json",
                        help="report format (default: json)")
    fmt = _format_parent()
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", parents=[fmt],
                                 help="run a named check suite")
    verify.add_argument("suite", choices=suites.SUITE_NAMES)
    verify.set_defaults(handler=_cmd_verify)

    namba = commands.add_parser("namba", help="abelian-cover queries")
    namba_sub = namba.add_subparsers(dest="subcommand", required=True)
    classify = namba_sub.add_parser(
        "classify", parents=[fmt],
        help="classify the abelian cover group of an arrangement file")
    classify.add_argument("file")
    classify.set_defaults(handler=_cmd_namba_classify)

    lattice = commands.add_parser("lattice", help="congruence-group queries")
    lattice_sub = lattice.add_subparsers(dest="subcommand", required=True)
    search = lattice_sub.add_parser(
        "search", parents=[fmt],
        help="enumerate members up to an entry-norm bound")
    search.add_argument("--height", type=int, required=True)
    search.set_defaults(handler=_cmd_lattice_search)
    quotient = lattice_sub.add_parser(
        "quotient", parents=[fmt],
        help="analyze the finite image at one congruence level")
    quotient.add_argument("--level", type=int, required=True)
    quotient.add_argument("--budget", type=int, default=10_000_000,
                          help="element budget for the closure")
    quotient.add_argument("--mod-scalars", action="store_true",
                          help="also report the abelianization with the "
                               "scalar subgroup quotiented out")
    quotient.set_defaults(handler=_cmd_lattice_quotient)
    member = lattice_sub.add_parser(
        "member", parents=[fmt],
        help="membership test for one matrix (9 a+bw tokens)")
    member.add_argument("matrix",
                        help='nine entries, e.g. "1 0 0 0 1 0 0 0 1" or '
                             'comma-separated, each like "2-1w"')
    member.set_defaults(handler=_cmd_lattice_member)

    dm = commands.add_parser("dm", help="weight tuples and period integrals")
    dm_sub = dm.add_subparsers(dest="subcommand", required=True)
    enumerate_p = dm_sub.add_parser(
        "enumerate", parents=[fmt],
        help="integrality-passing weight tuples up to a denominator bound")
    enumerate_p.add_argument("--max-den", type=int, required=True)
    enumerate_p.add_argument("--half-integers-for-equal", action="store_true",
                             help="accept half-integral reciprocals on "
                                  "pairs of equal weights")
    enumerate_p.set_defaults(handler=_cmd_dm_enumerate)
    periods = dm_sub.add_parser(
        "periods", parents=[fmt],
        help="period integrals of a five-point configuration")
    periods.add_argument("--mu", nargs="+", required=True, metavar="P/Q",
                         help="five rational weights, space or comma "
                              "separated")
    periods.add_argument("--points", nargs="+", required=True,
                         metavar="RE+IMj",
                         help="five complex points, space or comma "
                              "separated; wrap values starting with a "
                              "minus sign in parentheses or pass one "
                              "comma-separated list")
    periods.add_argument("--pair", nargs=2, type=int, metavar=("I", "J"),
                         help="one endpoint pair (default: all ten)")
    periods.add_argument("--rel-tol", type=float, default=1e-8)
    periods.set_defaults(handler=_cmd_dm_periods)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "json")
    try:
        return args.handler(args, fmt)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except congruence.ClosureBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ArithmeticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
