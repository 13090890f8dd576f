"""Command-line interface: ``critgroup {table,group,snf,verify}``.

Exit codes
----------
0  success
1  ``verify``: at least one check failed
2  bad arguments, bad character spec, or unreadable matrix file
3  ``table``: could not write the output file
4  ``group``: the character is not faithful
5  ``group``: the table document is malformed or fails validation
"""

from __future__ import annotations

import argparse
import json
import sys

from . import chartab, tableio
from .critical import NotFaithful, full_report
from .intlinalg import parse_matrix, snf
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_WRITE = 3
EXIT_NOT_FAITHFUL = 4
EXIT_INVALID_TABLE = 5


def _err(msg: str) -> None:
    print(f"critgroup: {msg}", file=sys.stderr)


def cmd_table(args) -> int:
    try:
        if args.family == "symmetric":
            if args.n is None:
                raise chartab.OutOfRange("--family symmetric needs --n")
            table = chartab.symmetric_group_table(args.n)
        else:
            if args.m is None:
                raise chartab.OutOfRange("--family cyclic needs --m")
            table = chartab.cyclic_group_table(args.m)
    except chartab.OutOfRange as exc:
        _err(str(exc))
        return EXIT_USAGE
    text = tableio.dumps_table(table)
    if args.out is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        _err(f"cannot write {args.out}: {exc}")
        return EXIT_WRITE
    summary = {"path": args.out, "group_name": table.group_name, "order": table.order,
               "classes": table.num_classes}
    if args.json:
        print(json.dumps(summary))
    else:
        print(f"wrote {table.group_name} ({table.num_classes} classes) to {args.out}")
    return EXIT_OK


def _resolve_gamma(table, args):
    if args.char is not None:
        return chartab.irreducible_character(table, args.char), f"chi_{args.char}"
    if args.char_sum is not None:
        idx = [int(x) for x in args.char_sum.split(",") if x.strip()]
        return chartab.character_sum(table, idx), "+".join(f"chi_{i}" for i in idx)
    if args.regular:
        return chartab.regular_character(table), "regular"
    if table.family is None or table.family[0] != "symmetric":
        raise ValueError("--reflection needs a symmetric-group table")
    n = table.family[1]
    return chartab.reflection_character(n, table), "reflection"


def _format_report(table, label, report) -> str:
    certs = ", ".join(f"(ℤ/{d}ℤ)^{k}" for d, k in report.certificates) or "none"
    lines = [
        f"group: {table.group_name} (order {table.order}, {table.num_classes} classes)",
        f"character: {label} (degree {report.degree})",
        f"K(γ) ≅ {report.group}",
        f"invariant factors: {' '.join(map(str, report.group.invariant_factors)) or '(none)'}",
        f"order: {report.group.order}",
        f"order formula: {report.order_formula_value}",
        f"subgroup certificates: {certs}" if report.real_valued else "subgroup certificates: n/a (not real-valued)",
        f"eigenvector check: {'pass' if report.eigen_verified else 'FAIL'}",
        "sylow bound: " + ("applies, " if report.sylow_bound_applicable else "does not apply, ")
        + ("holds" if report.sylow_bound_holds else "fails"),
    ]
    return "\n".join(lines)


def cmd_group(args) -> int:
    try:
        table = tableio.load_table(args.table)
    except OSError as exc:
        _err(f"cannot read {args.table}: {exc}")
        return EXIT_USAGE
    except tableio.TableFormatError as exc:
        _err(str(exc))
        return EXIT_INVALID_TABLE
    try:
        gamma, label = _resolve_gamma(table, args)
    except (ValueError, IndexError) as exc:
        _err(f"invalid character spec: {exc}")
        return EXIT_USAGE
    try:
        report = full_report(table, gamma)
    except NotFaithful as exc:
        _err(f"NotFaithful: {exc}")
        return EXIT_NOT_FAITHFUL
    except chartab.NotACharacter as exc:
        _err(f"NotACharacter: {exc}")
        return EXIT_USAGE
    if args.json:
        doc = {"group_name": table.group_name, "character": label, **report.as_dict()}
        print(json.dumps(doc))
    else:
        print(_format_report(table, label, report))
    return EXIT_OK


def cmd_snf(args) -> int:
    try:
        if args.matrix == "-":
            text = sys.stdin.read()
        else:
            with open(args.matrix, encoding="utf-8") as fh:
                text = fh.read()
        A = parse_matrix(text)
    except (OSError, ValueError) as exc:
        _err(f"cannot parse matrix: {exc}")
        return EXIT_USAGE
    dec = snf(A)
    if args.json:
        print(json.dumps({"diagonal": list(dec.diagonal), "P": dec.P.tolist(),
                          "S": dec.S.tolist(), "Q": dec.Q.tolist()}))
    else:
        print(" ".join(map(str, dec.diagonal)))
    return EXIT_OK


def cmd_verify(args) -> int:
    if not 1 <= args.n_max <= chartab.SYMMETRIC_MAX or args.m_max < 1:
        _err(f"--n-max must be in 1..{chartab.SYMMETRIC_MAX} and --m-max >= 1")
        return EXIT_USAGE
    checks = run_suite(args.suite, args.n_max, args.m_max)
    if args.json:
        print(json.dumps([{"suite": c.suite, "check": c.name, "instance": c.instance,
                           "passed": c.passed, "detail": c.detail} for c in checks], indent=1))
    else:
        for c in checks:
            print(c.line())
        failed = sum(not c.passed for c in checks)
        print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_OK if all(c.passed for c in checks) else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="critgroup",
                                     description="Critical groups of finite group representations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="write a built-in character table document")
    p.add_argument("--family", choices=("symmetric", "cyclic"), required=True)
    p.add_argument("--n", type=int, help="degree of the symmetric group")
    p.add_argument("--m", type=int, help="order of the cyclic group")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--json", action="store_true", help="machine-readable summary")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("group", help="compute the critical group of a character")
    p.add_argument("table", help="character table document")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--char", type=int, metavar="ROW", help="irreducible character by row index")
    g.add_argument("--char-sum", metavar="I,J,...", help="sum of irreducible characters")
    g.add_argument("--regular", action="store_true", help="regular representation")
    g.add_argument("--reflection", action="store_true", help="reflection representation of S_n")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("snf", help="Smith normal form of an integer matrix file")
    p.add_argument("matrix", help="matrix file ('rows cols' then rows of integers), or - for stdin")
    p.add_argument("--json", action="store_true", help="also print P, S, Q")
    p.set_defaults(func=cmd_snf)

    p = sub.add_parser("verify", help="run the identity sweeps")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--m-max", type=int, default=10)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
