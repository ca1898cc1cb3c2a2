"""Batch command-line front end.

Thin adapters only: parsing, formatting, and exit codes live here, all the
combinatorics and series arithmetic in the library modules.  Output is
deterministic byte for byte: plain text by default, ``--json`` for machine
consumption, CSV for tables.  Exit status 0 on success or an all-PASS
verdict, 1 on any FAIL verdict, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Optional

from .bijections import CASED_MAPS, MAPS
from .identities import (
    BIJECTION_IDS,
    IDENTITY_TAGS,
    SERIES_TAGS,
    Report,
    run_all,
    series_side,
    verify,
    verify_bijection,
)
from .overpartitions import (
    COUNTERS,
    FAMILIES,
    _NM_COUNTERS,
    count,
    enumerate_distinct,
    family_membership,
    parse,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opid",
        description="Exact enumeration, series expansion, bijections, and "
        "verification for overpartition identities.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("enumerate", help="list distinct-part overpartitions of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("count", help="evaluate a counting function")
    p.add_argument("--counter", choices=COUNTERS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("table", help="emit a CSV table of counts up to n-max")
    p.add_argument("--counter", choices=COUNTERS, required=True)
    p.add_argument("--n-max", type=int, required=True)

    p = sub.add_parser("map", help="apply a bijection to one overpartition")
    p.add_argument("--bijection", choices=sorted(MAPS), required=True)
    p.add_argument("--input", required=True, help="parts in the ~/+ notation")
    p.add_argument(
        "--case",
        choices=("I", "II"),
        help="branch selector, only for the weight-mixing maps h0/h1",
    )
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("series", help="expand one side of a series identity")
    p.add_argument("--identity", choices=SERIES_TAGS, required=True)
    p.add_argument("--side", choices=("lhs", "rhs"), required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="verify a single identity")
    p.add_argument("--identity", choices=IDENTITY_TAGS + BIJECTION_IDS, required=True)
    p.add_argument("--order", type=int, default=40)
    p.add_argument("--weight", type=int, default=22)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify-all", help="run the full verification suite")
    p.add_argument("--order", type=int, default=40)
    p.add_argument("--weight", type=int, default=22)
    p.add_argument("--json", action="store_true")

    return parser


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def _report_line(report: Report) -> str:
    horizon = ", ".join(f"{k}={v}" for k, v in sorted(report.horizon.items()))
    line = f"{report.identity:<14} {report.verdict:<4} ({horizon}) [{report.elapsed_ms:.1f} ms]"
    if report.witness is not None:
        line += f"\n    witness: {json.dumps(report.witness)}"
    return line


def _cmd_enumerate(args) -> int:
    ops = enumerate_distinct(args.n)
    if args.family:
        ops = tuple(op for op in ops if family_membership(op, args.family))
    if args.json:
        _print_json([op.to_json_dict() for op in ops])
    else:
        for op in ops:
            print(op)
    return 0


def _cmd_count(args) -> int:
    value = count(args.counter, args.n, args.m)
    if args.json:
        payload = {"counter": args.counter, "n": args.n, "count": value}
        if args.m is not None:
            payload["m"] = args.m
        _print_json(payload)
    else:
        print(value)
    return 0


def _cmd_table(args) -> int:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["counter", "n", "m", "count"])
    for n in range(0, args.n_max + 1):
        if args.counter in _NM_COUNTERS:
            for m in range(0, n + 1):
                value = count(args.counter, n, m)
                if value:
                    writer.writerow([args.counter, n, m, value])
        else:
            writer.writerow([args.counter, n, "", count(args.counter, n)])
    return 0


def _cmd_map(args) -> int:
    op = parse(args.input)
    fn = MAPS[args.bijection]
    if args.bijection in CASED_MAPS:
        result = fn(op, case=args.case or "I")
    elif args.case is not None:
        raise ValueError(f"--case applies only to {', '.join(CASED_MAPS)}")
    else:
        result = fn(op)
    if args.json:
        _print_json(result.to_json_dict())
    else:
        print(result.image)
    return 0


def _cmd_series(args) -> int:
    series = series_side(args.identity, args.side, args.order)
    if args.json:
        _print_json(series.to_json_dict())
    else:
        print(series)
    return 0


def _cmd_verify(args) -> int:
    if args.identity in BIJECTION_IDS:
        report = verify_bijection(args.identity, args.weight)
    else:
        report = verify(args.identity, args.order, args.weight)
    if args.json:
        _print_json(report.to_json_dict())
    else:
        print(_report_line(report))
    return 0 if report.passed else 1


def _cmd_verify_all(args) -> int:
    reports = run_all(args.order, args.weight)
    if args.json:
        _print_json([r.to_json_dict() for r in reports])
    else:
        for report in reports:
            print(_report_line(report))
        failed = sum(1 for r in reports if not r.passed)
        print(f"{len(reports)} checks: {len(reports) - failed} PASS, {failed} FAIL")
    return 0 if all(r.passed for r in reports) else 1


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "count": _cmd_count,
    "table": _cmd_table,
    "map": _cmd_map,
    "series": _cmd_series,
    "verify": _cmd_verify,
    "verify-all": _cmd_verify_all,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.verb](args)
    except ValueError as exc:
        print(f"opid: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
