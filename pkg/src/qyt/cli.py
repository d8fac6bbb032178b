"""Command line front end.

Exit codes: 0 success, 1 a verified property failed, 2 bad input (including
an exhausted search budget), 3 a closed form was requested where none
applies.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor

from . import verify
from .errors import (
    BudgetExceededError,
    MethodInapplicableError,
    QYTError,
)
from .formulas import METHODS, prime_evidence, qyt_count, resolve_method
from .partitions import Partition, max_entry_range, parse_partition, table_order
from .tableaux import (
    default_max_states,
    enumerate_qyt,
    enumerate_ssyt,
    enumerate_syt,
    witness_for,
)

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_METHOD = 0, 1, 2, 3


def _shape_label(p: Partition) -> str:
    return "(" + ", ".join(map(str, p)) + ")"


def _mode_args(args) -> tuple[str, int]:
    if args.eq is not None:
        return "eq", args.eq
    return "le", args.le


def _add_mode(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--eq", type=int, metavar="M", help="largest entry exactly M")
    group.add_argument("--le", type=int, metavar="M", help="every entry at most M")


def cmd_count(args) -> int:
    shape = parse_partition(args.shape)
    mode, m = _mode_args(args)
    route = resolve_method(shape, args.method)
    count = qyt_count(shape, m, mode, args.method, max_states=args.max_states)
    lo, hi = max_entry_range(shape)
    if args.json:
        print(json.dumps({"shape": list(shape), "mode": mode, "m": m, "count": count,
                          "method": route, "range": [lo, hi]}))
        return EXIT_OK
    print(count)
    if args.explain:
        print(f"method: {route}")
        print(f"range of largest entry: [{lo}, {hi}]")
    return EXIT_OK


def _table_row(job: tuple[Partition, str, int | None]) -> tuple[list[int], str]:
    shape, method, max_states = job
    n = shape.size
    route = resolve_method(shape, method)
    return [qyt_count(shape, m, "eq", method, max_states=max_states)
            for m in range(1, n + 1)], route


def build_table(n: int, method: str = "auto", max_states: int | None = None,
                jobs: int = 1) -> list[tuple[Partition, list[int], str]]:
    """Rows ``(shape, counts for m = 1..n, route)`` in table order."""
    shapes = table_order(n)
    work = [(p, method, max_states) for p in shapes]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_table_row, work))
    else:
        results = [_table_row(w) for w in work]
    return [(p, counts, route) for p, (counts, route) in zip(shapes, results)]


def render_markdown(n: int, rows) -> str:
    header = ["shape"] + [str(m) for m in range(1, n + 1)]
    body = [[_shape_label(p)] + [str(c) if c else "" for c in counts]
            for p, counts, _ in rows]
    widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]

    def line(cells):
        first = cells[0].ljust(widths[0])
        rest = [c.rjust(w) for c, w in zip(cells[1:], widths[1:])]
        return "| " + " | ".join([first] + rest) + " |"

    rule = "|" + "|".join("-" * (w + 2) for w in widths) + "|"
    return "\n".join([line(header), rule] + [line(r) for r in body]) + "\n"


def render_csv(n: int, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["shape", "m", "count", "method"])
    for p, counts, route in rows:
        for m, c in enumerate(counts, start=1):
            writer.writerow([str(p), m, c, route])
    return buf.getvalue()


def render_json(n: int, rows) -> str:
    return json.dumps({
        "n": n,
        "rows": [{"shape": list(p), "counts": counts, "method": route}
                 for p, counts, route in rows],
    }) + "\n"


def cmd_table(args) -> int:
    if args.n < 1:
        raise ValueError("n must be at least 1")
    rows = build_table(args.n, args.method, args.max_states, args.jobs)
    fmt = "json" if args.json else args.format
    render = {"markdown": render_markdown, "csv": render_csv, "json": render_json}[fmt]
    sys.stdout.write(render(args.n, rows))
    return EXIT_OK


def cmd_verify(args) -> int:
    results = verify.run(args.suite, args.max_n, args.jobs)
    if args.json:
        print(json.dumps([r.to_json() for r in results], indent=2))
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status} {r.name} (max_n={r.max_n}, {r.checked} cases, {r.seconds:.1f}s)")
            if not r.passed:
                print(f"  counterexample: {r.failures[0]}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_VIOLATION


def cmd_witness(args) -> int:
    shape = parse_partition(args.shape)
    t = witness_for(shape, args.m)
    if args.json:
        print(json.dumps({"shape": list(shape), "m": args.m, "rows": t.to_json()}))
    else:
        print(t.render())
    return EXIT_OK


def cmd_primes(args) -> int:
    shape = parse_partition(args.shape)
    mode, m = _mode_args(args)
    report = prime_evidence(shape, m, mode, args.method, max_states=args.max_states)
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        print(report.describe())
    return EXIT_OK


def cmd_enumerate(args) -> int:
    shape = parse_partition(args.shape)
    if args.kind == "syt":
        stream = enumerate_syt(shape, max_states=args.max_states)
    elif args.kind == "ssyt":
        if args.le is None:
            raise ValueError("ssyt enumeration needs --le M")
        stream = enumerate_ssyt(shape, args.le, max_states=args.max_states)
    else:
        mode, m = ("eq", args.eq) if args.eq is not None else ("le", args.le)
        if m is None:
            raise ValueError("qyt enumeration needs --eq M or --le M")
        stream = enumerate_qyt(shape, m, mode, max_states=args.max_states)
    tableaux = list(stream)
    if args.json:
        print(json.dumps([t.to_json() for t in tableaux]))
    else:
        print("\n\n".join(t.render() for t in tableaux))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qyt", description="Count and verify quasi-Yamanouchi tableaux.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log computation routes")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, method: bool = True) -> None:
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--max-states", type=int, default=None,
                       help="budget of partial fillings for enumeration "
                            "(default $QYT_MAX_STATES or 10^7)")
        if method:
            p.add_argument("--method", choices=METHODS, default="auto")

    p = sub.add_parser("count", help="count QYT of a shape")
    p.add_argument("shape", help="e.g. 6,4,2^2,1")
    _add_mode(p)
    p.add_argument("--explain", action="store_true", help="show method and range")
    common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="QYT_{=m} for every shape of size n")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("markdown", "csv", "json"), default="markdown")
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run property sweeps")
    p.add_argument("suite", choices=("all",) + verify.SUITES)
    p.add_argument("--max-n", type=int, default=None,
                   help="largest size swept (suite default if omitted)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", help="a QYT with a given largest entry")
    p.add_argument("shape")
    p.add_argument("m", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("primes", help="factor a QYT count")
    p.add_argument("shape")
    _add_mode(p)
    common(p)
    p.set_defaults(func=cmd_primes)

    p = sub.add_parser("enumerate", help="list tableaux")
    p.add_argument("shape")
    p.add_argument("--kind", choices=("qyt", "ssyt", "syt"), default="qyt")
    p.add_argument("--eq", type=int, metavar="M")
    p.add_argument("--le", type=int, metavar="M")
    common(p, method=False)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    if hasattr(args, "max_states") and args.max_states is None:
        args.max_states = default_max_states()
    try:
        return args.func(args)
    except MethodInapplicableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_METHOD
    except (QYTError, ValueError) as exc:
        if isinstance(exc, BudgetExceededError):
            print(f"error: {exc}; raise --max-states or QYT_MAX_STATES", file=sys.stderr)
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
