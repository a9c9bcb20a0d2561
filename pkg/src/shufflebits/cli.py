"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 instance too large.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from shufflebits import _backend
from shufflebits.bench import BENCH_MAX_SIZE, run_bench, write_csv
from shufflebits.core import (
    InstanceTooLargeError,
    ShuffleSpec,
    enumerate_events,
    permutation_values,
)
from shufflebits.formulas import shuffle_count, storage_bytes
from shufflebits.oracle import verify_against_oracle, verify_swap_isomorphism
from shufflebits.treegraph import build_tree, event_record, export_dot, export_json

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_TOO_LARGE = 3

TICTACTOE = ShuffleSpec(4, 5)


class UsageError(Exception):
    pass


def _spec(args) -> ShuffleSpec:
    try:
        return ShuffleSpec(args.zeros, args.ones)
    except InstanceTooLargeError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_enumerate(args, out) -> int:
    spec = _spec(args)
    fmt = args.format
    if args.order == "sorted" and fmt != "json-lines":
        values = sorted(permutation_values(spec, args.backend))
        render = str if fmt == "decimal-lines" else spec.binary
        for value in values:
            out.write(render(value) + "\n")
        return EXIT_OK

    if fmt == "json-lines":
        def emit(event):
            out.write(json.dumps(event_record(spec, event)) + "\n")
    elif fmt == "binary-lines":
        def emit(event):
            out.write(spec.binary(event.value) + "\n")
    else:
        def emit(event):
            out.write(f"{event.value}\n")

    if args.order == "sorted":
        events = []
        enumerate_events(spec, events.append, args.backend)
        for event in sorted(events, key=lambda e: e.value):
            emit(event)
    else:
        enumerate_events(spec, emit, args.backend)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    spec = _spec(args)
    oracles = ["scan", "lex"] if args.oracle == "both" else [args.oracle]
    ok = True
    for name in oracles:
        report = verify_against_oracle(spec, name, args.backend)
        out.write(report.summary() + "\n")
        ok = ok and report.passed
    if args.check_swap:
        swap_ok = verify_swap_isomorphism(spec, args.backend)
        out.write(f"{'PASS' if swap_ok else 'FAIL'} swap isomorphism "
                  f"({spec.zeros},{spec.ones}) <-> ({spec.ones},{spec.zeros})\n")
        ok = ok and swap_ok
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_tree(args, out) -> int:
    tree = build_tree(_spec(args), args.backend)
    if args.format == "dot":
        out.write(export_dot(tree))
    else:
        out.write(export_json(tree, indent=args.indent) + "\n")
    return EXIT_OK


def cmd_count(args, out) -> int:
    if args.x < 0 or args.y < 0:
        raise UsageError("set sizes must be non-negative")
    out.write(f"{shuffle_count(args.x, args.y)}\n")
    return EXIT_OK


def cmd_storage(args, out) -> int:
    try:
        value = storage_bytes(args.x, args.y)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(f"{value}\n")
    return EXIT_OK


def render_board(value: int) -> list[str]:
    """3x3 rows for a 9-bit board; the most significant bit is the top-left cell."""
    cells = "".join("X" if bit == "1" else "O" for bit in format(value, "09b"))
    return [cells[0:3], cells[3:6], cells[6:9]]


def cmd_tictactoe(args, out) -> int:
    first = True
    for value in permutation_values(TICTACTOE, args.backend):
        if args.render:
            if not first:
                out.write("\n")
            out.write("\n".join(render_board(value)) + "\n")
        else:
            out.write(TICTACTOE.binary(value) + "\n")
        first = False
    return EXIT_OK


def cmd_bench(args, out) -> int:
    try:
        records = run_bench(args.max, args.repeats, args.backend)
        write_csv(records, out)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK


def _add_spec_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("-a", "--zeros", type=int, required=True, help="size of the set encoded as 0s")
    p.add_argument("-b", "--ones", type=int, required=True, help="size of the set encoded as 1s")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shufflebits",
        description="Enumerate the shuffle product of two homogeneous sets as bitmasks.",
    )
    parser.add_argument(
        "--backend", choices=_backend.available(), default=None,
        help=f"traversal kernel (default: {_backend.ACTIVE})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream every permutation")
    _add_spec_args(p)
    p.add_argument("--format", choices=["decimal-lines", "binary-lines", "json-lines"],
                   default="decimal-lines")
    p.add_argument("--order", choices=["emit", "sorted"], default="emit")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check the traversal against brute-force oracles")
    _add_spec_args(p)
    p.add_argument("--oracle", choices=["scan", "lex", "both"], default="scan")
    p.add_argument("--check-swap", action="store_true",
                   help="also check the swapped-input complement isomorphism")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tree", help="export the traversal tree")
    _add_spec_args(p)
    p.add_argument("--format", choices=["dot", "json-tree"], default="dot")
    p.add_argument("--indent", type=int, default=None, help="JSON indentation")
    p.set_defaults(func=cmd_tree)

    for name, func, text in (
        ("count", cmd_count, "number of permutations"),
        ("storage", cmd_storage, "bytes needed to store every permutation"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("x", type=int)
        p.add_argument("y", type=int)
        p.set_defaults(func=func)

    p = sub.add_parser("tictactoe", help="all 126 filled 3x3 boards (5 X, 4 O)")
    p.add_argument("--render", action="store_true", help="print 3x3 grids instead of bit strings")
    p.set_defaults(func=cmd_tictactoe)

    p = sub.add_parser("bench", help="CPU-time benchmark on symmetric instances, CSV output")
    p.add_argument("--max", type=int, default=11, help=f"largest set size (<= {BENCH_MAX_SIZE})")
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--format", choices=["csv"], default="csv")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout if out is None else out
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InstanceTooLargeError as exc:
        print(f"{parser.prog}: instance too large: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except BrokenPipeError:
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
