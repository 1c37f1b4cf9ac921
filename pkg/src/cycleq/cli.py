"""Command-line surface: count, table, matrix, graph, verify.

Data goes to stdout, diagnostics go to stderr.  Exit codes: 0 success,
1 verification mismatch, 2 usage or domain error.  All numeric output is
exact decimal, never scientific notation.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from random import Random

from cycleq.counting import count_classes, count_matrix
from cycleq.divisor_graph import build_graph, to_dot
from cycleq.oracle import brute_force_count, full_cycle, random_n_cycle


def cmd_count(args: argparse.Namespace) -> int:
    print(count_classes(args.n))
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    if args.n_max < 2:
        raise ValueError(f"n_max must be at least 2, got {args.n_max}")
    print("n,Q_n")
    for n in range(2, args.n_max + 1):
        print(f"{n},{count_classes(n)}")
    return 0


def cmd_matrix(args: argparse.Namespace) -> int:
    matrix = count_matrix(args.n)
    rows = [
        ("k", [c.divisor for c in matrix.columns]),
        ("phi", [c.phi for c in matrix.columns]),
        ("h", [c.classes for c in matrix.columns]),
        ("product", [c.product for c in matrix.columns]),
    ]
    for label, values in rows:
        print("\t".join([label, *map(str, values)]))
    return 0


def cmd_graph(args: argparse.Namespace) -> int:
    g = build_graph(args.n)
    if args.dot:
        sys.stdout.write(to_dot(g))
    else:
        by_level = Counter(v.k for v in g.vertices)
        for k in sorted(by_level):
            print(f"{k}: {by_level[k]}")
        print(f"total {len(g.vertices)}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.n < 2:
        raise ValueError(f"verify needs n >= 2, got {args.n}")
    closed = count_classes(args.n)
    runs = [("oracle", full_cycle(args.n))]
    if args.seed is not None:
        runs.append((f"oracle[seed={args.seed}]", random_n_cycle(args.n, Random(args.seed))))
    ok = True
    for label, cycle in runs:
        report = brute_force_count(args.n, cycle)
        print(f"closed-form: {closed} / {label}: {report.class_count}")
        ok = ok and report.class_count == closed
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycleq",
        description=(
            "Exact class counts for permutations of {1..n} under two-sided "
            "rotation by a full cycle."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print the exact class count for one n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="CSV table of class counts for n = 2..n_max")
    p.add_argument("n_max", type=int)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("matrix", help="TSV count matrix (rows k, phi, h, product)")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("graph", help="divisor graph as DOT or a per-level summary")
    p.add_argument("n", type=int)
    fmt = p.add_mutually_exclusive_group(required=True)
    fmt.add_argument("--dot", action="store_true", help="emit DOT text")
    fmt.add_argument("--summary", action="store_true", help="one line per level plus total")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="compare the closed form against the brute-force oracle")
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=None, help="also check one seeded random n-cycle")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())
