"""Command line interface.

Every command is deterministic given its flags and prints valid JSON on
success (``--format table`` renders a human-readable view instead where
supported).  Exit codes: 0 success, 1 verification mismatch, 2 usage or
label syntax error.

Label grammar (exact, used in flags and JSON keys alike):
  partition      [3,1]     empty: []
  bipartition    ([3,1],[2])
  D character    ([3],[1])        degenerate: ([2],[2])+  ([2],[2])-
  D class        ([2,1,1],[])     split: ([4],[],+)  ([4],[],-)
"""

from __future__ import annotations

import argparse
import json
import sys

from .bchar import b_char_value, b_classes
from .dchar import (
    d_char_value,
    d_classes,
    d_irr_labels,
    format_class,
    format_irr_label,
    parse_irr_label,
)
from .decomp import InducedQuery, branch_set, decompose_induced
from .lr import lr_coefficient, lr_expand
from .oracle import MAX_RANK, oracle_induce, verify_formula
from .partitions import (
    enumerate_bipartitions,
    enumerate_partitions,
    format_bipartition,
    format_partition,
    parse_partition,
    size,
)
from .symchar import sym_char_value

_GRAMMAR = __doc__.split("Label grammar", 1)[1]


def _print_table(rows: dict[str, dict[str, int]]) -> None:
    cols = list(next(iter(rows.values())).keys()) if rows else []
    head = max((len(r) for r in rows), default=0)
    widths = [max(len(c), max((len(str(v[c])) for v in rows.values()), default=0)) for c in cols]
    print(" " * head + "  " + "  ".join(c.rjust(w) for c, w in zip(cols, widths)))
    for name, vals in rows.items():
        print(name.ljust(head) + "  " + "  ".join(str(vals[c]).rjust(w) for c, w in zip(cols, widths)))


def cmd_lr(args: argparse.Namespace) -> int:
    alpha = parse_partition(args.alpha)
    beta = parse_partition(args.beta)
    if args.gamma is not None:
        print(lr_coefficient(alpha, beta, parse_partition(args.gamma)))
        return 0
    expansion = lr_expand(alpha, beta)
    print(json.dumps({format_partition(g): c for g, c in expansion.items()}))
    return 0


def cmd_chartable(args: argparse.Namespace) -> int:
    n = args.n
    if n < 1:
        raise ValueError("need n >= 1")
    if args.type == "A":
        classes = enumerate_partitions(n)
        rows = {
            format_partition(lam): {format_partition(mu): sym_char_value(lam, mu) for mu in classes}
            for lam in enumerate_partitions(n)
        }
    elif args.type == "B":
        classes = b_classes(n)
        rows = {
            f"({format_partition(al)},{format_partition(be)})": {
                f"({format_partition(c.positive)},{format_partition(c.negative)})": b_char_value((al, be), c)
                for c in classes
            }
            for al, be in enumerate_bipartitions(n)
        }
    else:
        classes = d_classes(n)
        rows = {
            format_irr_label(chi): {format_class(c): d_char_value(chi, c) for c in classes}
            for chi in d_irr_labels(n)
        }
    if args.format == "table":
        _print_table(rows)
    else:
        print(json.dumps(rows))
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    A = parse_irr_label(args.A)
    B = parse_irr_label(args.B)
    q = InducedQuery(args.n, args.a, args.b, A, B)
    if args.method == "oracle":
        result = oracle_induce(args.n, args.a, args.b, A, B)
    else:
        result = decompose_induced(q)
    ordered = {
        format_irr_label(X): result.multiplicities[X]
        for X in d_irr_labels(args.n)
        if X in result.multiplicities
    }
    payload = {
        "n": args.n,
        "a": args.a,
        "b": args.b,
        "A": format_irr_label(A),
        "B": format_irr_label(B),
        "multiplicities": ordered,
        "metadata": {"method": result.method, "nonzero_count": len(ordered)},
    }
    if args.format == "table":
        for key, value in ordered.items():
            print(f"{key}  {value}")
    else:
        print(json.dumps(payload))
    return 0


def cmd_branch(args: argparse.Namespace) -> int:
    X = parse_irr_label(args.X)
    if size(X.label[0]) + size(X.label[1]) != args.n:
        raise ValueError(f"label {args.X} has size {size(X.label[0]) + size(X.label[1])}, expected {args.n}")
    members = sorted(branch_set(X.label))
    print(json.dumps([format_bipartition(bp) for bp in members]))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.all:
        combos = [(n, a, n - a) for n in range(4, MAX_RANK + 1) for a in range(1, n)]
    elif args.n is not None and args.a is not None and args.b is not None:
        combos = [(args.n, args.a, args.b)]
    elif args.n is not None:
        combos = [(args.n, a, args.n - a) for a in range(1, args.n)]
    else:
        raise ValueError("verify needs --all or --n (optionally with --a and --b)")
    pairs = 0
    mismatches = []
    for n, a, b in combos:
        report = verify_formula(n, a, b)
        pairs += report.pairs_checked
        for A, B, X, formula, explicit in report.mismatches:
            mismatches.append(
                {
                    "n": n,
                    "a": a,
                    "b": b,
                    "A": format_irr_label(A),
                    "B": format_irr_label(B),
                    "X": format_irr_label(X),
                    "formula": formula,
                    "oracle": explicit,
                }
            )
    print(json.dumps({"pairs_checked": pairs, "mismatches": mismatches}))
    return 1 if mismatches else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dweyl",
        description="Induced character decompositions for Weyl groups of type D.",
        epilog="Label grammar" + _GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient or full expansion")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--gamma")
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("chartable", help="character table of S_n, B_n or D_n")
    p.add_argument("--type", choices=["A", "B", "D"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.set_defaults(func=cmd_chartable)

    p = sub.add_parser("decompose", help="decompose an induced character")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--A", required=True)
    p.add_argument("--B", required=True)
    p.add_argument("--method", choices=["formula", "oracle"], default="formula")
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("branch", help="one-box branching set of a character")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--X", required=True)
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("verify", help="compare the formula against the explicit oracle")
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("see 'dweyl --help' for the label grammar", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
