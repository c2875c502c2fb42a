"""Command-line front end.

Every subcommand renders one deterministic text blob: identical
invocations give identical bytes, so outputs diff cleanly.  Results go
to stdout unless --out is given, in which case the file is written to
a temp name and renamed into place, so a crash never leaves a partial
file behind.

Exit codes: 0 success, 1 usage or value error, 2 size-cap violation,
3 I/O failure.
"""

import argparse
import json
import os
import re
import sys
import tempfile

from .core import add_recursive, cvt
from .limits import LimitError, ensure_within
from .matrices import MatrixKind, build_matrix, export_csv
from .numtheory import (
    DEFAULT_GRID_CAP,
    export_pgm,
    goldbach_sweep,
    is_prime,
    odd_odd_cvt_grid,
    palindrome_row,
)
from .tree import (
    DEFAULT_TREE_CAP,
    build_top_down,
    classify_node,
    export_dot,
    export_json,
    predecessors_of,
    tree_stats,
)

__all__ = ["run", "main"]


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, but 2 is reserved for cap
    # violations here, so usage errors are remapped to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _nat(text):
    if not re.fullmatch(r"\d+", text):
        raise argparse.ArgumentTypeError(f"expected a decimal natural number, got {text!r}")
    return int(text)


def _fmt(value, binary):
    return format(value, "b") if binary else str(value)


def _active_cap(args):
    """Size cap for this invocation: --limit, else CVTX_LIMIT, else the
    per-module default (signalled by None)."""
    if args.limit is not None:
        return args.limit
    env = os.environ.get("CVTX_LIMIT")
    if env is None:
        return None
    if not re.fullmatch(r"\d+", env):
        raise ValueError(f"CVTX_LIMIT must be a decimal natural number, got {env!r}")
    return int(env)


def _write_output(text, path):
    if path is None:
        sys.stdout.write(text)
        return
    target = os.path.abspath(path)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(target), prefix=".cvtxor-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp, target)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _cmd_add(args):
    trace = add_recursive(args.x, args.y)
    lines = [_fmt(trace.sum, args.binary)]
    if args.trace:
        lines.append(
            " ".join(f"({_fmt(a, args.binary)},{_fmt(b, args.binary)})" for a, b in trace.steps)
        )
    return "\n".join(lines) + "\n"


def _cmd_classify(args):
    return classify_node((args.x, args.y)).value + "\n"


def _cmd_preds(args):
    ensure_within(args.x + args.y, _active_cap(args), DEFAULT_TREE_CAP, "pair total")
    pairs = sorted(predecessors_of((args.x, args.y)))
    return "".join(f"({_fmt(a, args.binary)},{_fmt(b, args.binary)})\n" for a, b in pairs)


def _cmd_tree(args):
    tree = build_top_down(args.n, cap=_active_cap(args))
    if args.format == "json":
        return export_json(tree)
    return export_dot(tree)


def _cmd_stats(args):
    st = tree_stats(build_top_down(args.n, cap=_active_cap(args)))
    avg = st.average_depth
    per_depth = " ".join(f"{d}:{st.nodes_per_depth[d]}" for d in sorted(st.nodes_per_depth))
    return (
        f"node_count: {st.node_count}\n"
        f"leaf_count: {st.leaf_count}\n"
        f"max_depth: {st.max_depth}\n"
        f"average_depth: {avg} ({avg.numerator / avg.denominator:.6f})\n"
        f"nodes_per_depth: {per_depth}\n"
    )


def _cmd_matrix(args):
    matrix = build_matrix(MatrixKind(args.kind), args.n_max, cap=_active_cap(args))
    return export_csv(matrix)


def _cmd_fractal(args):
    return export_pgm(odd_odd_cvt_grid(args.grid_limit, cap=_active_cap(args)))


def _cmd_triangle(args):
    if args.n < 2 or args.n % 2:
        raise ValueError("triangle bound must be even and >= 2")
    ensure_within(args.n, _active_cap(args), DEFAULT_GRID_CAP, "triangle bound")
    lines = []
    for n in range(2, args.n + 1, 2):
        row = []
        for k, value in zip(range(1, n, 2), palindrome_row(n)):
            mark = "*" if is_prime(k) and is_prime(n - k) else ""
            row.append(_fmt(value, args.binary) + mark)
        lines.append(f"{n}: " + " ".join(row))
    return "\n".join(lines) + "\n"


def _cmd_goldbach(args):
    summary = goldbach_sweep(args.start, args.stop, per_n=args.per_n, cap=_active_cap(args))
    payload = {
        "range": [summary.start, summary.stop],
        "checked": summary.checked,
        "counterexamples": list(summary.counterexamples),
        "all_odd_leaf_count": summary.all_odd_leaf_count,
    }
    if summary.reports is not None:
        payload["per_n"] = [
            {
                "n": report.n,
                "pairs": [
                    {"p": pair.p, "q": pair.q, "class": pair.node_class.value, "depth": pair.depth}
                    for pair in report.pairs
                ],
            }
            for report in summary.reports
        ]
    return json.dumps(payload, indent=2) + "\n"


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH", help="write atomically to PATH instead of stdout")
    common.add_argument("--limit", type=_nat, metavar="N", help="override the construction size cap")
    common.add_argument(
        "--binary",
        action="store_true",
        help="render numbers in binary where the format allows (add, preds, triangle)",
    )

    parser = _Parser(prog="cvtxor", description="carry/xor split addition toolkit")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("add", parents=[common], help="add two naturals by carry/xor splitting")
    p.add_argument("x", type=_nat)
    p.add_argument("y", type=_nat)
    p.add_argument("--trace", action="store_true", help="also print the (carry, partial) steps")
    p.set_defaults(handler=_cmd_add)

    p = sub.add_parser("classify", parents=[common], help="name the node class of a pair")
    p.add_argument("x", type=_nat)
    p.add_argument("y", type=_nat)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("preds", parents=[common], help="list the pairs that step to this one")
    p.add_argument("x", type=_nat)
    p.add_argument("y", type=_nat)
    p.set_defaults(handler=_cmd_preds)

    p = sub.add_parser("tree", parents=[common], help="emit the convergence tree for a sum")
    p.add_argument("n", type=_nat)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(handler=_cmd_tree)

    p = sub.add_parser("stats", parents=[common], help="summary statistics of one tree")
    p.add_argument("n", type=_nat)
    p.set_defaults(handler=_cmd_stats)

    p = sub.add_parser("matrix", parents=[common], help="emit an analysis matrix as CSV")
    p.add_argument("--kind", choices=("depth", "parent", "freq"), required=True)
    p.add_argument("--max", dest="n_max", type=_nat, required=True, metavar="N")
    p.set_defaults(handler=_cmd_matrix)

    p = sub.add_parser("fractal", parents=[common], help="emit the odd-pair carry grid as PGM")
    # dest must not shadow the shared --limit cap flag
    p.add_argument("--max", dest="grid_limit", type=_nat, required=True, metavar="L")
    p.set_defaults(handler=_cmd_fractal)

    p = sub.add_parser(
        "triangle", parents=[common], help="palindromic carry rows with prime splits marked"
    )
    p.add_argument("n", type=_nat)
    p.set_defaults(handler=_cmd_triangle)

    p = sub.add_parser("goldbach", parents=[common], help="prime-split sweep over even totals")
    p.add_argument("--from", dest="start", type=_nat, required=True, metavar="A")
    p.add_argument("--to", dest="stop", type=_nat, required=True, metavar="B")
    p.add_argument("--per-n", dest="per_n", action="store_true", help="include per-total detail")
    p.set_defaults(handler=_cmd_goldbach)

    return parser


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        text = args.handler(args)
        _write_output(text, args.out)
    except LimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


def main() -> int:
    return run(sys.argv[1:])
