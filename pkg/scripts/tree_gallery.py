#!/usr/bin/env python3
"""Emit DOT files for a handful of totals and tabulate their shapes."""

import argparse
from pathlib import Path

from cvtxor import build_top_down, export_dot, tree_stats


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("totals", type=int, nargs="*", default=[8, 18, 25, 40])
    parser.add_argument("--outdir", type=Path, default=Path("gallery"))
    args = parser.parse_args()

    args.outdir.mkdir(parents=True, exist_ok=True)
    print(f"{'n':>6} {'nodes':>6} {'leaves':>7} {'height':>7} {'avg depth':>12}")
    for n in args.totals:
        tree = build_top_down(n)
        path = args.outdir / f"tree_{n}.dot"
        path.write_text(export_dot(tree), encoding="utf-8")
        st = tree_stats(tree)
        avg = st.average_depth.numerator / st.average_depth.denominator
        print(f"{n:>6} {st.node_count:>6} {st.leaf_count:>7} {st.max_depth:>7} {avg:>12.4f}")
    print(f"DOT files in {args.outdir}/ (render with: dot -Tpng ...)")


if __name__ == "__main__":
    main()
