#!/usr/bin/env python3
"""Scan even totals for prime splits and time the sweep."""

import argparse
import time

from cvtxor import goldbach_sweep


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--from", dest="start", type=int, default=4)
    parser.add_argument("--to", dest="stop", type=int, default=10**6)
    parser.add_argument("--show", type=int, default=0, help="print splits for the first K totals")
    args = parser.parse_args()

    began = time.perf_counter()
    summary = goldbach_sweep(args.start, args.stop, per_n=bool(args.show))
    elapsed = time.perf_counter() - began

    print(f"checked {summary.checked} even totals in [{summary.start}, {summary.stop}]")
    print(f"counterexamples: {list(summary.counterexamples) or 'none'}")
    print(f"totals whose every prime split is an odd leaf: {summary.all_odd_leaf_count}")
    print(f"elapsed: {elapsed:.2f}s")
    if args.show and summary.reports:
        for report in summary.reports[: args.show]:
            splits = " ".join(f"({p.p},{p.q}):{p.node_class.value}@{p.depth}" for p in report.pairs)
            print(f"  {report.n}: {splits}")


if __name__ == "__main__":
    main()
