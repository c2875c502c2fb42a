#!/usr/bin/env python3
"""Render the odd-pair carry grid to a PGM file and summarize it."""

import argparse
from collections import Counter
from pathlib import Path

from cvtxor import export_pgm, odd_odd_cvt_grid


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=255, help="odd grid limit (default 255)")
    parser.add_argument("--out", type=Path, default=Path("fractal.pgm"))
    args = parser.parse_args()

    grid = odd_odd_cvt_grid(args.max)
    args.out.write_text(export_pgm(grid), encoding="utf-8")

    counts = Counter(v for row in grid.cells.values() for v in row.values())
    print(f"wrote {args.out} ({grid.side}x{grid.side})")
    print(f"distinct carry values: {len(counts)}")
    for value, count in counts.most_common(5):
        print(f"  {value}: {count} cells")


if __name__ == "__main__":
    main()
