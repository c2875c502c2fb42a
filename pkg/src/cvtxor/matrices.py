"""Dense split-analysis tables over all pairs (i, j) up to a bound.

Three kinds: per-cell depth inside the tree for i + j, per-cell
(carry, xor) parent, and per-cell child count.  The anti-diagonal at n
is exactly the node set of the tree for n, so the tables are a flat,
exportable view of every tree up to the bound.  Storage is a dense
(n_max + 1) square, hence the quadratic default cap.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .core import cvt, xor
from .limits import ensure_within
from .tree import parent_of, predecessor_count

__all__ = [
    "DEFAULT_MATRIX_CAP",
    "MatrixKind",
    "AnalysisMatrix",
    "DiagonalStats",
    "build_matrix",
    "anti_diagonal",
    "diagonal_stats",
    "parent_occurrences",
    "export_csv",
]

DEFAULT_MATRIX_CAP = 4096


class MatrixKind(Enum):
    DEPTH = "depth"
    PARENT = "parent"
    FREQUENCY = "freq"


@dataclass(frozen=True)
class AnalysisMatrix:
    """cells[i][j] holds an int (depth, child count) or a parent pair."""

    n_max: int
    kind: MatrixKind
    cells: tuple


def _depth_via_memo(pair, memo):
    # A chain from (i, j) stays on the anti-diagonal i + j, so one memo
    # shared across the whole table is sound.
    chain = []
    cur = pair
    while cur not in memo:
        if cur[0] == 0:
            memo[cur] = 0
            break
        chain.append(cur)
        cur = parent_of(cur)
    d = memo[cur]
    for link in reversed(chain):
        d += 1
        memo[link] = d
    return memo[pair]


def _child_count(i, j):
    count = predecessor_count((i, j))
    if i == 0:
        count -= 1  # the root's self-loop is not a child edge
    return count


def build_matrix(kind: MatrixKind, n_max: int, cap: int | None = None) -> AnalysisMatrix:
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    ensure_within(n_max, cap, DEFAULT_MATRIX_CAP, "matrix bound")
    size = n_max + 1
    if kind is MatrixKind.DEPTH:
        memo = {}
        rows = [
            tuple(_depth_via_memo((i, j), memo) for j in range(size))
            for i in range(size)
        ]
    elif kind is MatrixKind.PARENT:
        rows = [tuple((cvt(i, j), xor(i, j)) for j in range(size)) for i in range(size)]
    elif kind is MatrixKind.FREQUENCY:
        rows = [tuple(_child_count(i, j) for j in range(size)) for i in range(size)]
    else:
        raise ValueError(f"unknown matrix kind: {kind!r}")
    return AnalysisMatrix(n_max=n_max, kind=kind, cells=tuple(rows))


def _check_diagonal(matrix, n):
    if not 0 <= n <= matrix.n_max:
        raise ValueError(f"diagonal {n} outside 0..{matrix.n_max}")


def anti_diagonal(matrix: AnalysisMatrix, n: int) -> list:
    """Cell values from (n, 0) to (0, n); element k is cells[n - k][k]."""
    _check_diagonal(matrix, n)
    return [matrix.cells[n - k][k] for k in range(n + 1)]


@dataclass(frozen=True)
class DiagonalStats:
    max_depth: int
    average_height: Fraction
    histogram: dict


def diagonal_stats(matrix: AnalysisMatrix, n: int) -> DiagonalStats:
    """Depth profile of one tree read off its anti-diagonal.

    average_height is the exact rational (sum of diagonal) / (n + 1);
    the histogram maps each depth to how many nodes sit there.
    """
    if matrix.kind is not MatrixKind.DEPTH:
        raise ValueError("diagonal_stats needs a depth matrix")
    diagonal = anti_diagonal(matrix, n)
    histogram = {}
    for d in diagonal:
        histogram[d] = histogram.get(d, 0) + 1
    return DiagonalStats(
        max_depth=max(diagonal),
        average_height=Fraction(sum(diagonal), n + 1),
        histogram=dict(sorted(histogram.items())),
    )


def parent_occurrences(matrix: AnalysisMatrix, target, n: int) -> int:
    """How often `target` appears on anti-diagonal n of a parent matrix.

    Equals the predecessor count of target when target sums to n,
    including the root's self-occurrence for target = (0, n); that is
    one more than the root's child count, which drops the self-loop.
    """
    if matrix.kind is not MatrixKind.PARENT:
        raise ValueError("parent_occurrences needs a parent matrix")
    _check_diagonal(matrix, n)
    want = tuple(target)
    return sum(1 for k in range(n + 1) if matrix.cells[n - k][k] == want)


def export_csv(matrix: AnalysisMatrix) -> str:
    """CSV with a row label i and column header j.

    Parent cells render as "(p;q)" so the comma stays a field
    separator.  Byte-deterministic.
    """
    size = matrix.n_max + 1
    lines = ["i\\j," + ",".join(str(j) for j in range(size))]
    is_parent = matrix.kind is MatrixKind.PARENT
    for i in range(size):
        row = matrix.cells[i]
        if is_parent:
            rendered = (f"({p};{q})" for p, q in row)
        else:
            rendered = (str(v) for v in row)
        lines.append(f"{i}," + ",".join(rendered))
    return "\n".join(lines) + "\n"
