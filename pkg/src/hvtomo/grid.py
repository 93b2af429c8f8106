"""Binary grids, projection vectors and the convexity/connectivity predicates."""
from __future__ import annotations

from collections import deque

import numpy as np

__all__ = [
    "Projections",
    "BinaryGrid",
    "row_sums",
    "col_sums",
    "projections_of",
    "is_h_convex",
    "is_v_convex",
    "is_connected",
    "is_hv_convex_polyomino",
    "is_realization",
    "grid_from_intervals",
]


class Projections:
    """Row sums ``r_1..r_m`` and column sums ``c_1..c_n``.

    Only shape is checked on construction; positivity and balance are the
    callers' business, so unbalanced pairs can be represented.
    """

    __slots__ = ("rows", "cols")

    def __init__(self, rows, cols):
        rows = np.asarray(rows, dtype=np.int64).reshape(-1)
        cols = np.asarray(cols, dtype=np.int64).reshape(-1)
        if rows.size == 0 or cols.size == 0:
            raise ValueError("need at least one row and one column")
        rows.setflags(write=False)
        cols.setflags(write=False)
        self.rows = rows
        self.cols = cols

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.cols)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def is_balanced(self) -> bool:
        return int(self.rows.sum()) == int(self.cols.sum())

    def in_bounds(self) -> bool:
        """Every ``r_i`` in ``[1, n]`` and every ``c_j`` in ``[1, m]``."""
        m, n = self.shape
        return bool(
            self.rows.min() >= 1 and self.rows.max() <= n
            and self.cols.min() >= 1 and self.cols.max() <= m
        )

    def validate(self) -> None:
        """Raise ValueError unless the sums satisfy the positivity bounds."""
        m, n = self.shape
        for name, vec, bound in (("row", self.rows, n), ("column", self.cols, m)):
            bad = np.flatnonzero((vec < 1) | (vec > bound))
            if bad.size:
                i = int(bad[0])
                raise ValueError(
                    f"{name} sum {i + 1} is {int(vec[i])}, must lie in [1, {bound}]"
                )

    def transpose(self) -> "Projections":
        return Projections(self.cols, self.rows)

    def __eq__(self, other):
        if not isinstance(other, Projections):
            return NotImplemented
        return np.array_equal(self.rows, other.rows) and np.array_equal(self.cols, other.cols)

    def __hash__(self):
        return hash((tuple(self.rows.tolist()), tuple(self.cols.tolist())))

    def __repr__(self):
        return f"Projections(rows={self.rows.tolist()}, cols={self.cols.tolist()})"


class BinaryGrid:
    """An m x n 0-1 matrix; true cells make up the object."""

    __slots__ = ("cells",)

    def __init__(self, cells):
        cells = np.array(cells, dtype=bool)
        if cells.ndim != 2:
            raise ValueError("a grid must be two-dimensional")
        cells.setflags(write=False)
        self.cells = cells

    @classmethod
    def empty(cls, m: int, n: int) -> "BinaryGrid":
        return cls(np.zeros((m, n), dtype=bool))

    @classmethod
    def full(cls, m: int, n: int) -> "BinaryGrid":
        return cls(np.ones((m, n), dtype=bool))

    @classmethod
    def from_strings(cls, lines) -> "BinaryGrid":
        """Build from rows such as ``".##"``; ``#`` (or ``1``) marks a filled cell."""
        if isinstance(lines, str):
            lines = lines.split()
        return cls([[ch in "#1" for ch in line] for line in lines])

    @classmethod
    def from_cells(cls, m: int, n: int, cells) -> "BinaryGrid":
        """Build from 1-indexed ``(i, j)`` pairs."""
        g = np.zeros((m, n), dtype=bool)
        for i, j in cells:
            g[i - 1, j - 1] = True
        return cls(g)

    @property
    def m(self) -> int:
        return self.cells.shape[0]

    @property
    def n(self) -> int:
        return self.cells.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.cells.shape

    def __getitem__(self, ij) -> bool:
        i, j = ij
        m, n = self.cells.shape
        if not (1 <= i <= m and 1 <= j <= n):
            raise IndexError(f"cell ({i},{j}) outside a {m}x{n} grid")
        return bool(self.cells[i - 1, j - 1])

    def transpose(self) -> "BinaryGrid":
        return BinaryGrid(self.cells.T)

    def count(self) -> int:
        return int(self.cells.sum())

    def __eq__(self, other):
        if not isinstance(other, BinaryGrid):
            return NotImplemented
        return np.array_equal(self.cells, other.cells)

    def __hash__(self):
        return hash((self.shape, self.cells.tobytes()))

    def __str__(self):
        return "\n".join("".join("#" if c else "." for c in row) for row in self.cells)

    def __repr__(self):
        return f"BinaryGrid.from_strings({str(self).split()!r})"


def row_sums(g: BinaryGrid) -> np.ndarray:
    return g.cells.sum(axis=1, dtype=np.int64)


def col_sums(g: BinaryGrid) -> np.ndarray:
    return g.cells.sum(axis=0, dtype=np.int64)


def projections_of(g: BinaryGrid) -> Projections:
    return Projections(row_sums(g), col_sums(g))


def _rows_convex(cells: np.ndarray) -> bool:
    # a run of ones starts where a cell is set and its left neighbour is not
    starts = cells[:, 0].astype(np.int64) + np.count_nonzero(cells[:, 1:] & ~cells[:, :-1], axis=1)
    return bool(np.all(starts <= 1))


def is_h_convex(g: BinaryGrid) -> bool:
    """Each row's cells are consecutive (empty rows count as convex)."""
    return _rows_convex(g.cells)


def is_v_convex(g: BinaryGrid) -> bool:
    return _rows_convex(g.cells.T)


def is_connected(g: BinaryGrid) -> bool:
    """The cells form one 4-connected component; the empty grid is not connected."""
    cells = g.cells
    filled = np.argwhere(cells)
    if len(filled) == 0:
        return False
    m, n = cells.shape
    seen = np.zeros_like(cells)
    start = tuple(filled[0])
    seen[start] = True
    queue = deque([start])
    reached = 1
    while queue:
        i, j = queue.popleft()
        for a, b in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
            if 0 <= a < m and 0 <= b < n and cells[a, b] and not seen[a, b]:
                seen[a, b] = True
                reached += 1
                queue.append((a, b))
    return reached == len(filled)


def is_hv_convex_polyomino(g: BinaryGrid) -> bool:
    return g.cells.any() and is_h_convex(g) and is_v_convex(g) and is_connected(g)


def is_realization(g: BinaryGrid, p: Projections) -> bool:
    if g.shape != p.shape:
        raise ValueError(f"grid is {g.m}x{g.n} but projections are {p.m}x{p.n}")
    return bool(np.array_equal(row_sums(g), p.rows) and np.array_equal(col_sums(g), p.cols))


def grid_from_intervals(starts, lengths, n: int) -> BinaryGrid:
    """Row ``i`` covers columns ``starts[i] .. starts[i] + lengths[i] - 1`` (1-indexed)."""
    starts = np.asarray(starts, dtype=np.int64)
    lengths = np.asarray(lengths, dtype=np.int64)
    j = np.arange(1, n + 1)
    return BinaryGrid((starts[:, None] <= j) & (j < (starts + lengths)[:, None]))
