"""Brute-force ground truth on small grids, and a random instance generator.

Everything here enumerates explicit row intervals and filters with the
predicates from :mod:`hvtomo.grid`; none of it shares code with the
reconstruction algorithms it is used to check.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .grid import (
    BinaryGrid,
    Projections,
    grid_from_intervals,
    is_hv_convex_polyomino,
    is_realization,
    projections_of,
)

__all__ = [
    "EnumerationBudget",
    "BudgetExceeded",
    "enumerate_hv_polyominoes",
    "hv_realizations",
    "brute_force_reconstruct",
    "all_projection_pairs",
    "generate_instance",
]


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class EnumerationBudget:
    """Limits for exhaustive enumeration; interval products grow like (n(n+1)/2)^m."""

    max_m: int = 6
    max_n: int = 6
    max_objects: int | None = None

    def check(self, m: int, n: int) -> None:
        if m > self.max_m or n > self.max_n:
            raise BudgetExceeded(f"{m}x{n} exceeds the {self.max_m}x{self.max_n} enumeration budget")


DEFAULT_BUDGET = EnumerationBudget()


def _capped(it: Iterator[BinaryGrid], budget: EnumerationBudget) -> Iterator[BinaryGrid]:
    for count, g in enumerate(it, 1):
        if budget.max_objects is not None and count > budget.max_objects:
            raise BudgetExceeded(f"more than {budget.max_objects} objects")
        yield g


def enumerate_hv_polyominoes(m: int, n: int, budget: EnumerationBudget = DEFAULT_BUDGET) -> Iterator[BinaryGrid]:
    """Every hv-convex polyomino whose bounding box is exactly m x n.

    Rows are given one interval each (so every row is nonempty); consecutive
    rows must overlap, which any connected object with nonempty rows needs.
    Candidates are then filtered by the grid predicates and by touching the
    first and last column. Order is lexicographic in the per-row intervals.
    """
    budget.check(m, n)
    intervals = [(a, b) for a in range(n) for b in range(a, n)]

    def rows(prefix):
        if len(prefix) == m:
            yield prefix
            return
        for a, b in intervals:
            if prefix:
                pa, pb = prefix[-1]
                if b < pa or a > pb:
                    continue
            yield from rows(prefix + [(a, b)])

    def gen():
        for choice in rows([]):
            if min(a for a, _ in choice) != 0 or max(b for _, b in choice) != n - 1:
                continue
            starts = [a + 1 for a, _ in choice]
            lengths = [b - a + 1 for a, b in choice]
            g = grid_from_intervals(starts, lengths, n)
            if is_hv_convex_polyomino(g):
                yield g

    return _capped(gen(), budget)


@lru_cache(maxsize=256)
def _placements(rows: tuple[int, ...], n: int):
    """Every way to place rows of the given lengths, indexed by resulting column sums."""
    lengths = np.array(rows, dtype=np.int64)
    starts = np.array(list(itertools.product(*[range(1, n - r + 2) for r in rows])), dtype=np.int64)
    j = np.arange(1, n + 1)
    cover = (starts[:, :, None] <= j) & (j < (starts + lengths)[:, :, None])
    by_cols: dict[tuple[int, ...], list[int]] = {}
    for idx, key in enumerate(map(tuple, cover.sum(axis=1).tolist())):
        by_cols.setdefault(key, []).append(idx)
    return starts, by_cols


def hv_realizations(p: Projections, budget: EnumerationBudget = DEFAULT_BUDGET) -> Iterator[BinaryGrid]:
    """All hv-convex polyomino realizations of ``p``, by trying every row placement.

    Placements are ordered lexicographically by the left ends of the rows.
    """
    m, n = p.shape
    budget.check(m, n)
    if not p.in_bounds() or not p.is_balanced():
        return iter(())
    starts, by_cols = _placements(tuple(p.rows.tolist()), n)

    def gen():
        for idx in by_cols.get(tuple(p.cols.tolist()), ()):
            g = grid_from_intervals(starts[idx], p.rows, n)
            if is_realization(g, p) and is_hv_convex_polyomino(g):
                yield g

    return _capped(gen(), budget)


def brute_force_reconstruct(p: Projections, budget: EnumerationBudget = DEFAULT_BUDGET) -> BinaryGrid | None:
    """First hv-convex polyomino realization in enumeration order, or None."""
    return next(hv_realizations(p, budget), None)


def all_projection_pairs(m: int, n: int, balanced: bool = True) -> Iterator[Projections]:
    """Every ``(r, c)`` with ``r_i`` in ``[1, n]``, ``c_j`` in ``[1, m]``."""
    cols_by_sum: dict[int, list[tuple[int, ...]]] = {}
    for c in itertools.product(range(1, m + 1), repeat=n):
        cols_by_sum.setdefault(sum(c), []).append(c)
    all_cols = [c for group in cols_by_sum.values() for c in group]
    for r in itertools.product(range(1, n + 1), repeat=m):
        for c in (cols_by_sum.get(sum(r), []) if balanced else all_cols):
            yield Projections(r, c)


def _step(rng, hi: int, width: int) -> int:
    return int(min(hi, rng.integers(0, width + 1)))


def generate_instance(m: int, n: int, seed: int = 0, centered: bool = False) -> tuple[BinaryGrid, Projections]:
    """A pseudo-random hv-convex polyomino filling an m x n box, with its projections.

    The left ends of the rows fall to column 1 at one row and rise again
    away from it; the right ends climb to column n at another row and fall
    away from it. Consecutive rows always overlap. With ``centered=True``
    both turning points share one row, which is then completely filled.
    The distribution is not uniform over hv-convex polyominoes.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    rng = np.random.default_rng(seed)
    k_left = int(rng.integers(0, m))
    k_right = k_left if centered else int(rng.integers(0, m))
    width = max(1, -(-2 * n // m))
    starts = np.empty(m, dtype=np.int64)
    ends = np.empty(m, dtype=np.int64)
    for i in range(m):
        if i == 0:
            e = n if k_right == 0 else int(rng.integers(1, n + 1))
        elif i < k_right:
            e = ends[i - 1] + _step(rng, n - ends[i - 1], width)
        elif i == k_right:
            e = n
        else:
            e = ends[i - 1] - _step(rng, ends[i - 1] - starts[i - 1], width)
        if i == 0:
            t = 1 if k_left == 0 else int(rng.integers(1, e + 1))
        elif i < k_left:
            t = starts[i - 1] - _step(rng, starts[i - 1] - 1, width)
        elif i == k_left:
            t = 1
        else:
            t = starts[i - 1] + _step(rng, min(e, ends[i - 1]) - starts[i - 1], width)
        starts[i], ends[i] = t, e
    g = grid_from_intervals(starts, ends - starts + 1, n)
    return g, projections_of(g)
