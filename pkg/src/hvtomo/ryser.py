"""Unconstrained 0-1 matrix reconstruction (Gale-Ryser) as a baseline."""
from __future__ import annotations

import numpy as np

from .grid import BinaryGrid, Projections

__all__ = ["gale_ryser_feasible", "ryser_reconstruct"]


def gale_ryser_feasible(p: Projections) -> bool:
    """True iff some 0-1 matrix has row sums ``p.rows`` and column sums ``p.cols``.

    Checks ``sum(r) == sum(c)`` and that the row sums, sorted nonincreasing,
    are dominated by the conjugate of the column sums.
    """
    m, n = p.shape
    if not p.is_balanced() or p.rows.min() < 0 or p.cols.min() < 0:
        return False
    rows = np.sort(p.rows, kind="stable")[::-1]
    if rows[0] > n:
        return False
    # conjugate[k-1] = #{j : c_j >= k}, for k = 1..m
    conjugate = np.array([(p.cols >= k).sum() for k in range(1, m + 1)], dtype=np.int64)
    return bool(np.all(np.cumsum(rows) <= np.cumsum(conjugate)))


def ryser_reconstruct(p: Projections) -> BinaryGrid | None:
    """Greedy construction: each row takes the columns with the largest residual sums.

    Ties go to the lower column index. Returns None when no realization exists.
    """
    if not gale_ryser_feasible(p):
        return None
    m, n = p.shape
    residual = p.cols.astype(np.int64).copy()
    cells = np.zeros((m, n), dtype=bool)
    for i, r in enumerate(p.rows.tolist()):
        order = np.argsort(-residual, kind="stable")[:r]
        if r and residual[order[-1]] <= 0:
            return None
        cells[i, order] = True
        residual[order] -= 1
    return BinaryGrid(cells)
