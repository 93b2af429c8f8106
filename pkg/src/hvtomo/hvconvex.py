"""Reconstruction of hv-convex polyominoes by trying anchor rows and solving 2SAT."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import twosat
from .formula import build_formula, extract_object
from .grid import Projections, is_hv_convex_polyomino, is_realization
from .result import ReconstructionResult, Stats

__all__ = [
    "AnchorPlan",
    "full_anchor_plan",
    "pruned_anchor_plan",
    "monotone_bounds",
    "reconstruct_hv",
]


@dataclass(frozen=True)
class AnchorPlan:
    """Ordered ``(k, l)`` anchor rows to try (1-indexed)."""

    pairs: tuple[tuple[int, int], ...]
    mode: str = "full"

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


def full_anchor_plan(m: int) -> AnchorPlan:
    return AnchorPlan(tuple((k, l) for k in range(1, m + 1) for l in range(1, m + 1)), "full")


def monotone_bounds(rows) -> tuple[int, int]:
    """``(m1, m2)``: end of the longest nondecreasing prefix, start of the longest nonincreasing suffix."""
    r = np.asarray(rows)
    m = len(r)
    m1 = 1
    while m1 < m and r[m1 - 1] <= r[m1]:
        m1 += 1
    m2 = m
    while m2 > 1 and r[m2 - 2] >= r[m2 - 1]:
        m2 -= 1
    return m1, m2


def pruned_anchor_plan(p: Projections) -> AnchorPlan:
    """Anchors restricted to multiples of ``c_1`` / ``c_n`` (plus row m) and the monotone bounds.

    Column 1 of any realization is a run of ``c_1`` consecutive rows, which
    always contains a multiple of ``c_1``; likewise for column n. Rows above
    both anchors have nondecreasing sums and rows below both have
    nonincreasing sums, which gives ``min(k, l) <= m1`` and ``max(k, l) >= m2``.
    """
    m, n = p.shape
    c1, cn = int(p.cols[0]), int(p.cols[-1])
    ks = set(range(c1, m + 1, c1)) | {m}
    ls = set(range(cn, m + 1, cn)) | {m}
    m1, m2 = monotone_bounds(p.rows)
    pairs = tuple(
        (k, l) for k, l in full_anchor_plan(m)
        if k in ks and l in ls and min(k, l) <= m1 and max(k, l) >= m2
    )
    return AnchorPlan(pairs, "pruned")


def _try_anchor(p: Projections, k: int, l: int, reduced: bool):
    f = build_formula(p, k, l, reduced_disjointness=reduced)
    t0 = time.perf_counter()
    try:
        values = twosat.solve(f)
    except twosat.Unsatisfiable:
        values = None
    return values, len(f), time.perf_counter() - t0


def _check_output(grid, p: Projections) -> None:
    if not (is_hv_convex_polyomino(grid) and is_realization(grid, p)):
        raise AssertionError("extracted object is not an hv-convex polyomino realization")


def reconstruct_hv(
    p: Projections,
    plan: AnchorPlan | str = "full",
    *,
    reduced_disjointness: bool = False,
    parallel: bool = False,
    max_workers: int | None = None,
) -> ReconstructionResult:
    """Find an hv-convex polyomino realization of ``p``, or report failure.

    ``plan`` is ``"full"``, ``"pruned"`` or an explicit :class:`AnchorPlan`.
    With a named plan, problems with more rows than columns are solved on
    the transpose; an explicit plan is taken to refer to ``p``'s own rows.
    The result for the earliest satisfiable anchor in plan order is
    returned, also in parallel mode.
    """
    p.validate()
    start = time.perf_counter()
    stats = Stats()
    if not p.is_balanced():
        return ReconstructionResult(False, stats=stats, reason="row and column totals differ")
    transposed = False
    q = p
    if isinstance(plan, str):
        if plan not in ("full", "pruned"):
            raise ValueError(f"unknown plan {plan!r}")
        if p.m > p.n:
            q, transposed = p.transpose(), True
        plan = full_anchor_plan(q.m) if plan == "full" else pruned_anchor_plan(q)
    m, n = q.shape
    hit = None
    if parallel and len(plan) > 1:
        with ProcessPoolExecutor(max_workers=max_workers) as pool:
            futures = [pool.submit(_try_anchor, q, k, l, reduced_disjointness) for k, l in plan]
            for (k, l), fut in zip(plan, futures):
                values, nclauses, dt = fut.result()
                stats.formulas_built += 1
                stats.anchors_tried += 1
                stats.clauses_generated += nclauses
                stats.solver_time += dt
                if values is not None:
                    hit = (k, l), values
                    break
            for fut in futures:
                fut.cancel()
    else:
        for k, l in plan:
            values, nclauses, dt = _try_anchor(q, k, l, reduced_disjointness)
            stats.formulas_built += 1
            stats.anchors_tried += 1
            stats.clauses_generated += nclauses
            stats.solver_time += dt
            if values is not None:
                hit = (k, l), values
                break
    stats.elapsed = time.perf_counter() - start
    if hit is None:
        return ReconstructionResult(False, stats=stats, reason="no anchor pair is satisfiable")
    anchor, values = hit
    grid = extract_object(values, m, n)
    if transposed:
        grid = grid.transpose()
    _check_output(grid, p)
    return ReconstructionResult(True, grid=grid, anchor=anchor, stats=stats, transposed=transposed)
