"""Linear-time reconstruction of centered hv-convex polyominoes.

A centered instance has a row ``k`` with ``r_k = n``. In an hv-convex
realization the row intervals are then nested toward row ``k``: each row
above ``k`` lies inside the row below it and each row below ``k`` inside
the row above it. The reconstruction grows a contiguous block of rows
``[p, q]`` around ``k``, one row at a time, always taking the neighbouring
row with the larger sum (upward on ties).

A partial realization (a *front*) fixes the left ends ``t_p..t_q``. Its
window ``[alpha, beta]`` runs from the first to the last column whose sum
is still below target; every column outside the window must already be
exactly at target. A new row is placed flush against ``alpha`` or flush
against ``beta``. A front is *balanced* when the window lies inside both
end rows, in which case every window column has sum ``q - p + 1``, and
*valid* when no window column's target is below that count. Whenever a
valid balanced front appears, all other fronts are dropped; otherwise
every front is extended, and at most two fronts are ever alive.

Per-front storage is O(1) plus the columns that left its end rows since
the last valid balanced front; column sums are answered in O(1) from the
two end rows and the per-side ``hisum`` / ``losum`` tables.
"""
from __future__ import annotations

import time
from typing import Callable

import numpy as np

from .grid import Projections
from .result import ReconstructionResult, Stats

__all__ = [
    "NotCentered",
    "PartialRealization",
    "window_is_balanced",
    "seed",
    "extend",
    "is_balanced",
    "is_valid",
    "next_side",
    "reconstruct_centered",
    "find_full_row",
]

UP, DOWN = "above", "below"


class NotCentered(ValueError):
    """No row sum equals the number of columns."""


class _Context:
    """State shared by all fronts of one reconstruction (1-indexed lists)."""

    def __init__(self, p: Projections, k: int):
        self.m, self.n = p.shape
        self.k = k
        self.r = [0] + p.rows.tolist()
        self.c = [0] + p.cols.tolist()
        # hisum_j / losum_j for columns that have left the end row on that side
        self.base_hi = [0] * (self.n + 2)
        self.base_lo = [0] * (self.n + 2)
        self.buckets: list[list[int]] = [[] for _ in range(self.m + 2)]
        for j in range(1, self.n + 1):
            self.buckets[self.c[j]].append(j)


class _Chain:
    """Persistent list of ``(row, t)`` assignments shared between fronts."""

    __slots__ = ("row", "t", "parent")

    def __init__(self, row: int, t: int, parent: "_Chain | None"):
        self.row, self.t, self.parent = row, t, parent


class PartialRealization:
    """A front: rows ``p..q`` placed, window ``[alpha, beta]`` (empty when alpha > beta).

    ``bad`` counts window columns whose target is below ``q - p + 1``.
    """

    __slots__ = ("ctx", "p", "q", "tp", "tq", "alpha", "beta", "bad", "hi", "lo", "chain")

    def __init__(self, ctx, p, q, tp, tq, alpha, beta, bad, hi, lo, chain):
        self.ctx = ctx
        self.p, self.q = p, q
        self.tp, self.tq = tp, tq
        self.alpha, self.beta = alpha, beta
        self.bad = bad
        self.hi, self.lo = hi, lo
        self.chain = chain

    @property
    def height(self) -> int:
        return self.q - self.p + 1

    @property
    def window_empty(self) -> bool:
        return self.alpha > self.beta

    def hisum(self, j: int) -> int:
        ctx = self.ctx
        if self.tp <= j < self.tp + ctx.r[self.p]:
            return ctx.k - self.p
        return self.hi.get(j, ctx.base_hi[j])

    def losum(self, j: int) -> int:
        ctx = self.ctx
        if self.tq <= j < self.tq + ctx.r[self.q]:
            return self.q - ctx.k
        return self.lo.get(j, ctx.base_lo[j])

    def colsum(self, j: int) -> int:
        return self.hisum(j) + 1 + self.losum(j)

    def t_values(self) -> dict[int, int]:
        out = {}
        node = self.chain
        while node is not None:
            out.setdefault(node.row, node.t)
            node = node.parent
        return out

    def starts(self) -> np.ndarray:
        """Left ends of rows ``p..q`` as an array."""
        t = self.t_values()
        return np.array([t[i] for i in range(self.p, self.q + 1)], dtype=np.int64)

    def is_realization(self) -> bool:
        return self.p == 1 and self.q == self.ctx.m and self.window_empty

    def describe(self) -> str:
        window = "-" if self.window_empty else f"[{self.alpha},{self.beta}]"
        return f"t{self.p}={self.tp} t{self.q}={self.tq} window={window}"

    def __repr__(self) -> str:
        return f"PartialRealization(p={self.p}, q={self.q}, {self.describe()})"


def window_is_balanced(tp: int, rp: int, tq: int, rq: int, alpha: int, beta: int) -> bool:
    """The window ``[alpha, beta]`` lies inside both end-row intervals."""
    return max(tp, tq) <= alpha and beta < min(tp + rp, tq + rq)


def is_balanced(x: PartialRealization) -> bool:
    if x.window_empty:
        return False
    r = x.ctx.r
    return window_is_balanced(x.tp, r[x.p], x.tq, r[x.q], x.alpha, x.beta)


def is_valid(x: PartialRealization) -> bool:
    """No column strictly inside the window exceeds its target.

    Constant time for balanced fronts; other fronts are checked column by column.
    """
    if x.window_empty:
        return True
    if is_balanced(x):
        return x.bad == 0
    c = x.ctx.c
    return all(x.colsum(j) <= c[j] for j in range(x.alpha + 1, x.beta))


def find_full_row(p: Projections) -> int:
    """Smallest 1-indexed row whose sum equals the number of columns."""
    full = np.flatnonzero(p.rows == p.n)
    if full.size == 0:
        raise NotCentered("no row sum equals the number of columns")
    return int(full[0]) + 1


def seed(p: Projections, k: int | None = None) -> PartialRealization:
    """The single-row front ``t_k = 1`` on a full row ``k``."""
    p.validate()
    if k is None:
        k = find_full_row(p)
    m, n = p.shape
    if not 1 <= k <= m or int(p.rows[k - 1]) != n:
        raise NotCentered(f"row {k} is not completely filled")
    ctx = _Context(p, k)
    c = ctx.c
    alpha = 1
    while alpha <= n and c[alpha] <= 1:
        alpha += 1
    beta = n
    while beta >= alpha and c[beta] <= 1:
        beta -= 1
    return PartialRealization(ctx, k, k, 1, 1, alpha, beta, 0, {}, {}, _Chain(k, 1, None))


def next_side(x: PartialRealization) -> str:
    """Grow toward the neighbouring row with the larger sum, upward on ties."""
    m, r = x.ctx.m, x.ctx.r
    if x.p == 1 and x.q == m:
        raise ValueError("front already spans every row")
    if x.q == m or (x.p > 1 and r[x.p - 1] >= r[x.q + 1]):
        return UP
    return DOWN


def _candidates(x: PartialRealization, side: str, consume: bool) -> list[PartialRealization]:
    ctx = x.ctx
    r, c, m, n, k = ctx.r, ctx.c, ctx.m, ctx.n, ctx.k
    alpha, beta = x.alpha, x.beta
    if alpha > beta:
        return []
    if side == UP:
        if x.p <= 1:
            raise ValueError("no row above the front")
        row = x.p - 1
        t_seam, r_seam = x.tp, r[x.p]
    elif side == DOWN:
        if x.q >= m:
            raise ValueError("no row below the front")
        row = x.q + 1
        t_seam, r_seam = x.tq, r[x.q]
    else:
        raise ValueError(f"side must be {UP!r} or {DOWN!r}")
    rn = r[row]
    h = x.height + 1
    # columns whose target equals the old height fall below the new one
    bad = x.bad
    for j in ctx.buckets[h - 1]:
        if alpha <= j <= beta:
            bad += 1
    p_new, q_new = (row, x.q) if side == UP else (x.p, row)
    complete = p_new == 1 and q_new == m

    out = []
    seen = set()
    for t in (alpha, beta - rn + 1):
        if t in seen:
            continue
        seen.add(t)
        if not (1 <= t <= n - rn + 1):
            continue
        if not (t_seam <= t and t + rn <= t_seam + r_seam):
            continue
        if t < alpha or t + rn - 1 > beta:
            continue
        end = t + rn
        seam_end = t_seam + r_seam
        seam_val = (k - x.p) if side == UP else (x.q - k)

        # column sum after adding the new row, without touching any table
        if side == UP:
            def colsum(j, t=t, end=end):
                if t <= j < end:
                    hs = seam_val + 1
                elif t_seam <= j < seam_end:
                    hs = seam_val
                else:
                    hs = x.hi.get(j, ctx.base_hi[j])
                return hs + 1 + x.losum(j)
        else:
            def colsum(j, t=t, end=end):
                if t <= j < end:
                    ls = seam_val + 1
                elif t_seam <= j < seam_end:
                    ls = seam_val
                else:
                    ls = x.lo.get(j, ctx.base_lo[j])
                return x.hisum(j) + 1 + ls

        cand_bad = bad
        a = alpha
        dead = False
        while a <= beta:
            s = colsum(a)
            if s < c[a]:
                break
            if s != c[a]:
                dead = True
                break
            if c[a] < h:
                cand_bad -= 1
            a += 1
        if dead:
            continue
        b = beta
        while b >= a:
            s = colsum(b)
            if s < c[b]:
                break
            if s != c[b]:
                dead = True
                break
            if c[b] < h:
                cand_bad -= 1
            b -= 1
        if dead:
            continue
        tp, tq = (t, x.tq) if side == UP else (x.tp, t)
        rp, rq = r[p_new], r[q_new]
        if complete:
            if a <= b:
                continue
        elif a > b:
            # every column is full but rows remain
            continue
        elif not (min(tp, tq) <= a and b < max(tp + rp, tq + rq)):
            continue
        out.append((t, tp, tq, a, b, cand_bad, end, seam_end))

    children = []
    # the first child may take over x's tables, so copies for the others come first
    for idx in range(len(out) - 1, -1, -1):
        t, tp, tq, a, b, cand_bad, end, seam_end = out[idx]
        own = consume and idx == 0
        hi = x.hi if own else dict(x.hi)
        lo = x.lo if own else dict(x.lo)
        if side == UP:
            val = k - x.p
            for j in range(t_seam, t):
                hi[j] = val
            for j in range(end, seam_end):
                hi[j] = val
        else:
            val = x.q - k
            for j in range(t_seam, t):
                lo[j] = val
            for j in range(end, seam_end):
                lo[j] = val
        children.append(PartialRealization(
            ctx, p_new, q_new, tp, tq, a, b, cand_bad, hi, lo, _Chain(row, t, x.chain)))
    children.reverse()
    return children


def extend(x: PartialRealization, side: str | None = None) -> list[PartialRealization]:
    """Fronts for the block grown by one row on ``side`` (default: the usual choice).

    The new row starts at ``alpha`` or ends at ``beta``; candidates that are
    not partial realizations of the grown block are dropped, and a balanced
    but invalid front has no extensions. ``x`` itself is left untouched.
    """
    if side is None:
        side = next_side(x)
    if is_balanced(x) and not is_valid(x):
        return []
    return _candidates(x, side, consume=False)


def _merge_into_base(x: PartialRealization) -> None:
    ctx = x.ctx
    for j, v in x.hi.items():
        ctx.base_hi[j] = v
    for j, v in x.lo.items():
        ctx.base_lo[j] = v
    x.hi.clear()
    x.lo.clear()


def _trace_line(p: int, q: int, fronts) -> str:
    parts = [f"p={p} q={q} fronts={len(fronts)}"]
    for x in fronts:
        bal = is_balanced(x)
        val = bal and x.bad == 0
        parts.append(f"{{{x.describe()} balanced={int(bal)} valid={int(val)}}}")
    return " ".join(parts)


def reconstruct_centered(
    p: Projections,
    trace: Callable[[str], None] | None = None,
    on_step: Callable[[int, int, list], None] | None = None,
) -> ReconstructionResult:
    """Reconstruct an hv-convex polyomino with a completely filled row in O(m + n).

    Raises NotCentered when no row sum equals n. ``trace`` receives one
    line per step with the block ``[p, q]`` and each front's end rows,
    window and balanced/valid flags; ``on_step`` receives ``(p, q, fronts)``.
    """
    started = time.perf_counter()
    p.validate()
    k = find_full_row(p)
    stats = Stats(anchors_tried=1)
    if not p.is_balanced():
        return ReconstructionResult(False, stats=stats, reason="row and column totals differ")
    m, n = p.shape
    fronts = [seed(p, k)]
    if trace:
        trace(_trace_line(k, k, fronts))
    if on_step:
        on_step(k, k, list(fronts))
    lo_row, hi_row = k, k
    while (lo_row, hi_row) != (1, m):
        side = next_side(fronts[0])
        chosen = None
        for x in fronts:
            if is_balanced(x) and x.bad == 0:
                chosen = x
                break
        if chosen is not None:
            _merge_into_base(chosen)
            fronts = _candidates(chosen, side, consume=True)
        else:
            grown = []
            for x in fronts:
                if is_balanced(x):
                    continue  # balanced but invalid: dead end
                grown.extend(_candidates(x, side, consume=True))
            fronts = grown
        if side == UP:
            lo_row -= 1
        else:
            hi_row += 1
        stats.steps += 1
        if len(fronts) > 2:
            raise AssertionError(f"{len(fronts)} fronts alive at p={lo_row} q={hi_row}")
        if trace:
            trace(_trace_line(lo_row, hi_row, fronts))
        if on_step:
            on_step(lo_row, hi_row, list(fronts))
        if not fronts:
            break
    stats.elapsed = time.perf_counter() - started
    for x in fronts:
        if x.is_realization():
            return ReconstructionResult(
                True, starts=x.starts(), lengths=p.rows, width=n, anchor=(k, k), stats=stats)
    return ReconstructionResult(False, stats=stats, reason="no front completes to a realization")
