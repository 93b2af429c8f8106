"""Grow a centered reconstruction row by row and watch the fronts.

The instance below has a completely filled middle row. The algorithm starts
from that row and adds one neighbouring row at a time, keeping at most two
candidate placements ("fronts") alive.
"""
from hvtomo import Projections, reconstruct_centered, reconstruct_hv, render

p = Projections([1, 4, 5, 3, 1], [2, 4, 4, 2, 2])

print("row sums   ", p.rows.tolist())
print("column sums", p.cols.tolist())
print()

# one line per step: the block [p, q] of placed rows and each live front
res = reconstruct_centered(p, trace=print)
print()
print("left ends:", res.starts.tolist())
print(render(res.grid))

# the general algorithm finds a realization too, though not necessarily the same one
hv = reconstruct_hv(p)
print(f"general solver: anchor rows {hv.anchor}, "
      f"{hv.stats.formulas_built} formulas, {hv.stats.clauses_generated} clauses")
print(render(hv.grid))
