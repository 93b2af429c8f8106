"""Unconstrained reconstruction versus the hv-convex one.

Any 0-1 matrix with the right sums is a realization, and the greedy
construction finds one whenever the feasibility test passes. It usually
ignores convexity and connectivity, which the hv solver enforces.
"""
from hvtomo import (
    Projections,
    gale_ryser_feasible,
    generate_instance,
    is_hv_convex_polyomino,
    reconstruct_hv,
    render,
    ryser_reconstruct,
)

_, p = generate_instance(6, 9, seed=12)
print("rows", p.rows.tolist(), "cols", p.cols.tolist())
print("feasible:", gale_ryser_feasible(p))

g = ryser_reconstruct(p)
print("greedy realization, hv-convex polyomino:", is_hv_convex_polyomino(g))
print(render(g))

h = reconstruct_hv(p).grid
print("hv-convex realization:")
print(render(h))

# sums that some 0-1 matrix has but no hv-convex polyomino does
q = Projections([2, 2], [1, 1, 2])
print("rows", q.rows.tolist(), "cols", q.cols.tolist())
print("feasible:", gale_ryser_feasible(q), " hv solver:", reconstruct_hv(q).success)
print(render(ryser_reconstruct(q)))
