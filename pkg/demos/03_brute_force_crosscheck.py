"""Compare every solver with exhaustive enumeration on small grids.

All balanced projection pairs on boxes up to 3x3 are tried. The oracle
enumerates every hv-convex polyomino with the given row sums, so agreement
here is checked against ground truth rather than against another solver.
"""
import itertools
from collections import Counter

from hvtomo import brute_force_reconstruct, reconstruct_centered, reconstruct_hv
from hvtomo.oracle import all_projection_pairs, enumerate_hv_polyominoes

print("hv-convex polyominoes filling an m x n box:")
for m in range(1, 5):
    print("  ", [sum(1 for _ in enumerate_hv_polyominoes(m, n)) for n in range(1, 5)])
print()

tally = Counter()
for m, n in itertools.product(range(1, 4), repeat=2):
    for p in all_projection_pairs(m, n):
        truth = brute_force_reconstruct(p) is not None
        hv = reconstruct_hv(p).success
        tally["instances"] += 1
        tally["realizable"] += truth
        tally["hv disagreements"] += hv != truth
        if (p.rows == n).any():
            tally["centered instances"] += 1
            tally["centered disagreements"] += reconstruct_centered(p).success != truth

for key, value in tally.items():
    print(f"{key:24s} {value}")
