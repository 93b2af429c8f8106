"""What the 2SAT formula for one anchor pair looks like.

The complement of an hv-convex polyomino splits into four corner regions
A (upper left), B (upper right), C (lower left) and D (lower right). Each
cell gets one boolean per region, and the clauses force the regions to be
closed toward their corners, disjoint, and consistent with the sums.
"""
from hvtomo import Projections, render
from hvtomo.formula import build_formula, clause_families, corner_decomposition, dump_clauses, extract_object
from hvtomo.twosat import Unsatisfiable, solve

p = Projections([2, 3, 1], [1, 2, 3])
m, n = p.shape

print("clauses per family for anchors (k, l) = (2, 2):")
for name, count in clause_families(p, 2, 2).items():
    print(f"  {name:4s} {count}")
print()

print("first few clauses:")
print("".join(dump_clauses(build_formula(p, 2, 2), m, n).splitlines(True)[:6]))

for k in range(1, m + 1):
    for l in range(1, m + 1):
        try:
            values = solve(build_formula(p, k, l))
        except Unsatisfiable:
            print(f"(k, l) = ({k}, {l}): unsatisfiable")
            continue
        g = extract_object(values, m, n)
        print(f"(k, l) = ({k}, {l}): satisfiable")
        print(render(g))

g = extract_object(solve(build_formula(p, 2, 1)), m, n)
corners = corner_decomposition(g)
print("corner regions of that object (letters mark the region of each empty cell):")
for i in range(m):
    row = ""
    for j in range(n):
        marks = [r for r, mat in zip("ABCD", (corners.A, corners.B, corners.C, corners.D)) if mat[i, j]]
        row += marks[0] if marks else "#"
    print(row)
