"""Running time of the two reconstruction algorithms as the grid grows.

The centered algorithm touches each row and column a constant number of
times, so doubling the side should roughly double the time. The general
algorithm builds and solves one formula per anchor pair.
"""
import time

from hvtomo import generate_instance, reconstruct_centered, reconstruct_hv


def best_of(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


print("centered")
print(f"{'size':>6} {'ms':>9}")
for size in (250, 500, 1000, 2000, 4000):
    _, p = generate_instance(size, size, seed=1, centered=True)
    t, res = best_of(lambda: reconstruct_centered(p))
    assert res.success
    print(f"{size:>6} {t * 1000:>9.2f}")

print()
print("general (pruned anchors)")
print(f"{'size':>6} {'ms':>9} {'anchors':>8} {'clauses':>9}")
for size in (5, 10, 20, 40):
    _, p = generate_instance(size, size, seed=1)
    t, res = best_of(lambda: reconstruct_hv(p, "pruned"), repeat=1)
    assert res.success
    print(f"{size:>6} {t * 1000:>9.1f} {res.stats.anchors_tried:>8} {res.stats.clauses_generated:>9}")
