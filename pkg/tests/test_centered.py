import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hvtomo.centered import (
    DOWN,
    UP,
    NotCentered,
    extend,
    find_full_row,
    is_balanced,
    is_valid,
    next_side,
    reconstruct_centered,
    seed,
    window_is_balanced,
)
from hvtomo.grid import BinaryGrid, Projections, is_hv_convex_polyomino, is_realization
from hvtomo.hvconvex import reconstruct_hv
from hvtomo.oracle import all_projection_pairs, brute_force_reconstruct, generate_instance
from reference_centered import naive_centered

FIG2 = Projections([1, 4, 5, 3, 1], [2, 4, 4, 2, 2])

FIG2_TRACE = [
    "p=3 q=3 fronts=1 {t3=1 t3=1 window=[1,5] balanced=1 valid=1}",
    "p=2 q=3 fronts=2 {t2=1 t3=1 window=[2,5] balanced=0 valid=0} "
    "{t2=2 t3=1 window=[1,3] balanced=0 valid=0}",
    "p=2 q=4 fronts=1 {t2=2 t4=1 window=[2,3] balanced=1 valid=1}",
    "p=1 q=4 fronts=2 {t1=2 t4=1 window=[3,3] balanced=0 valid=0} "
    "{t1=3 t4=1 window=[2,2] balanced=0 valid=0}",
    "p=1 q=5 fronts=2 {t1=2 t5=3 window=- balanced=0 valid=0} "
    "{t1=3 t5=2 window=- balanced=0 valid=0}",
]


def centered_pairs(m, n):
    for p in all_projection_pairs(m, n):
        if (p.rows == n).any():
            yield p


def test_fig2_reconstruction_and_trace():
    lines = []
    res = reconstruct_centered(FIG2, trace=lines.append)
    assert res.success
    assert res.starts.tolist() == [2, 2, 1, 1, 3]
    assert str(res.grid) == ".#...\n.####\n#####\n###..\n..#.."
    assert lines == FIG2_TRACE
    assert res.stats.steps == 4 and res.anchor == (3, 3)


def test_fig2_seed_and_first_extension():
    x = seed(FIG2)
    assert (x.p, x.q, x.alpha, x.beta) == (3, 3, 1, 5)
    assert is_balanced(x) and is_valid(x)
    below = extend(x, DOWN)
    assert sorted(y.tq for y in below) == [1, 3]
    assert all(y.q == 4 and y.p == 3 for y in below)
    # the original front is untouched
    assert (x.p, x.q, x.alpha, x.beta) == (3, 3, 1, 5)


def test_side_rule():
    x = seed(FIG2)
    assert next_side(x) == UP  # r_2 = 4 >= r_4 = 3
    x = seed(Projections([2, 3, 2], [2, 3, 2]))
    assert next_side(x) == UP  # tie goes up
    x = seed(Projections([3, 1], [1, 2, 1]))
    assert next_side(x) == DOWN
    with pytest.raises(ValueError):
        next_side(seed(Projections([2], [1, 1])))


def test_single_row():
    res = reconstruct_centered(Projections([4], [1, 1, 1, 1]))
    assert res.success and res.grid == BinaryGrid.full(1, 4)
    assert res.stats.steps == 0


def test_failure_example():
    p = Projections([2, 3], [2, 1, 2])
    assert brute_force_reconstruct(p) is None
    res = reconstruct_centered(p)
    assert not res.success and res.grid is None


def test_not_centered():
    with pytest.raises(NotCentered):
        reconstruct_centered(Projections([3, 3], [1, 2, 2, 1]))
    with pytest.raises(NotCentered):
        seed(FIG2, k=2)
    assert find_full_row(Projections([3, 3, 1], [2, 3, 2])) == 1


def test_unbalanced_and_malformed():
    assert not reconstruct_centered(Projections([2, 1], [1, 1])).success
    with pytest.raises(ValueError):
        reconstruct_centered(Projections([2, 0], [1, 1]))


def test_two_full_rows():
    res = reconstruct_centered(Projections([3, 3], [2, 2, 2]))
    assert res.success and res.grid == BinaryGrid.full(2, 3)


def test_window_predicates():
    assert window_is_balanced(1, 5, 1, 5, 1, 5)
    assert not window_is_balanced(1, 2, 3, 2, 1, 1)
    assert window_is_balanced(2, 3, 1, 5, 2, 4)


def test_validity_counts_against_targets():
    p = Projections([1, 3, 1], [1, 3, 1])
    (y,) = extend(seed(p))
    assert y.height == 2 and is_balanced(y) and is_valid(y)
    # rows 2 and 3 both full: column 2 already holds 2 cells but its target is 1
    p = Projections([1, 3, 3], [3, 1, 3])
    (z,) = extend(seed(p))
    assert (z.p, z.q, z.alpha, z.beta) == (2, 3, 1, 3)
    assert is_balanced(z) and not is_valid(z)
    assert extend(z) == []
    assert not reconstruct_centered(p).success


def test_matches_naive_reference_up_to_4x4():
    for m, n in itertools.product(range(1, 5), repeat=2):
        for p in centered_pairs(m, n):
            steps = []

            def record(pp, qq, fronts):
                steps.append((pp, qq, sorted(
                    (f.tp, f.tq, None if f.window_empty else f.alpha,
                     None if f.window_empty else f.beta,
                     is_balanced(f), is_balanced(f) and f.bad == 0) for f in fronts)))

            res = reconstruct_centered(p, on_step=record)
            t_ref, trace_ref = naive_centered(p.rows.tolist(), p.cols.tolist())
            assert steps == [(a, b, sorted(fr)) for a, b, fr in trace_ref], p
            assert res.success == (t_ref is not None)
            if res.success:
                assert res.starts.tolist() == t_ref


def test_oracle_equivalence_up_to_4x4():
    for m, n in itertools.product(range(1, 5), repeat=2):
        for p in centered_pairs(m, n):
            res = reconstruct_centered(p)
            assert res.success == (brute_force_reconstruct(p) is not None), p
            if res.success:
                assert is_hv_convex_polyomino(res.grid) and is_realization(res.grid, p)
                assert reconstruct_hv(p).success


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 40), st.integers(1, 40), st.integers(0, 10 ** 6))
def test_generated_centered_instances(m, n, seed_):
    g, p = generate_instance(m, n, seed=seed_, centered=True)
    res = reconstruct_centered(p)
    assert res.success
    assert is_hv_convex_polyomino(res.grid) and is_realization(res.grid, p)
    assert ((1 <= res.starts) & (res.starts <= n - p.rows + 1)).all()


def test_large_instance_is_fast():
    _, p = generate_instance(3000, 3000, seed=1, centered=True)
    res = reconstruct_centered(p)
    assert res.success and res.stats.elapsed < 5
    assert is_realization(res.grid, p)


def test_perturbed_instances_never_produce_wrong_output():
    rng = np.random.default_rng(8)
    for _ in range(300):
        m, n = rng.integers(2, 9, 2)
        _, p = generate_instance(int(m), int(n), seed=int(rng.integers(1 << 30)), centered=True)
        cols = p.cols.copy()
        i, j = rng.choice(n, 2, replace=n == 1)
        if cols[i] > 1 and cols[j] < m:
            cols[i] -= 1
            cols[j] += 1
        q = Projections(p.rows, cols)
        res = reconstruct_centered(q)
        if res.success:
            assert is_realization(res.grid, q) and is_hv_convex_polyomino(res.grid)
        if m <= 6 and n <= 6:
            assert res.success == (brute_force_reconstruct(q) is not None)
