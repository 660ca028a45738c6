import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gridgons import (
    DECREASING,
    Grid2,
    InvalidInputError,
    MDSet,
    Point,
    classify,
    convex_position_2d,
    counting_grid,
    counting_layout,
    counting_turn_violations,
    halving_md_set,
    highest_differing_bit,
    is_convex_polygon,
    is_md,
    is_supported,
    longest_md_subsequence,
    max_md_subset_size,
    md_antidiagonal,
    md_extract,
    md_extract_bound,
    md_product_convex,
    nested_intervals,
    pentagon_from_6x6,
    s3_construction,
    s3_grid,
    slope_interval,
    upper_bound_grid,
)

from conftest import rational_grid
from oracles import brute_md_max


def F(*vs):
    return tuple(Fraction(v) for v in vs)


def test_upper_bound_grid_values():
    g = upper_bound_grid(3)
    assert g.xs == F(*range(8))
    assert g.ys == F(0, 1, 16, 17, 256, 257, 272, 273)
    assert upper_bound_grid(1).ys == F(0, 1)
    assert upper_bound_grid(2).ys == F(0, 1, 8, 9)
    with pytest.raises(InvalidInputError):
        upper_bound_grid(0)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_upper_bound_grid_is_symmetric(k):
    g = upper_bound_grid(k)
    top = g.ys[-1]
    assert sorted(top - y for y in g.ys) == list(g.ys)


def test_slope_intervals_disjoint_and_hit():
    for k in (1, 2, 3):
        g = upper_bound_grid(k)
        ivs = [slope_interval(k, j) for j in range(k)]
        for (a, b), (c, d) in zip(ivs, ivs[1:]):
            assert b <= c
        for (x1, y1), (x2, y2) in itertools.product(g.points(), repeat=2):
            if x1 < x2 and y1 < y2:
                lo, hi = ivs[highest_differing_bit(y1, y2, k)]
                assert lo < (y2 - y1) / (x2 - x1) < hi


def test_md_predicates():
    assert is_md([0, 16, 24, 28, 30, 31], 2)
    assert is_md([0, 1])
    assert not is_md([0, 1, 2])
    assert is_md([0, 1, 3, 7])
    with pytest.raises(InvalidInputError):
        MDSet(F(0, 1, 2))


def test_halving_examples():
    assert halving_md_set(6).values == F(0, 16, 24, 28, 30, 31)
    assert halving_md_set(2, 5).values == F(0, 1)
    h = halving_md_set(7)
    gaps = [b - a for a, b in zip(h.values, h.values[1:])]
    assert all(a == 2 * b for a, b in zip(gaps, gaps[1:]))
    assert h.direction == DECREASING


def test_md_extract_examples():
    out = md_extract(range(17))
    assert is_md(out.values, 2) and len(out) >= 3
    assert md_extract([0, 1]).values == F(0, 1)
    out = md_extract(range(64))
    assert is_md(out.values, 2) and len(out) >= 4


def test_max_md_examples():
    assert max_md_subset_size(range(9)) == 4
    assert max_md_subset_size([0, 1]) == 2
    assert max_md_subset_size(upper_bound_grid(3).ys) <= 4


def test_nested_intervals_halve():
    a, b = nested_intervals(range(33))
    lengths = [hi - lo for lo, hi in zip(a, b[::-1])]
    assert all(2 * l2 <= l1 for l1, l2 in zip(lengths, lengths[1:]))


small_sets = st.sets(st.integers(-30, 30), min_size=1, max_size=9)


@given(small_sets, st.sampled_from([1, 2, 3]))
def test_longest_md_matches_brute_force(vals, r):
    seq, direction = longest_md_subsequence(vals, r)
    assert len(seq) == brute_md_max(vals, r)
    assert set(seq) <= {Fraction(v) for v in vals}
    assert len(seq) <= 2 or is_md(seq, r)


@given(st.sets(st.fractions(-50, 50, max_denominator=5), min_size=2, max_size=64))
def test_md_extract_bound_property(vals):
    out = md_extract(vals)
    assert is_md(out.values, 2)
    assert len(out) >= md_extract_bound(len(vals))
    assert set(out.values) <= set(vals)


@pytest.mark.parametrize("n", [2, 3, 7, 16, 32])
def test_antidiagonal_convex(n):
    h = halving_md_set(n)
    pts = md_antidiagonal(h, h)
    assert len(pts) == n
    assert n < 3 or convex_position_2d(pts)


def test_md_product_two_dimensions_is_antidiagonal_plus_corner():
    h = halving_md_set(3)
    pts = md_product_convex([h, h])
    diag = md_antidiagonal(h, h)
    assert len(pts) == 4
    assert set(pts) == {tuple(p) for p in diag} | {(Fraction(0), Fraction(0))}


def test_pentagon_on_lattice_random_and_reflected(rng):
    grids = [Grid2.lattice(6)] + [rational_grid(rng, 6) for _ in range(20)]
    for g in grids:
        for h in (g, g.reflected_x(), g.rotated(1)):
            poly = pentagon_from_6x6(h)
            assert len(poly.vertices) >= 5
            assert is_supported(h, poly.vertices)
            assert is_convex_polygon(poly.vertices)
    with pytest.raises(InvalidInputError):
        pentagon_from_6x6(Grid2.lattice(5))


def test_counting_grid_m1():
    lay = counting_layout(1)
    ys = set(lay.grid.ys)
    assert {5, 25, 125, 245, 225} <= ys
    assert lay.grid.shape == (6, 6)
    assert lay.n == 5


@pytest.mark.parametrize("m", [1, 2])
def test_counting_grid_turn_property(m):
    lay = counting_layout(m, verify=False)
    assert counting_turn_violations(lay) == 0


def test_counting_grid_lower_chains_classify():
    g = counting_grid(2)
    seq = [Point(g.xs[i], g.ys[i]) for i in range(4)]
    assert any(not c.is_cap for c in classify(seq[::-1]))


def test_s3_small_cases():
    g = s3_grid(0, 1)
    assert [len(a) for a in g.axes] == [2, 2, 1]
    s = s3_construction(1, 1)
    assert len(s.grid.points()) == 8
    assert s.report.lines_ok and s.report.planes_ok
    assert s3_construction(1, 1, seed=0).grid == s3_construction(1, 1, seed=0).grid
    with pytest.raises(InvalidInputError):
        s3_grid(2, 1)


def test_s3_22_lines_generic_planes_structural():
    r = s3_construction(2, 2).report
    assert r.n_points == 64
    assert r.lines_ok
    assert r.accidental_degeneracies == 0
    assert r.nonaligned_coplanar_quadruples == r.structural_nonaligned == 2240
