import itertools
import math
import random
from fractions import Fraction

import pytest

from gridgons import (
    ChainClass,
    Grid2,
    Point,
    ScaleGuardError,
    approx_max_supported_polygon,
    has_supported_n_cap,
    has_supported_n_chain,
    in_class,
    is_convex_polygon,
    is_contained,
    is_supported,
    max_contained_convex_polygon,
    max_supported_cap,
    max_supported_chain,
    oracle_max_supported,
    upper_bound_grid,
)
from gridgons.optimize import CapDP, _Frame, _conflict_free

from conftest import rational_grid
from oracles import brute_max_supported, class_member, strict_position

CLASSES = list(ChainClass)
CAPS = [c for c in CLASSES if c.is_cap]
CHAINS = [c for c in CLASSES if c.is_chain]


def G(xs, ys):
    return Grid2.from_sets(xs, ys)


def random_grids(seed, count, sizes=(2, 3, 4)):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.choice(sizes)
        out.append(rational_grid(rng, n, spread=6, dens=2))
    return out


def test_contained_examples():
    assert max_contained_convex_polygon(Grid2.lattice(2)).size == 4
    assert max_contained_convex_polygon(upper_bound_grid(3)).size <= 16


def brute_contained(grid):
    pts = grid.points()
    for k in range(len(pts), 2, -1):
        if any(strict_position(c) for c in itertools.combinations(pts, k)):
            return k
    return min(len(pts), 2)


def test_contained_three_by_three_is_six():
    # all but the centre leaves edge midpoints on straight angles
    assert brute_contained(Grid2.lattice(3)) == 6
    r = max_contained_convex_polygon(Grid2.lattice(3))
    assert r.size == 6


def test_contained_matches_brute_force():
    for g in random_grids(1, 25, sizes=(2, 3)):
        r = max_contained_convex_polygon(g)
        assert r.size == brute_contained(g)
        vs = r.witness.vertices
        assert is_contained(g, vs)
        assert len(vs) < 3 or is_convex_polygon(vs)


def test_chain_examples():
    assert max_supported_chain(upper_bound_grid(3)).size == 4
    assert max_supported_chain(Grid2.lattice(4)).size == 3
    assert max_supported_chain(Grid2.lattice(2)).size == 2


def test_cap_examples():
    r = max_supported_cap(Grid2.lattice(4))
    assert r.size == 4
    assert is_supported(Grid2.lattice(4), r.witness.vertices)
    assert any(in_class(r.witness.vertices, c) for c in CAPS)
    assert max_supported_cap(Grid2.lattice(2)).size == 2
    wit = [Point(Fraction(x), Fraction(y)) for x, y in ((0, 1), (1, 3), (2, 2), (3, 0))]
    assert in_class(wit, ChainClass.CAP)


def test_decision_examples():
    assert has_supported_n_chain(G([0, 1, 2], [0, 1, 3]))
    assert not has_supported_n_chain(Grid2.lattice(3))
    assert has_supported_n_chain(G([0, 1], [0, 5]))
    assert has_supported_n_cap(Grid2.lattice(3))
    assert not has_supported_n_cap(upper_bound_grid(3))


def test_approx_examples(rng):
    for _ in range(3):
        g = rational_grid(rng, 6)
        r = approx_max_supported_polygon(g)
        assert r.size >= 3 and is_supported(g, r.witness.vertices)
    assert approx_max_supported_polygon(Grid2.lattice(3)).size >= 2


def test_conflict_free_input_is_kept():
    tri = tuple(Point(Fraction(x), Fraction(y)) for x, y in ((0, 0), (1, 2), (2, 1)))
    assert _conflict_free(tri) == list(tri)
    square = G([0, 1], [0, 1])
    assert approx_max_supported_polygon(square).size == 2 < max_contained_convex_polygon(square).size


def test_conflict_free_keeps_half_of_each_component():
    for g in random_grids(11, 20, sizes=(3, 4, 5)):
        vs = max_contained_convex_polygon(g).witness.vertices
        kept = _conflict_free(vs)
        assert len({p.x for p in kept}) == len(kept) == len({p.y for p in kept})
        assert 2 * len(kept) >= len(vs)


def test_oracle_examples():
    assert oracle_max_supported(Grid2.lattice(3)).size == 3
    assert brute_max_supported(Grid2.lattice(3)) == 3
    with pytest.raises(ScaleGuardError):
        oracle_max_supported(Grid2.lattice(7))


def test_dp_agrees_with_unpruned_brute_force():
    for g in random_grids(2, 30):
        for c in CLASSES:
            want = brute_max_supported(g, c)
            got = (max_supported_cap if c.is_cap else max_supported_chain)(g, c)
            assert got.size == want, (g, c)
            assert oracle_max_supported(g, c).size == want
            assert class_member(got.witness.vertices, c)
            assert is_supported(g, got.witness.vertices)
        assert oracle_max_supported(g).size == brute_max_supported(g)


def test_class_free_searches_take_the_best_class():
    for g in random_grids(3, 15):
        assert max_supported_chain(g).size == max(max_supported_chain(g, c).size for c in CHAINS)
        assert max_supported_cap(g).size == max(max_supported_cap(g, c).size for c in CAPS)
        assert max_supported_cap(g).size >= max_supported_chain(g).size


def test_witnesses_are_hereditary():
    for g in random_grids(4, 15):
        for c in CLASSES:
            w = (max_supported_cap if c.is_cap else max_supported_chain)(g, c).witness.vertices
            for k in range(1, len(w) + 1):
                for sub in itertools.combinations(w, k):
                    assert class_member(sub, c)


def test_cap_table_entries_are_realized():
    for g in random_grids(5, 6, sizes=(3, 4)):
        dp = CapDP(_Frame(g))
        f = dp.frame
        for l1, l2, r1, r2 in itertools.product(f.pts, repeat=4):
            if l2[0] >= r1[0] or (l1 == l2 and r1 == r2 and l1[1] == r1[1]):
                continue
            if (l1 != l2 and f.turn(l1, l2, r1) >= 0) or (r1 != r2 and f.turn(l2, r1, r2) >= 0):
                continue
            v = dp.value(l1, l2, r1, r2)
            if v <= 0:
                continue
            a, b = dp.pair(l1, l2, r1, r2)
            assert len(a) + len(b) == v
            assert a[-1] == l2 and b[0] == r1
            assert (len(a) < 2 or a[-2] == l1) and (len(b) < 2 or b[1] == r2)
            seq = f.points(a + b)
            assert class_member(seq, ChainClass.CAP)
            assert len({p[1] for p in a + b}) == len(a + b)


def test_searches_monotone_under_grid_extension():
    rng = random.Random(6)
    for _ in range(12):
        big = rational_grid(rng, 5, spread=8, dens=2)
        xi = sorted(rng.sample(range(5), 4))
        yi = sorted(rng.sample(range(5), 4))
        small = big.subgrid(xi, yi)
        assert max_supported_cap(small).size <= max_supported_cap(big).size
        assert max_supported_chain(small).size <= max_supported_chain(big).size
        assert max_contained_convex_polygon(small).size <= max_contained_convex_polygon(big).size
        assert oracle_max_supported(small).size <= oracle_max_supported(big).size


def test_decisions_consistent_with_searches():
    for g in random_grids(7, 40):
        n = g.n
        assert has_supported_n_cap(g) == (max_supported_cap(g).size == n)
        assert has_supported_n_chain(g) == (max_supported_chain(g).size == n)


def test_approx_half_guarantee():
    for g in random_grids(8, 25, sizes=(3, 4, 5)):
        opt = oracle_max_supported(g).size
        r = approx_max_supported_polygon(g)
        assert r.size >= math.ceil(opt / 2)
        vs = r.witness.vertices
        assert is_supported(g, vs)
        assert len(vs) < 3 or is_convex_polygon(vs)


def test_approx_per_class():
    for g in random_grids(9, 10):
        for c in CLASSES:
            opt = brute_max_supported(g, c)
            r = approx_max_supported_polygon(g, c)
            assert r.size >= math.ceil(opt / 2)
            assert class_member(r.witness.vertices, c)
            assert is_supported(g, r.witness.vertices)
