import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gridgons import (
    ChainClass,
    Grid2,
    InvalidInputError,
    Point,
    PolySeq,
    as_rational,
    classify,
    clockwise_order,
    convex_hull,
    convex_position_2d,
    convex_position_d,
    halving_md_set,
    in_class,
    is_convex_polygon,
    is_supported,
    is_weakly_convex_polygon,
    md_antidiagonal,
    md_product_convex,
    orientation,
    point_in_hull_d,
    pt,
    rotate,
    slope_compare,
    weak_convex_position_2d,
)

from oracles import class_member, in_hull_caratheodory, strict_position, weak_position

C = ChainClass
rats = st.fractions(min_value=-8, max_value=8, max_denominator=4)
points = st.builds(Point, rats, rats)


def P(*coords):
    return tuple(pt(x, y) for x, y in coords)


def test_rational_parsing():
    assert as_rational("3/6") == Fraction(1, 2)
    assert as_rational(-4) == -4
    for bad in ("1.5", 1.5, True, "1/0", "x"):
        with pytest.raises((InvalidInputError, ZeroDivisionError)):
            as_rational(bad)


def test_orientation_examples():
    assert orientation(*P((0, 0), (1, 1), (2, 2))) == 0
    assert orientation(*P((0, 0), (1, 0), (1, 1))) == 1
    assert orientation(*P((0, 0), (1, 2), (2, 1))) == -1


def test_slope_compare_examples():
    assert slope_compare(P((0, 0), (1, 2)), P((0, 0), (1, 1))) == 1
    assert slope_compare(P((0, 0), (2, 1)), P((1, 5), (3, 6))) == 0
    assert slope_compare(P((0, 0), (7, 273)), P((0, 0), (1, 16))) == 1
    with pytest.raises(InvalidInputError):
        slope_compare(P((0, 0), (0, 1)), P((0, 0), (1, 1)))


def test_classify_examples():
    assert classify(P((0, 1), (1, 3), (2, 2), (3, 0))) == {C.CAP}
    assert classify(P((0, 0), (1, 2), (2, 3))) == {C.CHAIN, C.CAP, C.CAP90}
    assert classify(P((0, 0), (1, 1), (2, 2))) == frozenset()


def test_chain_classes_are_adjacent_cap_intersections():
    rng = random.Random(3)
    for _ in range(300):
        seq = [Point(Fraction(rng.randint(0, 6)), Fraction(rng.randint(0, 6))) for _ in range(rng.randint(2, 5))]
        tags = classify(seq)
        for k in range(4):
            a, b = C.chain(k).cap_parents()
            assert (C.chain(k) in tags) == (a in tags and b in tags)


def test_two_vertex_and_single_vertex_classes():
    assert classify(P((0, 0))) == frozenset(C)
    # monotonicity only
    assert classify(P((0, 0), (1, 1))) == {C.CHAIN, C.CAP, C.CAP90}
    assert classify(P((0, 0), (1, -1))) == {C.CHAIN270, C.CAP, C.CAP270}


def test_convex_polygon_examples():
    assert is_convex_polygon(P((0, 0), (1, 2), (2, 1)))
    assert not is_convex_polygon(P((0, 0), (1, 1), (2, 2)))
    assert is_convex_polygon(P((0, 0), (0, 1), (1, 1), (1, 0)))
    with pytest.raises(InvalidInputError):
        is_convex_polygon(P((0, 0), (1, 1)))
    assert is_weakly_convex_polygon(P((0, 0), (1, 0), (2, 0), (2, 2)))
    assert is_weakly_convex_polygon(P((0, 0), (1, 2), (2, 1)))
    assert not is_weakly_convex_polygon(P((0, 0), (2, 0), (1, 0), (1, 2)))


def test_convex_position_examples():
    assert convex_position_2d(P((0, 0), (1, 2), (2, 1)))
    assert not convex_position_2d(P((0, 0), (2, 0), (1, 0), (1, 2)))
    h = halving_md_set(7)
    assert convex_position_2d(md_antidiagonal(h, h))


def test_point_in_hull_examples():
    cube = list(itertools.product((0, 1), repeat=3))
    half = Fraction(1, 2)
    assert point_in_hull_d((half, half, half), cube)
    assert not point_in_hull_d((2, 0, 0), cube)
    abc = [0, 2, 3]
    pts = md_product_convex([abc, abc, abc])
    corner = (0, 0, 0)
    assert corner in pts
    rest = [q for q in pts if q != corner]
    assert not point_in_hull_d(corner, rest)
    with pytest.raises(InvalidInputError):
        point_in_hull_d((0, 0), cube)


def test_convex_position_d_examples():
    assert convex_position_d([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    simplex = [(0, 0, 0), (4, 0, 0), (0, 4, 0), (0, 0, 4)]
    assert not convex_position_d(simplex + [(1, 1, 1)])
    abc = [0, 2, 3]
    assert convex_position_d(md_product_convex([abc, abc, abc]))


def test_is_supported_examples():
    g = Grid2.lattice(3)
    assert is_supported(g, P((0, 0), (1, 2), (2, 1)))
    assert not is_supported(g, P((0, 0), (0, 1), (1, 1)))
    assert not is_supported(g, P((0, 0), (3, 1)))


@given(points, points, points, st.tuples(rats, rats))
def test_orientation_antisymmetric_and_translation_invariant(p, q, r, t):
    o = orientation(p, q, r)
    assert orientation(q, p, r) == -o
    assert orientation(p, r, q) == -o
    assert orientation(r, q, p) == -o
    sh = lambda a: Point(a.x + t[0], a.y + t[1])
    assert orientation(sh(p), sh(q), sh(r)) == o


@given(points, points, points, points)
def test_slope_compare_matches_fraction_slopes(a, b, c, d):
    if a.x == b.x or c.x == d.x:
        return
    s1 = (b.y - a.y) / (b.x - a.x)
    s2 = (d.y - c.y) / (d.x - c.x)
    assert slope_compare((a, b), (c, d)) == (s1 > s2) - (s1 < s2)


@given(st.lists(points, min_size=2, max_size=6))
def test_classify_is_hereditary(seq):
    tags = classify(seq)
    for k in range(1, len(seq) + 1):
        for sub in itertools.combinations(seq, k):
            assert tags <= classify(sub)


@given(st.lists(points, min_size=3, max_size=7, unique=True))
def test_convex_position_matches_caratheodory_oracle(pts):
    assert convex_position_2d(pts) == strict_position(pts)
    assert weak_convex_position_2d(pts) == weak_position(pts)


@given(st.lists(points, min_size=3, max_size=7, unique=True))
def test_convex_position_iff_hull_order_is_convex(pts):
    if convex_position_2d(pts):
        assert is_convex_polygon(clockwise_order(pts))
    else:
        assert len(convex_hull(pts)) < len(pts)


@given(st.lists(points, min_size=3, max_size=6))
def test_strict_implies_weak(seq):
    if len(seq) >= 3 and is_convex_polygon(seq):
        assert is_weakly_convex_polygon(seq)


def test_convex_position_d_agrees_in_the_plane():
    rng = random.Random(11)
    for _ in range(1000):
        k = rng.randint(3, 8)
        pts = list({(Fraction(rng.randint(-5, 5), rng.randint(1, 3)), Fraction(rng.randint(-5, 5), rng.randint(1, 3))) for _ in range(k)})
        if len(pts) < 3:
            continue
        assert convex_position_d(pts) == convex_position_2d([Point(*p) for p in pts])


@given(
    st.lists(st.tuples(rats, rats, rats), min_size=1, max_size=6),
    st.tuples(rats, rats, rats),
)
def test_point_in_hull_matches_caratheodory(pts, p):
    assert point_in_hull_d(p, pts) == in_hull_caratheodory(p, pts)


def test_class_membership_matches_rotation():
    rng = random.Random(5)
    for _ in range(300):
        seq = [Point(Fraction(rng.randint(0, 5)), Fraction(rng.randint(0, 5))) for _ in range(rng.randint(2, 4))]
        for c in C:
            assert in_class(seq, c) == in_class([rotate(p, -c.rotation) for p in seq], C.cap(0) if c.is_cap else C.chain(0))


def test_polyseq_rejects_bad_kind():
    with pytest.raises(InvalidInputError):
        PolySeq(P((0, 0)), kind="blob")


@given(st.lists(st.builds(Point, st.integers(0, 4).map(Fraction), st.integers(0, 4).map(Fraction)), min_size=1, max_size=5))
def test_in_class_matches_first_principles(seq):
    for c in C:
        assert in_class(seq, c) == class_member(seq, c)
