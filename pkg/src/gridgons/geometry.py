"""Exact rational points and geometric predicates.

Everything here works over :class:`fractions.Fraction`; no predicate ever
rounds. Convexity classes follow the clockwise convention: a sequence is a
member of a cap or chain class when it makes strict right turns and is
strictly monotone in the coordinate(s) the class prescribes.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class GridgonsError(Exception):
    """Base class for library errors."""


class ScaleGuardError(GridgonsError):
    """An exponential search was refused because the input is too large."""


class InvalidInputError(GridgonsError, ValueError):
    pass


def as_rational(value: Number) -> Fraction:
    """Coerce ``value`` to a Fraction.

    Strings must look like ``"p"`` or ``"p/q"`` with ``q > 0``; floats are
    refused because they would smuggle rounding into exact predicates.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InvalidInputError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        s = value.strip()
        if not _RATIONAL_RE.match(s):
            raise InvalidInputError(f"not a rational string: {value!r}")
        if "/" in s and int(s.split("/")[1]) == 0:
            raise InvalidInputError(f"zero denominator: {value!r}")
        return Fraction(s)
    raise InvalidInputError(f"not a rational: {value!r}")


class Point(NamedTuple):
    x: Fraction
    y: Fraction


def pt(x: Number, y: Number) -> Point:
    return Point(as_rational(x), as_rational(y))


def points(coords: Iterable[Sequence[Number]]) -> list[Point]:
    return [pt(x, y) for x, y in coords]


class ChainClass(enum.Enum):
    """The four cap classes and four chain classes.

    ``rotation`` is the number of quarter turns (counter-clockwise) that
    carries the base class onto this one. The base cap has strictly
    increasing x; the base chain has strictly increasing x and y.
    """

    CAP = ("cap", 0)
    CAP90 = ("cap90", 1)
    CAP180 = ("cap180", 2)
    CAP270 = ("cap270", 3)
    CHAIN = ("chain", 0)
    CHAIN90 = ("chain90", 1)
    CHAIN180 = ("chain180", 2)
    CHAIN270 = ("chain270", 3)

    def __init__(self, label: str, rotation: int) -> None:
        self.label = label
        self.rotation = rotation

    @property
    def is_cap(self) -> bool:
        return self.label.startswith("cap")

    @property
    def is_chain(self) -> bool:
        return not self.is_cap

    @classmethod
    def from_label(cls, label: str) -> "ChainClass":
        for member in cls:
            if member.label == label:
                return member
        raise InvalidInputError(f"unknown class name: {label!r}")

    @classmethod
    def cap(cls, rotation: int) -> "ChainClass":
        return _CAPS[rotation % 4]

    @classmethod
    def chain(cls, rotation: int) -> "ChainClass":
        return _CHAINS[rotation % 4]

    def cap_parents(self) -> tuple["ChainClass", "ChainClass"]:
        """The two adjacent cap classes whose intersection is this chain class."""
        if self.is_cap:
            raise ValueError("cap classes have no parents")
        return ChainClass.cap(self.rotation), ChainClass.cap(self.rotation + 1)


_CAPS = (ChainClass.CAP, ChainClass.CAP90, ChainClass.CAP180, ChainClass.CAP270)
_CHAINS = (ChainClass.CHAIN, ChainClass.CHAIN90, ChainClass.CHAIN180, ChainClass.CHAIN270)


def rotate(p: Point, quarter_turns: int) -> Point:
    """Rotate ``p`` about the origin by ``quarter_turns`` * 90 degrees CCW."""
    x, y = p
    for _ in range(quarter_turns % 4):
        x, y = -y, x
    return Point(x, y)


@dataclass(frozen=True)
class PolySeq:
    vertices: tuple[Point, ...]
    kind: str = "closed-polygon"
    convexity: str = "strict"
    class_tags: frozenset = field(default=frozenset(), compare=False)

    def __post_init__(self) -> None:
        if self.kind not in ("chain", "cap", "closed-polygon"):
            raise InvalidInputError(f"bad kind {self.kind!r}")
        if self.convexity not in ("strict", "weak"):
            raise InvalidInputError(f"bad convexity {self.convexity!r}")
        object.__setattr__(
            self, "vertices", tuple(Point(as_rational(x), as_rational(y)) for x, y in self.vertices)
        )

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


def _verts(seq) -> tuple[Point, ...]:
    if isinstance(seq, PolySeq):
        return seq.vertices
    return tuple(Point(as_rational(x), as_rational(y)) for x, y in seq)


def cross(p: Point, q: Point, r: Point) -> Fraction:
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def orientation(p: Point, q: Point, r: Point) -> int:
    """+1 for a left turn at q, -1 for a right turn, 0 when collinear."""
    c = cross(p, q, r)
    return (c > 0) - (c < 0)


def slope_compare(e1: tuple[Point, Point], e2: tuple[Point, Point]) -> int:
    (p1, q1), (p2, q2) = e1, e2
    dx1, dy1 = q1.x - p1.x, q1.y - p1.y
    dx2, dy2 = q2.x - p2.x, q2.y - p2.y
    if dx1 == 0 or dx2 == 0:
        raise InvalidInputError("slope of a vertical edge is undefined")
    if dx1 < 0:
        dx1, dy1 = -dx1, -dy1
    if dx2 < 0:
        dx2, dy2 = -dx2, -dy2
    lhs, rhs = dy1 * dx2, dy2 * dx1
    return (lhs > rhs) - (lhs < rhs)


def _base_frame(vs: Sequence[Point], rotation: int) -> list[Point]:
    return [rotate(v, -rotation) for v in vs]


def in_class(seq, cls: ChainClass) -> bool:
    vs = _verts(seq)
    if len(vs) <= 1:
        return True
    if cls.is_chain:
        a, b = cls.cap_parents()
        return in_class(vs, a) and in_class(vs, b)
    base = _base_frame(vs, cls.rotation)
    if any(u.x >= v.x for u, v in zip(base, base[1:])):
        return False
    return all(orientation(*base[i : i + 3]) < 0 for i in range(len(base) - 2))


def classify(seq) -> frozenset[ChainClass]:
    """Every cap/chain class containing the vertex sequence."""
    return frozenset(c for c in ChainClass if in_class(seq, c))


def signed_area2(seq) -> Fraction:
    vs = _verts(seq)
    return sum(
        (vs[i].x * vs[(i + 1) % len(vs)].y - vs[(i + 1) % len(vs)].x * vs[i].y for i in range(len(vs))),
        Fraction(0),
    )


def _polygon_check(vs: tuple[Point, ...], strict: bool) -> bool:
    n = len(vs)
    if n < 3:
        raise InvalidInputError("a polygon needs at least 3 vertices")
    if len(set(vs)) != n:
        return False
    area = signed_area2(vs)
    if area == 0:
        return False
    sign = 1 if area > 0 else -1
    for i in range(n):
        a, b, c = vs[i - 1], vs[i], vs[(i + 1) % n]
        turn = orientation(a, b, c)
        if turn == -sign:
            return False
        if turn == 0:
            if strict:
                return False
            # straight angle must continue forward, never fold back
            if (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y) <= 0:
                return False
        # every other vertex on the inner side of edge (b, c)
        for v in vs:
            if v in (b, c):
                continue
            side = orientation(b, c, v)
            if side == -sign or (strict and side == 0):
                return False
    return True


def is_convex_polygon(seq) -> bool:
    """Strict convexity of the closed polygon in its given cyclic order (either orientation)."""
    return _polygon_check(_verts(seq), strict=True)


def is_weakly_convex_polygon(seq) -> bool:
    return _polygon_check(_verts(seq), strict=False)


def convex_hull(pts: Iterable[Point]) -> list[Point]:
    """Strict hull vertices (collinear boundary points dropped), clockwise from the lowest-leftmost."""
    ps = sorted(set(pts))
    if len(ps) <= 2:
        return ps
    lower: list[Point] = []
    for p in ps:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(ps):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    ccw = lower[:-1] + upper[:-1]
    return [ccw[0]] + ccw[:0:-1]


def hull_boundary(pts: Iterable[Point]) -> list[Point]:
    """Every input point on the hull boundary, clockwise, collinear ones included."""
    ps = sorted(set(pts))
    if len(ps) <= 2:
        return ps
    lower: list[Point] = []
    for p in ps:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) < 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(ps):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) < 0:
            upper.pop()
        upper.append(p)
    if len(lower) == len(ps) and len(upper) == len(ps):
        # all collinear: both passes keep every point
        return ps
    ccw = lower[:-1] + upper[:-1]
    return [ccw[0]] + ccw[:0:-1]


def convex_position_2d(pts: Iterable[Point]) -> bool:
    ps = list(pts)
    distinct = set(ps)
    if len(distinct) != len(ps):
        return False
    if len(ps) <= 2:
        return True
    return len(convex_hull(ps)) == len(ps)


def weak_convex_position_2d(pts: Iterable[Point]) -> bool:
    """All points on the boundary of their hull (collinear sets included)."""
    ps = list(pts)
    if len(set(ps)) != len(ps):
        return False
    return len(hull_boundary(ps)) == len(ps)


def clockwise_order(pts: Iterable[Point]) -> tuple[Point, ...]:
    """Clockwise order of a convex-position set, starting at the topmost-leftmost point."""
    boundary = hull_boundary(pts)
    start = min(boundary, key=lambda p: (p.x, -p.y))
    i = boundary.index(start)
    return tuple(boundary[i:] + boundary[:i])


def is_supported(grid, seq) -> bool:
    vs = _verts(seq)
    xs, ys = set(grid.xs), set(grid.ys)
    if any(v.x not in xs or v.y not in ys for v in vs):
        return False
    return len({v.x for v in vs}) == len(vs) and len({v.y for v in vs}) == len(vs)


def is_contained(grid, seq) -> bool:
    xs, ys = set(grid.xs), set(grid.ys)
    return all(v.x in xs and v.y in ys for v in _verts(seq))


# ---------------------------------------------------------------------------
# d-dimensional hull membership by exact phase-one simplex

PointD = tuple


def as_point_d(coords: Iterable[Number]) -> tuple[Fraction, ...]:
    return tuple(as_rational(c) for c in coords)


def _feasible(a: list[list[Fraction]], b: list[Fraction]) -> bool:
    """Is {lam >= 0 : a @ lam = b} non-empty? Phase one of the simplex, Bland's rule."""
    rows, cols = len(a), len(a[0]) if a else 0
    tab = []
    for i in range(rows):
        row = list(a[i]) + [Fraction(0)] * rows + [b[i]]
        if b[i] < 0:
            row = [-v for v in row]
        row[cols + i] = Fraction(1)
        tab.append(row)
    basis = [cols + i for i in range(rows)]
    width = cols + rows
    # objective: minimise the artificial sum, kept as reduced costs
    obj = [Fraction(0)] * (width + 1)
    for row in tab:
        for j in range(width + 1):
            obj[j] -= row[j]
    for j in range(cols, width):
        obj[j] = Fraction(0)
    while True:
        entering = next((j for j in range(width) if obj[j] < 0), None)
        if entering is None:
            break
        best, leave = None, None
        for i, row in enumerate(tab):
            if row[entering] > 0:
                ratio = row[-1] / row[entering]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            break  # unbounded cannot happen in phase one; defensive
        piv = tab[leave][entering]
        tab[leave] = [v / piv for v in tab[leave]]
        for i, row in enumerate(tab):
            if i != leave and row[entering] != 0:
                f = row[entering]
                tab[i] = [v - f * w for v, w in zip(row, tab[leave])]
        if obj[entering] != 0:
            f = obj[entering]
            obj = [v - f * w for v, w in zip(obj, tab[leave])]
        basis[leave] = entering
    return obj[-1] == 0


def point_in_hull_d(p: Sequence[Number], pts: Iterable[Sequence[Number]]) -> bool:
    q = as_point_d(p)
    ps = [as_point_d(s) for s in pts]
    if not ps:
        return False
    d = len(q)
    if any(len(s) != d for s in ps):
        raise InvalidInputError("dimension mismatch")
    a = [[s[k] for s in ps] for k in range(d)] + [[Fraction(1)] * len(ps)]
    b = list(q) + [Fraction(1)]
    return _feasible(a, b)


def convex_position_d(pts: Iterable[Sequence[Number]]) -> bool:
    ps = [as_point_d(s) for s in pts]
    if len(set(ps)) != len(ps):
        return False
    if ps and any(len(s) != len(ps[0]) for s in ps):
        raise InvalidInputError("dimension mismatch")
    return not any(point_in_hull_d(p, ps[:i] + ps[i + 1 :]) for i, p in enumerate(ps))
