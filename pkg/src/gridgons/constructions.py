"""Grids and the extremal constructions built on them."""
from __future__ import annotations

import bisect
import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .geometry import (
    ChainClass,
    GridgonsError,
    InvalidInputError,
    Number,
    Point,
    PolySeq,
    as_rational,
    in_class,
    is_convex_polygon,
    orientation,
    rotate,
)


class ConstructionError(GridgonsError):
    """A construction failed its own post-construction verification."""


def _strictly_increasing(values: Iterable[Number], name: str) -> tuple[Fraction, ...]:
    vs = tuple(as_rational(v) for v in values)
    if not vs:
        raise InvalidInputError(f"{name} must be non-empty")
    if any(a >= b for a, b in zip(vs, vs[1:])):
        raise InvalidInputError(f"{name} must be strictly increasing")
    return vs


@dataclass(frozen=True)
class Grid2:
    xs: tuple[Fraction, ...]
    ys: tuple[Fraction, ...]
    metadata: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "xs", _strictly_increasing(self.xs, "X"))
        object.__setattr__(self, "ys", _strictly_increasing(self.ys, "Y"))

    @classmethod
    def from_sets(cls, xs: Iterable[Number], ys: Iterable[Number], **metadata) -> "Grid2":
        return cls(tuple(sorted({as_rational(x) for x in xs})), tuple(sorted({as_rational(y) for y in ys})), metadata)

    @classmethod
    def lattice(cls, n: int) -> "Grid2":
        return cls(tuple(range(n)), tuple(range(n)))

    @property
    def n(self) -> int:
        if len(self.xs) != len(self.ys):
            raise InvalidInputError("grid is not square")
        return len(self.xs)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.xs), len(self.ys)

    def points(self) -> list[Point]:
        return [Point(x, y) for x in self.xs for y in self.ys]

    def rotated(self, quarter_turns: int) -> "Grid2":
        """The grid turned CCW by ``quarter_turns`` right angles about the origin."""
        k = quarter_turns % 4
        xs, ys = self.xs, self.ys
        for _ in range(k):
            xs, ys = tuple(sorted(-y for y in ys)), xs
        return Grid2(xs, ys, dict(self.metadata))

    def reflected_x(self) -> "Grid2":
        return Grid2(tuple(sorted(-x for x in self.xs)), self.ys, dict(self.metadata))

    def subgrid(self, x_idx: Sequence[int], y_idx: Sequence[int]) -> "Grid2":
        return Grid2(tuple(self.xs[i] for i in sorted(x_idx)), tuple(self.ys[j] for j in sorted(y_idx)))


@dataclass(frozen=True)
class GridD:
    axes: tuple[tuple[Fraction, ...], ...]
    metadata: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self) -> None:
        if len(self.axes) < 2:
            raise InvalidInputError("a grid needs at least two axes")
        object.__setattr__(
            self, "axes", tuple(_strictly_increasing(a, f"axis {i}") for i, a in enumerate(self.axes))
        )

    @property
    def d(self) -> int:
        return len(self.axes)

    def points(self) -> list[tuple[Fraction, ...]]:
        return list(itertools.product(*self.axes))


# ---------------------------------------------------------------------------
# Slope-interval grid without long chains


def upper_bound_grid(k: int) -> Grid2:
    """The 2^k x 2^k grid whose chains have at most k + 1 vertices.

    Y holds every number whose base-2n digits are the bits of some m < n.
    """
    if k < 1:
        raise InvalidInputError("k must be >= 1")
    n = 2**k
    ys = [sum(((m >> i) & 1) * (2 * n) ** i for i in range(k)) for m in range(n)]
    return Grid2(tuple(range(n)), tuple(sorted(ys)), {"construction": "upper-bound", "k": k})


def slope_interval(k: int, j: int) -> tuple[Fraction, Fraction]:
    """Open interval holding slopes of increasing pairs whose highest differing bit is j."""
    n = 2**k
    return Fraction(2) * Fraction(2 * n) ** (j - 1), Fraction(2 * (2 * n) ** j)


def highest_differing_bit(y1: Fraction, y2: Fraction, k: int) -> int:
    n = 2**k
    a, b = int(y1), int(y2)
    for j in range(k - 1, -1, -1):
        if (a // (2 * n) ** j) % (2 * n) != (b // (2 * n) ** j) % (2 * n):
            return j
    raise InvalidInputError("equal y values have no differing bit")


# ---------------------------------------------------------------------------
# Monotone-difference sets

INCREASING = "increasing-differences"
DECREASING = "decreasing-differences"


def _gaps(values: Sequence[Fraction]) -> list[Fraction]:
    return [b - a for a, b in zip(values, values[1:])]


def md_direction(values: Iterable[Number], ratio: Number = 1) -> str | None:
    """Direction in which the sorted values have monotone differences, or None.

    With ``ratio == 1`` the plain (strict) MD property is tested; with a
    ratio r > 1 each gap must dominate, or be dominated by, its predecessor
    by a factor of at least r. Sets of at most two elements count as
    decreasing.
    """
    vs = sorted(as_rational(v) for v in values)
    r = as_rational(ratio)
    if len(set(vs)) != len(vs):
        return None
    g = _gaps(vs)
    pairs = list(zip(g, g[1:]))
    if r == 1:
        dec = all(b < a for a, b in pairs)
        inc = all(b > a for a, b in pairs)
    else:
        dec = all(r * b <= a for a, b in pairs)
        inc = all(b >= r * a for a, b in pairs)
    if dec:
        return DECREASING
    if inc:
        return INCREASING
    return None


def is_md(values: Iterable[Number], ratio: Number = 1) -> bool:
    return md_direction(values, ratio) is not None


@dataclass(frozen=True)
class MDSet:
    values: tuple[Fraction, ...]
    ratio: Fraction = Fraction(1)
    direction: str = DECREASING

    def __post_init__(self) -> None:
        vs = _strictly_increasing(self.values, "MD values")
        object.__setattr__(self, "values", vs)
        object.__setattr__(self, "ratio", as_rational(self.ratio))
        if self.ratio < 1:
            raise InvalidInputError("ratio must be >= 1")
        if self.direction not in (INCREASING, DECREASING):
            raise InvalidInputError(f"bad direction {self.direction!r}")
        g = _gaps(vs)
        r = self.ratio
        for a, b in zip(g, g[1:]):
            if self.direction == DECREASING:
                ok = b < a if r == 1 else r * b <= a
            else:
                ok = b > a if r == 1 else b >= r * a
            if not ok:
                raise InvalidInputError("values violate the declared MD property")

    @classmethod
    def of(cls, values: Iterable[Number], ratio: Number = 1) -> "MDSet":
        vs = sorted(as_rational(v) for v in values)
        direction = md_direction(vs, ratio)
        if direction is None:
            raise InvalidInputError("values are not MD at this ratio")
        return cls(tuple(vs), as_rational(ratio), direction)

    def __len__(self) -> int:
        return len(self.values)


def _longest_decreasing_md(vs: list[Fraction], r: Fraction) -> list[Fraction]:
    n = len(vs)
    if n <= 2:
        return list(vs)
    strict = r == 1
    # f[j][k]: longest run starting with vs[j], vs[k]; nxt[j][k] = third index or -1
    f = [[0] * n for _ in range(n)]
    nxt = [[-1] * n for _ in range(n)]
    # pm[k][i]: (best f[k][i'] over k < i' <= i, argmax)
    pm: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for j in range(n - 1, -1, -1):
        for k in range(j + 1, n):
            g = vs[k] - vs[j]
            limit = vs[k] + g / r
            p = (bisect.bisect_left(vs, limit) if strict else bisect.bisect_right(vs, limit)) - 1
            if p > k:
                best, arg = pm[k][p]
                f[j][k], nxt[j][k] = best + 1, arg
            else:
                f[j][k] = 2
        run: list[tuple[int, int]] = [(0, -1)] * (j + 1)
        cur = (0, -1)
        for i in range(j + 1, n):
            if f[j][i] > cur[0]:
                cur = (f[j][i], i)
            run.append(cur)
        pm[j] = run
    j, k = max(((a, b) for a in range(n) for b in range(a + 1, n)), key=lambda t: (f[t[0]][t[1]], -t[0], -t[1]))
    out = [vs[j], vs[k]]
    while nxt[j][k] >= 0:
        j, k = k, nxt[j][k]
        out.append(vs[k])
    return out


def longest_md_subsequence(values: Iterable[Number], ratio: Number = 1) -> tuple[list[Fraction], str]:
    """A longest MD (ratio 1) or r-MD subset, with its direction. O(n^2 log n)."""
    vs = sorted({as_rational(v) for v in values})
    r = as_rational(ratio)
    dec = _longest_decreasing_md(vs, r)
    mirrored = _longest_decreasing_md(sorted(-v for v in vs), r)
    inc = sorted(-v for v in mirrored)
    if len(inc) > len(dec):
        return inc, INCREASING
    return dec, DECREASING


def max_md_subset_size(values: Iterable[Number]) -> int:
    vs = list(values)
    if not vs:
        raise InvalidInputError("need at least one value")
    return len(longest_md_subsequence(vs, 1)[0])


def nested_intervals(values: Iterable[Number]) -> tuple[list[Fraction], list[Fraction]]:
    """Endpoint sequences A (left ends) and B (right ends, innermost first).

    Uses the first 2^l + 1 sorted values; each round splits the current
    interval at its median point and keeps the shorter half, so lengths
    at least halve.
    """
    vs = sorted({as_rational(v) for v in values})
    if len(vs) < 2:
        raise InvalidInputError("need at least two values")
    ell = (len(vs) - 1).bit_length() - 1
    vs = vs[: 2**ell + 1]
    lo, hi = 0, len(vs) - 1
    a, b = [vs[lo]], [vs[hi]]
    for _ in range(ell):
        mid = (lo + hi) // 2
        if vs[hi] - vs[mid] < vs[mid] - vs[lo]:
            lo = mid
        else:
            hi = mid
        a.append(vs[lo])
        b.append(vs[hi])
    return a, b[::-1]


def md_extract_bound(n: int) -> int:
    return int(math.floor(math.log2(n))) // 2 + 1 if n >= 1 else 0


def md_extract(values: Iterable[Number]) -> MDSet:
    """A 2-MD subset of size at least floor(log2(n) / 2) + 1.

    The nested-interval endpoints supply the candidate: the distinct terms
    of A or B (A on ties). That sequence only guarantees non-increasing
    gaps, so the longest 2-MD subsequence of all endpoints replaces it
    when that is longer, and the whole input is the last resort.
    """
    vs = sorted({as_rational(v) for v in values})
    a, b = nested_intervals(vs)
    da, db = sorted(set(a)), sorted(set(b))
    cand = da if len(da) >= len(db) else db
    need = md_extract_bound(len(vs))
    if md_direction(cand, 2) is None:
        cand = []
    alt, _ = longest_md_subsequence(set(a) | set(b), 2)
    if len(alt) > len(cand):
        cand = alt
    if len(cand) < need:
        cand, _ = longest_md_subsequence(vs, 2)
    return MDSet.of(cand, 2)


def halving_md_set(n: int, r: Number = 2) -> MDSet:
    """Partial sums of r^(n-2), ..., r, 1: gaps shrink by exactly r."""
    r = as_rational(r)
    if n < 2:
        raise InvalidInputError("n must be >= 2")
    if r < 2:
        raise InvalidInputError("r must be >= 2")
    vals = [Fraction(0)]
    for e in range(n - 2, -1, -1):
        vals.append(vals[-1] + r**e)
    return MDSet(tuple(vals), r, DECREASING)


def _normalized(values) -> list[Fraction]:
    """Sorted values, reversed when the gaps increase (a reflection's worth)."""
    if isinstance(values, MDSet):
        vs, direction = list(values.values), values.direction
    else:
        vs = sorted(as_rational(v) for v in values)
        direction = md_direction(vs)
        if direction is None:
            raise InvalidInputError("input is not an MD set")
    if len(vs) >= 3 and direction == INCREASING:
        vs.reverse()
    return vs


def md_antidiagonal(a, b) -> list[Point]:
    """The n points a_i x b_j with i + j = n + 1, in the frame where gaps decrease."""
    av, bv = _normalized(a), _normalized(b)
    if len(av) != len(bv):
        raise InvalidInputError("MD sets must have equal sizes")
    n = len(av)
    return [Point(av[i], bv[n - 1 - i]) for i in range(n)]


def md_product_convex(sets: Sequence) -> list[tuple[Fraction, ...]]:
    """Points with index sum n + d - 1 plus the all-ones corner."""
    if len(sets) < 2:
        raise InvalidInputError("dimension must be >= 2")
    axes = [_normalized(s) for s in sets]
    n = len(axes[0])
    if n < 2 or any(len(a) != n for a in axes):
        raise InvalidInputError("all MD sets need the same size n >= 2")
    d = len(axes)
    out = [
        tuple(axes[t][v[t]] for t in range(d))
        for v in itertools.product(range(n), repeat=d)
        if sum(v) == n - 1
    ]
    out.append(tuple(a[0] for a in axes))
    return out


# ---------------------------------------------------------------------------
# Recursive 3D grid


@dataclass(frozen=True)
class GenericityReport:
    n_points: int
    nonaxis_collinear_triples: int
    nonaligned_coplanar_quadruples: int
    structural_nonaligned: int
    accidental_degeneracies: int

    @property
    def lines_ok(self) -> bool:
        return self.nonaxis_collinear_triples == 0

    @property
    def planes_ok(self) -> bool:
        return self.nonaligned_coplanar_quadruples == 0


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _cross3(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def genericity_report(layer: Sequence[tuple[int, int]], heights: Sequence[Sequence[int]], lams: Sequence[int]) -> GenericityReport:
    """Exhaustive line/plane degeneracy census of ``layer x {sum m_t lam_t}``.

    ``heights`` lists the 0/1 coefficient vectors m of each layer height;
    ``lams`` the (integer-scaled) shifts. Every determinant here is linear
    in the shifts, so a degeneracy is *structural* when all its
    coefficients vanish (it holds for every choice of shifts) and
    *accidental* otherwise. A plane counts as axis-aligned when it is
    parallel to some coordinate axis.
    """
    pts = []
    basis = []
    for m in heights:
        z = sum(c * l for c, l in zip(m, lams))
        for x, y in layer:
            pts.append((x, y, z))
            basis.append((x, y, tuple(m)))
    n = len(pts)
    nonaxis_lines = accidental = nonaligned = structural = 0

    def lin_cross(i, j, k):
        # coefficient vectors (per shift) of the cross product's x and y parts
        (xa, ya, ma), (xb, yb, mb), (xc, yc, mc) = basis[i], basis[j], basis[k]
        dx1, dy1, dx2, dy2 = xb - xa, yb - ya, xc - xa, yc - ya
        dm1 = [p - q for p, q in zip(mb, ma)]
        dm2 = [p - q for p, q in zip(mc, ma)]
        cx = [dy1 * b2 - b1 * dy2 for b1, b2 in zip(dm1, dm2)]
        cy = [b1 * dx2 - dx1 * b2 for b1, b2 in zip(dm1, dm2)]
        return cx, cy, dx1 * dy2 - dy1 * dx2

    collinear = set()
    for i, j, k in itertools.combinations(range(n), 3):
        c = _cross3(_sub(pts[j], pts[i]), _sub(pts[k], pts[i]))
        if c != (0, 0, 0):
            continue
        collinear.add((i, j, k))
        direction = _sub(pts[j], pts[i])
        if sum(1 for v in direction if v != 0) >= 2:
            nonaxis_lines += 1
        cx, cy, cz = lin_cross(i, j, k)
        if any(cx) or any(cy) or cz:
            accidental += 1

    for i, j, k in itertools.combinations(range(n), 3):
        if (i, j, k) in collinear:
            continue
        normal = _cross3(_sub(pts[j], pts[i]), _sub(pts[k], pts[i]))
        for l in range(k + 1, n):
            if _dot(normal, _sub(pts[l], pts[i])) != 0:
                continue
            # count each coplanar quadruple once: from its first non-collinear triple
            quad = (i, j, k, l)
            first = next(t for t in itertools.combinations(quad, 3) if t not in collinear)
            if first != (i, j, k):
                continue
            aligned = any(v == 0 for v in normal)
            if not aligned:
                nonaligned += 1
            (xa, ya, ma) = basis[i]
            rows = [(basis[t][0] - xa, basis[t][1] - ya, [p - q for p, q in zip(basis[t][2], ma)]) for t in (j, k, l)]
            coeffs = []
            for s in range(len(lams)):
                m3 = [[r[0], r[1], r[2][s]] for r in rows]
                coeffs.append(
                    m3[0][0] * (m3[1][1] * m3[2][2] - m3[1][2] * m3[2][1])
                    - m3[0][1] * (m3[1][0] * m3[2][2] - m3[1][2] * m3[2][0])
                    + m3[0][2] * (m3[1][0] * m3[2][1] - m3[1][1] * m3[2][0])
                )
            if any(coeffs):
                accidental += 1
            elif not aligned:
                structural += 1
    return GenericityReport(n, nonaxis_lines, nonaligned, structural, accidental)


@dataclass(frozen=True)
class S3Construction:
    grid: GridD
    shifts: tuple[Fraction, ...]
    report: GenericityReport


_JITTER_DENOMINATOR = 1_000_003
_RETRY_BUDGET = 8


def s3_construction(i: int, j: int, seed: int = 0, verify: bool = True) -> S3Construction:
    """Build S_3(i, j): 2^i stacked copies of the 2^j x 2^j slope grid.

    Each doubling shifts a copy of the current stack up by a huge integer
    plus a seeded rational jitter. Lines are checked exhaustively; a shift
    producing any accidental (shift-dependent) degeneracy is redrawn.
    """
    if not 0 <= i <= j:
        raise InvalidInputError("need 0 <= i <= j")
    if j > 3:
        raise InvalidInputError("j > 3 is beyond desk scale")
    if j == 0:
        xs, ys = [0], [0]
    else:
        base = upper_bound_grid(j)
        xs, ys = [int(x) for x in base.xs], [int(y) for y in base.ys]
    layer = [(x, y) for x in xs for y in ys]
    diameter = (xs[-1] - xs[0]) + (ys[-1] - ys[0]) + 1
    q = _JITTER_DENOMINATOR
    last = None
    for attempt in range(_RETRY_BUDGET):
        rng = random.Random(f"{seed}:{attempt}")
        shifts: list[Fraction] = []
        height = Fraction(0)
        for _ in range(i):
            big = (len(layer) + 1) * (diameter + int(height) + 1)
            lam = big + Fraction(rng.randrange(1, q), q)
            shifts.append(lam)
            height += lam
        heights = [tuple(bits) for bits in itertools.product((0, 1), repeat=i)]
        zs = sorted(sum((c * l for c, l in zip(m, shifts)), Fraction(0)) for m in heights)
        grid = GridD((tuple(xs), tuple(ys), tuple(zs)), {"construction": "s3", "i": i, "j": j, "seed": seed})
        if not verify:
            return S3Construction(grid, tuple(shifts), GenericityReport(len(layer) * len(heights), 0, 0, 0, 0))
        report = genericity_report(layer, heights, [int(l * q) for l in shifts])
        last = S3Construction(grid, tuple(shifts), report)
        if report.lines_ok and report.accidental_degeneracies == 0:
            return last
    raise ConstructionError(f"S_3({i},{j}) failed genericity after {_RETRY_BUDGET} draws: {last.report}")


def s3_grid(i: int, j: int, seed: int = 0) -> GridD:
    return s3_construction(i, j, seed).grid


# ---------------------------------------------------------------------------
# Counting grid


@dataclass(frozen=True)
class CountingLayout:
    """The counting grid plus the bookkeeping the polygon families need.

    Line indices refer to ``grid.xs`` / ``grid.ys``. Each axis reads
    ``low boundary, m free, median, median copy, m free, high boundary``.
    """

    m: int
    n: int
    eps: Fraction
    grid: Grid2
    x_median: tuple[int, int]
    y_median: tuple[int, int]

    @property
    def size(self) -> int:
        return 2 * self.m + 4

    def left_free(self) -> list[int]:
        return list(range(1, self.m + 1))

    def right_free(self) -> list[int]:
        return list(range(self.m + 3, 2 * self.m + 3))

    lower_free = left_free
    upper_free = right_free


def counting_layout(m: int, verify: bool = True) -> CountingLayout:
    """Grid with X = {1..n}, lower rows n^i, mirrored upper rows, medians doubled.

    Both medians are duplicated at offset eps = n^-(m+3), giving 2m + 4
    lines per axis (see README for why not n).
    """
    if m < 1:
        raise InvalidInputError("m must be >= 1")
    n = 2 * m + 3
    eps = Fraction(1, n ** (m + 3))
    med_x = Fraction(m + 2)
    xs = [Fraction(v) for v in range(1, n + 1)] + [med_x + eps]
    lower = [Fraction(n) ** i for i in range(1, m + 3)]
    top = lower[-1]
    upper = [2 * top - y for y in lower[:-1]]
    ys = lower + upper + [top + eps]
    grid = Grid2(tuple(sorted(xs)), tuple(sorted(ys)), {"construction": "counting", "m": m})
    layout = CountingLayout(m, n, eps, grid, (m + 1, m + 2), (m + 1, m + 2))
    if verify:
        bad = counting_turn_violations(layout)
        if bad:
            raise ConstructionError(f"counting grid turn property fails on {bad} triples")
    return layout


def counting_grid(m: int) -> Grid2:
    return counting_layout(m).grid


def counting_halves(layout: CountingLayout):
    """Yield (columns, lower rows, upper rows), one per choice of median copies."""
    g = layout.grid
    mx, my = layout.x_median, layout.y_median
    for cx in mx:
        cols = [g.xs[i] for i in range(len(g.xs)) if i == cx or i not in mx]
        for cy in my:
            lower = [g.ys[i] for i in range(my[0])] + [g.ys[cy]]
            upper = [g.ys[cy]] + [g.ys[i] for i in range(my[1] + 1, len(g.ys))]
            yield cols, lower, upper


def counting_turn_violations(layout: CountingLayout) -> int:
    """Monotone triples breaking the half-grid turn property.

    Lower half: x- and y-increasing triples, and x-increasing y-decreasing
    ones, turn left. Upper half: both kinds turn right.
    """
    bad = 0
    for cols, lower, upper in counting_halves(layout):
        for rows, want in ((lower, 1), (upper, -1)):
            for xa, xb, xc in itertools.combinations(cols, 3):
                for ya, yb, yc in itertools.combinations(rows, 3):
                    if orientation(Point(xa, ya), Point(xb, yb), Point(xc, yc)) != want:
                        bad += 1
                    if orientation(Point(xa, yc), Point(xb, yb), Point(xc, ya)) != want:
                        bad += 1
    return bad


# ---------------------------------------------------------------------------
# Every 6 x 6 grid supports a convex pentagon


def pentagon_from_6x6(grid: Grid2) -> PolySeq:
    if grid.shape != (6, 6):
        raise InvalidInputError("need a 6 x 6 grid")
    for k in range(4):
        g = grid.rotated(-k)
        ix, iy = g.xs[1:5], g.ys[1:5]
        lo, hi = Point(ix[0], iy[0]), Point(ix[3], iy[3])
        for a in (1, 2):
            for b in (1, 2):
                mid = Point(ix[a], iy[b])
                if orientation(lo, mid, hi) >= 0:
                    continue
                spare_x, spare_y = ix[3 - a], iy[3 - b]
                verts = [lo, mid, hi, Point(g.xs[5], spare_y), Point(spare_x, g.ys[0])]
                poly = PolySeq(tuple(rotate(v, k) for v in verts), "closed-polygon", "strict")
                if not is_convex_polygon(poly):
                    raise ConstructionError("pentagon construction produced a non-convex polygon")
                return poly
    raise ConstructionError("no convex 3-chain between opposite corners of the inner 4 x 4 grid")


__all__ = [
    "ConstructionError",
    "Grid2",
    "GridD",
    "MDSet",
    "INCREASING",
    "DECREASING",
    "upper_bound_grid",
    "slope_interval",
    "highest_differing_bit",
    "md_direction",
    "is_md",
    "longest_md_subsequence",
    "max_md_subset_size",
    "nested_intervals",
    "md_extract",
    "md_extract_bound",
    "halving_md_set",
    "md_antidiagonal",
    "md_product_convex",
    "GenericityReport",
    "genericity_report",
    "S3Construction",
    "s3_construction",
    "s3_grid",
    "CountingLayout",
    "counting_layout",
    "counting_grid",
    "counting_halves",
    "counting_turn_violations",
    "pentagon_from_6x6",
    "in_class",
    "ChainClass",
]
