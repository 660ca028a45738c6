"""Counting convex polygons in a grid, the grid-line codec, and the large families."""
from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterator, Optional

from .constructions import CountingLayout, Grid2, counting_layout
from .geometry import (
    InvalidInputError,
    Point,
    PolySeq,
    ScaleGuardError,
    clockwise_order,
    convex_position_2d,
    is_contained,
    is_convex_polygon,
    is_weakly_convex_polygon,
    signed_area2,
    weak_convex_position_2d,
)

REGIMES = ("contained", "supported", "all-lines", "all-lines-once")
SUBSET_LIMIT = 4
ASSIGNMENT_LIMIT = 7


def _check_scale(grid: Grid2, regime: str, allow_large: bool) -> None:
    limit = SUBSET_LIMIT if regime in ("contained", "all-lines") else ASSIGNMENT_LIMIT
    if max(grid.shape) > limit and not allow_large:
        raise ScaleGuardError(f"{regime} enumeration refuses grids larger than {limit} x {limit}")


def _in_regime(grid: Grid2, vs, regime: str) -> bool:
    xs = [v.x for v in vs]
    ys = [v.y for v in vs]
    distinct = len(set(xs)) == len(xs) and len(set(ys)) == len(ys)
    full = set(xs) == set(grid.xs) and set(ys) == set(grid.ys)
    if regime == "contained":
        return True
    if regime == "supported":
        return distinct
    if regime == "all-lines":
        return full
    if regime == "all-lines-once":
        return distinct and full
    raise InvalidInputError(f"unknown regime {regime!r}")


def _canonical(vs, convexity: str) -> PolySeq:
    return PolySeq(clockwise_order(vs), "closed-polygon", convexity)


def _subsets(grid: Grid2, strict: bool) -> Iterator[list[Point]]:
    """Point sets in (weak) convex position, grown in grid order with hereditary pruning."""
    pts = grid.points()
    ok = convex_position_2d if strict else weak_convex_position_2d

    def rec(start: int, chosen: list[Point]) -> Iterator[list[Point]]:
        if len(chosen) >= 3:
            yield chosen
        for i in range(start, len(pts)):
            chosen.append(pts[i])
            if len(chosen) < 3 or ok(chosen):
                yield from rec(i + 1, chosen)
            chosen.pop()

    yield from rec(0, [])


def _assignments(grid: Grid2, strict: bool, full: bool) -> Iterator[list[Point]]:
    """Sets with distinct coordinates: each column is skipped or gets an unused row."""
    xs, ys = grid.xs, grid.ys
    ok = convex_position_2d if strict else weak_convex_position_2d

    def rec(col: int, chosen: list[Point], used: int) -> Iterator[list[Point]]:
        if col == len(xs):
            if len(chosen) >= 3:
                yield chosen
            return
        for r, y in enumerate(ys):
            if used >> r & 1:
                continue
            chosen.append(Point(xs[col], y))
            if len(chosen) < 3 or ok(chosen):
                yield from rec(col + 1, chosen, used | 1 << r)
            chosen.pop()
        if not full:
            yield from rec(col + 1, chosen, used)

    yield from rec(0, [], 0)


def enumerate_polygons(
    grid: Grid2, regime: str = "contained", convexity: str = "strict", allow_large: bool = False
) -> list[PolySeq]:
    """Every convex polygon of the regime, once each, in canonical order.

    A polygon is identified by its vertex set and emitted clockwise from its
    topmost-leftmost vertex; the list is sorted by that vertex sequence.
    """
    if regime not in REGIMES:
        raise InvalidInputError(f"unknown regime {regime!r}")
    if convexity not in ("strict", "weak"):
        raise InvalidInputError(f"unknown convexity {convexity!r}")
    _check_scale(grid, regime, allow_large)
    strict = convexity == "strict"
    if regime in ("supported", "all-lines-once"):
        source = _assignments(grid, strict, regime == "all-lines-once")
    else:
        source = _subsets(grid, strict)
    out = []
    for vs in source:
        if not strict and signed_area2(clockwise_order(vs)) == 0:
            continue
        if _in_regime(grid, vs, regime):
            out.append(_canonical(vs, convexity))
    out.sort(key=lambda p: p.vertices)
    return out


@dataclass(frozen=True)
class CountReport:
    F: int
    G: int
    F_bar: int
    G_bar: int
    W: Optional[int]
    grid_id: str

    def as_dict(self) -> dict:
        return {"F": self.F, "G": self.G, "F_bar": self.F_bar, "G_bar": self.G_bar, "W": self.W, "grid_id": self.grid_id}


def grid_id(grid: Grid2) -> str:
    text = ",".join(map(str, grid.xs)) + ";" + ",".join(map(str, grid.ys))
    return f"{len(grid.xs)}x{len(grid.ys)}:" + hashlib.sha256(text.encode()).hexdigest()[:12]


def count_report(grid: Grid2, weak: bool = True, allow_large: bool = False) -> CountReport:
    """Exact counts of the five regimes on one grid.

    One contained enumeration yields F, G, F_bar and G_bar, since the other
    regimes are filters on the vertex set.
    """
    polys = enumerate_polygons(grid, "contained", "strict", allow_large)
    counts = {r: sum(_in_regime(grid, p.vertices, r) for p in polys) for r in REGIMES}
    w = len(enumerate_polygons(grid, "contained", "weak", allow_large)) if weak else None
    return CountReport(
        counts["contained"], counts["all-lines"], counts["supported"], counts["all-lines-once"], w, grid_id(grid)
    )


# ---------------------------------------------------------------------------
# Grid-line codec


@dataclass(frozen=True)
class Encoding:
    horizontal: tuple[int, ...]
    vertical: tuple[int, ...]
    leftmost_row: int


def _extreme_arcs(cw: tuple[Point, ...]) -> tuple[set[int], set[int], set[int], set[int]]:
    """Index sets of the four chains of a clockwise polygon starting at its topmost-leftmost vertex.

    Arcs run Lt..Tl (up-right), Tr..Rt (down-right), Rb..Br (down-left)
    and Bl..Lb (up-left), endpoints included.
    """
    n = len(cw)
    xmin = min(p.x for p in cw)
    xmax = max(p.x for p in cw)
    ymin = min(p.y for p in cw)
    ymax = max(p.y for p in cw)

    def first(pred, start=0):
        for t in range(n):
            i = (start + t) % n
            if pred(cw[i]):
                return i
        raise AssertionError

    def last_run(pred, start):
        i = first(pred, start)
        while pred(cw[(i + 1) % n]) and (i + 1) % n != start:
            i = (i + 1) % n
        return i

    lt = 0
    tl = first(lambda p: p.y == ymax)
    tr = last_run(lambda p: p.y == ymax, tl)
    rt = first(lambda p: p.x == xmax, tr)
    rb = last_run(lambda p: p.x == xmax, rt)
    br = first(lambda p: p.y == ymin, rb)
    bl = last_run(lambda p: p.y == ymin, br)
    lb = first(lambda p: p.x == xmin, bl)

    def arc(a, b):
        out = {a}
        while a != b:
            a = (a + 1) % n
            out.add(a)
        return out

    return arc(lt, tl), arc(tr, rt), arc(rb, br), arc(bl, lb)


def _labels(grid: Grid2, cw: tuple[Point, ...]) -> tuple[tuple[int, ...], tuple[int, ...], tuple[Point, ...]]:
    up, down_right, down_left, up_left = _extreme_arcs(cw)
    # vertices strictly inside a bounding-box edge (weak polygons only) take that edge's side
    on_arc = up | down_right | down_left | up_left
    xmin = min(p.x for p in cw)
    ymin = min(p.y for p in cw)
    loose = [i for i in range(len(cw)) if i not in on_arc]
    left = up | up_left | {i for i in loose if cw[i].x == xmin}
    bottom = up_left | down_left | {i for i in loose if cw[i].y == ymin}

    def line_labels(coords, get, side):
        out = []
        for c in coords:
            on = [i for i, p in enumerate(cw) if get(p) == c]
            if not on:
                out.append(0)
            elif len(on) >= 2:
                out.append(3)
            else:
                out.append(1 if on[0] in side else 2)
        return tuple(out)

    h = line_labels(grid.ys, lambda p: p.y, left)
    v = line_labels(grid.xs, lambda p: p.x, bottom)
    return h, v, cw


def _prepare(grid: Grid2, P, strict: bool) -> tuple[Point, ...]:
    vs = P.vertices if isinstance(P, PolySeq) else tuple(Point(*v) for v in P)
    if not is_contained(grid, vs):
        raise InvalidInputError("polygon is not contained in the grid")
    cw = clockwise_order(vs) if len(vs) >= 3 else vs
    if len(set(cw)) != len(vs):
        raise InvalidInputError("polygon vertices are not in convex position")
    check = is_convex_polygon if strict else is_weakly_convex_polygon
    if len(vs) < 3 or not check(PolySeq(cw)):
        raise InvalidInputError("polygon is not convex")
    return cw


def encode_polygon(grid: Grid2, P) -> Encoding:
    """Label each line 0 (unused), 3 (two vertices) or 1/2 (which side its vertex is on).

    A horizontal line gets 1 when its vertex lies on the left cap (the
    up-right and up-left chains), a vertical line when its vertex lies on
    the bottom cap. The row of the topmost-leftmost vertex is recorded.
    """
    cw = _prepare(grid, P, strict=True)
    h, v, _ = _labels(grid, cw)
    return Encoding(h, v, grid.ys.index(cw[0].y))


def decode_polygon(grid: Grid2, e: Encoding) -> Optional[PolySeq]:
    """The unique strictly convex polygon with encoding ``e``, or None."""
    h, v = list(e.horizontal), list(e.vertical)
    if len(h) != len(grid.ys) or len(v) != len(grid.xs) or not 0 <= e.leftmost_row < len(h):
        return None
    if any(t not in (0, 1, 2, 3) for t in h + v):
        return None
    used_h = [i for i, t in enumerate(h) if t]
    used_v = [i for i, t in enumerate(v) if t]
    if not used_h or not used_v:
        return None
    bot, top = used_h[0], used_h[-1]
    lef, rig = used_v[0], used_v[-1]
    # lines carrying a vertex of each side; a lone vertex on an extreme line serves both
    left_rows = [i for i in used_h if h[i] in (1, 3)]
    right_rows = sorted({i for i in used_h if h[i] in (2, 3)} | {top, bot})
    bottom_cols = [i for i in used_v if v[i] in (1, 3)]
    top_cols = sorted({i for i in used_v if v[i] in (2, 3)} | {lef, rig})
    r = e.leftmost_row
    try:
        k1 = sum(1 for i in left_rows if i >= r)
        up = list(zip(top_cols[:k1], [i for i in left_rows if i >= r]))
        xs2 = top_cols[k1 - 1 :] if h[top] != 3 else top_cols[k1:]
        ys2 = sorted(right_rows, reverse=True)[: len(xs2)]
        down_right = list(zip(xs2, ys2))
        start = ys2[-1] if v[rig] != 3 else None
        ys3 = [i for i in sorted(right_rows, reverse=True) if (i <= start if start is not None else i < ys2[-1])]
        xs3 = sorted(bottom_cols, reverse=True)[: len(ys3)]
        down_left = list(zip(xs3, ys3))
        cols4 = sorted(bottom_cols, reverse=True)
        j = cols4.index(xs3[-1])
        xs4 = cols4[j:] if h[bot] != 3 else cols4[j + 1 :]
        ys4 = left_rows[: len(xs4)]
        up_left = list(zip(xs4, ys4))
    except (IndexError, ValueError):
        return None
    idx = up + down_right + down_left + up_left
    pts = list(dict.fromkeys(Point(grid.xs[a], grid.ys[b]) for a, b in idx))
    if len(pts) < 3 or not convex_position_2d(pts):
        return None
    poly = _canonical(pts, "strict")
    try:
        if encode_polygon(grid, poly) != e:
            return None
    except InvalidInputError:
        return None
    return poly


@dataclass(frozen=True)
class WeakRecord:
    encoding: Encoding
    extremes: tuple[Point, ...]


def encode_weak(grid: Grid2, P) -> WeakRecord:
    """Line labels (3 meaning two or more vertices) plus the at most 8 extreme vertices."""
    cw = _prepare(grid, P, strict=False)
    h, v, _ = _labels(grid, cw)
    xmin = min(p.x for p in cw)
    xmax = max(p.x for p in cw)
    ymin = min(p.y for p in cw)
    ymax = max(p.y for p in cw)
    extremes = set()
    for on_line, key in (
        (lambda p: p.x == xmin, lambda p: p.y),
        (lambda p: p.x == xmax, lambda p: p.y),
        (lambda p: p.y == ymin, lambda p: p.x),
        (lambda p: p.y == ymax, lambda p: p.x),
    ):
        side = [p for p in cw if on_line(p)]
        extremes.add(min(side, key=key))
        extremes.add(max(side, key=key))
    return WeakRecord(Encoding(h, v, grid.ys.index(cw[0].y)), tuple(sorted(extremes)))


# ---------------------------------------------------------------------------
# Lower-bound families

VARIANTS = ("Gbar", "G", "Fbar", "F")


def family_size(m: int, variant: str) -> int:
    if m < 1:
        raise InvalidInputError("m must be >= 1")
    if variant == "Gbar":
        _need(m, 2, variant)
        return comb(m, m // 2) ** 4
    if variant == "G":
        _need(m, 3, variant)
        return comb(m, m // 3) ** 4 * comb(2 * m // 3, m // 3) ** 4
    if variant == "Fbar":
        _need(m, 3, variant)
        return comb(m, 2 * m // 3) ** 4 * family_size(2 * m // 3, "Gbar")
    if variant == "F":
        _need(m, 4, variant)
        return comb(m, 3 * m // 4) ** 4 * family_size(3 * m // 4, "G")
    raise InvalidInputError(f"unknown family {variant!r}")


def _need(m: int, d: int, variant: str) -> None:
    if m % d:
        raise InvalidInputError(f"family {variant} needs m divisible by {d}")


def _split_choices(lines: list[int], variant: str):
    """Yield (first-chain lines, second-chain lines) for one group of free lines."""
    m = len(lines)
    if variant == "Gbar":
        for a in itertools.combinations(lines, m // 2):
            yield list(a), [x for x in lines if x not in a]
    else:
        t = m // 3
        for only_a in itertools.combinations(lines, t):
            rest = [x for x in lines if x not in only_a]
            for only_b in itertools.combinations(rest, t):
                both = [x for x in rest if x not in only_b]
                yield sorted(only_a + tuple(both)), sorted(only_b + tuple(both))


def _family_on(layout: CountingLayout, cols: dict, rows: dict, variant: str) -> Iterator[PolySeq]:
    """Polygons on the selected lines; ``cols``/``rows`` map each free group to line indices."""
    g = layout.grid
    mx, my = layout.x_median, layout.y_median
    last_x, last_y = len(g.xs) - 1, len(g.ys) - 1
    left_pt = (0, my[0])
    right_pt = (last_x, my[1])
    bottom_pt = (mx[0], 0)
    top_pt = (mx[1], last_y)
    for lb, lt in _split_choices(cols["left"], variant):
        for rb, rt in _split_choices(cols["right"], variant):
            for bl, br in _split_choices(rows["below"], variant):
                for al, ar in _split_choices(rows["above"], variant):
                    # quadrant vertices pair columns and rows monotonically
                    ul = list(zip(lt, al))
                    ur = list(zip(rt, sorted(ar, reverse=True)))
                    lr = list(zip(rb, br))
                    ll = list(zip(lb, sorted(bl, reverse=True)))
                    idx = [left_pt, top_pt, right_pt, bottom_pt] + ul + ur + lr + ll
                    yield _canonical([Point(g.xs[a], g.ys[b]) for a, b in idx], "strict")


def _groups(layout: CountingLayout):
    m = layout.m
    free_lo = list(range(1, m + 1))
    free_hi = list(range(m + 3, 2 * m + 3))
    return {"left": free_lo, "right": free_hi}, {"below": free_lo, "above": free_hi}


def family_generate(m: int, variant: str = "Gbar", verify: bool = True) -> Iterator[PolySeq]:
    """Stream the lower-bound family on ``counting_layout(m)``.

    Gbar and G split the free lines of each group between the two chains
    meeting there (G also lets a third of them serve both). Fbar and F
    first keep a sub-family of lines per group and run Gbar or G on it;
    polygons are emitted per subgrid without deduplication.
    """
    family_size(m, variant)
    layout = counting_layout(m)
    cols, rows = _groups(layout)
    if variant in ("Gbar", "G"):
        subgrids = [(cols, rows)]
        inner = variant
    else:
        keep = 2 * m // 3 if variant == "Fbar" else 3 * m // 4
        inner = "Gbar" if variant == "Fbar" else "G"
        subgrids = (
            ({"left": list(a), "right": list(b)}, {"below": list(c), "above": list(d)})
            for a in itertools.combinations(cols["left"], keep)
            for b in itertools.combinations(cols["right"], keep)
            for c in itertools.combinations(rows["below"], keep)
            for d in itertools.combinations(rows["above"], keep)
        )
    regime = {"Gbar": "all-lines-once", "G": "all-lines", "Fbar": "supported", "F": "contained"}[variant]
    for sc, sr in subgrids:
        for poly in _family_on(layout, sc, sr, inner):
            if verify:
                if not is_convex_polygon(poly):
                    raise AssertionError(f"family polygon is not convex: {poly.vertices}")
                if not _in_regime(layout.grid, poly.vertices, regime):
                    raise AssertionError(f"family polygon breaks the {regime} line condition")
            yield poly


def family_report(m: int, variant: str) -> dict:
    """Raw stream length and number of distinct polygons."""
    raw = 0
    seen = set()
    for p in family_generate(m, variant):
        raw += 1
        seen.add(p.vertices)
    return {"m": m, "variant": variant, "raw": raw, "distinct": len(seen), "closed_form": family_size(m, variant)}


__all__ = [
    "REGIMES",
    "VARIANTS",
    "CountReport",
    "Encoding",
    "WeakRecord",
    "enumerate_polygons",
    "count_report",
    "grid_id",
    "encode_polygon",
    "decode_polygon",
    "encode_weak",
    "family_size",
    "family_generate",
    "family_report",
]
