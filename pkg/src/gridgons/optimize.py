"""Searches for large convex chains, caps and polygons in a grid.

The DPs run on integer coordinates: each axis is scaled by the lcm of its
denominators, which preserves every orientation sign. Classes other than
the base ones are handled by rotating the grid into the base frame.
"""
from __future__ import annotations

import functools
import math
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .constructions import Grid2
from .geometry import (
    ChainClass,
    InvalidInputError,
    Point,
    PolySeq,
    ScaleGuardError,
    classify,
    clockwise_order,
    convex_position_2d,
    in_class,
    rotate,
)

NEG = -(10**9)
ORACLE_LIMIT = 6

Idx = tuple[int, int]


@dataclass(frozen=True)
class SearchResult:
    size: int
    witness: PolySeq
    class_set: frozenset
    optimal: bool = True


def _int_axis(values) -> list[int]:
    d = math.lcm(*(v.denominator for v in values))
    return [int(v * d) for v in values]


class _Frame:
    """A grid rotated by ``-rotation`` quarter turns, on integer coordinates."""

    def __init__(self, grid: Grid2, rotation: int = 0) -> None:
        self.rotation = rotation % 4
        self.g = grid.rotated(-self.rotation)
        self.X = _int_axis(self.g.xs)
        self.Y = _int_axis(self.g.ys)
        self.nx, self.ny = len(self.X), len(self.Y)
        self.pts: list[Idx] = [(i, j) for i in range(self.nx) for j in range(self.ny)]

    def turn(self, a: Idx, b: Idx, c: Idx) -> int:
        X, Y = self.X, self.Y
        v = (X[b[0]] - X[a[0]]) * (Y[c[1]] - Y[a[1]]) - (Y[b[1]] - Y[a[1]]) * (X[c[0]] - X[a[0]])
        return (v > 0) - (v < 0)

    def point(self, p: Idx) -> Point:
        return rotate(Point(self.g.xs[p[0]], self.g.ys[p[1]]), self.rotation)

    def points(self, seq) -> tuple[Point, ...]:
        return tuple(self.point(p) for p in seq)


def _square(grid: Grid2) -> int:
    if len(grid.xs) != len(grid.ys):
        raise InvalidInputError("this decision needs an n x n grid")
    return len(grid.xs)


def _result(vertices, kind: str, optimal: bool = True) -> SearchResult:
    vs = tuple(vertices)
    if kind == "closed-polygon" and len(vs) < 3:
        kind = "chain"
    tags = classify(vs) if kind != "closed-polygon" else frozenset()
    return SearchResult(len(vs), PolySeq(vs, kind, "strict", tags), tags, optimal)


# ---------------------------------------------------------------------------
# Chains


def _up(a: Idx, b: Idx) -> bool:
    return a[0] < b[0] and a[1] < b[1]


def _down(a: Idx, b: Idx) -> bool:
    return a[0] < b[0] and a[1] > b[1]


class ChainTable:
    """L and R of the base frame.

    ``L[(p1, p2)]`` is the size of a largest base chain (x and y increasing,
    right turns) ending with p1, p2; ``R[(p1, p2)]`` that of a largest
    chain with x increasing and y decreasing starting with p1, p2. Both
    hold 1 on the diagonal (p, p).
    """

    def __init__(self, frame: _Frame) -> None:
        self.frame = frame
        f, pts = frame, frame.pts
        self.L: dict[tuple[Idx, Idx], int] = {}
        self.Lprev: dict[tuple[Idx, Idx], Optional[Idx]] = {}
        for a in sorted(pts):
            for b in pts:
                if not _up(a, b):
                    continue
                best, arg = 2, None
                for v in pts:
                    if _up(v, a) and f.turn(v, a, b) < 0 and self.L[(v, a)] + 1 > best:
                        best, arg = self.L[(v, a)] + 1, v
                self.L[(a, b)], self.Lprev[(a, b)] = best, arg
        self.R: dict[tuple[Idx, Idx], int] = {}
        self.Rnext: dict[tuple[Idx, Idx], Optional[Idx]] = {}
        for a in sorted(pts, reverse=True):
            for b in pts:
                if not _down(a, b):
                    continue
                best, arg = 2, None
                for v in pts:
                    if _down(b, v) and f.turn(a, b, v) < 0 and self.R[(b, v)] + 1 > best:
                        best, arg = self.R[(b, v)] + 1, v
                self.R[(a, b)], self.Rnext[(a, b)] = best, arg
        for p in pts:
            self.L[(p, p)] = self.R[(p, p)] = 1

    def left_chain(self, a: Idx, b: Idx) -> list[Idx]:
        if a == b:
            return [a]
        out = [b, a]
        while self.Lprev[(a, b)] is not None:
            a, b = self.Lprev[(a, b)], a
            out.append(a)
        return out[::-1]

    def right_chain(self, a: Idx, b: Idx) -> list[Idx]:
        if a == b:
            return [a]
        out = [a, b]
        while self.Rnext[(a, b)] is not None:
            a, b = b, self.Rnext[(a, b)]
            out.append(b)
        return out


def chain_tables(grid: Grid2) -> dict:
    """L and R keyed by point pairs of the original grid (base classes)."""
    t = ChainTable(_Frame(grid))
    p = t.frame.point
    return {
        "L": {(p(a), p(b)): v for (a, b), v in t.L.items()},
        "R": {(p(a), p(b)): v for (a, b), v in t.R.items()},
    }


def _best_chain_in_frame(f: _Frame) -> Optional[tuple[Point, ...]]:
    """Longest base-frame chain, lexicographically smallest in original coordinates."""
    pts = f.pts
    S: dict[tuple[Idx, Idx], int] = {}
    for a in sorted(pts, reverse=True):
        for b in pts:
            if not _up(a, b):
                continue
            best = 2
            for v in pts:
                if _up(b, v) and f.turn(a, b, v) < 0:
                    best = max(best, S[(b, v)] + 1)
            S[(a, b)] = best
    if not S:
        return None
    top = max(S.values())
    key = f.point
    a, b = min((k for k, v in S.items() if v == top), key=lambda k: (key(k[0]), key(k[1])))
    seq = [a, b]
    left = top - 2
    while left > 0:
        v = min(
            (v for v in pts if _up(b, v) and f.turn(a, b, v) < 0 and S[(b, v)] == left + 1),
            key=key,
        )
        seq.append(v)
        a, b = b, v
        left -= 1
    return f.points(seq)


def max_supported_chain(grid: Grid2, cls: Optional[ChainClass] = None) -> SearchResult:
    """Largest chain over the four chain classes (or the one given)."""
    classes = [cls] if cls is not None else [ChainClass.chain(k) for k in range(4)]
    if any(c.is_cap for c in classes):
        raise InvalidInputError("use max_supported_cap for cap classes")
    best: Optional[tuple[Point, ...]] = None
    for c in classes:
        w = _best_chain_in_frame(_Frame(grid, c.rotation))
        if w is not None and (best is None or len(w) > len(best) or (len(w) == len(best) and w < best)):
            best = w
    if best is None:
        best = (Point(grid.xs[0], grid.ys[0]),)
    return _result(best, "chain")


def has_supported_n_chain(grid: Grid2) -> bool:
    """Whether some chain uses all n columns and all n rows.

    Such a chain pairs the sorted x's with the sorted or the reversed y's;
    it suffices to test both diagonals for a consistent strict turn.
    """
    n = _square(grid)
    if n <= 2:
        return True
    f = _Frame(grid)
    for diag in ([(i, i) for i in range(n)], [(i, n - 1 - i) for i in range(n)]):
        turns = {f.turn(*diag[t : t + 3]) for t in range(n - 2)}
        if turns in ({1}, {-1}):
            return True
    return False


# ---------------------------------------------------------------------------
# Caps


class CapDP:
    """The pair-of-chains table C(l, r) for the base cap class.

    An edge is a pair of point indices; ``(p, p)`` stands for a single
    vertex. Entries are memoized lazily, so only reachable pairs are
    stored. An entry is only meaningful when l lies strictly left of r
    and both junction turns are right turns; the search asks for no
    others, and every sub-entry of such an entry inherits the property.
    """

    def __init__(self, frame: _Frame, chains: Optional[ChainTable] = None) -> None:
        self.frame = frame
        self.chains = chains or ChainTable(frame)
        self.table: dict[tuple[Idx, Idx, Idx, Idx], int] = {}
        self._pred = {p: [v for v in frame.pts if _up(v, p)] for p in frame.pts}
        self._succ = {p: [v for v in frame.pts if _down(p, v)] for p in frame.pts}

    def _invalid(self, l1: Idx, l2: Idx, r1: Idx, r2: Idx) -> bool:
        if l1 != l2 and not _up(l1, l2):
            return True
        if r1 != r2 and not _down(r1, r2):
            return True
        return bool({l1[1], l2[1]} & {r1[1], r2[1]})

    def _options(self, l1: Idx, l2: Idx, r1: Idx, r2: Idx):
        """(case, children) for a valid entry, children being candidate sub-entries."""
        f = self.frame
        if l1 == l2 and r1 == r2:
            return "base", []
        if r1 == r2 and l2[1] < r1[1]:
            return "left", []
        if l1 == l2 and l2[1] > r1[1]:
            return "right", []
        if l2[1] > r1[1]:
            kids = [(l1, l1, r1, r2)]
            kids += [(v, l1, r1, r2) for v in self._pred[l1] if f.turn(v, l1, l2) < 0]
            return "drop-left", kids
        kids = [(l1, l2, r2, r2)]
        kids += [(l1, l2, r2, v) for v in self._succ[r2] if f.turn(r1, r2, v) < 0]
        return "drop-right", kids

    def value(self, l1: Idx, l2: Idx, r1: Idx, r2: Idx) -> int:
        key = (l1, l2, r1, r2)
        got = self.table.get(key)
        if got is not None:
            return got
        if self._invalid(*key):
            self.table[key] = NEG
            return NEG
        case, kids = self._options(*key)
        if case == "base":
            out = 2
        elif case == "left":
            out = self.chains.L[(l1, l2)] + 1
        elif case == "right":
            out = self.chains.R[(r1, r2)] + 1
        else:
            out = max(self.value(*k) for k in kids) + 1
        out = max(out, NEG)
        self.table[key] = out
        return out

    def pair(self, l1: Idx, l2: Idx, r1: Idx, r2: Idx) -> tuple[list[Idx], list[Idx]]:
        """Chains A (ending in l) and B (starting with r) realizing C(l, r)."""
        if self.value(l1, l2, r1, r2) <= 0:
            raise InvalidInputError("C(l, r) is not finite")
        case, kids = self._options(l1, l2, r1, r2)
        if case == "base":
            return [l1], [r1]
        if case == "left":
            return self.chains.left_chain(l1, l2), [r1]
        if case == "right":
            return [l1], self.chains.right_chain(r1, r2)
        best = max(kids, key=lambda k: self.value(*k))
        a, b = self.pair(*best)
        if case == "drop-left":
            return a + [l2], b
        return a, [r1] + b


def _best_cap_in_frame(f: _Frame) -> tuple[Idx, ...]:
    chains = ChainTable(f)
    dp = CapDP(f, chains)
    pts = f.pts
    best: tuple[int, tuple] = (1, (min(pts),))

    def offer(size: int, key: tuple[Idx, Idx, Idx, Idx]) -> None:
        nonlocal best
        if size > best[0]:
            best = (size, key)

    up_edges = [(a, b) for a in pts for b in pts if _up(a, b)] + [(p, p) for p in pts]
    down_edges = [(a, b) for a in pts for b in pts if _down(a, b)] + [(p, p) for p in pts]
    up_edges.sort(key=lambda e: -chains.L[e])
    down_edges.sort(key=lambda e: -chains.R[e])
    for l1, l2 in up_edges:
        if chains.L[(l1, l2)] + chains.R[down_edges[0]] <= best[0]:
            break
        for r1, r2 in down_edges:
            if chains.L[(l1, l2)] + chains.R[(r1, r2)] <= best[0]:
                break
            if l2[0] >= r1[0]:
                continue
            if l1 != l2 and f.turn(l1, l2, r1) >= 0:
                continue
            if r1 != r2 and f.turn(l2, r1, r2) >= 0:
                continue
            if l1 == l2 and r1 == r2 and l1[1] == r1[1]:
                continue
            offer(dp.value(l1, l2, r1, r2), (l1, l2, r1, r2))
    if best[0] == 1:
        return best[1]
    a, b = dp.pair(*best[1])
    return tuple(a + b)


def max_supported_cap(grid: Grid2, cls: Optional[ChainClass] = None) -> SearchResult:
    """Largest supported cap over the four cap classes (or the one given)."""
    classes = [cls] if cls is not None else [ChainClass.cap(k) for k in range(4)]
    if any(c.is_chain for c in classes):
        raise InvalidInputError("use max_supported_chain for chain classes")
    best: Optional[tuple[Point, ...]] = None
    for c in classes:
        f = _Frame(grid, c.rotation)
        w = f.points(_best_cap_in_frame(f))
        if best is None or len(w) > len(best) or (len(w) == len(best) and w < best):
            best = w
    return _result(best, "cap")


def _n_cap_in_frame(f: _Frame) -> bool:
    """Level DP: place rows bottom-up, each on the next free column from the left or right."""
    n = f.nx
    # state: (a, A's last two rows, B's first two rows); rows are y-indices, None when absent
    states = {(1, (None, 0), (None, None)), (0, (None, None), (0, None))}
    for k in range(1, n):
        nxt = set()
        for a, (la, lb), (ra, rb) in states:
            b = k - a
            # extend A at column a
            if lb is None or la is None or f.turn((a - 2, la), (a - 1, lb), (a, k)) < 0:
                nxt.add((a + 1, (lb, k), (ra, rb)))
            # extend B at column n - b - 1
            c = n - b - 1
            if ra is None or rb is None or f.turn((c, k), (c + 1, ra), (c + 2, rb)) < 0:
                nxt.add((a, (la, lb), (k, ra)))
        states = nxt
    for a, (la, lb), (ra, rb) in states:
        if lb != n - 1:
            continue
        if la is not None and ra is not None and f.turn((a - 2, la), (a - 1, lb), (a, ra)) >= 0:
            continue
        if ra is not None and rb is not None and f.turn((a - 1, lb), (a, ra), (a + 1, rb)) >= 0:
            continue
        return True
    return False


def has_supported_n_cap(grid: Grid2) -> bool:
    """Whether some cap uses every row and every column."""
    n = _square(grid)
    if n <= 2:
        return True
    return any(_n_cap_in_frame(_Frame(grid, k)) for k in range(4))


# ---------------------------------------------------------------------------
# Polygons


def max_contained_convex_polygon(grid: Grid2) -> SearchResult:
    """Most grid points in strict convex position (shared coordinates allowed).

    For each candidate lowest-leftmost vertex s, the other vertices are
    visited by angle around s and joined by left turns.
    """
    f = _Frame(grid)
    X, Y = f.X, f.Y
    pts = f.pts
    if len(pts) <= 2:
        return _result(f.points(pts), "closed-polygon")
    best_size, best_poly = 2, [pts[0], pts[-1]] if len(pts) > 1 else [pts[0]]
    for s in pts:
        above = [p for p in pts if Y[p[1]] > Y[s[1]] or (Y[p[1]] == Y[s[1]] and X[p[0]] > X[s[0]])]
        if len(above) + 1 <= best_size:
            continue
        # sort by angle about s; points on one ray keep distance order
        def cmp(p, q):
            t = f.turn(s, p, q)
            if t:
                return -t
            dp = abs(X[p[0]] - X[s[0]]) + abs(Y[p[1]] - Y[s[1]])
            dq = abs(X[q[0]] - X[s[0]]) + abs(Y[q[1]] - Y[s[1]])
            return (dp > dq) - (dp < dq)

        order = sorted(above, key=functools.cmp_to_key(cmp))
        m = len(order)
        ray = [0] * m
        for t in range(1, m):
            ray[t] = ray[t - 1] + (f.turn(s, order[t - 1], order[t]) != 0)
        dp: dict[tuple[int, int], tuple[int, int]] = {}
        for i in range(m):
            for j in range(i):
                if ray[j] == ray[i]:
                    continue
                pj, pi = order[j], order[i]
                cand = (NEG, -1)
                if f.turn(s, pj, pi) > 0:
                    cand = (3, -1)
                for k in range(j):
                    if ray[k] == ray[j]:
                        continue
                    got = dp.get((k, j))
                    if got and got[0] + 1 > cand[0] and f.turn(order[k], pj, pi) > 0:
                        cand = (got[0] + 1, k)
                if cand[0] > 0:
                    dp[(j, i)] = cand
                    if cand[0] > best_size and f.turn(pj, pi, s) > 0:
                        seq = [pi, pj]
                        a, b = j, i
                        while dp[(a, b)][1] >= 0:
                            a, b = dp[(a, b)][1], a
                            seq.append(order[a])
                        seq.append(s)
                        best_size, best_poly = cand[0], seq
    verts = clockwise_order(f.points(best_poly)) if best_size >= 3 else f.points(best_poly)
    return _result(verts, "closed-polygon")


def _max_contained_cap(grid: Grid2, cls: ChainClass) -> tuple[Point, ...]:
    """Longest cap of the class allowing repeated y (x strictly increasing in-frame)."""
    f = _Frame(grid, cls.rotation)
    pts = f.pts
    S: dict[tuple[Idx, Idx], tuple[int, Optional[Idx]]] = {}
    for a in sorted(pts, reverse=True):
        for b in pts:
            if b[0] <= a[0]:
                continue
            best = (2, None)
            for v in pts:
                if v[0] > b[0] and f.turn(a, b, v) < 0 and S[(b, v)][0] + 1 > best[0]:
                    best = (S[(b, v)][0] + 1, v)
            S[(a, b)] = best
    if not S:
        return f.points([pts[0]])
    (a, b), (size, _) = max(S.items(), key=lambda kv: kv[1][0])
    seq = [a, b]
    while S[(a, b)][1] is not None:
        a, b = b, S[(a, b)][1]
        seq.append(b)
    return f.points(seq)


def _conflict_free(vertices: tuple[Point, ...]) -> list[Point]:
    """Larger colour class of each component of the shared-coordinate graph."""
    n = len(vertices)
    adj = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if vertices[i].x == vertices[j].x or vertices[i].y == vertices[j].y:
                adj[i].append(j)
                adj[j].append(i)
    colour = [-1] * n
    keep: list[int] = []
    for s in range(n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        sides = ([s], [])
        q = deque([s])
        while q:
            u = q.popleft()
            for w in adj[u]:
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    sides[colour[w]].append(w)
                    q.append(w)
                elif colour[w] == colour[u]:
                    raise AssertionError("conflict graph is not bipartite")
        keep.extend(max(sides, key=len))
    return [vertices[i] for i in sorted(keep)]


def approx_max_supported_polygon(grid: Grid2, cls: Optional[ChainClass] = None) -> SearchResult:
    """Half-optimal supported polygon (or cap/chain of ``cls``) from a contained optimum."""
    if cls is None:
        base = max_contained_convex_polygon(grid).witness.vertices
        kept = _conflict_free(base)
        verts = clockwise_order(kept) if len(kept) >= 3 else tuple(kept)
        return _result(verts, "closed-polygon", optimal=False)
    if cls.is_chain:
        r = max_supported_chain(grid, cls)
        return SearchResult(r.size, r.witness, r.class_set, False)
    base = _max_contained_cap(grid, cls)
    kept = _conflict_free(base)
    return _result(kept, "cap", optimal=False)


def oracle_max_supported(
    grid: Grid2, cls: Optional[ChainClass] = None, allow_large: bool = False
) -> SearchResult:
    """Exhaustive maximum supported polygon, or chain/cap of class ``cls``.

    Columns are scanned in order and each is skipped or given an unused
    row; partial selections that already fail convexity are cut, which is
    sound because every class and convex position are hereditary.
    """
    if max(grid.shape) > ORACLE_LIMIT and not allow_large:
        raise ScaleGuardError(f"oracle refuses grids larger than {ORACLE_LIMIT} x {ORACLE_LIMIT}")
    f = _Frame(grid, cls.rotation if cls is not None else 0)
    nx, ny = f.nx, f.ny
    best: list = [[]]

    def ok(seq: list[Idx]) -> bool:
        if cls is None:
            return len(seq) < 3 or convex_position_2d(f.points(seq))
        return in_class(f.points(seq), cls)

    def dfs(col: int, seq: list[Idx], used: int) -> None:
        if len(seq) > len(best[0]):
            best[0] = list(seq)
        if col == nx or len(seq) + (nx - col) <= len(best[0]):
            return
        for row in range(ny):
            if used >> row & 1:
                continue
            seq.append((col, row))
            if ok(seq):
                dfs(col + 1, seq, used | 1 << row)
            seq.pop()
        dfs(col + 1, seq, used)

    dfs(0, [], 0)
    verts = f.points(best[0])
    if cls is None:
        if len(verts) >= 3:
            verts = clockwise_order(verts)
        return _result(verts, "closed-polygon")
    return _result(verts, "cap" if cls.is_cap else "chain")


__all__ = [
    "SearchResult",
    "ChainTable",
    "CapDP",
    "chain_tables",
    "max_supported_chain",
    "max_supported_cap",
    "has_supported_n_chain",
    "has_supported_n_cap",
    "max_contained_convex_polygon",
    "approx_max_supported_polygon",
    "oracle_max_supported",
    "ScaleGuardError",
    "ORACLE_LIMIT",
]
