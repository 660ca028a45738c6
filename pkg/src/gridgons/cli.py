"""Command-line interface: generate grids, run searches and counts, encode, plot.

Documents are JSON with ``schema_version`` 1 and rationals written as
"p/q" strings. Exit codes: 0 ok, 2 bad input, 3 scale guard, 4 failed
construction check.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Any, Optional

from . import constructions as C
from . import counting as K
from . import optimize as O
from .geometry import ChainClass, GridgonsError, InvalidInputError, Point, PolySeq, ScaleGuardError, as_rational, clockwise_order
from .svg import render_svg

SCHEMA_VERSION = 1

EXIT_OK, EXIT_INPUT, EXIT_SCALE, EXIT_CONSTRUCTION = 0, 2, 3, 4


# ---------------------------------------------------------------------------
# documents


def rat(v: Fraction) -> str:
    return str(v)


def grid_document(grid, **metadata) -> dict:
    meta = {k: str(v) for k, v in {**grid.metadata, **metadata}.items()}
    if isinstance(grid, C.GridD):
        return {"schema_version": SCHEMA_VERSION, "axes": [[rat(v) for v in a] for a in grid.axes], "metadata": meta}
    return {
        "schema_version": SCHEMA_VERSION,
        "x": [rat(v) for v in grid.xs],
        "y": [rat(v) for v in grid.ys],
        "metadata": meta,
    }


def polygon_document(poly: PolySeq) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "vertices": [[rat(v.x), rat(v.y)] for v in poly.vertices],
        "kind": poly.kind,
        "convexity": poly.convexity,
        "class_tags": sorted(c.label for c in poly.class_tags),
    }


def encoding_document(e: K.Encoding) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "horizontal": list(e.horizontal),
        "vertical": list(e.vertical),
        "leftmost_row": e.leftmost_row,
    }


def _check_version(doc: Any) -> dict:
    if not isinstance(doc, dict):
        raise InvalidInputError("document must be a JSON object")
    if doc.get("schema_version", SCHEMA_VERSION) != SCHEMA_VERSION:
        raise InvalidInputError(f"unsupported schema_version {doc.get('schema_version')!r}")
    return doc


def _rationals(seq: Any, what: str) -> list[Fraction]:
    if not isinstance(seq, list):
        raise InvalidInputError(f"{what} must be a list")
    return [as_rational(v) for v in seq]


def parse_grid(doc: Any):
    doc = _check_version(doc)
    meta = doc.get("metadata", {}) or {}
    if "axes" in doc:
        axes = [_rationals(a, "axis") for a in doc["axes"]]
        if len(axes) == 2:
            return C.Grid2(axes[0], axes[1], dict(meta))
        return C.GridD(tuple(tuple(a) for a in axes), dict(meta))
    if "x" not in doc or "y" not in doc:
        raise InvalidInputError("grid document needs x and y (or axes)")
    return C.Grid2(_rationals(doc["x"], "x"), _rationals(doc["y"], "y"), dict(meta))


def parse_polygon(doc: Any) -> PolySeq:
    doc = _check_version(doc)
    verts = doc.get("vertices")
    if not isinstance(verts, list) or any(not isinstance(v, list) or len(v) != 2 for v in verts):
        raise InvalidInputError("vertices must be a list of [x, y] pairs")
    tags = frozenset(ChainClass.from_label(t) for t in doc.get("class_tags", []))
    return PolySeq(
        tuple(Point(as_rational(x), as_rational(y)) for x, y in verts),
        doc.get("kind", "closed-polygon"),
        doc.get("convexity", "strict"),
        tags,
    )


def parse_encoding(doc: Any) -> K.Encoding:
    doc = _check_version(doc)
    try:
        h = [int(t) for t in doc["horizontal"]]
        v = [int(t) for t in doc["vertical"]]
        r = int(doc["leftmost_row"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInputError(f"malformed encoding document: {exc}") from None
    return K.Encoding(tuple(h), tuple(v), r)


def _load(path: str) -> Any:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{path} is not valid JSON: {exc}") from None


def _dump(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _grid2(path: str) -> C.Grid2:
    g = parse_grid(_load(path))
    if not isinstance(g, C.Grid2):
        raise InvalidInputError("this command needs a 2D grid")
    return g


# ---------------------------------------------------------------------------
# commands


def random_grid(n: int, seed: int, spread: int = 50, denominators: int = 6) -> C.Grid2:
    rng = random.Random(seed)

    def axis() -> list[Fraction]:
        vals: set[Fraction] = set()
        while len(vals) < n:
            vals.add(Fraction(rng.randint(-spread, spread), rng.randint(1, denominators)))
        return sorted(vals)

    return C.Grid2(axis(), axis(), {"construction": "random", "seed": seed})


def cmd_gen(args) -> str:
    kind = args.kind
    if kind == "upper-bound":
        return _dump(grid_document(C.upper_bound_grid(_need(args.k, "--k"))))
    if kind == "halving-md":
        s = C.halving_md_set(_need(args.n, "--n"), args.r)
        return _dump(grid_document(C.Grid2(s.values, s.values), construction="halving-md", ratio=s.ratio))
    if kind == "counting":
        return _dump(grid_document(C.counting_grid(_need(args.m, "--m"))))
    if kind == "lattice":
        return _dump(grid_document(C.Grid2.lattice(_need(args.n, "--n")), construction="lattice"))
    if kind == "random":
        return _dump(grid_document(random_grid(_need(args.n, "--n"), args.seed)))
    if kind == "s3":
        res = C.s3_construction(_need(args.i, "--i"), _need(args.j, "--j"), args.seed)
        doc = grid_document(res.grid)
        doc["shifts"] = [rat(v) for v in res.shifts]
        doc["genericity"] = {
            "points": res.report.n_points,
            "nonaxis_collinear_triples": res.report.nonaxis_collinear_triples,
            "nonaligned_coplanar_quadruples": res.report.nonaligned_coplanar_quadruples,
            "structural_nonaligned": res.report.structural_nonaligned,
            "accidental_degeneracies": res.report.accidental_degeneracies,
        }
        return _dump(doc)
    if kind == "md-product":
        n, d = _need(args.n, "--n"), args.d
        sets = [C.halving_md_set(n, args.r)] * d
        pts = C.md_product_convex(sets) if d >= 3 else C.md_antidiagonal(sets[0], sets[1])
        return _dump(
            {
                "schema_version": SCHEMA_VERSION,
                "dimension": d,
                "points": [[rat(c) for c in p] for p in pts],
                "grid": grid_document(C.GridD(tuple(s.values for s in sets))),
            }
        )
    raise InvalidInputError(f"unknown generator {kind!r}")


def _need(value: Optional[int], flag: str) -> int:
    if value is None:
        raise InvalidInputError(f"{flag} is required")
    return value


def _search_document(task: str, res: O.SearchResult) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "task": task,
        "size": res.size,
        "witness": polygon_document(res.witness),
        "class_tags": sorted(c.label for c in res.class_set),
        "optimal": res.optimal,
    }


def cmd_solve(args) -> str:
    grid = _grid2(args.grid)
    cls = ChainClass.from_label(args.cls) if args.cls else None
    task = args.task
    if task == "chain":
        res = O.max_supported_chain(grid, cls)
    elif task == "cap":
        res = O.max_supported_cap(grid, cls)
    elif task in ("n-chain", "n-cap"):
        fn = O.has_supported_n_chain if task == "n-chain" else O.has_supported_n_cap
        return _dump({"schema_version": SCHEMA_VERSION, "task": task, "result": fn(grid)})
    elif task == "approx":
        res = O.approx_max_supported_polygon(grid, cls)
    elif task == "contained":
        res = O.max_contained_convex_polygon(grid)
    elif task == "oracle":
        res = O.oracle_max_supported(grid, cls, allow_large=args.allow_large)
    else:
        raise InvalidInputError(f"unknown task {task!r}")
    return _dump(_search_document(task, res))


def cmd_count(args) -> str:
    grid = _grid2(args.grid)
    doc: dict[str, Any] = {"schema_version": SCHEMA_VERSION, "grid_id": K.grid_id(grid)}
    if args.regime:
        convexity = "weak" if args.weak else "strict"
        n = len(K.enumerate_polygons(grid, args.regime, convexity, allow_large=args.allow_large))
        doc["counts"] = {f"{args.regime}/{convexity}": n}
    else:
        report = K.count_report(grid, weak=args.weak, allow_large=args.allow_large)
        counts = report.as_dict()
        counts.pop("grid_id")
        if counts["W"] is None:
            counts.pop("W")
        doc["counts"] = counts
    return _dump(doc)


def cmd_encode(args) -> str:
    grid = _grid2(args.grid)
    poly = parse_polygon(_load(args.polygon))
    if args.weak:
        rec = K.encode_weak(grid, poly)
        doc = encoding_document(rec.encoding)
        doc["extremes"] = [[rat(v.x), rat(v.y)] for v in rec.extremes]
        return _dump(doc)
    return _dump(encoding_document(K.encode_polygon(grid, poly)))


def cmd_decode(args) -> str:
    grid = _grid2(args.grid)
    enc = parse_encoding(_load(args.encoding))
    poly = K.decode_polygon(grid, enc)
    if poly is None:
        return _dump({"schema_version": SCHEMA_VERSION, "ok": False})
    return _dump({"schema_version": SCHEMA_VERSION, "ok": True, "polygon": polygon_document(poly)})


def cmd_plot(args) -> str:
    grid = parse_grid(_load(args.grid))
    if not isinstance(grid, C.Grid2):
        raise InvalidInputError("plot needs a 2D grid")
    polys = []
    for path in args.polygon or []:
        doc = _load(path)
        if isinstance(doc, dict) and "witness" in doc:
            doc = doc["witness"]
        if isinstance(doc, dict) and "points" in doc:
            doc = _check_version(doc)
            if doc.get("dimension", 2) != 2:
                raise InvalidInputError("only 2D point sets can be plotted")
            pts = [Point(as_rational(x), as_rational(y)) for x, y in doc["points"]]
            polys.append(PolySeq(clockwise_order(pts) if len(pts) >= 3 else tuple(pts)))
            continue
        polys.append(parse_polygon(doc))
    return render_svg(grid, polys, log_x=args.log or args.log_x, log_y=args.log or args.log_y)


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gridgons", description="Convex polygons in Cartesian-product grids.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a grid or point set")
    g.add_argument("kind", choices=["upper-bound", "halving-md", "counting", "s3", "md-product", "lattice", "random"])
    g.add_argument("--k", type=int)
    g.add_argument("--n", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--i", type=int)
    g.add_argument("--j", type=int)
    g.add_argument("--d", type=int, default=2)
    g.add_argument("--r", type=as_rational, default=Fraction(2))
    g.add_argument("--seed", type=int, default=0)
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="run a search on a grid document")
    s.add_argument("task", choices=["chain", "cap", "n-chain", "n-cap", "approx", "contained", "oracle"])
    s.add_argument("grid", help="grid document path or - for stdin")
    s.add_argument("--class", dest="cls", choices=[c.label for c in ChainClass])
    s.add_argument("--allow-large", action="store_true")
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("count", help="count convex polygons in a grid")
    c.add_argument("grid")
    c.add_argument("--regime", choices=list(K.REGIMES))
    c.add_argument("--weak", action="store_true")
    c.add_argument("--allow-large", action="store_true")
    c.set_defaults(func=cmd_count)

    e = sub.add_parser("encode", help="grid-line encoding of a polygon")
    e.add_argument("grid")
    e.add_argument("polygon")
    e.add_argument("--weak", action="store_true")
    e.set_defaults(func=cmd_encode)

    d = sub.add_parser("decode", help="polygon from a grid-line encoding")
    d.add_argument("grid")
    d.add_argument("encoding")
    d.set_defaults(func=cmd_decode)

    pl = sub.add_parser("plot", help="SVG of a grid with optional polygons")
    pl.add_argument("grid")
    pl.add_argument("--polygon", action="append")
    pl.add_argument("--log", action="store_true", help="log-scale both axes")
    pl.add_argument("--log-x", action="store_true")
    pl.add_argument("--log-y", action="store_true")
    pl.set_defaults(func=cmd_plot)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        text = args.func(args)
    except ScaleGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCALE
    except C.ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCTION
    except (InvalidInputError, GridgonsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(text)
    sys.stdout.flush()
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
