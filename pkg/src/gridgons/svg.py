"""Minimal SVG rendering of a grid with polygon overlays."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .constructions import Grid2
from .geometry import PolySeq

PALETTE = ("#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e")


def _scale(values: Sequence[Fraction], lo: float, hi: float, log: bool):
    vmin, vmax = min(values), max(values)

    def f(v: Fraction) -> float:
        if vmax == vmin:
            return (lo + hi) / 2
        if log:
            t = math.log1p(float(v - vmin)) / math.log1p(float(vmax - vmin))
        else:
            t = float((v - vmin) / (vmax - vmin))
        return lo + t * (hi - lo)

    return f


def render_svg(
    grid: Grid2,
    polygons: Sequence[PolySeq] = (),
    log_x: bool = False,
    log_y: bool = False,
    size: int = 480,
    margin: int = 24,
) -> str:
    fx = _scale(grid.xs, margin, size - margin, log_x)
    # SVG y grows downwards
    fy = _scale(grid.ys, size - margin, margin, log_y)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        '<rect width="100%" height="100%" fill="white"/>',
        '<g stroke="#bbbbbb" stroke-width="1">',
    ]
    for x in grid.xs:
        out.append(f'<line class="grid-v" x1="{fx(x):.3f}" y1="{margin}" x2="{fx(x):.3f}" y2="{size - margin}"/>')
    for y in grid.ys:
        out.append(f'<line class="grid-h" x1="{margin}" y1="{fy(y):.3f}" x2="{size - margin}" y2="{fy(y):.3f}"/>')
    out.append("</g>")
    out.append('<g fill="#444444">')
    for x in grid.xs:
        for y in grid.ys:
            out.append(f'<circle class="point" cx="{fx(x):.3f}" cy="{fy(y):.3f}" r="2"/>')
    out.append("</g>")
    for k, poly in enumerate(polygons):
        colour = PALETTE[k % len(PALETTE)]
        coords = " ".join(f"{fx(v.x):.3f},{fy(v.y):.3f}" for v in poly.vertices)
        tag = "polygon" if poly.kind == "closed-polygon" else "polyline"
        out.append(f'<{tag} class="overlay" points="{coords}" fill="none" stroke="{colour}" stroke-width="2"/>')
        for v in poly.vertices:
            out.append(f'<circle class="vertex" cx="{fx(v.x):.3f}" cy="{fy(v.y):.3f}" r="4" fill="{colour}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
