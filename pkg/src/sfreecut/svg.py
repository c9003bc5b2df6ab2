"""Planar figures: conv(S) in light gray, bodies in dark gray, lattice points as dots."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import DimensionError
from .lattice import SDescription, SearchBox, enumerate_integer_points, hull_2d_vertices
from .polyhedron import HPolyhedron, affine_dimension, double_description
from .sfree import SFreeBody

SIZE = 800
PAD = Fraction(1, 2)  # lattice units of margin so edge dots stay whole
OUTLINES = ("#1f3a93", "#b03a2e", "#1e8449", "#7d3c98", "#b9770e", "#17202a")


def _num(x) -> str:
    return f"{float(Fraction(x)):.6f}"


class _Viewport:
    def __init__(self, box: SearchBox):
        self.x0, self.y0 = (v - PAD for v in box.lower)
        self.x1, self.y1 = (v + PAD for v in box.upper)
        self.sx = SIZE / (self.x1 - self.x0)
        self.sy = SIZE / (self.y1 - self.y0)

    def __call__(self, p):
        return (Fraction(p[0]) - self.x0) * self.sx, (self.y1 - Fraction(p[1])) * self.sy

    def points(self, pts) -> str:
        return " ".join(f"{_num(u)},{_num(v)}" for u, v in map(self, pts))


def _clipped(P: HPolyhedron, box: SearchBox) -> list:
    G = double_description(P.intersect(box.as_polyhedron()))
    if G.empty:
        return []
    return hull_2d_vertices(G.points)


def _shape(pts, view, fill, stroke, opacity) -> Optional[str]:
    if not pts:
        return None
    if affine_dimension(pts) == 2:
        return (f'<polygon points="{view.points(pts)}" fill="{fill}" fill-opacity="{opacity}" '
                f'stroke="{stroke}" stroke-width="2"/>')
    if len(pts) >= 2:
        return f'<polyline points="{view.points(pts)}" fill="none" stroke="{stroke}" stroke-width="3"/>'
    return None


def plot_svg(S: SDescription, bodies: Sequence[Union[SFreeBody, HPolyhedron]], box: SearchBox,
             f: Optional[Sequence] = None) -> str:
    """Render the scene clipped to ``box``; identical inputs give identical bytes."""
    if S.n != 2 or box.n != 2:
        raise DimensionError("figures are planar only")
    view = _Viewport(box)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>',
    ]
    s_points = S.points(box)
    if s_points:
        hull = hull_2d_vertices(s_points)
        shape = _shape(hull, view, "#d9d9d9", "#bdbdbd", "1")
        if shape:
            out.append(f'<g id="convS">{shape}</g>')
    for k, B in enumerate(bodies):
        if B.n != 2:
            raise DimensionError("figures are planar only")
        P = B.to_hpolyhedron() if isinstance(B, SFreeBody) else B
        shape = _shape(_clipped(P, box), view, "#707070", OUTLINES[k % len(OUTLINES)], "0.55")
        if shape:
            out.append(f'<g id="body{k}">{shape}</g>')
    in_s = set(s_points)
    dots = []
    for x in enumerate_integer_points(HPolyhedron.whole_space(2), box):
        u, v = view(x)
        fill = "black" if x in in_s else "white"
        dots.append(f'<circle cx="{_num(u)}" cy="{_num(v)}" r="4" fill="{fill}" stroke="black" stroke-width="1"/>')
    out.append('<g id="lattice">' + "".join(dots) + "</g>")
    if f is not None:
        u, v = view(f)
        d = 7
        out.append(
            f'<g id="anchor" stroke="#c0392b" stroke-width="2">'
            f'<line x1="{_num(u - d)}" y1="{_num(v - d)}" x2="{_num(u + d)}" y2="{_num(v + d)}"/>'
            f'<line x1="{_num(u - d)}" y1="{_num(v + d)}" x2="{_num(u + d)}" y2="{_num(v - d)}"/></g>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


__all__ = ["plot_svg"]
