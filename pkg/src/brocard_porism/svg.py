"""Static SVG figures: family snapshots with their conics, marked centers and
dashed loci, and the similarity map drawn side by side.

Output is plain text built from fixed-precision numbers, so identical inputs
give identical bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .centers import CenterId, brocard_points, triangle_center
from .errors import GeometryError
from .families import TWO_PI, FamilyKind, FamilySpec
from .geometry import Ellipse, Point, Triangle, distance
from .invariants import sample_ts
from .similarity import homothetic_to_brocard

WIDTH = 800.0
MARGIN = 0.05
CURVE_SAMPLES = 360

TRI_COLORS = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22")
CENTER_COLORS = {
    "X2": "#17becf",
    "X3": "#d62728",
    "X6": "#2ca02c",
    "X39": "#9467bd",
    "X182": "#8c564b",
    "omega1": "#000000",
    "omega2": "#000000",
}
DEFAULT_MARKS = ("omega1", "omega2", "X2", "X3", "X6", "X39", "X182")


def _fmt(v: float) -> str:
    s = f"{v:.4f}"
    return "0.0000" if s == "-0.0000" else s


@dataclass
class Canvas:
    """Collects shapes in world coordinates; render() fits them to the page
    with a 5% margin and flips y."""

    items: list = field(default_factory=list)

    def polyline(self, pts: Sequence[Point], stroke: str, width: float = 1.0, dash: bool = False, closed: bool = False):
        self.items.append(("poly", list(pts), stroke, width, dash, closed))

    def marker(self, p: Point, color: str, label: str | None = None):
        self.items.append(("mark", p, color, label))

    def bounds(self) -> tuple[float, float, float, float]:
        xs, ys = [], []
        for item in self.items:
            pts = item[1] if item[0] == "poly" else [item[1]]
            xs.extend(p.x for p in pts)
            ys.extend(p.y for p in pts)
        return min(xs), min(ys), max(xs), max(ys)

    def render(self, title: str = "") -> str:
        x0, y0, x1, y1 = self.bounds()
        span = max(x1 - x0, y1 - y0, 1e-12)
        pad = MARGIN * span
        x0, y0, x1, y1 = x0 - pad, y0 - pad, x1 + pad, y1 + pad
        s = WIDTH / (x1 - x0)
        height = (y1 - y0) * s

        def tx(p: Point) -> str:
            return f"{_fmt((p.x - x0) * s)},{_fmt((y1 - p.y) * s)}"

        out = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(WIDTH)}" '
            f'height="{_fmt(height)}" viewBox="0 0 {_fmt(WIDTH)} {_fmt(height)}">',
        ]
        if title:
            out.append(f"<title>{title}</title>")
        out.append(f'<rect width="{_fmt(WIDTH)}" height="{_fmt(height)}" fill="white"/>')
        for item in self.items:
            if item[0] == "poly":
                _, pts, stroke, width, dash, closed = item
                tag = "polygon" if closed else "polyline"
                extra = ' stroke-dasharray="6,4"' if dash else ""
                pts_s = " ".join(tx(p) for p in pts)
                out.append(
                    f'<{tag} points="{pts_s}" fill="none" stroke="{stroke}" '
                    f'stroke-width="{_fmt(width)}"{extra}/>'
                )
            else:
                _, p, color, label = item
                cx, cy = tx(p).split(",")
                out.append(f'<circle cx="{cx}" cy="{cy}" r="3.0000" fill="{color}"/>')
                if label:
                    out.append(
                        f'<text x="{_fmt(float(cx) + 5)}" y="{_fmt(float(cy) - 5)}" '
                        f'font-family="sans-serif" font-size="11" fill="{color}">{label}</text>'
                    )
        out.append("</svg>")
        return "\n".join(out) + "\n"


def ellipse_points(e: Ellipse, n: int = CURVE_SAMPLES) -> list[Point]:
    return [e.point_at(TWO_PI * k / n) for k in range(n)]


def _mark_point(tri: Triangle, name: str) -> Point:
    if name == "omega1":
        return brocard_points(tri)[0]
    if name == "omega2":
        return brocard_points(tri)[1]
    return triangle_center(tri, CenterId(name))


def _label(name: str) -> str:
    return {"omega1": "Ω1", "omega2": "Ω2"}.get(name, name)


def snapshot_ts(spec: FamilySpec, snapshots: int) -> list[float]:
    # homothetic triangles repeat every 2pi/3 (the vertices cycle)
    period = TWO_PI / 3 if spec.kind is FamilyKind.HOMOTHETIC else TWO_PI
    return [period * k / snapshots for k in range(snapshots)]


def draw_family(
    canvas: Canvas,
    spec: FamilySpec,
    snapshots: int = 9,
    marks: Sequence[str] = DEFAULT_MARKS,
    offset: Point = Point(0.0, 0.0),
    loci: bool = True,
) -> None:
    """Outer conic, caustic, ``snapshots`` triangles and the requested
    centers. A center that moves over the family gets a dashed locus; a
    stationary one is marked once."""
    shift = lambda ps: [p + offset for p in ps]  # noqa: E731
    canvas.polyline(shift(ellipse_points(spec.outer())), "#000000", 1.2, closed=True)
    canvas.polyline(shift(ellipse_points(spec.caustic())), "#555555", 1.0, closed=True)
    snaps = []
    for k, t in enumerate(snapshot_ts(spec, snapshots)):
        try:
            tri = spec.triangle(t)
        except GeometryError:
            continue
        snaps.append(tri)
        canvas.polyline(shift(tri.vertices), TRI_COLORS[k % len(TRI_COLORS)], 0.8, closed=True)
    if not snaps:
        return
    scale = max(spec.outer().a, spec.outer().b)
    for name in marks:
        color = CENTER_COLORS.get(name, "#000000")
        track = []
        for t in sample_ts(CURVE_SAMPLES):
            try:
                track.append(_mark_point(spec.triangle(t), name))
            except GeometryError:
                continue
        moving = max(distance(p, track[0]) for p in track) > 1e-9 * scale
        if moving and loci:
            canvas.polyline(shift(track), color, 1.0, dash=True, closed=True)
            for tri in snaps:
                canvas.marker(_mark_point(tri, name) + offset, color)
        else:
            canvas.marker(_mark_point(snaps[0], name) + offset, color, _label(name))


def family_svg(spec: FamilySpec, snapshots: int = 9, marks: Sequence[str] = DEFAULT_MARKS) -> str:
    canvas = Canvas()
    draw_family(canvas, spec, snapshots, marks)
    title = f"{spec.kind.value} family a={spec.a} b={spec.b}"
    if spec.kind is FamilyKind.CONFOCAL:
        title += f" lambda={spec.lam}"
    return canvas.render(title)


def similarity_svg(a: float, b: float, k: float = 1.0, snapshots: int = 9) -> str:
    """Homothetic family on the left, its normalized images on the right."""
    canvas = Canvas()
    source = FamilySpec(FamilyKind.HOMOTHETIC, a, b)
    draw_family(canvas, source, snapshots, marks=("X39",))
    frames = [homothetic_to_brocard(a, b, k, t) for t in snapshot_ts(source, snapshots)]
    images = [f.image_tri for f in frames]
    # place the image panel to the right of the source panel
    right = a
    img_left = min(p.x for tri in images for p in tri.vertices)
    offset = Point(right - img_left + 0.25 * a, 0.0)
    # the image family is a Brocard porism: fixed circumcircle, fixed caustic
    tri0 = images[0]
    x3 = triangle_center(tri0, CenterId.X3)
    R = distance(x3, tri0.v1)
    circ = Ellipse(x3, R, R)
    canvas.polyline([p + offset for p in ellipse_points(circ)], "#000000", 1.2, closed=True)
    o1, o2 = brocard_points(tri0)
    half = 0.5 * distance(o1, o2)
    caustic = Ellipse(Point(0.0, 0.0), math.hypot(k, half), k)
    canvas.polyline([p + offset for p in ellipse_points(caustic)], "#555555", 1.0, closed=True)
    for i, tri in enumerate(images):
        canvas.polyline([p + offset for p in tri.vertices], TRI_COLORS[i % len(TRI_COLORS)], 0.8, closed=True)
    canvas.marker(o1 + offset, CENTER_COLORS["omega1"], _label("omega1"))
    canvas.marker(o2 + offset, CENTER_COLORS["omega2"], _label("omega2"))
    canvas.marker(x3 + offset, CENTER_COLORS["X3"], "X3")
    return canvas.render(f"similarity a={a} b={b} k={k}")
