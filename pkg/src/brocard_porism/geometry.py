"""Planar geometry primitives: points, lines, ellipses, implicit conics,
similarity transforms and trilinear evaluation.

Every value type here is immutable; all functions are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CollinearPoints,
    DegenerateConfiguration,
    DegenerateTriangle,
    InvalidAxes,
    NotAnEllipse,
    PointAtInfinity,
    PointInsideEllipse,
)

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, k: float) -> "Point":
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __truediv__(self, k: float) -> "Point":
        return Point(self.x / k, self.y / k)

    def __neg__(self) -> "Point":
        return Point(-self.x, -self.y)

    def __iter__(self):
        yield self.x
        yield self.y

    def dot(self, other: "Point") -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point") -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def rotated(self, angle: float) -> "Point":
        c, s = math.cos(angle), math.sin(angle)
        return Point(c * self.x - s * self.y, s * self.x + c * self.y)

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y])


ORIGIN = Point(0.0, 0.0)


def distance(p: Point, q: Point) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


def midpoint(p: Point, q: Point) -> Point:
    return Point(0.5 * (p.x + q.x), 0.5 * (p.y + q.y))


def reflect_in_point(p: Point, center: Point) -> Point:
    return Point(2.0 * center.x - p.x, 2.0 * center.y - p.y)


@dataclass(frozen=True)
class Line:
    """The line ``{p : n.p = d}`` with unit normal ``n``."""

    n: Point
    d: float

    def __post_init__(self):
        if abs(self.n.norm() - 1.0) > 1e-12:
            raise ValueError("line normal must be a unit vector")

    @classmethod
    def through(cls, p: Point, q: Point) -> "Line":
        direction = q - p
        length = direction.norm()
        if length == 0.0:
            raise DegenerateConfiguration("line through coincident points")
        n = Point(-direction.y / length, direction.x / length)
        return cls(n, n.dot(p))

    @classmethod
    def from_point_direction(cls, p: Point, direction: Point) -> "Line":
        length = direction.norm()
        if length == 0.0:
            raise DegenerateConfiguration("zero direction vector")
        n = Point(-direction.y / length, direction.x / length)
        return cls(n, n.dot(p))

    @property
    def direction(self) -> Point:
        return Point(self.n.y, -self.n.x)

    def signed_distance(self, p: Point) -> float:
        return self.n.dot(p) - self.d

    def point(self) -> Point:
        """Foot of the perpendicular from the origin."""
        return self.n * self.d


def intersect_lines(l1: Line, l2: Line) -> Point:
    det = l1.n.x * l2.n.y - l1.n.y * l2.n.x
    if abs(det) < 1e-14:
        raise DegenerateConfiguration("parallel lines do not intersect")
    x = (l1.d * l2.n.y - l1.n.y * l2.d) / det
    y = (l1.n.x * l2.d - l1.d * l2.n.x) / det
    return Point(x, y)


@dataclass(frozen=True)
class Ellipse:
    center: Point
    a: float
    b: float
    theta: float = 0.0

    def __post_init__(self):
        if not (self.b > 0 and self.a >= self.b * (1 - 1e-12)):
            raise InvalidAxes(f"need a >= b > 0, got a={self.a}, b={self.b}")
        # theta is an axis direction, so it only matters modulo pi
        object.__setattr__(self, "theta", self.theta % math.pi)

    @property
    def c(self) -> float:
        return math.sqrt(max(self.a * self.a - self.b * self.b, 0.0))

    @property
    def foci(self) -> tuple[Point, Point]:
        offset = Point(self.c, 0.0).rotated(self.theta)
        return self.center - offset, self.center + offset

    @property
    def aspect_ratio(self) -> float:
        return self.a / self.b

    def to_local(self, p: Point) -> Point:
        return (p - self.center).rotated(-self.theta)

    def to_world(self, p: Point) -> Point:
        return p.rotated(self.theta) + self.center

    def point_at(self, t: float) -> Point:
        return self.to_world(Point(self.a * math.cos(t), self.b * math.sin(t)))

    def level(self, p: Point) -> float:
        """x'^2/a^2 + y'^2/b^2 - 1 in the ellipse frame; zero on the curve."""
        q = self.to_local(p)
        return (q.x / self.a) ** 2 + (q.y / self.b) ** 2 - 1.0

    def tangency_residual(self, line: Line) -> float:
        """Relative violation of the focal tangency identity d1*d2 = b^2.

        Both foci must lie on the same side of a tangent, so the signed
        product is used.
        """
        f1, f2 = self.foci
        product = line.signed_distance(f1) * line.signed_distance(f2)
        return abs(product - self.b * self.b) / (self.b * self.b)

    def to_conic(self) -> "ConicImplicit":
        ct, st = math.cos(self.theta), math.sin(self.theta)
        ia, ib = 1.0 / (self.a * self.a), 1.0 / (self.b * self.b)
        m11 = ct * ct * ia + st * st * ib
        m22 = st * st * ia + ct * ct * ib
        m12 = ct * st * (ia - ib)
        cx, cy = self.center.x, self.center.y
        return ConicImplicit.normalized(
            m11,
            m12,
            m22,
            -2.0 * (m11 * cx + m12 * cy),
            -2.0 * (m12 * cx + m22 * cy),
            m11 * cx * cx + 2.0 * m12 * cx * cy + m22 * cy * cy - 1.0,
        )


def circle(center: Point, radius: float) -> Ellipse:
    return Ellipse(center, radius, radius, 0.0)


@dataclass(frozen=True)
class ConicImplicit:
    """a20 x^2 + 2 a11 xy + a02 y^2 + a10 x + a01 y + a00 = 0.

    Construct through :meth:`normalized` to get the canonical scale: the
    largest coefficient magnitude is 1 and the quadratic part has
    non-negative trace.
    """

    a20: float
    a11: float
    a02: float
    a10: float
    a01: float
    a00: float

    @classmethod
    def normalized(cls, *coeffs: float) -> "ConicImplicit":
        v = np.asarray(coeffs, dtype=float)
        if v.shape != (6,):
            raise ValueError("a conic has six coefficients")
        if not np.any(v[:3]):
            raise DegenerateConfiguration("quadratic part of conic vanishes")
        scale = np.max(np.abs(v))
        v = v / scale
        trace = v[0] + v[2]
        if trace < 0 or (trace == 0 and v[np.flatnonzero(v)[0]] < 0):
            v = -v
        return cls(*(float(x) for x in v))

    @property
    def coefficients(self) -> tuple[float, ...]:
        return (self.a20, self.a11, self.a02, self.a10, self.a01, self.a00)

    @property
    def quadratic_form(self) -> np.ndarray:
        return np.array([[self.a20, self.a11], [self.a11, self.a02]])

    def __call__(self, p: Point) -> float:
        x, y = p.x, p.y
        return (
            self.a20 * x * x
            + 2.0 * self.a11 * x * y
            + self.a02 * y * y
            + self.a10 * x
            + self.a01 * y
            + self.a00
        )

    def gradient(self, p: Point) -> Point:
        return Point(
            2.0 * self.a20 * p.x + 2.0 * self.a11 * p.y + self.a10,
            2.0 * self.a11 * p.x + 2.0 * self.a02 * p.y + self.a01,
        )

    def center(self) -> Point:
        try:
            sol = np.linalg.solve(self.quadratic_form, [-0.5 * self.a10, -0.5 * self.a01])
        except np.linalg.LinAlgError:
            raise DegenerateConfiguration("conic has no unique center") from None
        return Point(float(sol[0]), float(sol[1]))

    def to_ellipse(self) -> Ellipse:
        m = self.quadratic_form
        eigvals, eigvecs = np.linalg.eigh(m)
        if eigvals[0] * eigvals[1] <= 0:
            raise NotAnEllipse("quadratic form is not definite")
        if eigvals[0] < 0:
            m, eigvals = -m, -eigvals[::-1]
            eigvecs = eigvecs[:, ::-1]
            sign = -1.0
        else:
            sign = 1.0
        c = self.center()
        rhs = -sign * self(c)
        if rhs <= 0:
            raise NotAnEllipse("imaginary ellipse")
        # smallest eigenvalue belongs to the major axis
        major = eigvecs[:, 0]
        theta = math.atan2(major[1], major[0])
        return Ellipse(c, math.sqrt(rhs / eigvals[0]), math.sqrt(rhs / eigvals[1]), theta)


def conic_axis_ratio(conic: ConicImplicit) -> float:
    """Semi-major over semi-minor axis, sqrt(lambda_max / lambda_min) of the
    quadratic form."""
    eigvals = np.linalg.eigvalsh(conic.quadratic_form)
    if eigvals[0] * eigvals[1] <= 0:
        raise NotAnEllipse("quadratic form is not definite")
    lo, hi = sorted(abs(eigvals))
    return math.sqrt(hi / lo)


def _conic_rows(points: Iterable[Point]) -> np.ndarray:
    return np.array([[p.x * p.x, 2.0 * p.x * p.y, p.y * p.y, p.x, p.y, 1.0] for p in points])


def nullspace_vector(m: np.ndarray, rank_tol: float = 1e-10) -> np.ndarray:
    """Unit vector spanning the one-dimensional null space of ``m``."""
    # column scaling keeps the rank test meaningful for mixed-degree monomials
    col_scale = np.max(np.abs(m), axis=0)
    col_scale[col_scale == 0] = 1.0
    _, s, vt = np.linalg.svd(m / col_scale)
    full = np.zeros(m.shape[1])
    full[: len(s)] = s
    if full[-2] <= rank_tol * full[0]:
        raise DegenerateConfiguration("system has null space of dimension > 1")
    v = vt[-1] / col_scale
    return v / np.linalg.norm(v)


def conic_through_five_points(points: Sequence[Point]) -> ConicImplicit:
    if len(points) != 5:
        raise ValueError("exactly five points are required")
    return conic_through(points)


def conic_through(points: Sequence[Point], directions: Sequence[Point] = ()) -> ConicImplicit:
    """Conic through finite ``points`` and the points at infinity in the given
    ``directions``; five conditions in total."""
    if len(points) + len(directions) != 5:
        raise ValueError("a conic needs exactly five incidence conditions")
    # work in a centred, unit-scaled frame for conditioning
    n = len(points)
    cx = sum(p.x for p in points) / n
    cy = sum(p.y for p in points) / n
    s = max(max(abs(p.x - cx), abs(p.y - cy)) for p in points)
    if s == 0.0:
        raise DegenerateConfiguration("coincident points")
    local = [Point((p.x - cx) / s, (p.y - cy) / s) for p in points]
    rows = _conic_rows(local)
    if directions:
        unit = [d / d.norm() for d in directions]
        rows = np.vstack([rows, [[d.x * d.x, 2 * d.x * d.y, d.y * d.y, 0, 0, 0] for d in unit]])
    v = nullspace_vector(rows)
    return _unscale_conic(v, cx, cy, s)


def _unscale_conic(v: np.ndarray, cx: float, cy: float, s: float) -> ConicImplicit:
    """Map a conic fitted in u = (x - cx)/s, w = (y - cy)/s back to x, y."""
    A, B, C, D, E, F = v
    A, B, C = A / (s * s), B / (s * s), C / (s * s)
    D, E = D / s, E / s
    return ConicImplicit.normalized(
        A,
        B,
        C,
        D - 2.0 * A * cx - 2.0 * B * cy,
        E - 2.0 * B * cx - 2.0 * C * cy,
        A * cx * cx + 2.0 * B * cx * cy + C * cy * cy - D * cx - E * cy + F,
    )


def tangent_lines_from_point(e: Ellipse, p: Point, tol: float = DEFAULT_TOL) -> tuple[Line, Line]:
    """The two tangents to ``e`` through an exterior point ``p``.

    Works in the frame where ``e`` is the unit circle: the touch points are
    the ends of the chord cut by the polar of ``p``.
    """
    q = e.to_local(p)
    w = Point(q.x / e.a, q.y / e.b)
    rho2 = w.dot(w)
    if abs(rho2 - 1.0) <= tol:
        touch = e.to_world(Point(e.a * w.x / math.sqrt(rho2), e.b * w.y / math.sqrt(rho2)))
        line = _tangent_at(e, touch)
        return line, line
    if rho2 < 1.0:
        raise PointInsideEllipse(f"point {p} lies inside the ellipse")
    foot = w / rho2
    half = math.sqrt(1.0 - 1.0 / rho2)
    perp = Point(-w.y, w.x) / math.sqrt(rho2)
    lines = []
    for sign in (1.0, -1.0):
        u = foot + perp * (sign * half)
        touch = e.to_world(Point(e.a * u.x, e.b * u.y))
        lines.append(_tangent_at(e, touch))
    return lines[0], lines[1]


def _tangent_at(e: Ellipse, touch: Point) -> Line:
    local = e.to_local(touch)
    n = Point(local.x / (e.a * e.a), local.y / (e.b * e.b)).rotated(e.theta)
    n = n / n.norm()
    return Line(n, n.dot(touch))


@dataclass(frozen=True)
class Similarity:
    """p -> scale * Rot(rot) * (p + pre_translate)."""

    scale: float = 1.0
    rot: float = 0.0
    pre_translate: Point = ORIGIN

    def __post_init__(self):
        if not self.scale > 0:
            raise ValueError("similarity scale must be positive")

    def __call__(self, p: Point) -> Point:
        return apply_similarity(self, p)

    def then(self, other: "Similarity") -> "Similarity":
        """The similarity equal to applying ``self`` first, then ``other``."""
        # other(self(p)) = s2 R2 (s1 R1 (p + t1) + t2)
        #               = s2 s1 R(r1+r2) (p + t1 + R1^-1 t2 / s1)
        t = self.pre_translate + other.pre_translate.rotated(-self.rot) / self.scale
        return Similarity(self.scale * other.scale, self.rot + other.rot, t)


def apply_similarity(s: Similarity, p: Point) -> Point:
    return (p + s.pre_translate).rotated(s.rot) * s.scale


@dataclass(frozen=True)
class Trilinears:
    p: float
    q: float
    r: float

    def __post_init__(self):
        if self.p == 0 and self.q == 0 and self.r == 0:
            raise ValueError("trilinears cannot all vanish")


@dataclass(frozen=True)
class Triangle:
    """Three vertices. Sidelengths follow the usual convention: ``a`` is
    opposite ``v1``, ``b`` opposite ``v2``, ``c`` opposite ``v3``."""

    v1: Point
    v2: Point
    v3: Point

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.v1, self.v2, self.v3)

    @property
    def sides(self) -> tuple[float, float, float]:
        return (
            distance(self.v2, self.v3),
            distance(self.v1, self.v3),
            distance(self.v1, self.v2),
        )

    def signed_area(self) -> float:
        return 0.5 * (self.v2 - self.v1).cross(self.v3 - self.v1)

    def area(self) -> float:
        return abs(self.signed_area())

    def scale(self) -> float:
        return max(self.sides)

    def is_degenerate(self, tol: float = 1e-12) -> bool:
        s = self.scale()
        return s == 0.0 or self.area() <= tol * s * s

    def require_nondegenerate(self) -> None:
        if self.is_degenerate():
            raise DegenerateTriangle(f"collinear vertices: {self.vertices}")

    def counterclockwise(self) -> "Triangle":
        """Same triangle with v1 kept and the order made counterclockwise."""
        if self.signed_area() < 0:
            return Triangle(self.v1, self.v3, self.v2)
        return self

    def sidelines(self) -> tuple[Line, Line, Line]:
        """Lines v1v2, v2v3, v3v1."""
        return (
            Line.through(self.v1, self.v2),
            Line.through(self.v2, self.v3),
            Line.through(self.v3, self.v1),
        )

    def angles(self) -> tuple[float, float, float]:
        out = []
        vs = self.vertices
        for i in range(3):
            u = vs[(i + 1) % 3] - vs[i]
            w = vs[(i + 2) % 3] - vs[i]
            out.append(math.atan2(abs(u.cross(w)), u.dot(w)))
        return tuple(out)

    def centroid(self) -> Point:
        return (self.v1 + self.v2 + self.v3) / 3.0

    def transformed(self, s: Similarity) -> "Triangle":
        return Triangle(s(self.v1), s(self.v2), s(self.v3))


def trilinear_to_cartesian(tri: Triangle, coords: Trilinears, tol: float = DEFAULT_TOL) -> Point:
    tri.require_nondegenerate()
    a, b, c = tri.sides
    wa, wb, wc = coords.p * a, coords.q * b, coords.r * c
    denom = wa + wb + wc
    if abs(denom) <= tol * (abs(wa) + abs(wb) + abs(wc)):
        raise PointAtInfinity("trilinear weights sum to zero")
    return (tri.v1 * wa + tri.v2 * wb + tri.v3 * wc) / denom


def circumcenter3(p1: Point, p2: Point, p3: Point) -> Point:
    d = 2.0 * (p2 - p1).cross(p3 - p1)
    scale = max(distance(p1, p2), distance(p1, p3), distance(p2, p3))
    if scale == 0.0 or abs(d) <= 1e-14 * scale * scale:
        raise CollinearPoints("circumcenter of collinear points is undefined")
    u, w = p2 - p1, p3 - p1
    uu, ww = u.dot(u), w.dot(w)
    return p1 + Point(w.y * uu - u.y * ww, u.x * ww - w.x * uu) / d
