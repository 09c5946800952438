"""Brocard points, Brocard angle, a handful of triangle centers, and the two
conics used throughout: the Steiner circumellipse and the Brocard inellipse.

Sidelengths follow the triangle convention a = |v2 v3|, b = |v1 v3|,
c = |v1 v2|. Vertices are expected counterclockwise; with that orientation
the first Brocard point is the one where the sides v1v2, v2v3, v3v1, rotated
about their first endpoint toward the interior by the Brocard angle, concur.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateTriangle, InconsistentTangency
from .geometry import (
    DEFAULT_TOL,
    ConicImplicit,
    Ellipse,
    Line,
    Point,
    Triangle,
    Trilinears,
    circumcenter3,
    distance,
    midpoint,
    nullspace_vector,
)


class CenterId(str, enum.Enum):
    X2 = "X2"
    X3 = "X3"
    X6 = "X6"
    X39 = "X39"
    X182 = "X182"


@dataclass(frozen=True)
class BrocardData:
    omega: float
    omega1: Point
    omega2: Point


def _require(tri: Triangle) -> None:
    if tri.is_degenerate():
        raise DegenerateTriangle(f"collinear vertices: {tri.vertices}")


def sum_squared_sides(tri: Triangle) -> float:
    return math.fsum(s * s for s in tri.sides)


def cot_omega_pair(tri: Triangle) -> tuple[float, float]:
    """cot of the Brocard angle two ways: sum of squared sides over four
    times the area, and the sum of the cotangents of the angles."""
    _require(tri)
    area = tri.area()
    by_sides = sum_squared_sides(tri) / (4.0 * area)
    vs = tri.vertices
    cots = []
    for i in range(3):
        u = vs[(i + 1) % 3] - vs[i]
        w = vs[(i + 2) % 3] - vs[i]
        cots.append(u.dot(w) / abs(u.cross(w)))
    return by_sides, math.fsum(cots)


def cot_omega(tri: Triangle) -> float:
    return cot_omega_pair(tri)[0]


def brocard_angle(tri: Triangle) -> float:
    return math.atan2(1.0, cot_omega(tri))


def circumradius(tri: Triangle) -> float:
    _require(tri)
    a, b, c = tri.sides
    return a * b * c / (4.0 * tri.area())


def _cartesian(tri: Triangle, p: float, q: float, r: float) -> Point:
    # trilinear_to_cartesian without re-validating; callers already did
    a, b, c = tri.sides
    wa, wb, wc = p * a, q * b, r * c
    return (tri.v1 * wa + tri.v2 * wb + tri.v3 * wc) / (wa + wb + wc)


def brocard_points(tri: Triangle) -> tuple[Point, Point]:
    """(first, second) Brocard points of a counterclockwise triangle."""
    _require(tri)
    a, b, c = tri.sides
    first = _cartesian(tri, c / b, a / c, b / a)
    second = _cartesian(tri, b / c, c / a, a / b)
    return first, second


def brocard_data(tri: Triangle) -> BrocardData:
    o1, o2 = brocard_points(tri)
    return BrocardData(brocard_angle(tri), o1, o2)


def brocard_concurrence_residual(tri: Triangle) -> float:
    """Distance from the first Brocard point to the three sides rotated by
    the Brocard angle about their first endpoint, relative to the triangle
    scale. Zero for a counterclockwise triangle."""
    omega = brocard_angle(tri)
    first, _ = brocard_points(tri)
    vs = tri.vertices
    worst = 0.0
    for i in range(3):
        direction = (vs[(i + 1) % 3] - vs[i]).rotated(omega)
        line = Line.from_point_direction(vs[i], direction)
        worst = max(worst, abs(line.signed_distance(first)))
    return worst / tri.scale()


def triangle_center(tri: Triangle, center: CenterId | str) -> Point:
    _require(tri)
    center = CenterId(center)
    a, b, c = tri.sides
    if center is CenterId.X2:
        return _cartesian(tri, 1 / a, 1 / b, 1 / c)
    if center is CenterId.X3:
        A, B, C = tri.angles()
        return _cartesian(tri, math.cos(A), math.cos(B), math.cos(C))
    if center is CenterId.X6:
        return _cartesian(tri, a, b, c)
    if center is CenterId.X39:
        return _cartesian(tri, a * (b * b + c * c), b * (a * a + c * c), c * (a * a + b * b))
    return midpoint(triangle_center(tri, CenterId.X3), triangle_center(tri, CenterId.X6))


def steiner_circumellipse(tri: Triangle) -> ConicImplicit:
    """The conic through the vertices whose center is the centroid."""
    _require(tri)
    g = tri.centroid()
    s = tri.scale()
    local = [(v - g) / s for v in tri.vertices]
    rows = [[p.x * p.x, 2 * p.x * p.y, p.y * p.y, p.x, p.y, 1.0] for p in local]
    # gradient vanishes at the local origin: a10 = a01 = 0
    rows.append([0, 0, 0, 1, 0, 0])
    rows.append([0, 0, 0, 0, 1, 0])
    A, B, C, _, _, F = nullspace_vector(np.array(rows, dtype=float))
    A, B, C = A / (s * s), B / (s * s), C / (s * s)
    return ConicImplicit.normalized(
        A,
        B,
        C,
        -2 * (A * g.x + B * g.y),
        -2 * (B * g.x + C * g.y),
        A * g.x * g.x + 2 * B * g.x * g.y + C * g.y * g.y + F,
    )


def brocard_inellipse(tri: Triangle, tol: float = DEFAULT_TOL) -> Ellipse:
    """Inscribed ellipse with foci at the two Brocard points.

    The minor semi-axis comes from the focal tangency identity
    d(F1, side) * d(F2, side) = b^2, which must agree across all three sides.
    """
    o1, o2 = brocard_points(tri)
    estimates = []
    for line in tri.sidelines():
        estimates.append(line.signed_distance(o1) * line.signed_distance(o2))
    b2 = math.fsum(estimates) / 3.0
    spread = max(abs(e - b2) for e in estimates)
    if not b2 > 0 or spread > tol * b2:
        raise InconsistentTangency(f"sideline b^2 estimates disagree: {estimates}")
    half_focal = 0.5 * distance(o1, o2)
    theta = math.atan2(o2.y - o1.y, o2.x - o1.x) if half_focal > 0 else 0.0
    b = math.sqrt(b2)
    return Ellipse(midpoint(o1, o2), math.sqrt(b2 + half_focal * half_focal), b, theta)


def inellipse_tangency_spread(tri: Triangle) -> float:
    """Relative spread of the three per-side b^2 estimates."""
    o1, o2 = brocard_points(tri)
    est = [line.signed_distance(o1) * line.signed_distance(o2) for line in tri.sidelines()]
    mean = math.fsum(est) / 3.0
    return max(abs(e - mean) for e in est) / abs(mean)


def shail_check(tri: Triangle) -> float:
    """| |O1 O2|^2 - 4 R^2 sin^2 w (1 - 4 sin^2 w) | / R^2 for the triangle's
    own circumradius and Brocard angle."""
    o1, o2 = brocard_points(tri)
    R = circumradius(tri)
    s2 = 1.0 / (1.0 + cot_omega(tri) ** 2)
    lhs = distance(o1, o2) ** 2
    rhs = 4 * R * R * s2 * (1 - 4 * s2)
    return abs(lhs - rhs) / (R * R)


def gamma_sine_residual(tri: Triangle) -> float:
    """|4 area / sqrt(Gamma) - 2 sin w| with Gamma = a^2 b^2 + a^2 c^2 + b^2 c^2."""
    a, b, c = tri.sides
    gamma = (a * b) ** 2 + (a * c) ** 2 + (b * c) ** 2
    return abs(4 * tri.area() / math.sqrt(gamma) - 2 * math.sin(brocard_angle(tri)))


def brocard_circle(tri: Triangle) -> tuple[Point, float]:
    """Circle through the circumcenter and both Brocard points."""
    o1, o2 = brocard_points(tri)
    x3 = triangle_center(tri, CenterId.X3)
    center = circumcenter3(x3, o1, o2)
    return center, distance(center, x3)
