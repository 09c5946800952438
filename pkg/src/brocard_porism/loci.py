"""Triangle-center loci over a family, least-squares circle/ellipse fits,
and the closed forms they are compared against."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .centers import CenterId, steiner_circumellipse, triangle_center
from .errors import CircularDegeneracy, CollinearSamples, DegenerateConfiguration, DegenerateSamples
from .families import FamilySpec, brocard_porism_params, brocard_triangle
from .geometry import Point, distance
from .invariants import sample_family


@dataclass(frozen=True)
class LocusSample:
    t: float
    p: Point
    center_id: CenterId


class FitKind(str, enum.Enum):
    CIRCLE = "circle"
    AXIS_ALIGNED_ELLIPSE = "axis_aligned_ellipse"
    GENERAL_CONIC = "general_conic"
    POINT_LOCUS = "point_locus"


@dataclass(frozen=True)
class FittedConic:
    kind: FitKind
    center: Point
    semi_axes: tuple[float, float]  # (along x, along y) for ellipses; (r, r) for circles
    rms_residual: float


def sample_locus(spec: FamilySpec, center_id: CenterId | str, n: int = 1000) -> list[LocusSample]:
    center_id = CenterId(center_id)
    samples, _ = sample_family(spec, n)
    return [LocusSample(t, triangle_center(tri, center_id), center_id) for t, tri in samples]


def _as_array(points: Sequence[Point]) -> np.ndarray:
    return np.array([[p.x, p.y] for p in points], dtype=float)


def _point_locus(xy: np.ndarray, scale: float | None) -> FittedConic | None:
    extent = np.ptp(xy, axis=0)
    ref = scale if scale is not None else max(1.0, float(np.max(np.abs(xy))))
    if math.hypot(*extent) < 1e-10 * ref:
        c = xy.mean(axis=0)
        rms = float(np.sqrt(np.mean(np.sum((xy - c) ** 2, axis=1))))
        return FittedConic(FitKind.POINT_LOCUS, Point(float(c[0]), float(c[1])), (0.0, 0.0), rms)
    return None


def fit_circle(samples: Sequence[Point], scale: float | None = None) -> FittedConic:
    """Algebraic (Kasa) least-squares circle: x^2 + y^2 = 2 cx x + 2 cy y + k."""
    xy = _as_array(samples)
    if len(xy) < 3:
        raise CollinearSamples("need at least three points")
    point = _point_locus(xy, scale)
    if point is not None:
        return point
    mean = xy.mean(axis=0)
    local = xy - mean
    sv = np.linalg.svd(local, compute_uv=False)
    if sv[1] <= 1e-12 * sv[0]:
        raise CollinearSamples("samples are collinear")
    m = np.column_stack([2 * local, np.ones(len(local))])
    rhs = np.sum(local**2, axis=1)
    (cx, cy, k), *_ = np.linalg.lstsq(m, rhs, rcond=None)
    r = math.sqrt(k + cx * cx + cy * cy)
    resid = np.hypot(local[:, 0] - cx, local[:, 1] - cy) - r
    center = Point(float(cx + mean[0]), float(cy + mean[1]))
    return FittedConic(FitKind.CIRCLE, center, (r, r), float(np.sqrt(np.mean(resid**2))))


def fit_axis_aligned_ellipse(samples: Sequence[Point], scale: float | None = None) -> FittedConic:
    """Least-squares fit of A x^2 + C y^2 + D x + E y + F = 0.

    The residual is the radial defect of each point in the unit-circle
    frame, times the geometric mean of the semi-axes.
    """
    xy = _as_array(samples)
    if len(xy) < 4:
        raise DegenerateSamples("need at least four points")
    point = _point_locus(xy, scale)
    if point is not None:
        return point
    mean = xy.mean(axis=0)
    s = float(np.max(np.abs(xy - mean)))
    u = (xy - mean) / s
    m = np.column_stack([u[:, 0] ** 2, u[:, 1] ** 2, u[:, 0], u[:, 1], np.ones(len(u))])
    _, sv, vt = np.linalg.svd(m)
    if len(sv) < 5 or sv[3] <= 1e-10 * sv[0]:
        raise DegenerateSamples("samples do not determine an axis-aligned ellipse")
    A, C, D, E, F = vt[-1]
    if A * C <= 0:
        raise DegenerateSamples("best fit is not an ellipse")
    h, k = -D / (2 * A), -E / (2 * C)
    G = A * h * h + C * k * k - F
    if G / A <= 0:
        raise DegenerateSamples("best fit is an imaginary ellipse")
    sa, sb = math.sqrt(G / A), math.sqrt(G / C)
    radial = np.hypot((u[:, 0] - h) / sa, (u[:, 1] - k) / sb) - 1.0
    rms = float(np.sqrt(np.mean(radial**2))) * math.sqrt(sa * sb) * s
    center = Point(float(h * s + mean[0]), float(k * s + mean[1]))
    return FittedConic(FitKind.AXIS_ALIGNED_ELLIPSE, center, (sa * s, sb * s), rms)


def x39_locus_closed_form(a: float, b: float) -> tuple[float, float]:
    """Semi-axes of the X39 locus over the homothetic family."""
    c2 = a * a - b * b
    return c2 / 2 * a / (a * a + 3 * b * b), c2 / 2 * b / (3 * a * a + b * b)


def x39_closed_form_point(a: float, b: float, t: float) -> Point:
    """X39 of the homothetic triangle at t; note the locus is run three times
    per period of t."""
    a39, b39 = x39_locus_closed_form(a, b)
    return Point(-a39 * math.cos(3 * t), -b39 * math.sin(3 * t))


def x2_locus_brocard(a: float, b: float) -> tuple[Point, float]:
    """Circle traced by the centroid over the Brocard porism (a, b)."""
    root = math.sqrt(4 * a**4 - 5 * a * a * b * b + b**4)
    return Point(0.0, -root / (3 * b)), 2 * (a * a - b * b) / (3 * b)


def x2_locus_radius_from_angle(a: float, b: float) -> float:
    """The same radius written as R (2 cos 2w - 1) / 3."""
    p = brocard_porism_params(a, b)
    return p.R * (2 * math.cos(2 * p.omega) - 1) / 3


def winding_number(points: Sequence[Point], center: Point) -> float:
    """Signed number of turns of a closed sampled curve around ``center``."""
    closed = list(points) + [points[0]]
    angles = np.unwrap([math.atan2(p.y - center.y, p.x - center.x) for p in closed])
    return float((angles[-1] - angles[0]) / (2 * math.pi))


def _y_axis_crossing(origin: Point, direction: Point) -> float:
    if abs(direction.x) < 1e-12 * direction.norm():
        raise DegenerateConfiguration("axis line is parallel to the y-axis")
    s = -origin.x / direction.x
    return origin.y + s * direction.y


def axis_intersection_check(a: float, b: float, t: float) -> float:
    """Hausdorff distance between where the X2-locus circle and where the two
    axis lines of the Steiner circumellipse cross the y-axis (the minor axis
    of the porism's inellipse)."""
    if not a > b:
        raise CircularDegeneracy("X2 locus is a single point when a = b")
    center, r = x2_locus_brocard(a, b)
    circle_hits = [center.y - r, center.y + r]
    e = steiner_circumellipse(brocard_triangle(a, b, t)).to_ellipse()
    hits = []
    for angle in (e.theta, e.theta + math.pi / 2):
        hits.append(_y_axis_crossing(e.center, Point(math.cos(angle), math.sin(angle))))
    d1 = max(min(abs(h - c) for c in circle_hits) for h in hits)
    d2 = max(min(abs(h - c) for h in hits) for c in circle_hits)
    return max(d1, d2)


def circle_rms(points: Sequence[Point], center: Point, radius: float) -> float:
    return math.sqrt(sum((distance(p, center) - radius) ** 2 for p in points) / len(points))
