"""Variable similarities between the homothetic family and the Brocard porism.

Forward: normalize each homothetic triangle by its Brocard inellipse
(center to the origin, major axis to the x-axis, minor semi-axis to ``k``).
The images all share one caustic (k beta, k) and one circumcircle, so they
form a Brocard porism.

Reverse: normalize each Brocard-porism triangle by its Steiner circumellipse
the same way; the images are 3-periodics of the homothetic pair
(k' sigma, k').
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .centers import CenterId, brocard_inellipse, steiner_circumellipse, triangle_center
from .errors import CircularDegeneracy
from .families import brocard_triangle, homothetic_triangle
from .geometry import Ellipse, Point, Similarity, Triangle


class CircularDegeneracyWarning(UserWarning):
    """The normalizing ellipse is a circle, so its axis angle is arbitrary."""


@dataclass(frozen=True)
class SimilarityFrame:
    t: float
    transform: Similarity
    source_tri: Triangle
    image_tri: Triangle
    theta: float  # minor-axis angle of the normalizing ellipse, in (-pi/2, pi/2]
    source_ellipse: Ellipse


def minor_axis_angle(e: Ellipse) -> float:
    theta = e.theta + math.pi / 2
    while theta > math.pi / 2:
        theta -= math.pi
    while theta <= -math.pi / 2:
        theta += math.pi
    return theta


def _normalizer(e: Ellipse, k: float, rot: float) -> Similarity:
    return Similarity(scale=k / e.b, rot=rot, pre_translate=-e.center)


def _check_round(e: Ellipse, what: str) -> bool:
    if e.a - e.b <= 1e-12 * e.a:
        warnings.warn(f"{what} is a circle; using theta = 0", CircularDegeneracyWarning, stacklevel=3)
        return True
    return False


def map_homothetic_triangle(tri: Triangle, k: float = 1.0, t: float = 0.0) -> SimilarityFrame:
    """Send ``tri`` to the triangle whose Brocard inellipse is the upright,
    origin-centred ellipse (k beta, k).

    The major axis is taken to the x-axis. Of the two such rotations, the one
    leaving the image circumcenter below the x-axis is used, so the image
    family matches the standard porism orientation.
    """
    e = brocard_inellipse(tri)
    if _check_round(e, "Brocard inellipse"):
        s = _normalizer(e, k, 0.0)
        return SimilarityFrame(t, s, tri, tri.transformed(s), 0.0, e)
    s = _normalizer(e, k, -e.theta)
    image = tri.transformed(s)
    if triangle_center(image, CenterId.X3).y > 0:
        s = _normalizer(e, k, -e.theta - math.pi)
        image = tri.transformed(s)
    return SimilarityFrame(t, s, tri, image, minor_axis_angle(e), e)


def map_brocard_triangle(tri: Triangle, k_prime: float = 1.0, t: float = 0.0) -> SimilarityFrame:
    """Send ``tri`` to the triangle whose Steiner circumellipse is the
    upright, origin-centred ellipse (k' sigma, k')."""
    e = steiner_circumellipse(tri).to_ellipse()
    if _check_round(e, "Steiner circumellipse"):
        s = _normalizer(e, k_prime, 0.0)
        return SimilarityFrame(t, s, tri, tri.transformed(s), 0.0, e)
    s = _normalizer(e, k_prime, -e.theta)
    return SimilarityFrame(t, s, tri, tri.transformed(s), minor_axis_angle(e), e)


def _require_oblong(a: float, b: float, k: float) -> None:
    if not k > 0:
        raise ValueError("k must be positive")
    if not a > b > 0:
        raise CircularDegeneracy(f"need a > b > 0 for a well-defined axis angle, got a={a}, b={b}")


def homothetic_to_brocard(a: float, b: float, k: float, t: float) -> SimilarityFrame:
    _require_oblong(a, b, k)
    return map_homothetic_triangle(homothetic_triangle(a, b, t), k, t)


def brocard_to_homothetic(a: float, b: float, k_prime: float, t: float) -> SimilarityFrame:
    _require_oblong(a, b, k_prime)
    return map_brocard_triangle(brocard_triangle(a, b, t), k_prime, t)


def image_inscribed_axes(tri: Triangle) -> tuple[float, float]:
    """Semi-axes (A, B) of the origin-centred, axis-aligned ellipse tangent to
    the three sidelines, by least squares on A^2 nx^2 + B^2 ny^2 = d^2."""
    rows, rhs = [], []
    for line in tri.sidelines():
        rows.append([line.n.x**2, line.n.y**2])
        rhs.append(line.d**2)
    (A2, B2), *_ = np.linalg.lstsq(np.array(rows), np.array(rhs), rcond=None)
    return math.sqrt(A2), math.sqrt(B2)


def pair_condition_residual(frame: SimilarityFrame) -> float:
    """|a'/a + b'/b - 1| for the image of the reverse map, where (a, b) are
    the image circumellipse axes and (a', b') the axes of the inscribed
    concentric axis-aligned ellipse measured from the image sidelines."""
    outer = steiner_circumellipse(frame.image_tri).to_ellipse()
    # outer is axis-aligned; read its extent along x and y
    ax, by = (outer.a, outer.b) if abs(math.sin(outer.theta)) < 0.5 else (outer.b, outer.a)
    ix, iy = image_inscribed_axes(frame.image_tri)
    return abs(ix / ax + iy / by - 1.0)


def directly_similar(t1: Triangle, t2: Triangle) -> float:
    """Discrepancy between two triangles as directly similar figures: the
    largest mismatch of corresponding normalized sidelengths over cyclic
    relabelings, or inf when orientations differ."""
    if (t1.signed_area() > 0) != (t2.signed_area() > 0):
        return math.inf
    s1 = np.array(t1.sides) / sum(t1.sides)
    s2 = np.array(t2.sides) / sum(t2.sides)
    return min(float(np.max(np.abs(s1 - np.roll(s2, r)))) for r in range(3))


def image_point(frame: SimilarityFrame, p: Point) -> Point:
    return frame.transform(p)
