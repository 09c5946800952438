"""Circles whose center and radius stay fixed over the Brocard porism.

Each registry entry carries a closed form in terms of the porism's R, the
Brocard angle w and the caustic axes (a, b), with e = sqrt(1 - 4 sin^2 w).
verify_stationarity() rebuilds every circle from each sampled triangle and
measures how far it moves.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Callable

from .centers import CenterId, brocard_angle, brocard_circle, brocard_points, circumradius, triangle_center
from .errors import InvalidAxes
from .families import FamilyKind, FamilySpec, brocard_porism_params
from .geometry import Point, Triangle, circumcenter3, distance, midpoint
from .invariants import sample_family

STATIONARY_TOL = 1e-8

BROCARD_CIRCLE_ERRATUM = (
    "Brocard circle: tabulated with center X39 and radius e*(R/2)*cos(w); the circle "
    "through X3, both Brocard points and X6 is centred at X182 with radius e*(R/2)/cos(w)"
)
X182_CENTER_ERRATUM = (
    "X182 closed form is (0, -c(2a^2 - b^2)/(b d1)); the variant with sqrt(2a^2 - b^2) "
    "does not lie midway between X3 and X6"
)
LUCAS_NOTE = "center X6407 not implemented; radius only"


@dataclass(frozen=True)
class NamedCircle:
    name: str
    center_id: str  # "X3", ..., or "X6407" for the unverifiable Lucas inner circle
    center: Point | None
    radius: float
    e: float
    verifiable: bool = True
    note: str | None = None


def _eccentricity_term(sin_w: float) -> float:
    # clamp the a = b round-off, where 1 - 4 sin^2 w is zero up to a few ulps
    return math.sqrt(max(0.0, 1.0 - 4.0 * sin_w * sin_w))


def x6_closed_form(a: float, b: float) -> Point:
    p = brocard_porism_params(a, b)
    return Point(0.0, p.c * b / p.delta)


def x182_closed_form(a: float, b: float) -> Point:
    p = brocard_porism_params(a, b)
    return Point(0.0, -p.c * (2 * a * a - b * b) / (b * p.delta))


def x182_printed(a: float, b: float) -> Point:
    """The printed (erroneous) center, kept for the erratum report."""
    p = brocard_porism_params(a, b)
    return Point(0.0, -p.c * math.sqrt(2 * a * a - b * b) / (b * p.delta))


def brocard_circle_radius(a: float, b: float) -> float:
    """2 a^2 c / (b sqrt(4a^2 - b^2))."""
    p = brocard_porism_params(a, b)
    return 2 * a * a * p.c / (b * p.delta)


def brocard_circle_radius_angular(R: float, omega: float) -> float:
    """The same radius as e (R/2) / cos w."""
    return _eccentricity_term(math.sin(omega)) * R / 2 / math.cos(omega)


def brocard_circle_radius_table(R: float, omega: float) -> float:
    """The tabulated variant e (R/2) cos w (an erratum)."""
    return _eccentricity_term(math.sin(omega)) * R / 2 * math.cos(omega)


def stationary_circles(a: float, b: float) -> list[NamedCircle]:
    if not (b > 0 and a >= b):
        raise InvalidAxes(f"need a >= b > 0, got a={a}, b={b}")
    p = brocard_porism_params(a, b)
    R, w = p.R, p.omega
    s = math.sin(w)
    e = _eccentricity_term(s)
    x3, x39 = p.circumcenter, Point(0.0, 0.0)
    x6, x182 = x6_closed_form(a, b), x182_closed_form(a, b)
    return [
        NamedCircle("Circumcircle", "X3", x3, R, e),
        NamedCircle("2nd Brocard", "X3", x3, e * R, e),
        NamedCircle("Stammler", "X3", x3, 2 * R, e),
        NamedCircle("2nd Lemoine", "X6", x6, R * math.tan(w), e),
        NamedCircle("Gallatly", "X39", x39, R * s, e),
        NamedCircle("Half-Moses", "X39", x39, R * s * s, e),
        NamedCircle("Moses", "X39", x39, 2 * R * s * s, e),
        NamedCircle(
            "Brocard",
            "X182",
            x182,
            brocard_circle_radius(a, b),
            e,
            note=BROCARD_CIRCLE_ERRATUM + "; " + X182_CENTER_ERRATUM,
        ),
        NamedCircle("1st Lemoine", "X182", x182, R / 2 / math.cos(w), e),
        NamedCircle("Lucas Inner", "X6407", None, R / (4 * p.cot_omega + 7), e, False, LUCAS_NOTE),
    ]


# Per-triangle recomputation. Each returns (center or None, radius).


def _with_e(tri: Triangle) -> tuple[float, float, float]:
    R = circumradius(tri)
    w = brocard_angle(tri)
    return R, w, _eccentricity_term(math.sin(w))


def _circumcircle(tri: Triangle):
    center = circumcenter3(*tri.vertices)
    return center, distance(center, tri.v1)


def _second_brocard(tri):
    R, _, e = _with_e(tri)
    return triangle_center(tri, CenterId.X3), e * R


def _stammler(tri):
    return triangle_center(tri, CenterId.X3), 2 * circumradius(tri)


def _second_lemoine(tri):
    R, w, _ = _with_e(tri)
    return triangle_center(tri, CenterId.X6), R * math.tan(w)


def _x39_circle(factor: float, power: int):
    def fn(tri):
        R, w, _ = _with_e(tri)
        return triangle_center(tri, CenterId.X39), factor * R * math.sin(w) ** power

    return fn


def _first_lemoine(tri):
    R, w, _ = _with_e(tri)
    return triangle_center(tri, CenterId.X182), R / 2 / math.cos(w)


def _lucas_inner(tri):
    R, w, _ = _with_e(tri)
    return None, R / (4 / math.tan(w) + 7)


RECOMPUTE: dict[str, Callable[[Triangle], tuple[Point | None, float]]] = {
    "Circumcircle": _circumcircle,
    "2nd Brocard": _second_brocard,
    "Stammler": _stammler,
    "2nd Lemoine": _second_lemoine,
    "Gallatly": _x39_circle(1.0, 1),
    "Half-Moses": _x39_circle(1.0, 2),
    "Moses": _x39_circle(2.0, 2),
    "Brocard": brocard_circle,
    "1st Lemoine": _first_lemoine,
    "Lucas Inner": _lucas_inner,
}


@dataclass(frozen=True)
class CircleReport:
    """Drift of one registry circle over a sweep. All distances are relative
    to the porism's circumradius R."""

    name: str
    center_id: str
    closed_center: tuple[float, float] | None
    closed_radius: float
    samples: int
    center_drift: float | None  # max distance of the recomputed center from its mean
    radius_dev: float  # max deviation of the recomputed radius from its mean
    center_error: float | None  # max distance from the closed-form center
    radius_error: float  # max deviation from the closed-form radius
    note: str | None = None
    extra: dict = field(default_factory=dict)

    def passed(self, tol: float = STATIONARY_TOL) -> bool:
        checks = [self.radius_dev, self.radius_error, self.center_drift, self.center_error]
        return all(v <= tol for v in checks if v is not None)

    def to_dict(self, tol: float = STATIONARY_TOL) -> dict:
        d = asdict(self)
        d["pass"] = self.passed(tol)
        return d


def verify_stationarity(a: float, b: float, n: int = 360) -> list[CircleReport]:
    spec = FamilySpec(FamilyKind.BROCARD, a, b)
    samples, _ = sample_family(spec, n)
    R = spec.params().R
    reports = []
    for circle in stationary_circles(a, b):
        fn = RECOMPUTE[circle.name]
        centers, radii = [], []
        x6_residual = 0.0
        for _, tri in samples:
            c, r = fn(tri)
            centers.append(c)
            radii.append(r)
            if circle.name == "Brocard":
                x6 = triangle_center(tri, CenterId.X6)
                x6_residual = max(x6_residual, abs(distance(c, x6) - r) / R)
        r_mean = math.fsum(radii) / len(radii)
        radius_dev = max(abs(r - r_mean) for r in radii) / R
        radius_error = max(abs(r - circle.radius) for r in radii) / R
        drift = center_error = None
        if circle.center is not None:
            m = len(centers)
            mean = Point(math.fsum(c.x for c in centers) / m, math.fsum(c.y for c in centers) / m)
            drift = max(distance(c, mean) for c in centers) / R
            center_error = max(distance(c, circle.center) for c in centers) / R
        extra = {}
        if circle.name == "Brocard":
            extra = {
                "x6_on_circle_residual": x6_residual,
                "table_radius": brocard_circle_radius_table(R, spec.params().omega),
                "printed_center": list(x182_printed(a, b)),
            }
        reports.append(
            CircleReport(
                circle.name,
                circle.center_id,
                None if circle.center is None else (circle.center.x, circle.center.y),
                circle.radius,
                len(samples),
                drift,
                radius_dev,
                center_error,
                radius_error,
                circle.note,
                extra,
            )
        )
    return reports


@dataclass(frozen=True)
class BrocardRadiusRoutes:
    closed_form: float
    angular_form: float
    midpoint_route: float  # circle centred at midpoint(X3, X6) through a Brocard point
    concyclic_route: float  # circle through X3 and both Brocard points
    x6_residual: float  # how far X6 is from that circle, relative to R
    table_value: float  # the tabulated e (R/2) cos w

    def spread(self) -> float:
        vals = (self.closed_form, self.angular_form, self.midpoint_route, self.concyclic_route)
        return (max(vals) - min(vals)) / self.closed_form


def brocard_radius_routes(a: float, b: float, t: float = 0.7) -> BrocardRadiusRoutes:
    """The Brocard-circle radius three independent ways, plus the tabulated
    value it is compared against."""
    p = brocard_porism_params(a, b)
    tri = FamilySpec(FamilyKind.BROCARD, a, b).triangle(t)
    o1, _ = brocard_points(tri)
    x3 = triangle_center(tri, CenterId.X3)
    x6 = triangle_center(tri, CenterId.X6)
    mid = midpoint(x3, x6)
    center, r = brocard_circle(tri)
    return BrocardRadiusRoutes(
        closed_form=brocard_circle_radius(a, b),
        angular_form=brocard_circle_radius_angular(p.R, p.omega),
        midpoint_route=distance(mid, o1),
        concyclic_route=r,
        x6_residual=abs(distance(center, x6) - r) / p.R,
        table_value=brocard_circle_radius_table(p.R, p.omega),
    )
