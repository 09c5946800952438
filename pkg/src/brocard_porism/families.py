"""The three Poncelet triangle families and their pair parameters.

* homothetic: triangles inscribed in the ellipse (a, b) and circumscribing
  the concentric ellipse (a/2, b/2);
* Brocard porism: triangles inscribed in a fixed circle and circumscribing
  the origin-centred ellipse (a, b), which is their Brocard inellipse;
* confocal lambda family: the same construction with the caustic replaced by
  the confocal ellipse with semi-axes sqrt(a^2 - lambda), sqrt(b^2 - lambda).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from itertools import permutations

from .errors import (
    DegenerateTriangle,
    InvalidAxes,
    InvalidLambda,
    SingularDenominator,
    VertexInsideCaustic,
)
from .geometry import (
    DEFAULT_TOL,
    ORIGIN,
    Ellipse,
    Point,
    Triangle,
    distance,
    tangent_lines_from_point,
)

TWO_PI = 2.0 * math.pi
_THIRDS = ((1.0, 0.0), (-0.5, math.sqrt(3) / 2), (-0.5, -math.sqrt(3) / 2))


class FamilyKind(str, enum.Enum):
    HOMOTHETIC = "homothetic"
    BROCARD = "brocard"
    CONFOCAL = "confocal"


def _check_axes(a: float, b: float) -> None:
    if not (b > 0 and a >= b):
        raise InvalidAxes(f"need a >= b > 0, got a={a}, b={b}")


@dataclass(frozen=True)
class PorismParams:
    circumcenter: Point
    R: float
    cot_omega: float
    c: float
    delta: float

    @property
    def sin_omega(self) -> float:
        return 1.0 / math.sqrt(1.0 + self.cot_omega**2)

    @property
    def omega(self) -> float:
        return math.atan2(1.0, self.cot_omega)


@dataclass(frozen=True)
class FamilySpec:
    kind: FamilyKind
    a: float
    b: float
    lam: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "kind", FamilyKind(self.kind))
        _check_axes(self.a, self.b)
        if self.kind is FamilyKind.CONFOCAL:
            confocal_lambda_params(self.a, self.b, self.lam)

    def params(self) -> PorismParams | None:
        if self.kind is FamilyKind.HOMOTHETIC:
            return None
        return confocal_lambda_params(self.a, self.b, self.lam if self.kind is FamilyKind.CONFOCAL else 0.0)

    def caustic(self) -> Ellipse:
        if self.kind is FamilyKind.HOMOTHETIC:
            return homothetic_pair(self.a, self.b)[1]
        return confocal_caustic(self.a, self.b, self.lam if self.kind is FamilyKind.CONFOCAL else 0.0)

    def outer(self) -> Ellipse:
        if self.kind is FamilyKind.HOMOTHETIC:
            return homothetic_pair(self.a, self.b)[0]
        p = self.params()
        return Ellipse(p.circumcenter, p.R, p.R)

    def feasible(self) -> bool:
        p = self.params()
        return True if p is None else porism_feasible(p)

    def triangle(self, t: float) -> Triangle:
        if self.kind is FamilyKind.HOMOTHETIC:
            return homothetic_triangle(self.a, self.b, t)
        if self.kind is FamilyKind.BROCARD:
            return brocard_triangle(self.a, self.b, t)
        return confocal_lambda_triangle(self.a, self.b, self.lam, t)


def homothetic_pair(a: float, b: float) -> tuple[Ellipse, Ellipse]:
    _check_axes(a, b)
    return Ellipse(ORIGIN, a, b), Ellipse(ORIGIN, a / 2.0, b / 2.0)


def homothetic_triangle(a: float, b: float, t: float) -> Triangle:
    _check_axes(a, b)
    # angle addition with exact cos/sin of the 2pi/3 steps keeps t = 0 exact
    ct, st = math.cos(t), math.sin(t)
    verts = []
    for ck, sk in _THIRDS:
        verts.append(Point(a * (ct * ck - st * sk), b * (st * ck + ct * sk)))
    return Triangle(*verts)


def brocard_porism_params(a: float, b: float) -> PorismParams:
    _check_axes(a, b)
    c = math.sqrt(a * a - b * b)
    delta1 = math.sqrt(4 * a * a - b * b)
    return PorismParams(
        circumcenter=Point(0.0, -c * delta1 / b),
        R=2 * a * a / b,
        cot_omega=delta1 / b,
        c=c,
        delta=delta1,
    )


def porism_feasible(p: PorismParams, tol: float = DEFAULT_TOL) -> bool:
    return p.R >= 2.0 * p.c * (1.0 - tol)


def confocal_lambda_params(a: float, b: float, lam: float) -> PorismParams:
    if not (b > 0 and a >= b):
        raise InvalidLambda(f"need a >= b > 0, got a={a}, b={b}")
    if not lam < b * b:
        raise InvalidLambda(f"lambda must be below b^2 = {b * b}, got {lam}")
    d2 = 4 * a * a - b * b - 3 * lam
    if d2 < 0:
        raise InvalidLambda("4a^2 - b^2 - 3 lambda must be non-negative")
    c = math.sqrt(a * a - b * b)
    delta2 = math.sqrt(d2)
    root = math.sqrt(b * b - lam)
    return PorismParams(
        circumcenter=Point(0.0, -c * delta2 / root),
        R=2 * (a * a - lam) / root,
        cot_omega=delta2 / root,
        c=c,
        delta=delta2,
    )


def confocal_caustic(a: float, b: float, lam: float) -> Ellipse:
    confocal_lambda_params(a, b, lam)
    return Ellipse(ORIGIN, math.sqrt(a * a - lam), math.sqrt(b * b - lam))


def poncelet_circle_triangle(caustic: Ellipse, center: Point, R: float, t: float) -> Triangle:
    """3-periodic with first vertex at ``center + R (cos t, sin t)``, inscribed
    in that circle and circumscribing ``caustic``.

    The other two vertices are where the tangents from the first vertex meet
    the circle again. The result is counterclockwise with the parametrized
    vertex first.
    """
    p1 = Point(center.x + R * math.cos(t), center.y + R * math.sin(t))
    if caustic.level(p1) < 0:
        raise VertexInsideCaustic(f"vertex {p1} lies inside the caustic")
    radial = p1 - center
    others = []
    for line in tangent_lines_from_point(caustic, p1):
        d = line.direction
        # |p1 + s d - center|^2 = R^2 has roots s = 0 and s = -2 d.(p1 - center)
        s = -2.0 * d.dot(radial)
        if abs(s) <= 1e-12 * R:
            raise DegenerateTriangle("tangent from vertex is tangent to the circumcircle")
        others.append(p1 + d * s)
    tri = Triangle(p1, others[0], others[1])
    if tri.is_degenerate():
        raise DegenerateTriangle(f"degenerate 3-periodic at t={t}")
    return tri.counterclockwise()


def brocard_triangle(a: float, b: float, t: float) -> Triangle:
    p = brocard_porism_params(a, b)
    return poncelet_circle_triangle(Ellipse(ORIGIN, a, b), p.circumcenter, p.R, t)


def confocal_lambda_triangle(a: float, b: float, lam: float, t: float) -> Triangle:
    p = confocal_lambda_params(a, b, lam)
    return poncelet_circle_triangle(confocal_caustic(a, b, lam), p.circumcenter, p.R, t)


# Explicit vertex polynomials. They depend on the radical
# Delta = delta1 - 2 c sin t; the two non-parametrized vertices are the
# +Delta and -Delta branches of the same numerators.


def closed_form_q(a: float, b: float, t: float) -> float:
    c2 = a * a - b * b
    d1sq = 4 * a * a - b * b
    ct = math.cos(t)
    return 16 * a**4 * c2 * c2 * ct**4 - 4 * b * b * c2 * (2 * a**4 - b * b * d1sq) * ct**2 + a**4 * b**4


def closed_form_delta(a: float, b: float, t: float) -> float:
    return math.sqrt(4 * a * a - b * b) - 2 * math.sqrt(a * a - b * b) * math.sin(t)


def _p2(a: float, b: float, t: float, D: float) -> tuple[float, float]:
    c = math.sqrt(a * a - b * b)
    d1 = math.sqrt(4 * a * a - b * b)
    ct, st = math.cos(t), math.sin(t)
    a2, a4, b2, b3, b4 = a * a, a**4, b * b, b**3, b**4
    x = (
        -4 * a2 * b * c**2 * (4 * a4 - 3 * a2 * b2 + b4) * ct**3
        - 8 * a4 * b * c**3 * d1 * st * ct**3
        - 2 * D * a2 * c * d1 * (2 * a4 - 2 * a2 * b2 + b4) * ct**2
        - 4 * D * a4 * c**2 * (2 * a2 - b2) * st * ct**2
        + a2 * b3 * (4 * a4 - 7 * a2 * b2 + 2 * b4) * ct
        + 2 * a2 * b3 * c**3 * d1 * st * ct
        + a4 * D * b2 * (2 * a2 - b2) * st
        + a4 * b2 * c * d1 * D
    )
    y = (
        8 * a4 * b * c**3 * d1 * ct**4
        + 4 * D * a4 * b2 * c**2 * ct**3
        - 2 * c**2 * d1 * b3 * c * (5 * a2 - 2 * b2) * ct**2
        - 4 * b3 * a2 * c**2 * (3 * a2 - b2) * st * ct**2
        - b2 * D * a2 * (8 * a4 - 9 * a2 * b2 + 2 * b4) * ct
        - 2 * b2 * D * a2 * c * d1 * (2 * a2 - b2) * st * ct
        - st * a4 * b**5
    )
    return x, y


def _p3(a: float, b: float, t: float, D: float) -> tuple[float, float]:
    c = math.sqrt(a * a - b * b)
    d1 = math.sqrt(4 * a * a - b * b)
    ct, st = math.cos(t), math.sin(t)
    a2, a4, b2, b3, b4 = a * a, a**4, b * b, b**3, b**4
    x = (
        -4 * a2 * b * c**2 * (4 * a4 - 3 * a2 * b2 + b4) * ct**3
        - 8 * a4 * b * c**3 * d1 * st * ct**3
        - 2 * D * a2 * c * d1 * (2 * a4 - 2 * a2 * b2 + b4) * ct**2
        - 4 * D * a4 * c**2 * (2 * a2 - b2) * st * ct**2
        + a2 * b3 * (4 * a4 - 7 * a2 * b2 + 2 * b4) * ct
        + 2 * a2 * b3 * c**3 * d1 * st * ct
        + a4 * D * b2 * (2 * a2 - b2) * st
        + D * a4 * b2 * c * d1
    )
    y = (
        8 * a4 * b * c**3 * d1 * ct**4
        + 4 * D * a4 * b2 * c**2 * ct**3
        - 2 * c**3 * d1 * b3 * (5 * a2 - 2 * b2) * ct**2
        - 4 * a2 * b3 * c**2 * (3 * a2 - b2) * st * ct**2
        - a2 * b2 * D * (4 * a2 * c * d1 - 2 * b2 * c * d1) * st * ct
        - a2 * b2 * D * (8 * a4 - 9 * a2 * b2 + 2 * b4) * ct
        - st * a4 * b**5
    )
    return x, y


def brocard_triangle_closed_form(a: float, b: float, t: float) -> Triangle:
    """Brocard-porism vertices from the explicit polynomials.

    Vertex order is (parametrized vertex, +Delta branch, -Delta branch) and
    is not reordered; compare as vertex sets.
    """
    if not (b > 0 and a > b):
        raise InvalidAxes(f"need a > b > 0, got a={a}, b={b}")
    c2 = a * a - b * b
    q = closed_form_q(a, b, t)
    q_scale = 16 * a**4 * c2 * c2 + 4 * b * b * c2 * abs(2 * a**4 - b * b * (4 * a * a - b * b)) + a**4 * b**4
    if abs(q) < 1e-12 * q_scale:
        raise SingularDenominator(f"q(t) vanishes at t={t}")
    D = closed_form_delta(a, b, t)
    x2, y2 = _p2(a, b, t, D)
    x3, y3 = _p3(a, b, t, -D)
    p = brocard_porism_params(a, b)
    p1 = Point(p.R * math.cos(t), p.circumcenter.y + p.R * math.sin(t))
    return Triangle(p1, Point(x2 / q, y2 / q), Point(x3 / q, y3 / q))


@dataclass(frozen=True)
class ClosedFormReport:
    samples: int
    skipped: int
    max_discrepancy: float
    mean_discrepancy: float
    worst_t: float


def vertex_set_discrepancy(t1: Triangle, t2: Triangle) -> float:
    """Largest vertex distance under the best matching of the two vertex sets."""
    best = math.inf
    for perm in permutations(t2.vertices):
        best = min(best, max(distance(p, q) for p, q in zip(t1.vertices, perm)))
    return best


def closed_form_discrepancy(a: float, b: float, n: int = 100) -> ClosedFormReport:
    """Compare the printed closed-form vertices with the tangent construction
    on ``n`` uniform samples of t. Informational only."""
    worst, worst_t, total, used, skipped = 0.0, 0.0, 0.0, 0, 0
    for k in range(n):
        t = TWO_PI * k / n
        try:
            closed = brocard_triangle_closed_form(a, b, t)
        except SingularDenominator:
            skipped += 1
            continue
        d = vertex_set_discrepancy(closed, brocard_triangle(a, b, t))
        used += 1
        total += d
        if d > worst:
            worst, worst_t = d, t
    return ClosedFormReport(used, skipped, worst, total / max(used, 1), worst_t)
