"""Synthetic construction of a triangle with prescribed Brocard points and a
prescribed vertex, with its verification.

Steps, for Brocard points W1, W2 and vertex A:

1. Oa = circumcenter of A W1 W2; A' = reflection of A in the midpoint of W1W2.
2. The perpendicular to A Oa through A' meets AW1 at P, AW2 at Q, W1W2 at R.
3. A'' = reflection of A in the midpoint of Q W1; A''' = reflection of A in
   the midpoint of P W2.
4. C is the second intersection of the circle centred at Q through A'' with
   the conic through A, W1, R, Q, A''.
5. B is the second intersection of the circle centred at P through A''' with
   the conic through A, W2, R, P, A'''.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as P

from .centers import brocard_points
from .errors import (
    CollinearPoints,
    DegenerateConfiguration,
    NoSecondRealIntersection,
    VerificationFailed,
)
from .geometry import (
    ConicImplicit,
    Ellipse,
    Line,
    Point,
    Triangle,
    circumcenter3,
    conic_through,
    conic_through_five_points,
    distance,
    intersect_lines,
    midpoint,
    reflect_in_point,
)

__all__ = [
    "MosesResult",
    "circle_conic_candidates",
    "circle_conic_intersect",
    "circumcenter3",
    "moses_construct",
    "moses_solutions",
]

CURVE_TOL = 1e-8
MATCH_TOL = 1e-7


@dataclass(frozen=True)
class MosesResult:
    triangle: Triangle
    intermediates: dict = field(default_factory=dict)
    residual: float = 0.0
    swapped: bool = False  # True when the triangle's Brocard points come out exchanged
    candidates: tuple[int, int] = (1, 1)  # real candidates found for (B, C)


def _circle_residual(circle: Ellipse, p: Point) -> float:
    return abs(distance(p, circle.center) - circle.a) / circle.a


def _conic_residual(conic: ConicImplicit, p: Point, scale: float) -> float:
    g = conic.gradient(p).norm()
    return abs(conic(p)) / max(g * scale, 1e-300)


def circle_conic_candidates(circle: Ellipse, conic: ConicImplicit, known: Point) -> list[Point]:
    """All real intersections of ``circle`` with ``conic`` other than ``known``.

    The circle is parametrized rationally with ``known`` at the parameter's
    point at infinity, so substituting into the conic leaves a polynomial
    whose degree-4 coefficient is the conic's value at ``known``. Dropping
    it deflates the known root exactly; the cubic that remains carries the
    other intersections.
    """
    if abs(circle.a - circle.b) > 1e-12 * circle.a:
        raise ValueError("first argument must be a circle")
    r = circle.a
    Q = circle.center
    if _circle_residual(circle, known) > CURVE_TOL or _conic_residual(conic, known, r) > CURVE_TOL:
        raise DegenerateConfiguration("known point is not on both curves")
    phi = math.atan2(known.y - Q.y, known.x - Q.x)
    e1 = Point(-math.cos(phi), -math.sin(phi))
    e2 = Point(-e1.y, e1.x)
    # homogeneous coordinates of circle(u) times (1 + u^2), ascending powers
    X = np.array([Q.x + r * e1.x, 2 * r * e2.x, Q.x - r * e1.x])
    Y = np.array([Q.y + r * e1.y, 2 * r * e2.y, Q.y - r * e1.y])
    W = np.array([1.0, 0.0, 1.0])

    def mul(u, v):
        # polymul trims trailing zeros; pad back to degree 4
        return np.pad(P.polymul(u, v), (0, 5))[:5]

    poly = (
        conic.a20 * mul(X, X)
        + 2 * conic.a11 * mul(X, Y)
        + conic.a02 * mul(Y, Y)
        + conic.a10 * mul(X, W)
        + conic.a01 * mul(Y, W)
        + conic.a00 * mul(W, W)
    )
    coeffs = poly[:4].copy()
    scale = np.max(np.abs(poly))
    # identical curves: every coefficient vanishes
    if scale == 0 or np.max(np.abs(coeffs)) <= 1e-10 * scale:
        raise NoSecondRealIntersection("circle lies on the conic")
    while len(coeffs) > 1 and abs(coeffs[-1]) <= 1e-12 * scale:
        coeffs = coeffs[:-1]
    roots = P.polyroots(coeffs) if len(coeffs) > 1 else np.array([])
    out = []
    for z in roots:
        if abs(z.imag) > 1e-6 * (1 + abs(z)):
            continue
        u = float(z.real)
        w = 1 + u * u
        p = Point(float(P.polyval(u, X)) / w, float(P.polyval(u, Y)) / w)
        if distance(p, known) <= 1e-9 * r:
            continue
        if _conic_residual(conic, p, r) > CURVE_TOL:
            continue
        if all(distance(p, q) > 1e-9 * r for q in out):
            out.append(p)
    return out


def circle_conic_intersect(
    circle: Ellipse, conic: ConicImplicit, known: Point, apex: Point | None = None
) -> Point:
    """A real intersection of ``circle`` and ``conic`` distinct from
    ``known``.

    With several candidates, the one forming the largest triangle with
    ``apex`` and ``known`` wins (farthest from ``known`` when no apex is
    given).
    """
    cands = circle_conic_candidates(circle, conic, known)
    if not cands:
        raise NoSecondRealIntersection("no real intersection besides the known point")
    if apex is None:
        return max(cands, key=lambda p: distance(p, known))
    return max(cands, key=lambda p: abs((known - apex).cross(p - apex)))


def moses_construct(omega1: Point, omega2: Point, A: Point, tol: float = 1e-7) -> MosesResult:
    sep = distance(omega1, omega2)
    if sep == 0:
        raise DegenerateConfiguration("Brocard points coincide")
    try:
        Oa = circumcenter3(A, omega1, omega2)
    except CollinearPoints:
        raise DegenerateConfiguration("A lies on the line through the Brocard points") from None
    if distance(A, Oa) == 0:
        raise DegenerateConfiguration("A coincides with the circumcenter of A W1 W2")
    A1 = reflect_in_point(A, midpoint(omega1, omega2))
    normal = (Oa - A) / distance(Oa, A)
    ell = Line(normal, normal.dot(A1))
    Pp = intersect_lines(ell, Line.through(A, omega1))
    Qp = intersect_lines(ell, Line.through(A, omega2))
    base = Line.through(omega1, omega2)
    try:
        Rp = intersect_lines(ell, base)
    except DegenerateConfiguration:
        # A on the perpendicular bisector of W1W2: R is the point at infinity of ell
        Rp = None
    A2 = reflect_in_point(A, midpoint(Qp, omega1))
    A3 = reflect_in_point(A, midpoint(Pp, omega2))
    if Rp is None:
        conic1 = conic_through([A, omega1, Qp, A2], [ell.direction])
        conic2 = conic_through([A, omega2, Pp, A3], [ell.direction])
    else:
        conic1 = conic_through_five_points([A, omega1, Rp, Qp, A2])
        conic2 = conic_through_five_points([A, omega2, Rp, Pp, A3])
    circle_c = Ellipse(Qp, distance(Qp, A2), distance(Qp, A2))
    circle_b = Ellipse(Pp, distance(Pp, A3), distance(Pp, A3))
    c_cands = circle_conic_candidates(circle_c, conic1, A2)
    b_cands = circle_conic_candidates(circle_b, conic2, A3)
    intermediates = {
        "Oa": Oa,
        "Aprime": A1,
        "P": Pp,
        "Q": Qp,
        "R": Rp,
        "Adp": A2,
        "Atp": A3,
        "conic1": conic1,
        "conic2": conic2,
        "B_candidates": b_cands,
        "C_candidates": c_cands,
    }
    if not b_cands or not c_cands:
        raise NoSecondRealIntersection("construction has no real second intersection")
    best = _select(A, b_cands, c_cands, omega1, omega2, sep)
    if best is None:
        raise VerificationFailed("no intersection choice yields a non-degenerate triangle", intermediates)
    tri, residual, swapped = best
    if residual > tol:
        raise VerificationFailed(f"Brocard points off by {residual:.3e} (relative)", intermediates)
    return MosesResult(tri, intermediates, residual, swapped, (len(b_cands), len(c_cands)))


def _score(A, b_cands, c_cands, omega1, omega2, sep):
    scored = []
    for B in b_cands:
        for C in c_cands:
            tri = Triangle(A, B, C)
            if tri.is_degenerate():
                continue
            f1, f2 = brocard_points(tri.counterclockwise())
            direct = max(distance(f1, omega1), distance(f2, omega2)) / sep
            exchanged = max(distance(f1, omega2), distance(f2, omega1)) / sep
            scored.append((tri, direct, exchanged))
    return scored


def _select(A, b_cands, c_cands, omega1, omega2, sep):
    """Pick (B, C) among the candidate intersections.

    With a single candidate per circle there is nothing to choose. Otherwise
    every pairing is scored by how well triangle ABC has first Brocard point
    W1 and second W2; pairings that match (relative error 1e-7) are ranked
    by area and the largest wins. When only the exchanged assignment
    matches, the largest such triangle is returned and flagged as swapped.
    """
    scored = _score(A, b_cands, c_cands, omega1, omega2, sep)
    if not scored:
        return None
    direct = [s for s in scored if s[1] <= MATCH_TOL]
    if direct:
        tri, res, _ = max(direct, key=lambda s: s[0].area())
        return tri, res, False
    exchanged = [s for s in scored if s[2] <= MATCH_TOL]
    if exchanged:
        tri, _, res = max(exchanged, key=lambda s: s[0].area())
        return tri, res, True
    tri, d, e = min(scored, key=lambda s: min(s[1], s[2]))
    return tri, min(d, e), e < d


def moses_solutions(omega1: Point, omega2: Point, A: Point) -> list[Triangle]:
    """Every candidate triangle of the construction whose first and second
    Brocard points are ``omega1`` and ``omega2``.

    A vertex and two Brocard points do not always pin down one triangle: the
    circle/conic intersections can admit two genuine solutions.
    """
    result = moses_construct(omega1, omega2, A)
    d = result.intermediates
    sep = distance(omega1, omega2)
    scored = _score(A, d["B_candidates"], d["C_candidates"], omega1, omega2, sep)
    return [tri for tri, direct, _ in scored if direct <= MATCH_TOL]
