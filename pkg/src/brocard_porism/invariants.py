"""Family sweeps and the closed-form invariants they are checked against."""

from __future__ import annotations

import enum
import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Sequence

from .centers import (
    CenterId,
    brocard_inellipse,
    brocard_points,
    circumradius,
    cot_omega,
    brocard_angle,
    shail_check,
    steiner_circumellipse,
    sum_squared_sides,
    triangle_center,
)
from .errors import GeometryError, TooFewValidSamples
from .families import TWO_PI, FamilyKind, FamilySpec
from .geometry import DEFAULT_TOL, Point, Triangle, conic_axis_ratio, distance

MAX_DEGENERATE_FRACTION = 0.10


@dataclass(frozen=True)
class InvariantReport:
    name: str
    closed_form: float | tuple[float, float] | None
    samples: int
    mean: float | tuple[float, float]
    max_abs_dev: float
    rel_dev: float
    closed_form_error: float | None = None
    excluded: int = 0
    note: str | None = None
    extra: dict = field(default_factory=dict)

    def passed(self, tol: float = DEFAULT_TOL) -> bool:
        if not self.rel_dev <= tol:
            return False
        return self.closed_form_error is None or self.closed_form_error <= tol

    def to_dict(self, tol: float = DEFAULT_TOL) -> dict:
        d = asdict(self)
        for key in ("closed_form", "mean"):
            if isinstance(d[key], tuple):
                d[key] = list(d[key])
        d["pass"] = self.passed(tol)
        return d


def scalar_report(
    name: str,
    values: Sequence[float],
    closed_form: float | None = None,
    scale: float | None = None,
    excluded: int = 0,
    note: str | None = None,
    extra: dict | None = None,
) -> InvariantReport:
    """Summarize samples of a quantity that should be constant.

    Deviations are made relative to ``scale`` when given, otherwise to the
    magnitude of the mean. Residual-type statistics pass ``scale=1``.
    """
    if len(values) < 2:
        raise TooFewValidSamples("need at least two samples")
    mean = math.fsum(values) / len(values)
    max_dev = max(abs(v - mean) for v in values)
    ref = scale if scale is not None else abs(mean)
    rel = max_dev / ref if ref > 1e-300 else math.inf
    cf_err = None
    if closed_form is not None:
        cf_ref = scale if scale is not None else abs(closed_form)
        worst = max(abs(v - closed_form) for v in values)
        cf_err = worst / cf_ref if cf_ref > 1e-300 else worst
    return InvariantReport(name, closed_form, len(values), mean, max_dev, rel, cf_err, excluded, note, extra or {})


def point_report(
    name: str,
    points: Sequence[Point],
    scale: float,
    closed_form: Point | None = None,
    excluded: int = 0,
    note: str | None = None,
) -> InvariantReport:
    """Summarize samples of a point that should be stationary; deviations are
    distances divided by the family's length ``scale``."""
    if len(points) < 2:
        raise TooFewValidSamples("need at least two samples")
    n = len(points)
    mean = Point(math.fsum(p.x for p in points) / n, math.fsum(p.y for p in points) / n)
    max_dev = max(distance(p, mean) for p in points)
    cf_err = None
    cf = None
    if closed_form is not None:
        cf = (closed_form.x, closed_form.y)
        cf_err = max(distance(p, closed_form) for p in points) / scale
    return InvariantReport(name, cf, n, (mean.x, mean.y), max_dev, max_dev / scale, cf_err, excluded, note)


# Named measurements usable by sweep().
STATISTICS: dict[str, Callable[[Triangle], float]] = {
    "area": Triangle.area,
    "sum_sq": sum_squared_sides,
    "perimeter": lambda tri: math.fsum(tri.sides),
    "omega": brocard_angle,
    "cot_omega": cot_omega,
    "circumradius": circumradius,
    "shail": shail_check,
    "brocard_inellipse_ratio": lambda tri: brocard_inellipse(tri).aspect_ratio,
    "steiner_ratio": lambda tri: conic_axis_ratio(steiner_circumellipse(tri)),
}

POINT_STATISTICS: dict[str, Callable[[Triangle], Point]] = {
    **{cid.value: (lambda tri, cid=cid: triangle_center(tri, cid)) for cid in CenterId},
    "omega1": lambda tri: brocard_points(tri)[0],
    "omega2": lambda tri: brocard_points(tri)[1],
}


def sample_ts(n: int) -> list[float]:
    return [TWO_PI * k / n for k in range(n)]


def sample_family(spec: FamilySpec, n: int) -> tuple[list[tuple[float, Triangle]], int]:
    """Valid (t, triangle) pairs in t-order plus the number excluded as
    degenerate (construction failure or area below 1e-10 a b)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    floor = 1e-10 * spec.a * spec.b
    out, bad = [], 0
    for t in sample_ts(n):
        try:
            tri = spec.triangle(t)
        except GeometryError:
            bad += 1
            continue
        if tri.area() < floor:
            bad += 1
            continue
        out.append((t, tri))
    if bad > MAX_DEGENERATE_FRACTION * n:
        raise TooFewValidSamples(f"{bad} of {n} samples degenerate")
    return out, bad


def _measure(samples, fn):
    values, bad = [], 0
    for _, tri in samples:
        try:
            values.append(fn(tri))
        except GeometryError:
            bad += 1
    if bad > MAX_DEGENERATE_FRACTION * max(len(samples), 1):
        raise TooFewValidSamples(f"{bad} of {len(samples)} measurements failed")
    return values, bad


def sweep(
    spec: FamilySpec,
    statistic: str | Callable[[Triangle], float],
    n: int = 1000,
    closed_form: float | None = None,
    scale: float | None = None,
    name: str | None = None,
) -> InvariantReport:
    fn = STATISTICS[statistic] if isinstance(statistic, str) else statistic
    label = name or (statistic if isinstance(statistic, str) else getattr(fn, "__name__", "statistic"))
    samples, bad = sample_family(spec, n)
    values, failed = _measure(samples, fn)
    return scalar_report(label, values, closed_form, scale, excluded=bad + failed)


def sweep_point(
    spec: FamilySpec,
    statistic: str | Callable[[Triangle], Point],
    n: int = 1000,
    closed_form: Point | None = None,
    name: str | None = None,
) -> InvariantReport:
    fn = POINT_STATISTICS[statistic] if isinstance(statistic, str) else statistic
    label = name or (statistic if isinstance(statistic, str) else "point")
    samples, bad = sample_family(spec, n)
    points, failed = _measure(samples, fn)
    return point_report(label, points, spec.a, closed_form, excluded=bad + failed)


# Closed forms


AREA_ERRATUM = (
    "closed-form area is 3*sqrt(3)*a*b/4; the printed value 3*sqrt(3)*a*b/2 "
    "is inconsistent with cot(omega) = sum(s^2)/(4*area) and with the t=0 triangle"
)


def homothetic_invariants(a: float, b: float) -> dict[str, float]:
    return {
        "area": 3 * math.sqrt(3) * a * b / 4,
        "area_printed": 3 * math.sqrt(3) * a * b / 2,
        "sum_sq": 4.5 * (a * a + b * b),
        "cot_omega": math.sqrt(3) * (a * a + b * b) / (2 * a * b),
    }


def johnson_cot_omega(phi: float) -> float:
    """cot of the Brocard angle of an equilateral triangle seen in a plane
    tilted by ``phi``."""
    c = math.cos(phi)
    return math.sqrt(3) / 2 * (c + 1 / c)


def homothetic_beta(a: float, b: float) -> float:
    """Aspect ratio of the Brocard inellipse over the homothetic family."""
    return math.sqrt(3 * a**4 + 10 * a * a * b * b + 3 * b**4) / (4 * a * b)


def brocard_sigma(a: float, b: float) -> float:
    """Aspect ratio of the Steiner circumellipse over the Brocard porism."""
    s2 = (8 * a * a - 5 * b * b + 4 * math.sqrt(4 * a**4 - 5 * a * a * b * b + b**4)) / (3 * b * b)
    return math.sqrt(s2)


class EllipseWhich(str, enum.Enum):
    BROCARD_INELLIPSE = "brocard_inellipse"
    STEINER_CIRCUMELLIPSE = "steiner_circumellipse"


def aspect_ratio_sweep(spec: FamilySpec, which: EllipseWhich | str, n: int = 1000) -> InvariantReport:
    which = EllipseWhich(which)
    closed = None
    if which is EllipseWhich.BROCARD_INELLIPSE:
        stat = STATISTICS["brocard_inellipse_ratio"]
        if spec.kind is FamilyKind.HOMOTHETIC:
            closed = homothetic_beta(spec.a, spec.b)
    else:
        stat = STATISTICS["steiner_ratio"]
        if spec.kind is FamilyKind.BROCARD:
            closed = brocard_sigma(spec.a, spec.b)
    return sweep(spec, stat, n, closed_form=closed, name=which.value + "_ratio")


def family_reports(spec: FamilySpec, n: int = 1000) -> list[InvariantReport]:
    """The standard invariant suite for a family."""
    a, b = spec.a, spec.b
    reports = []
    if spec.kind is FamilyKind.HOMOTHETIC:
        cf = homothetic_invariants(a, b)
        area = sweep(spec, "area", n, cf["area"])
        reports.append(
            InvariantReport(**{**area.__dict__, "note": AREA_ERRATUM, "extra": {"printed_closed_form": cf["area_printed"]}})
        )
        reports.append(sweep(spec, "sum_sq", n, cf["sum_sq"]))
        reports.append(sweep(spec, "cot_omega", n, cf["cot_omega"]))
        reports.append(sweep(spec, "omega", n, math.atan2(1.0, cf["cot_omega"])))
        if a > b:
            reports.append(aspect_ratio_sweep(spec, EllipseWhich.BROCARD_INELLIPSE, n))
        return reports

    p = spec.params()
    reports.append(sweep(spec, "cot_omega", n, p.cot_omega))
    reports.append(sweep(spec, "omega", n, p.omega))
    reports.append(sweep(spec, "circumradius", n, p.R))
    reports.append(sweep_point(spec, "X3", n, p.circumcenter))
    reports.append(sweep_point(spec, "omega1", n, Point(-p.c, 0.0)))
    reports.append(sweep_point(spec, "omega2", n, Point(p.c, 0.0)))
    reports.append(sweep_point(spec, "X39", n, Point(0.0, 0.0)))
    reports.append(sweep_point(spec, "X6", n))
    reports.append(sweep_point(spec, "X182", n))
    reports.append(sweep(spec, "shail", n, 0.0, scale=1.0))
    if spec.kind is FamilyKind.BROCARD and a > b:
        reports.append(aspect_ratio_sweep(spec, EllipseWhich.STEINER_CIRCUMELLIPSE, n))
    return reports
