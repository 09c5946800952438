import math
import random

import pytest

from brocard_porism.centers import CenterId, triangle_center
from brocard_porism.errors import CircularDegeneracy, CollinearSamples, DegenerateSamples
from brocard_porism.families import FamilyKind, FamilySpec, homothetic_triangle
from brocard_porism.geometry import Point, distance
from brocard_porism.loci import (
    FitKind,
    axis_intersection_check,
    circle_rms,
    fit_axis_aligned_ellipse,
    fit_circle,
    sample_locus,
    winding_number,
    x2_locus_brocard,
    x2_locus_radius_from_angle,
    x39_closed_form_point,
    x39_locus_closed_form,
)

HOMO = FamilySpec(FamilyKind.HOMOTHETIC, 2.0, 1.0)
PORISM = FamilySpec(FamilyKind.BROCARD, 1.0, 0.8)


def _pts(samples):
    return [s.p for s in samples]


class TestClosedForms:
    def test_x39_semi_axes(self):
        assert x39_locus_closed_form(2.0, 1.0) == pytest.approx((3 / 7, 3 / 26), rel=1e-15)
        assert x39_locus_closed_form(1.0, 1.0) == (0.0, 0.0)

    def test_x39_at_zero(self):
        measured = triangle_center(homothetic_triangle(2.0, 1.0, 0.0), CenterId.X39)
        expected = x39_closed_form_point(2.0, 1.0, 0.0)
        assert (expected.x, expected.y) == pytest.approx((-3 / 7, 0.0))
        assert distance(measured, expected) < 1e-12

    def test_x39_pointwise(self):
        for t in [0.1 * k for k in range(63)]:
            measured = triangle_center(homothetic_triangle(2.0, 1.0, t), CenterId.X39)
            assert distance(measured, x39_closed_form_point(2.0, 1.0, t)) < 1e-12

    def test_x2_circle(self):
        c, r = x2_locus_brocard(1.0, 0.8)
        assert (c.x, c.y, r) == pytest.approx((0.0, -0.458257, 0.3), abs=1e-6)
        assert x2_locus_radius_from_angle(1.0, 0.8) == pytest.approx(0.3, rel=1e-12)

    def test_x2_circular(self):
        c, r = x2_locus_brocard(1.0, 1.0)
        assert r == 0.0 and c.norm() == 0.0

    def test_x2_forms_agree_on_grid(self):
        for a in (0.5, 1.0, 2.0, 7.0, 13.0):
            for ratio in (0.05, 0.1, 0.3, 0.5, 0.6, 0.75, 0.8, 0.9, 0.97, 1.0):
                b = a * ratio
                assert abs(x2_locus_brocard(a, b)[1] - x2_locus_radius_from_angle(a, b)) < 1e-12 * a


class TestFits:
    def test_exact_circle(self):
        pts = [Point(1 + 3 * math.cos(t), 2 + 3 * math.sin(t)) for t in [k * 0.0628 for k in range(100)]]
        f = fit_circle(pts)
        assert f.kind is FitKind.CIRCLE
        assert (f.center.x, f.center.y, f.semi_axes[0]) == pytest.approx((1.0, 2.0, 3.0), abs=1e-10)

    def test_exact_ellipse(self):
        a, b = 3 / 7, 3 / 26
        pts = [Point(0.5 + a * math.cos(t), -1 + b * math.sin(t)) for t in [k * 0.1 for k in range(63)]]
        f = fit_axis_aligned_ellipse(pts)
        assert f.semi_axes == pytest.approx((a, b), abs=1e-10)
        assert (f.center.x, f.center.y) == pytest.approx((0.5, -1.0), abs=1e-10)

    def test_collinear(self):
        with pytest.raises(CollinearSamples):
            fit_circle([Point(k, 2 * k) for k in range(10)])

    def test_too_few(self):
        with pytest.raises(CollinearSamples):
            fit_circle([Point(0, 0), Point(1, 1)])
        with pytest.raises(DegenerateSamples):
            fit_axis_aligned_ellipse([Point(0, 0), Point(1, 1), Point(2, 0)])

    def test_point_locus(self):
        f = fit_circle([Point(1.0, 1.0)] * 5, scale=1.0)
        assert f.kind is FitKind.POINT_LOCUS

    def test_ellipse_rejected_by_circle_fit(self):
        samples = _pts(sample_locus(HOMO, "X39", 400))
        assert fit_circle(samples).rms_residual > 1e-3


class TestLociOverFamilies:
    def test_x39_homothetic(self):
        samples = _pts(sample_locus(HOMO, CenterId.X39, 1000))
        f = fit_axis_aligned_ellipse(samples)
        assert f.semi_axes == pytest.approx(x39_locus_closed_form(2.0, 1.0), rel=1e-8)
        assert f.rms_residual < 1e-8

    def test_x39_inside_caustic(self):
        a39, b39 = x39_locus_closed_form(2.0, 1.0)
        assert max(a39 / 1.0, b39 / 0.5) < 1

    def test_x39_winds_three_times(self):
        samples = _pts(sample_locus(HOMO, "X39", 600))
        assert abs(winding_number(samples, Point(0, 0))) == pytest.approx(3.0, abs=1e-9)

    def test_x2_porism(self):
        samples = _pts(sample_locus(PORISM, "X2", 1000))
        f = fit_circle(samples)
        c, r = x2_locus_brocard(1.0, 0.8)
        assert distance(f.center, c) < 1e-8
        assert f.semi_axes[0] == pytest.approx(r, rel=1e-8)
        assert circle_rms(samples, c, r) < 1e-8


class TestAxisIntersection:
    def test_single(self):
        assert axis_intersection_check(1.0, 0.8, 0.3) < 1e-8

    def test_random(self):
        rng = random.Random(7)
        assert max(axis_intersection_check(1.0, 0.8, rng.uniform(0, 2 * math.pi)) for _ in range(50)) < 1e-8

    def test_circular(self):
        with pytest.raises(CircularDegeneracy):
            axis_intersection_check(1.0, 1.0, 0.3)
