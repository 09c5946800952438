import math

import pytest

from brocard_porism.circles import (
    BROCARD_CIRCLE_ERRATUM,
    brocard_circle_radius,
    brocard_circle_radius_angular,
    brocard_circle_radius_table,
    brocard_radius_routes,
    stationary_circles,
    verify_stationarity,
    x182_closed_form,
    x182_printed,
)
from brocard_porism.errors import InvalidAxes
from brocard_porism.families import brocard_porism_params


def _by_name(circles):
    return {c.name: c for c in circles}


class TestRegistry:
    def test_reference_radii(self):
        c = _by_name(stationary_circles(1.0, 0.8))
        assert c["Circumcircle"].e == pytest.approx(0.6, rel=1e-14)
        expected = {
            "Circumcircle": 2.5,
            "2nd Brocard": 1.5,
            "Stammler": 5.0,
            "Gallatly": 1.0,
            "Moses": 0.8,
            "Half-Moses": 0.4,
            "2nd Lemoine": 1.091089,
            "1st Lemoine": 1.363862,
            "Lucas Inner": 0.154654,
            "Brocard": 0.818317,
        }
        for name, r in expected.items():
            assert c[name].radius == pytest.approx(r, abs=2e-6), name

    def test_centers(self):
        c = _by_name(stationary_circles(1.0, 0.8))
        assert c["Circumcircle"].center.y == pytest.approx(-1.374773, abs=1e-6)
        assert c["Gallatly"].center.norm() == 0.0
        assert c["Brocard"].center_id == "X182"
        assert c["Brocard"].center.y == pytest.approx(-0.556456, abs=1e-6)
        assert BROCARD_CIRCLE_ERRATUM in c["Brocard"].note

    def test_lucas_unverifiable(self):
        lucas = _by_name(stationary_circles(1.0, 0.8))["Lucas Inner"]
        assert lucas.center is None and not lucas.verifiable

    def test_circular(self):
        c = _by_name(stationary_circles(1.0, 1.0))
        assert c["Circumcircle"].e == 0.0
        assert c["2nd Brocard"].radius == 0.0
        assert c["Brocard"].radius == 0.0

    def test_invalid(self):
        with pytest.raises(InvalidAxes):
            stationary_circles(0.5, 1.0)

    def test_radius_positive(self):
        for a, b in ((1.0, 0.5), (2.0, 1.9), (3.0, 0.2)):
            assert all(c.radius > 0 for c in stationary_circles(a, b))


class TestBrocardRadius:
    def test_forms_agree(self):
        for a in (0.5, 1.0, 3.0):
            for r in (0.1, 0.4, 0.8, 0.99):
                b = a * r
                p = brocard_porism_params(a, b)
                assert brocard_circle_radius(a, b) == pytest.approx(
                    brocard_circle_radius_angular(p.R, p.omega), rel=1e-12
                )

    def test_table_value_differs(self):
        p = brocard_porism_params(1.0, 0.8)
        assert brocard_circle_radius_table(p.R, p.omega) == pytest.approx(0.687386, abs=1e-6)
        assert brocard_circle_radius(1.0, 0.8) / brocard_circle_radius_table(p.R, p.omega) == pytest.approx(
            1 / math.cos(p.omega) ** 2
        )

    def test_three_routes(self):
        r = brocard_radius_routes(1.0, 0.8)
        assert r.spread() < 1e-12
        assert r.closed_form == pytest.approx(0.818318, abs=1e-6)
        assert r.x6_residual < 1e-9

    def test_printed_center_erratum(self):
        assert x182_printed(1.0, 0.8).y == pytest.approx(-0.477158, abs=2e-6)
        assert x182_closed_form(1.0, 0.8).y == pytest.approx(-0.556456, abs=1e-6)


class TestStationarity:
    def test_all_constant(self):
        reports = verify_stationarity(1.0, 0.8, 360)
        assert len(reports) == 10
        for r in reports:
            assert r.passed(1e-8), r

    def test_circumcircle_drift(self):
        circ = next(r for r in verify_stationarity(1.0, 0.8, 360) if r.name == "Circumcircle")
        assert circ.center_drift < 1e-10 and circ.radius_dev < 1e-10

    def test_brocard_circle_through_x6(self):
        broc = next(r for r in verify_stationarity(1.0, 0.8, 360) if r.name == "Brocard")
        assert broc.extra["x6_on_circle_residual"] < 1e-9
        assert broc.closed_radius == pytest.approx(0.818318, abs=1e-6)

    def test_second_brocard_constant(self):
        rep = next(r for r in verify_stationarity(1.0, 0.8, 360) if r.name == "2nd Brocard")
        assert rep.closed_radius == pytest.approx(1.5, rel=1e-12)
        assert rep.radius_error < 1e-10

    def test_other_family(self):
        assert all(r.passed(1e-8) for r in verify_stationarity(1.7, 0.6, 120))
