import math

import pytest
from hypothesis import settings

from brocard_porism.geometry import Point, Triangle

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def equilateral(radius: float = 1.0, phase: float = 0.0, center: Point = Point(0.0, 0.0)) -> Triangle:
    return Triangle(*(center + Point(radius * math.cos(phase + k * 2 * math.pi / 3),
                                     radius * math.sin(phase + k * 2 * math.pi / 3)) for k in range(3)))


@pytest.fixture
def right345() -> Triangle:
    return Triangle(Point(0.0, 0.0), Point(4.0, 0.0), Point(0.0, 3.0))
