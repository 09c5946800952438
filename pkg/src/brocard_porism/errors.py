"""Exception hierarchy shared by every module of the package."""


class GeometryError(Exception):
    """Base class for all geometric failures raised by this package."""


class DegenerateTriangle(GeometryError):
    pass


class PointAtInfinity(GeometryError):
    pass


class DegenerateConfiguration(GeometryError):
    pass


class NotAnEllipse(GeometryError):
    pass


class PointInsideEllipse(GeometryError):
    pass


class InvalidAxes(GeometryError, ValueError):
    pass


class InvalidLambda(GeometryError, ValueError):
    pass


class VertexInsideCaustic(GeometryError):
    pass


class SingularDenominator(GeometryError):
    pass


class InconsistentTangency(GeometryError):
    pass


class CircularDegeneracy(GeometryError):
    pass


class CollinearPoints(GeometryError):
    pass


class CollinearSamples(GeometryError):
    pass


class DegenerateSamples(GeometryError):
    pass


class NoSecondRealIntersection(GeometryError):
    pass


class TooFewValidSamples(GeometryError):
    pass


class VerificationFailed(GeometryError):
    """Raised when a construction finishes but its post-check fails.

    ``details`` carries whatever intermediates the caller needs to diagnose
    the failure.
    """

    def __init__(self, message, details=None):
        super().__init__(message)
        self.details = details or {}
