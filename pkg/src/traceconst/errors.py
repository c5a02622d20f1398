"""
Exception hierarchy for the trace-constant toolkit.

None of these derive from ValueError: pydantic only wraps ValueError and
AssertionError raised inside validators, so domain errors raised while a model
is being built reach the caller unchanged.
"""


class TraceConstError(Exception):
    """Base class for every error raised by this package"""


class InvalidParams(TraceConstError):
    """Shape parameters outside their admissible range"""


class InvalidBody(TraceConstError):
    """Boundary chain that is not closed or has degenerate pieces"""


class NotConvex(InvalidBody):
    """Boundary whose turning is not monotone, or that winds more than once"""


class InvalidPolygon(TraceConstError):
    """Vertex chain that is too short, clockwise or self-intersecting"""


class AtVertex(TraceConstError):
    """Tangent requested at a non-smooth junction"""

    def __init__(self, message: str, s: float = float('nan')):
        super().__init__(message)
        self.s = s


class OutOfRange(TraceConstError):
    """Arc split outside (0, L/2], or a sampling grid below its floor"""


class DegenerateHull(TraceConstError):
    """Random point set whose convex hull has fewer than three vertices"""


class TriangulationFailure(TraceConstError):
    """Ear clipping found no ear, which means the input is not simple"""


class InvalidDim(TraceConstError):
    """Dimension below 2"""


class ResolutionTooHigh(TraceConstError):
    """Combinatorial search requested at a resolution it cannot afford"""


class ParseError(TraceConstError):
    """Malformed polygon file or shape name"""


class ConfigError(TraceConstError):
    """Run configuration outside its documented bounds"""
