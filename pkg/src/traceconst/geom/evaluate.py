from ..errors import AtVertex
from ..models.base import Point2
from ..models.body import ConvexBody


def boundary_point(body: ConvexBody, s: float) -> Point2:
    """x(s mod L) on the unit-speed counterclockwise parametrization"""
    return Point2.of(body.points(float(s)))


def boundary_tangent(body: ConvexBody, s: float) -> Point2:
    """Unit tangent x'(s); undefined at corners of the boundary"""
    if body.at_corner(s):
        raise AtVertex(f"s={s} lies at a non-smooth junction; use one-sided tangents", s=s)
    return Point2.of(body.tangents(float(s)))
