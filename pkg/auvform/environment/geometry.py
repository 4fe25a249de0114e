"""Planar geometry shared by sensing, observations and rewards."""
import math

import numpy as np

from ..exceptions import DegenerateGeometry


__all__ = (
    "TWO_PI",
    "wrap_angle",
    "wrap_angles",
    "distance",
    "bearing",
    "circumcenter",
    "enclosing_circle",
    "rotate_point",
)

TWO_PI = 2.0 * math.pi

# Twice the signed triangle area below which three points count as collinear.
COLLINEAR_TOLERANCE = 1e-9


def wrap_angle(a):
    """Wrap an angle in radians to [-pi, pi). Angles already in range are
       returned unchanged, bit for bit.
    """
    if -math.pi <= a < math.pi:
        return a
    wrapped = (a + math.pi) % TWO_PI - math.pi
    # (x % 2pi) can round up to exactly 2pi for tiny negative x
    if wrapped >= math.pi:
        wrapped -= TWO_PI
    return wrapped


def wrap_angles(a):
    a = np.asarray(a, dtype=np.float64)
    wrapped = np.mod(a + math.pi, TWO_PI) - math.pi
    wrapped = np.where(wrapped >= math.pi, wrapped - TWO_PI, wrapped)
    return np.where((a >= -math.pi) & (a < math.pi), a, wrapped)


def distance(p, q):
    return math.hypot(q[0] - p[0], q[1] - p[1])


def bearing(p, q):
    """Earth-frame angle of the line from p to q, measured from the x axis."""
    return math.atan2(q[1] - p[1], q[0] - p[0])


def rotate_point(p, angle, origin=(0.0, 0.0)):
    c, s = math.cos(angle), math.sin(angle)
    dx, dy = p[0] - origin[0], p[1] - origin[1]
    return (origin[0] + c * dx - s * dy, origin[1] + s * dx + c * dy)


def circumcenter(p1, p2, p3):
    """Centre and radius of the circle through three points.

    Parameters
    ----------
    p1, p2, p3 : sequence of float
        Planar points (m).

    Returns
    -------
    center : tuple of float
    radius : float

    Raises
    ------
    DegenerateGeometry
        The points are collinear within `COLLINEAR_TOLERANCE`.
    """
    # Work relative to p1 to keep the arithmetic well conditioned far from
    # the origin.
    bx, by = p2[0] - p1[0], p2[1] - p1[1]
    cx, cy = p3[0] - p1[0], p3[1] - p1[1]
    cross = bx * cy - by * cx
    if abs(cross) <= COLLINEAR_TOLERANCE:
        raise DegenerateGeometry(
            "Points %r, %r, %r are collinear (twice signed area %.3e)"
            % (tuple(p1), tuple(p2), tuple(p3), cross)
        )
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    d = 2.0 * cross
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    return (p1[0] + ux, p1[1] + uy), math.hypot(ux, uy)


def enclosing_circle(p1, p2, p3):
    """As `circumcenter`, but collinear points fall back to the centroid and
       the largest centroid-vertex distance instead of raising.
    """
    try:
        return circumcenter(p1, p2, p3)
    except DegenerateGeometry:
        gx = (p1[0] + p2[0] + p3[0]) / 3.0
        gy = (p1[1] + p2[1] + p3[1]) / 3.0
        radius = max(distance((gx, gy), p) for p in (p1, p2, p3))
        return (gx, gy), radius
