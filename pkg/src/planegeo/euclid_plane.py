"""Euclidean-plane primitives: signed angles, feet, reflections, triangle
centers, circle tangency.  Points are complex numbers (x + i*y); the
counterclockwise direction counts as positive, anchored by angle((1,0), 0, (0,1)) = +pi/2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .core_numerics import (
    DEFAULT_TOLERANCES,
    GeometryError,
    Tolerances,
    bbox_scale,
    normalize_angle,
)


def cross(u: complex, v: complex) -> float:
    return u.real * v.imag - u.imag * v.real


def dot(u: complex, v: complex) -> float:
    return u.real * v.real + u.imag * v.imag


def dist(a: complex, b: complex) -> float:
    return abs(a - b)


def midpoint(a: complex, b: complex) -> complex:
    return (a + b) / 2.0


@dataclass(frozen=True)
class Line:
    """Parametric line: ``anchor + t * direction`` with unit direction."""

    anchor: complex
    direction: complex

    def __post_init__(self) -> None:
        if abs(abs(self.direction) - 1.0) > 1e-9:
            raise GeometryError("line direction must be a unit complex number")

    def point_at(self, t: float) -> complex:
        return self.anchor + t * self.direction

    def param_of(self, p: complex) -> float:
        return dot(p - self.anchor, self.direction)


@dataclass(frozen=True)
class Circle:
    center: complex
    radius: float

    def __post_init__(self) -> None:
        if not (self.radius > 0.0 and math.isfinite(self.radius)):
            raise GeometryError("circle radius must be positive and finite")

    def point_at(self, theta: float) -> complex:
        return self.center + self.radius * cmath.exp(1j * theta)


@dataclass(frozen=True)
class Triangle:
    """Ordered vertex triple."""

    a: complex
    b: complex
    c: complex

    def vertices(self) -> tuple[complex, complex, complex]:
        return (self.a, self.b, self.c)

    def scale(self) -> float:
        return bbox_scale(self.vertices())

    def is_degenerate(self, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
        s = self.scale()
        return abs(cross(self.b - self.a, self.c - self.a)) < tol.eps_degenerate * s * s


def line_through(a: complex, b: complex, tol: Tolerances = DEFAULT_TOLERANCES) -> Line:
    if abs(b - a) <= tol.eps_degenerate * bbox_scale((a, b)):
        raise GeometryError("cannot build a line through coincident points")
    return Line(a, (b - a) / abs(b - a))


def signed_angle(a: complex, o: complex, b: complex, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Signed angle at vertex ``o`` from ray toward ``a`` to ray toward ``b``."""
    s = bbox_scale((a, o, b))
    if abs(a - o) <= tol.eps_degenerate * s or abs(b - o) <= tol.eps_degenerate * s:
        raise GeometryError("degenerate angle: vertex coincides with a side point")
    return normalize_angle(cmath.phase((b - o) / (a - o)))


def foot_point(p: complex, l: Line) -> complex:
    return l.anchor + dot(p - l.anchor, l.direction) * l.direction


def reflect_line(p: complex, l: Line) -> complex:
    return 2.0 * foot_point(p, l) - p


def same_side(l: Line, x: complex, y: complex, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """True iff ``x`` and ``y`` lie in the same open half-plane of ``l``."""
    s = bbox_scale((l.anchor, x, y))
    cx = cross(l.direction, x - l.anchor)
    cy = cross(l.direction, y - l.anchor)
    if abs(cx) <= tol.eps_degenerate * s or abs(cy) <= tol.eps_degenerate * s:
        raise GeometryError("point lies on the boundary line")
    return (cx > 0.0) == (cy > 0.0)


def _require_nondegenerate(t: Triangle, tol: Tolerances) -> None:
    if t.is_degenerate(tol):
        raise GeometryError("degenerate triangle")


def circumcenter(t: Triangle, tol: Tolerances = DEFAULT_TOLERANCES) -> tuple[complex, float]:
    """Center and radius of the circle through the three vertices."""
    _require_nondegenerate(t, tol)
    u = t.b - t.a
    v = t.c - t.a
    d = 2.0 * cross(u, v)
    uu = dot(u, u)
    vv = dot(v, v)
    px = (v.imag * uu - u.imag * vv) / d
    py = (u.real * vv - v.real * uu) / d
    center = t.a + complex(px, py)
    return center, abs(center - t.a)


def intersect_lines(l1: Line, l2: Line, tol: Tolerances = DEFAULT_TOLERANCES) -> complex:
    den = cross(l1.direction, l2.direction)
    if abs(den) <= tol.eps_degenerate:
        raise GeometryError("lines are parallel or coincident")
    t = cross(l2.anchor - l1.anchor, l2.direction) / den
    return l1.point_at(t)


def orthocenter(t: Triangle, tol: Tolerances = DEFAULT_TOLERANCES) -> complex:
    """Common point of the three altitudes."""
    _require_nondegenerate(t, tol)
    alt_a = Line(t.a, 1j * (t.c - t.b) / abs(t.c - t.b))
    alt_b = Line(t.b, 1j * (t.a - t.c) / abs(t.a - t.c))
    return intersect_lines(alt_a, alt_b, tol)


def centroid(t: Triangle, tol: Tolerances = DEFAULT_TOLERANCES) -> complex:
    _require_nondegenerate(t, tol)
    return (t.a + t.b + t.c) / 3.0


def incenter(t: Triangle, tol: Tolerances = DEFAULT_TOLERANCES) -> tuple[complex, float]:
    """Center and radius of the inscribed circle (side-length weighted mean)."""
    _require_nondegenerate(t, tol)
    la = abs(t.b - t.c)
    lb = abs(t.c - t.a)
    lc = abs(t.a - t.b)
    center = (la * t.a + lb * t.b + lc * t.c) / (la + lb + lc)
    area = abs(cross(t.b - t.a, t.c - t.a)) / 2.0
    radius = area / ((la + lb + lc) / 2.0)
    return center, radius


def bisector_foot(t: Triangle, tol: Tolerances = DEFAULT_TOLERANCES) -> complex:
    """Point D on [BC] where the bisector from A lands; DB/DC = AB/AC."""
    _require_nondegenerate(t, tol)
    ab = abs(t.b - t.a)
    ac = abs(t.c - t.a)
    return t.b + (ab / (ab + ac)) * (t.c - t.b)


def tangency_classify(c1: Circle, c2: Circle, tol: Tolerances = DEFAULT_TOLERANCES) -> str:
    """One of disjoint | ext_tangent | intersecting | int_tangent | nested."""
    d = abs(c1.center - c2.center)
    band = tol.eps_assert * max(1.0, c1.radius, c2.radius, d)
    if d <= band and abs(c1.radius - c2.radius) <= band:
        raise GeometryError("identical circles")
    if abs(d - (c1.radius + c2.radius)) <= band:
        return "ext_tangent"
    if abs(d - abs(c1.radius - c2.radius)) <= band:
        return "int_tangent"
    if d > c1.radius + c2.radius:
        return "disjoint"
    if d < abs(c1.radius - c2.radius):
        return "nested"
    return "intersecting"


def perpendicular_bisector(a: complex, b: complex, tol: Tolerances = DEFAULT_TOLERANCES) -> Line:
    if abs(b - a) <= tol.eps_degenerate * bbox_scale((a, b)):
        raise GeometryError("perpendicular bisector of coincident points")
    return Line(midpoint(a, b), 1j * (b - a) / abs(b - a))


def line_circle_intersection(
    l: Line, c: Circle, tol: Tolerances = DEFAULT_TOLERANCES
) -> list[complex]:
    """Intersection points, tangency collapsing to a single point."""
    f = foot_point(c.center, l)
    disc = c.radius * c.radius - abs(f - c.center) ** 2
    band = tol.eps_degenerate * max(1.0, c.radius) ** 2
    if disc < -band:
        return []
    if disc <= band:
        return [f]
    h = math.sqrt(disc)
    return [f - h * l.direction, f + h * l.direction]


def circle_circle_intersection(
    c1: Circle, c2: Circle, tol: Tolerances = DEFAULT_TOLERANCES
) -> list[complex]:
    d = abs(c2.center - c1.center)
    scale = max(1.0, c1.radius, c2.radius, d)
    if d <= tol.eps_degenerate * scale:
        return []  # concentric
    u = (c2.center - c1.center) / d
    x = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d)
    disc = c1.radius * c1.radius - x * x
    band = tol.eps_degenerate * scale * scale
    if disc < -band:
        return []
    base = c1.center + x * u
    if disc <= band:
        return [base]
    h = math.sqrt(disc)
    return [base - h * (1j * u), base + h * (1j * u)]
