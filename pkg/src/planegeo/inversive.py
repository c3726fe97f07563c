"""The inversive plane: extended points (finite or the point at infinity),
clines (circle-or-line), inversion, cross-ratios, perpendicularity, and the
inscribed/Ptolemy criteria.

A cline is ``Circle | Line``; inversion of a cline is computed by inverting
three well-spread sample points and refitting through them, which covers all
four case-split branches (line through/avoiding the center, circle
through/avoiding the center) with a single self-checking code path.
"""

from __future__ import annotations

import cmath
import math
from typing import Union

from .core_numerics import DEFAULT_TOLERANCES, GeometryError, Tolerances, bbox_scale
from .euclid_plane import (
    Circle,
    Line,
    Triangle,
    circumcenter,
    cross,
    dot,
    foot_point,
    line_through,
)


class _Infinity:
    """The single point at infinity of the inversive plane."""

    _instance = None

    def __new__(cls) -> "_Infinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"


INF = _Infinity()

ExtPoint = Union[complex, _Infinity]
Cline = Union[Circle, Line]


def is_inf(p: ExtPoint) -> bool:
    return p is INF


def invert_point(w: Circle, p: ExtPoint) -> ExtPoint:
    """Inversion in ``w``: the image lies on the ray [center p) with
    |center p| * |center p'| = radius**2."""
    if is_inf(p):
        return w.center
    if p == w.center:
        return INF
    return w.center + (w.radius * w.radius) / (p - w.center).conjugate()


def _finite(points: list[ExtPoint]) -> list[complex]:
    return [p for p in points if not is_inf(p)]


def cline_through(
    a: ExtPoint, b: ExtPoint, c: ExtPoint, tol: Tolerances = DEFAULT_TOLERANCES
) -> Cline:
    """The unique cline through three distinct extended points."""
    pts = [a, b, c]
    n_inf = sum(1 for p in pts if is_inf(p))
    if n_inf >= 2:
        raise GeometryError("coincident points: the point at infinity repeats")
    fin = _finite(pts)
    s = bbox_scale(fin)
    for i in range(len(fin)):
        for j in range(i + 1, len(fin)):
            if abs(fin[i] - fin[j]) <= tol.eps_eq * s:
                raise GeometryError("coincident points")
    if n_inf == 1:
        return line_through(fin[0], fin[1], tol)
    if abs(cross(fin[1] - fin[0], fin[2] - fin[0])) <= tol.eps_degenerate * s * s:
        # pick the farthest pair for a stable direction
        pairs = [(fin[0], fin[1]), (fin[0], fin[2]), (fin[1], fin[2])]
        p, q = max(pairs, key=lambda pq: abs(pq[1] - pq[0]))
        return line_through(p, q, tol)
    center, radius = circumcenter(Triangle(fin[0], fin[1], fin[2]), tol)
    return Circle(center, radius)


def point_to_cline_distance(g: Cline, p: complex) -> float:
    if isinstance(g, Circle):
        return abs(abs(p - g.center) - g.radius)
    return abs(cross(g.direction, p - g.anchor))


def cline_contains(g: Cline, p: ExtPoint, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    if is_inf(p):
        return isinstance(g, Line)
    scale = bbox_scale((p, g.center if isinstance(g, Circle) else g.anchor))
    return point_to_cline_distance(g, p) <= tol.eps_assert * scale


def sample_points(g: Cline, n: int, spread: float = 2.0) -> list[complex]:
    """n points spaced along the cline (full turn for circles, [-spread, spread] for lines)."""
    if isinstance(g, Circle):
        return [g.point_at(2.0 * math.pi * k / n) for k in range(n)]
    return [g.point_at(spread * (2.0 * k / (n - 1) - 1.0)) for k in range(n)]


def invert_cline(w: Circle, g: Cline, tol: Tolerances = DEFAULT_TOLERANCES) -> Cline:
    """Image of a cline under inversion; the circle/line variant flips exactly
    when ``g`` passes within eps_degenerate * scale of the inversion center."""
    o = w.center
    if isinstance(g, Line):
        f = foot_point(o, g)
        step = max(1.0, w.radius, abs(f - o))
        p1 = f + step * g.direction
        p2 = f - step * g.direction
        # a line also passes through INF, whose image is the center itself
        return cline_through(invert_point(w, p1), invert_point(w, p2), o, tol)
    scale = max(1.0, w.radius, g.radius, abs(g.center - o))
    gap = abs(abs(g.center - o) - g.radius)
    if abs(g.center - o) <= tol.eps_degenerate * scale:
        far_dir = 1.0 + 0.0j  # concentric: any frame works
    else:
        far_dir = (g.center - o) / abs(g.center - o)
    third = 2.0 * math.pi / 3.0
    if gap <= tol.eps_degenerate * scale:
        # g passes through the center: its image is a line; sample away from
        # the near point (60 degrees of arc on either side of the far point)
        s1 = g.center + g.radius * far_dir * cmath.exp(1j * third)
        s2 = g.center + g.radius * far_dir * cmath.exp(-1j * third)
        return cline_through(invert_point(w, s1), invert_point(w, s2), INF, tol)
    samples = [g.center + g.radius * far_dir * cmath.exp(1j * third * k) for k in range(3)]
    images = [invert_point(w, s) for s in samples]
    return cline_through(images[0], images[1], images[2], tol)


def real_cross_ratio(
    a: complex, b: complex, c: complex, d: complex, tol: Tolerances = DEFAULT_TOLERANCES
) -> float:
    """(AB * CD) / (BC * DA) with plane distances."""
    s = bbox_scale((a, b, c, d))
    bc = abs(c - b)
    da = abs(a - d)
    if bc <= tol.eps_degenerate * s or da <= tol.eps_degenerate * s:
        raise GeometryError("zero denominator in cross-ratio")
    return (abs(b - a) * abs(d - c)) / (bc * da)


def _clines_intersect(g: Cline, d: Cline, band: float) -> bool:
    if isinstance(g, Circle) and isinstance(d, Circle):
        dist = abs(g.center - d.center)
        return abs(g.radius - d.radius) - band <= dist <= g.radius + d.radius + band
    if isinstance(g, Line) and isinstance(d, Line):
        if abs(cross(g.direction, d.direction)) > band:
            return True
        # parallel: intersect (at infinity... not in the plane) only if coincident
        return point_to_cline_distance(g, d.anchor) <= band
    circle, line = (g, d) if isinstance(g, Circle) else (d, g)
    return point_to_cline_distance(line, circle.center) <= circle.radius + band


def clines_perpendicular(g: Cline, d: Cline, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """Orthogonality test at the (required) intersection."""
    pts = []
    for x in (g, d):
        pts.append(x.center if isinstance(x, Circle) else x.anchor)
    band = tol.eps_assert * bbox_scale(pts)
    if not _clines_intersect(g, d, band):
        raise GeometryError("clines do not intersect")
    if isinstance(g, Circle) and isinstance(d, Circle):
        dist2 = abs(g.center - d.center) ** 2
        return abs(dist2 - (g.radius * g.radius + d.radius * d.radius)) <= band * bbox_scale(pts)
    if isinstance(g, Line) and isinstance(d, Line):
        return abs(dot(g.direction, d.direction)) <= band
    circle, line = (g, d) if isinstance(g, Circle) else (d, g)
    return point_to_cline_distance(line, circle.center) <= band


def perpendicular_cline_through(
    w: Circle, p: complex, q: complex, tol: Tolerances = DEFAULT_TOLERANCES
) -> Cline:
    """The unique cline through two interior points perpendicular to ``w``.

    A diameter when p, q and the center are collinear; otherwise the circle
    whose center o solves (o - c) . (x - c) = (r^2 + |x - c|^2) / 2 for both
    x = p and x = q (the orthogonality condition |o - c|^2 = r^2 + rho^2
    combined with |o - x| = rho).  Solving for o directly keeps every
    intermediate at configuration scale; routing through the inversion of p
    would produce an arbitrarily distant third point when p sits near the
    center.
    """
    s = max(1.0, w.radius)
    for x in (p, q):
        if abs(x - w.center) >= w.radius - tol.eps_degenerate * s:
            raise GeometryError("point is not strictly inside the inversion circle")
    if abs(p - q) <= tol.eps_degenerate * s:
        raise GeometryError("coincident points")
    a = p - w.center
    b = q - w.center
    det = cross(a, b)
    if abs(det) <= tol.eps_degenerate * s * s:
        return line_through(p, q, tol)
    ra = (w.radius * w.radius + abs(a) ** 2) / 2.0
    rb = (w.radius * w.radius + abs(b) ** 2) / 2.0
    u = complex((ra * b.imag - rb * a.imag) / det, (rb * a.real - ra * b.real) / det)
    o = w.center + u
    # the carrier passes through p exactly, so its radius is |o - p|
    return Circle(o, abs(o - p))


def inscribed_check(
    u: complex, v: complex, w: complex, z: complex, tol: Tolerances = DEFAULT_TOLERANCES
) -> bool:
    """True iff the four points lie on one cline: (v-u)(w-z)/((v-w)(z-u)) is real."""
    pts = (u, v, w, z)
    s = bbox_scale(pts)
    for i in range(4):
        for j in range(i + 1, 4):
            if abs(pts[i] - pts[j]) <= tol.eps_eq * s:
                raise GeometryError("coincident points")
    val = (v - u) * (w - z) / ((v - w) * (z - u))
    return abs(val.imag) <= tol.eps_assert * abs(val)


def ptolemy_residual(a: complex, b: complex, c: complex, d: complex) -> float:
    """AB*CD + BC*DA - AC*BD; vanishes for concyclic points in cyclic order."""
    return abs(b - a) * abs(d - c) + abs(c - b) * abs(a - d) - abs(c - a) * abs(d - b)
