"""The unit-disk model of the hyperbolic plane.

The absolute is the unit circle; h-points are complex numbers strictly inside
it; an h-line is carried by a cline perpendicular to the absolute together
with its two ideal points, ordered so that for the defining pair (P, Q) the
four points A, P, Q, B occur in this order along the carrier.  Distance is
the log cross-ratio ln(AQ*BP / (QB*PA)), which the ordering makes >= 1 inside
the logarithm, hence symmetric and nonnegative by construction.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

from .core_numerics import (
    DEFAULT_TOLERANCES,
    GeometryError,
    Tolerances,
    normalize_angle,
)
from .euclid_plane import (
    Circle,
    Line,
    circle_circle_intersection,
    cross,
    dot,
    foot_point,
    line_circle_intersection,
    reflect_line,
)
from .inversive import (
    Cline,
    invert_cline,
    invert_point,
    perpendicular_cline_through,
    point_to_cline_distance,
)

ABSOLUTE = Circle(0j, 1.0)


def check_hpoint(z: complex, tol: Tolerances = DEFAULT_TOLERANCES) -> complex:
    if abs(z) >= 1.0 - tol.eps_degenerate:
        raise GeometryError(f"point {z} is not strictly inside the absolute")
    return z


@dataclass(frozen=True)
class HLine:
    """Carrier cline (perpendicular to the absolute) plus ordered ideal points."""

    carrier: Cline
    ideal_a: complex
    ideal_b: complex

    def contains(self, p: complex, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
        return point_to_cline_distance(self.carrier, p) <= tol.eps_assert


@dataclass(frozen=True)
class HCircle:
    """An h-circle together with the Euclidean circle realizing it."""

    hcenter: complex
    hradius: float
    euclid: Circle


def _ideal_points(carrier: Cline, tol: Tolerances) -> tuple[complex, complex]:
    if isinstance(carrier, Circle):
        o, rho = carrier.center, carrier.radius
        d2 = abs(o) ** 2
        if abs(d2 - (1.0 + rho * rho)) <= tol.eps_assert * max(1.0, d2):
            # carrier orthogonal to the absolute: the common chord is the
            # radical axis dot(z, o) = 1, giving the closed form
            # o * (1 +- i*rho) / |o|^2 -- exactly on both circles, and stable
            # even for the near-diameter carriers whose radius is enormous
            i1 = o * (1.0 + 1j * rho) / d2
            i2 = o * (1.0 - 1j * rho) / d2
            return i1 / abs(i1), i2 / abs(i2)
        pts = circle_circle_intersection(carrier, ABSOLUTE, tol)
    else:
        pts = line_circle_intersection(carrier, ABSOLUTE, tol)
    if len(pts) != 2:
        raise GeometryError("carrier does not cross the absolute twice")
    # snap onto the unit circle
    return pts[0] / abs(pts[0]), pts[1] / abs(pts[1])


def _arc_position(carrier: Circle, ref: complex, x: complex) -> float:
    """Angular position of x around the carrier center, measured from ref."""
    return normalize_angle(cmath.phase(x - carrier.center) - cmath.phase(ref - carrier.center))


def _order_ideals(
    carrier: Cline, p: complex, q: complex, i1: complex, i2: complex
) -> tuple[complex, complex]:
    """Order the ideal pair (A, B) so that A, P, Q, B is monotone along the carrier."""
    if isinstance(carrier, Line):
        if carrier.param_of(p) <= carrier.param_of(q):
            return (i1, i2) if carrier.param_of(i1) < carrier.param_of(i2) else (i2, i1)
        return (i2, i1) if carrier.param_of(i1) < carrier.param_of(i2) else (i1, i2)
    # circle carrier: the in-disk arc spans less than half a turn, so angular
    # positions measured from one ideal point order the four points monotonically
    span = _arc_position(carrier, i1, i2)
    sp = _arc_position(carrier, i1, p) / span
    sq = _arc_position(carrier, i1, q) / span
    return (i1, i2) if sp <= sq else (i2, i1)


def h_line_through(p: complex, q: complex, tol: Tolerances = DEFAULT_TOLERANCES) -> HLine:
    """The h-line through two distinct h-points."""
    check_hpoint(p, tol)
    check_hpoint(q, tol)
    if abs(p - q) <= tol.eps_degenerate:
        raise GeometryError("coincident points")
    carrier = perpendicular_cline_through(ABSOLUTE, p, q, tol)
    i1, i2 = _ideal_points(carrier, tol)
    a, b = _order_ideals(carrier, p, q, i1, i2)
    return HLine(carrier, a, b)


def h_dist(p: complex, q: complex, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """ln of the ideal-point cross-ratio AQ*BP / (QB*PA); zero iff p == q."""
    check_hpoint(p, tol)
    check_hpoint(q, tol)
    if abs(p - q) <= tol.eps_degenerate:
        # below coincidence scale the cross-ratio is numerically meaningless;
        # use its first-order limit (the conformal factor at the midpoint)
        return abs(p - q) * 2.0 / (1.0 - abs((p + q) / 2.0) ** 2)
    l = h_line_through(p, q, tol)
    a, b = l.ideal_a, l.ideal_b
    delta = (abs(a - q) * abs(b - p)) / (abs(q - b) * abs(p - a))
    return math.log(delta)


def h_dist_from_center(x: float) -> float:
    """Distance from the center to the point at Euclidean radius x: ln((1+x)/(1-x))."""
    if not (0.0 <= x < 1.0):
        raise GeometryError("radial coordinate must lie in [0, 1)")
    return math.log((1.0 + x) / (1.0 - x))


def h_dist_from_center_inv(y: float) -> float:
    """Euclidean radius of the point at h-distance y from the center: (e^y - 1)/(e^y + 1)."""
    if y < 0.0:
        raise GeometryError("distance must be nonnegative")
    return math.expm1(y) / (math.exp(y) + 1.0)


def _radial(t: float) -> float:
    # signed version of h_dist_from_center_inv; negative t lands on the opposite ray
    return math.expm1(t) / (math.exp(t) + 1.0)


def _tangent_toward(q: complex, p: complex, tol: Tolerances) -> complex:
    """Unit tangent at q of the h-segment [q, p], pointing toward p."""
    l = h_line_through(q, p, tol)
    if isinstance(l.carrier, Line):
        d = l.carrier.direction
        return d if dot(d, p - q) > 0.0 else -d
    c = l.carrier.center
    t = 1j * (q - c)
    t /= abs(t)
    return t if cross(q - c, p - c) > 0.0 else -t


def h_angle(p: complex, q: complex, r: complex, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Signed angle at q between the tangent directions toward p and toward r."""
    for x in (p, r):
        if abs(x - q) <= tol.eps_degenerate:
            raise GeometryError("degenerate angle: vertex coincides with a side point")
    tp = _tangent_toward(q, p, tol)
    tr = _tangent_toward(q, r, tol)
    return normalize_angle(cmath.phase(tr / tp))


def h_reflect(l: HLine, p: complex, tol: Tolerances = DEFAULT_TOLERANCES) -> complex:
    """Reflection in an h-line: inversion in its carrier (plain reflection for diameters)."""
    check_hpoint(p, tol)
    if isinstance(l.carrier, Line):
        return reflect_line(p, l.carrier)
    image = invert_point(l.carrier, p)
    if not isinstance(image, complex):  # carrier center is outside the disk
        raise GeometryError("reflection is undefined at the carrier center")
    return image


def move_to_center(p: complex, tol: Tolerances = DEFAULT_TOLERANCES) -> Optional[Circle]:
    """The inversion circle carrying ``p`` to 0, or None for the identity (p = 0).

    Centered at the inversion of p in the absolute with radius sqrt(1 - |p|^2)/|p|,
    which satisfies the orthogonality identity d^2 = 1 + rho^2.
    """
    check_hpoint(p, tol)
    if p == 0:
        return None
    x = abs(p)
    return Circle(p / (x * x), math.sqrt(1.0 - x * x) / x)


def move_point(gamma: Optional[Circle], z: complex) -> complex:
    """Apply (or undo: the map is an involution) a move_to_center motion."""
    if gamma is None:
        return z
    image = invert_point(gamma, z)
    if not isinstance(image, complex):
        raise GeometryError("motion is undefined at the inversion center")
    return image


def move_cline(gamma: Optional[Circle], g: Cline, tol: Tolerances = DEFAULT_TOLERANCES) -> Cline:
    if gamma is None:
        return g
    return invert_cline(gamma, g, tol)


def h_point_toward(
    p: complex, q: complex, t: float, tol: Tolerances = DEFAULT_TOLERANCES
) -> complex:
    """The h-point at signed h-distance ``t`` from p along the h-line toward q."""
    gamma = move_to_center(p, tol)
    q1 = move_point(gamma, q)
    if abs(q1) <= tol.eps_degenerate:
        raise GeometryError("direction point coincides with the base point")
    w = (q1 / abs(q1)) * _radial(t)
    return move_point(gamma, w)


def h_midpoint(p: complex, q: complex, tol: Tolerances = DEFAULT_TOLERANCES) -> complex:
    return h_point_toward(p, q, h_dist(p, q, tol) / 2.0, tol)


def h_foot(p: complex, l: HLine, tol: Tolerances = DEFAULT_TOLERANCES) -> complex:
    """Foot of the h-perpendicular dropped from p onto l."""
    check_hpoint(p, tol)
    if point_to_cline_distance(l.carrier, p) <= tol.eps_degenerate:
        return p
    gamma = move_to_center(p, tol)
    carrier1 = move_cline(gamma, l.carrier, tol)
    if isinstance(carrier1, Line):
        # can only happen if p was on l, handled above
        raise GeometryError("foot is undefined: point lies on the line")
    c = carrier1.center
    foot1 = c * (1.0 - carrier1.radius / abs(c))
    return move_point(gamma, foot1)


def _hline_from_carrier(carrier: Cline, tol: Tolerances) -> HLine:
    i1, i2 = _ideal_points(carrier, tol)
    return HLine(carrier, i1, i2)


def h_perpendicular_at(l: HLine, p: complex, tol: Tolerances = DEFAULT_TOLERANCES) -> HLine:
    """The h-line through p perpendicular to l; requires p on l."""
    check_hpoint(p, tol)
    if point_to_cline_distance(l.carrier, p) > tol.eps_assert:
        raise GeometryError("point does not lie on the line")
    gamma = move_to_center(p, tol)
    carrier1 = move_cline(gamma, l.carrier, tol)
    if isinstance(carrier1, Line):
        u = carrier1.direction
    else:
        # the moved carrier passes through (numerically: very near) the center;
        # take its tangent direction at the point nearest the center
        c = carrier1.center
        near = c * (1.0 - carrier1.radius / abs(c))
        u = 1j * (near - c)
        u /= abs(u)
    perp = Line(0j, 1j * u)
    return _hline_from_carrier(move_cline(gamma, perp, tol), tol)


def h_perpendicular_through(
    p: complex, l: HLine, tol: Tolerances = DEFAULT_TOLERANCES
) -> HLine:
    """The h-perpendicular from an off-line point p onto l."""
    foot = h_foot(p, l, tol)
    if abs(foot - p) <= tol.eps_degenerate:
        return h_perpendicular_at(l, p, tol)
    return h_line_through(p, foot, tol)


def h_circle_realize(
    c: complex, rho: float, tol: Tolerances = DEFAULT_TOLERANCES
) -> HCircle:
    """The Euclidean circle whose points lie at h-distance rho from c."""
    check_hpoint(c, tol)
    if rho <= 0.0:
        raise GeometryError("h-radius must be positive")
    if c == 0:
        return HCircle(c, rho, Circle(0j, _radial(rho)))
    u = c / abs(c)
    d = h_dist_from_center(abs(c))
    p1 = u * _radial(d - rho)
    p2 = u * _radial(d + rho)
    return HCircle(c, rho, Circle((p1 + p2) / 2.0, abs(p2 - p1) / 2.0))


def h_circle_intersect_hline(
    c: complex, rho: float, l: HLine, tol: Tolerances = DEFAULT_TOLERANCES
) -> list[complex]:
    """Intersection of the h-circle (center c, h-radius rho) with an h-line."""
    gamma = move_to_center(c, tol)
    carrier1 = move_cline(gamma, l.carrier, tol)
    ring = Circle(0j, _radial(rho))
    if isinstance(carrier1, Line):
        pts = line_circle_intersection(carrier1, ring, tol)
    else:
        pts = circle_circle_intersection(ring, carrier1, tol)
    return [move_point(gamma, x) for x in pts]


def h_circumference(rho: float) -> float:
    if rho <= 0.0:
        raise GeometryError("h-radius must be positive")
    return 2.0 * math.pi * math.sinh(rho)


def angle_of_parallelism(h: float) -> float:
    """Least angle at distance h under which a line can be missed: phi with cos(phi) = tanh(h)."""
    if h <= 0.0:
        raise GeometryError("distance must be positive")
    return math.acos(math.tanh(h))


def parallelism_distance(phi: float) -> float:
    """Inverse map: h = (1/2) * ln((1 + cos(phi)) / (1 - cos(phi)))."""
    if not (0.0 < phi < math.pi / 2.0):
        raise GeometryError("angle must lie strictly between 0 and pi/2")
    c = math.cos(phi)
    return 0.5 * math.log((1.0 + c) / (1.0 - c))


def h_defect(p: complex, q: complex, r: complex, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """pi minus the sum of the triangle's absolute angle measures; positive when nondegenerate."""
    for x, y in ((p, q), (q, r), (r, p)):
        if abs(x - y) <= tol.eps_degenerate:
            raise GeometryError("degenerate triangle: coincident vertices")
    carrier = h_line_through(p, q, tol).carrier
    if point_to_cline_distance(carrier, r) <= tol.eps_degenerate:
        raise GeometryError("degenerate triangle: vertices lie on one h-line")
    alpha = h_angle(q, p, r, tol)
    beta = h_angle(p, q, r, tol)
    gamma = h_angle(q, r, p, tol)
    return math.pi - (abs(alpha) + abs(beta) + abs(gamma))


def classify_cycle(g: Circle, tol: Tolerances = DEFAULT_TOLERANCES) -> str:
    """h_circle | horocycle | equidistant | h_line | outside, by position
    against the absolute (tangency/perpendicularity in eps_assert bands)."""
    d = abs(g.center)
    r = g.radius
    band = tol.eps_assert * max(1.0, d + r)
    if abs(d + r - 1.0) <= band:
        return "horocycle"
    if d + r < 1.0:
        return "h_circle"
    if abs(1.0 - r) < d < 1.0 + r:
        if abs(d * d - (1.0 + r * r)) <= band:
            return "h_line"
        return "equidistant"
    return "outside"


def conformal_factor(p: complex, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Local metric density 2 / (1 - |p|^2)."""
    check_hpoint(p, tol)
    return 2.0 / (1.0 - abs(p) ** 2)
