"""Unit-sphere geometry: spherical distance, right-triangle identity,
spherical excess, stereographic projection from the South Pole, and central
projection onto the tangent plane z = 1.

Points are unit 3-vectors.  Dot products are clamped to [-1, 1] before arccos
so near-coincident and near-antipodal inputs stay finite.
"""

from __future__ import annotations

import math

import numpy as np

from .core_numerics import DEFAULT_TOLERANCES, GeometryError, Tolerances
from .inversive import INF, ExtPoint, is_inf

SOUTH = np.array([0.0, 0.0, -1.0])
NORTH = np.array([0.0, 0.0, 1.0])


def unit(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    n = float(np.linalg.norm(v))
    if n == 0.0:
        raise GeometryError("cannot normalize the zero vector")
    return v / n


def _require_unit(v, tol: Tolerances) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if abs(float(np.linalg.norm(v)) - 1.0) > 1e-9:
        raise GeometryError("not a unit vector")
    return v


def s_dist(a, b, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Angle |AOB| in [0, pi], via the clamped dot product."""
    a = _require_unit(a, tol)
    b = _require_unit(b, tol)
    return math.acos(max(-1.0, min(1.0, float(np.dot(a, b)))))


def tangent_at(base, toward, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Unit tangent vector at ``base`` pointing along the arc toward ``toward``."""
    base = _require_unit(base, tol)
    toward = _require_unit(toward, tol)
    w = toward - float(np.dot(toward, base)) * base
    n = float(np.linalg.norm(w))
    if n <= tol.eps_degenerate:
        raise GeometryError("no tangent direction: points coincide or are antipodal")
    return w / n


def s_angle(at, b, c, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Unsigned vertex angle of the spherical triangle at ``at``, in [0, pi]."""
    t1 = tangent_at(at, b, tol)
    t2 = tangent_at(at, c, tol)
    return math.acos(max(-1.0, min(1.0, float(np.dot(t1, t2)))))


def s_pythagoras_residual(a, b, c, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """cos(AB) - cos(BC) * cos(CA) for a triangle with the right angle at ``c``."""
    ang = s_angle(c, a, b, tol)
    if abs(ang - math.pi / 2.0) > tol.eps_assert:
        raise GeometryError("angle at the third vertex is not right")
    return math.cos(s_dist(a, b, tol)) - math.cos(s_dist(b, c, tol)) * math.cos(
        s_dist(c, a, tol)
    )


def stereographic_to_sphere(p: ExtPoint) -> np.ndarray:
    """Plane -> sphere along rays from the South Pole; INF maps to the pole itself."""
    if is_inf(p):
        return SOUTH.copy()
    u, v = p.real, p.imag
    den = 1.0 + u * u + v * v
    return np.array([2.0 * u / den, 2.0 * v / den, (1.0 - u * u - v * v) / den])


def stereographic_to_plane(v, tol: Tolerances = DEFAULT_TOLERANCES) -> ExtPoint:
    v = _require_unit(v, tol)
    if 1.0 + v[2] <= tol.eps_eq:
        return INF
    return complex(v[0] / (1.0 + v[2]), v[1] / (1.0 + v[2]))


def central_project(v, tol: Tolerances = DEFAULT_TOLERANCES) -> complex:
    """Projection of the open north hemisphere onto the plane z = 1 through the center."""
    v = _require_unit(v, tol)
    if v[2] <= tol.eps_degenerate:
        raise GeometryError("central projection needs a point of the open north hemisphere")
    return complex(v[0] / v[2], v[1] / v[2])


def great_circle_image(normal, tol: Tolerances = DEFAULT_TOLERANCES):
    """Stereographic image (from the South Pole) of the great circle with the
    given unit normal; a cline meeting the unit circle at an antipodal pair."""
    from .inversive import cline_through  # local import to keep module load light

    n = _require_unit(normal, tol)
    if abs(float(np.dot(n, SOUTH))) <= tol.eps_degenerate:
        # the great circle passes through both poles; its image is a line
        # (S itself maps to INF)
        e1 = SOUTH
        e2 = unit(np.cross(n, e1))
        mid = unit(e1 + e2) if float(np.linalg.norm(e1 + e2)) > tol.eps_degenerate else e2
        return cline_through(
            stereographic_to_plane(e2, tol), stereographic_to_plane(mid, tol), INF, tol
        )
    # sample around the point of the circle farthest from the South Pole
    w = NORTH - float(np.dot(NORTH, n)) * n
    if float(np.linalg.norm(w)) <= tol.eps_degenerate:
        far = np.array([1.0, 0.0, 0.0])  # equator: every point is equally far
    else:
        far = unit(w)
    side = unit(np.cross(n, far))
    third = 2.0 * math.pi / 3.0
    samples = [
        math.cos(third * k) * far + math.sin(third * k) * side for k in range(3)
    ]
    images = [stereographic_to_plane(s, tol) for s in samples]
    return cline_through(images[0], images[1], images[2], tol)


def s_excess(a, b, c, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Angle sum minus pi; strictly positive for nondegenerate triangles."""
    a = _require_unit(a, tol)
    b = _require_unit(b, tol)
    c = _require_unit(c, tol)
    if abs(float(np.dot(a, np.cross(b, c)))) <= tol.eps_degenerate:
        raise GeometryError("degenerate spherical triangle")
    return (
        s_angle(a, b, c, tol) + s_angle(b, c, a, tol) + s_angle(c, a, b, tol) - math.pi
    )
