"""The Klein disk model: conversion to and from the conformal disk model,
chord-based distance, and Bolyai's compass-and-ruler construction of the
asymptotic parallels through a point.

The conversion magnitude is 2x/(1 + x^2) (equivalently the composition of the
stereographic lift from the South Pole with the vertical drop back to the
equatorial plane), which keeps the disk inside itself and satisfies the
squared-cross-ratio identity relating the two distance formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core_numerics import DEFAULT_TOLERANCES, GeometryError, Tolerances
from .euclid_plane import line_circle_intersection, line_through
from .inversive import point_to_cline_distance
from .poincare import (
    ABSOLUTE,
    HLine,
    check_hpoint,
    h_circle_intersect_hline,
    h_dist,
    h_foot,
    h_line_through,
    h_perpendicular_at,
    h_perpendicular_through,
)


def poincare_to_klein(p: complex, tol: Tolerances = DEFAULT_TOLERANCES) -> complex:
    """Same direction, magnitude 2x/(1 + x^2); fixes 0 and the boundary in the limit."""
    check_hpoint(p, tol)
    return 2.0 * p / (1.0 + abs(p) ** 2)


def klein_to_poincare(k: complex, tol: Tolerances = DEFAULT_TOLERANCES) -> complex:
    """Inverse conversion: magnitude t / (1 + sqrt(1 - t^2)) along the same ray."""
    if abs(k) >= 1.0 - tol.eps_degenerate:
        raise GeometryError(f"point {k} is not strictly inside the unit disk")
    t = abs(k)
    if t == 0.0:
        return 0j
    return k / (1.0 + math.sqrt(1.0 - t * t))


def klein_dist(p: complex, q: complex, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Half the log cross-ratio along the chord through p and q."""
    for x in (p, q):
        if abs(x) >= 1.0 - tol.eps_degenerate:
            raise GeometryError(f"point {x} is not strictly inside the unit disk")
    if p == q:
        return 0.0
    chord = line_through(p, q, tol)
    ends = line_circle_intersection(chord, ABSOLUTE, tol)
    if len(ends) != 2:
        raise GeometryError("chord does not cross the unit circle twice")
    a, b = ends
    if chord.param_of(p) > chord.param_of(q):
        p, q = q, p
    if chord.param_of(a) > chord.param_of(b):
        a, b = b, a
    cr = (abs(a - q) * abs(b - p)) / (abs(q - b) * abs(p - a))
    return 0.5 * abs(math.log(cr))


@dataclass(frozen=True)
class BolyaiSteps:
    """Intermediate objects of the construction, kept for checking."""

    base: HLine  # l, the line being paralleled
    apex: complex  # P, the point the parallels pass through
    foot: complex  # Q, the foot of P on l
    n: HLine  # perpendicular to (PQ) at P
    r: complex  # a point of the circle around Q through P, on l
    k: HLine  # perpendicular to n through R
    t_pair: tuple[complex, complex]  # the two meeting points of the circle around P with k
    parallels: tuple[HLine, HLine]


def bolyai_steps(l: HLine, p: complex, tol: Tolerances = DEFAULT_TOLERANCES) -> BolyaiSteps:
    check_hpoint(p, tol)
    if point_to_cline_distance(l.carrier, p) <= tol.eps_degenerate:
        raise GeometryError("point lies on the line")
    q = h_foot(p, l, tol)
    m = h_line_through(p, q, tol)
    n = h_perpendicular_at(m, p, tol)
    rho1 = h_dist(q, p, tol)
    r_candidates = h_circle_intersect_hline(q, rho1, l, tol)
    if len(r_candidates) != 2:
        raise GeometryError("circle around the foot fails to meet the line twice")
    r = min(r_candidates, key=lambda z: (z.real, z.imag))
    k = h_perpendicular_through(r, n, tol)
    rho2 = h_dist(p, q, tol)
    t_candidates = h_circle_intersect_hline(p, rho2, k, tol)
    if len(t_candidates) != 2:
        raise GeometryError("circle around the point fails to meet the perpendicular twice")
    t1, t2 = t_candidates
    parallels = (h_line_through(p, t1, tol), h_line_through(p, t2, tol))
    return BolyaiSteps(l, p, q, n, r, k, (t1, t2), parallels)


def bolyai_construct(
    l: HLine, p: complex, tol: Tolerances = DEFAULT_TOLERANCES
) -> tuple[HLine, HLine]:
    """The two h-lines through p asymptotically parallel to l (one per side)."""
    return bolyai_steps(l, p, tol).parallels
