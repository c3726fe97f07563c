"""Fractional-linear transformations z -> (a*z + b)/(c*z + d) on the extended
complex plane: application with the pole conventions f(-d/c) = INF and
f(INF) = a/c, composition, inversion, the four-step elementary decomposition,
three-point interpolation, and the complex cross-ratio.

Coefficients are stored unnormalized; two transformations are equal exactly
when their coefficient quadruples are proportional (see projectively_equal).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core_numerics import DEFAULT_TOLERANCES, GeometryError
from .inversive import INF, ExtPoint, is_inf


@dataclass(frozen=True)
class Moebius:
    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self) -> None:
        m = max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))
        det = self.a * self.d - self.b * self.c
        if abs(det) <= DEFAULT_TOLERANCES.eps_degenerate * m * m:
            raise GeometryError("Moebius determinant vanishes")

    def det(self) -> complex:
        return self.a * self.d - self.b * self.c


IDENTITY = Moebius(1, 0, 0, 1)


def apply(m: Moebius, z: ExtPoint) -> ExtPoint:
    if is_inf(z):
        return INF if m.c == 0 else m.a / m.c
    num = m.a * z + m.b
    den = m.c * z + m.d
    if den == 0:
        return INF
    return num / den


def compose(m1: Moebius, m2: Moebius) -> Moebius:
    """First m2, then m1 (matrix product of the coefficient matrices)."""
    return Moebius(
        m1.a * m2.a + m1.b * m2.c,
        m1.a * m2.b + m1.b * m2.d,
        m1.c * m2.a + m1.d * m2.c,
        m1.c * m2.b + m1.d * m2.d,
    )


def inverse(m: Moebius) -> Moebius:
    return Moebius(m.d, -m.b, -m.c, m.a)


@dataclass(frozen=True)
class Elementary:
    """One of the building blocks: shift by w, scale by w, or z -> 1/z."""

    kind: str  # "shift" | "scale" | "reciprocal"
    w: complex = 0j

    def apply(self, z: ExtPoint) -> ExtPoint:
        if self.kind == "shift":
            return INF if is_inf(z) else z + self.w
        if self.kind == "scale":
            return INF if is_inf(z) else self.w * z
        if self.kind == "reciprocal":
            if is_inf(z):
                return 0j
            if z == 0:
                return INF
            return 1.0 / z
        raise GeometryError(f"unknown elementary kind {self.kind!r}")


def decompose_elementary(m: Moebius) -> list[Elementary]:
    """Ordered chain (first applied first) recomposing to ``m``."""
    if m.c == 0:
        return [Elementary("scale", m.a / m.d), Elementary("shift", m.b / m.d)]
    return [
        Elementary("shift", m.d / m.c),
        Elementary("reciprocal"),
        Elementary("scale", -(m.a * m.d - m.b * m.c) / (m.c * m.c)),
        Elementary("shift", m.a / m.c),
    ]


def apply_chain(chain: list[Elementary], z: ExtPoint) -> ExtPoint:
    for step in chain:
        z = step.apply(z)
    return z


def _check_distinct(points: tuple[ExtPoint, ...]) -> None:
    n_inf = sum(1 for p in points if is_inf(p))
    if n_inf >= 2:
        raise GeometryError("coincident points: the point at infinity repeats")
    fin = [p for p in points if not is_inf(p)]
    for i in range(len(fin)):
        for j in range(i + 1, len(fin)):
            if fin[i] == fin[j]:
                raise GeometryError("coincident points")


def from_three_points(z0: ExtPoint, z1: ExtPoint, zinf: ExtPoint) -> Moebius:
    """The unique transformation sending z0 -> 0, z1 -> 1, zinf -> INF.

    Coefficients are arranged so that the numerator at z0 and the denominator
    at zinf cancel bitwise; with an infinite input, all three images are exact.
    """
    _check_distinct((z0, z1, zinf))
    if is_inf(z0):
        return Moebius(0, z1 - zinf, 1, -zinf)
    if is_inf(z1):
        return Moebius(1, -z0, 1, -zinf)
    if is_inf(zinf):
        return Moebius(1, -z0, 0, z1 - z0)
    a = z1 - zinf
    c = z1 - z0
    return Moebius(a, -(a * z0), c, -(c * zinf))


def complex_cross_ratio(u: ExtPoint, v: ExtPoint, w: ExtPoint, z: ExtPoint) -> complex:
    """(u-w)(v-z) / ((v-w)(u-z)), with the algebraic limit when an argument is INF."""
    _check_distinct((u, v, w, z))
    if is_inf(u):
        return (v - z) / (v - w)
    if is_inf(v):
        return (u - w) / (u - z)
    if is_inf(w):
        return (v - z) / (u - z)
    if is_inf(z):
        return (u - w) / (v - w)
    return ((u - w) * (v - z)) / ((v - w) * (u - z))


def projectively_equal(m1: Moebius, m2: Moebius, rtol: float = 1e-9) -> bool:
    """True iff the coefficient quadruples are proportional (same map)."""
    q1 = (m1.a, m1.b, m1.c, m1.d)
    q2 = (m2.a, m2.b, m2.c, m2.d)
    scale = max(abs(x) for x in q1) * max(abs(x) for x in q2)
    return all(
        abs(q1[i] * q2[j] - q1[j] * q2[i]) <= rtol * scale
        for i in range(4)
        for j in range(i + 1, 4)
    )
