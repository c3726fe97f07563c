"""Shared numeric ground: angle values mod 2*pi, plane metrics, tolerance policy.

Angle values live on the half-open interval (-pi, pi], with pi (never -pi)
representing the straight angle.  All comparisons elsewhere in the package are
scale-aware: a tolerance is multiplied by the bounding-box diameter of the
inputs (floored at 1) so that tests survive translation and uniform scaling.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import Iterable, Union

TAU = 2.0 * math.pi

PointLike = Union[complex, tuple]


class GeometryError(ValueError):
    """An operation received geometrically inadmissible input."""


@dataclass(frozen=True)
class Tolerances:
    """Comparison thresholds shared by every module.

    eps_eq          absolute tolerance for coordinate equality
    eps_assert      tolerance for derived-measure assertions
    eps_degenerate  discriminant threshold for collinearity/coincidence tests
    """

    eps_eq: float = 1e-12
    eps_assert: float = 1e-9
    eps_degenerate: float = 1e-12

    def __post_init__(self) -> None:
        if not (self.eps_degenerate > 0.0 and self.eps_eq > 0.0 and self.eps_assert > 0.0):
            raise ValueError("tolerances must be strictly positive")
        if not (self.eps_degenerate <= self.eps_eq <= self.eps_assert):
            raise ValueError("expected eps_degenerate <= eps_eq <= eps_assert")

    def replace(self, **kwargs: float) -> "Tolerances":
        return dataclasses.replace(self, **kwargs)

    @classmethod
    def from_text(cls, text: str) -> "Tolerances":
        """Parse a plain-text ``key=value`` config (one pair per line, # comments)."""
        values: dict[str, float] = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"line {lineno}: expected key=value, got {line!r}")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in ("eps_eq", "eps_assert", "eps_degenerate"):
                raise ValueError(f"line {lineno}: unknown tolerance key {key!r}")
            values[key] = float(value.strip())
        return cls(**values)


DEFAULT_TOLERANCES = Tolerances()


def as_xy(p: PointLike) -> tuple[float, float]:
    """Coerce a planar point (complex or (x, y) pair) to a float pair."""
    if isinstance(p, complex):
        return (p.real, p.imag)
    x, y = p
    return (float(x), float(y))


def normalize_angle(x: float) -> float:
    """Reduce ``x`` modulo 2*pi into (-pi, pi]; the straight angle reduces to +pi."""
    if not math.isfinite(x):
        raise GeometryError("angle must be finite")
    r = math.remainder(x, TAU)  # lands in [-pi, pi]
    if r <= -math.pi:
        r += TAU
    return r


def angle_double_is_zero(alpha: float, tol: float = DEFAULT_TOLERANCES.eps_assert) -> bool:
    """True iff 2*alpha is congruent to 0 mod 2*pi, i.e. alpha is 0 or a straight angle."""
    return abs(normalize_angle(2.0 * normalize_angle(alpha))) <= tol


def plane_metric(kind: str, a: PointLike, b: PointLike) -> float:
    """Distance between planar points under one of the metrics d1, d2, dinf."""
    ax, ay = as_xy(a)
    bx, by = as_xy(b)
    dx = abs(bx - ax)
    dy = abs(by - ay)
    if kind == "d1":
        return dx + dy
    if kind == "d2":
        return math.hypot(dx, dy)
    if kind == "dinf":
        return max(dx, dy)
    raise GeometryError(f"unknown metric kind {kind!r}")


def bbox_scale(points: Iterable[PointLike]) -> float:
    """Bounding-box diameter of the inputs, floored at 1, for scale-aware tolerances."""
    xs: list[float] = []
    ys: list[float] = []
    for p in points:
        x, y = as_xy(p)
        xs.append(x)
        ys.append(y)
    if not xs:
        return 1.0
    diam = math.hypot(max(xs) - min(xs), max(ys) - min(ys))
    return max(1.0, diam)
