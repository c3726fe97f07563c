"""Deterministic SVG output for evaluated scripts.

Every drawable is emitted as a ``<path>`` inside one ``scale(1,-1)`` group
(so the math convention "y grows upward" holds), with coordinates fixed to
six decimals and elements ordered: the absolute first, then bindings in
binding order.  Identical reports therefore produce identical bytes.

In the Klein model h-lines are straight chords (same ideal endpoints) and
h-circles are omitted — they are no longer Euclidean circles there and no
closed form is drawn for them; disk points are converted between charts.
"""

from __future__ import annotations

import math

from ..core_numerics import GeometryError
from ..euclid_plane import Circle, Line, cross
from ..inversive import is_inf
from ..klein import BolyaiSteps, klein_to_poincare, poincare_to_klein
from ..poincare import HCircle, HLine, classify_cycle
from .interp import EvalReport, HPoint, KPoint, Value

_BOX = 1.1
_DOT = 0.015

_STYLES = {
    "absolute": 'fill="none" stroke="#000000" stroke-width="0.008"',
    "euclid": 'fill="none" stroke="#1f77b4" stroke-width="0.008"',
    "hline": 'fill="none" stroke="#d62728" stroke-width="0.008"',
    "h_circle": 'fill="none" stroke="#2ca02c" stroke-width="0.008"',
    "horocycle": 'fill="none" stroke="#9467bd" stroke-width="0.008" stroke-dasharray="0.05 0.03"',
    "equidistant": 'fill="none" stroke="#8c564b" stroke-width="0.008" stroke-dasharray="0.02 0.02"',
    "point": 'fill="#000000" stroke="none"',
}


def _fmt(v: float) -> str:
    if v == 0.0:  # avoid the "-0.000000" spelling
        v = 0.0
    return f"{v:.6f}"


def _path(d: str, style_key: str, name: str) -> str:
    return f'<path class="{style_key}" data-name="{name}" d="{d}" {_STYLES[style_key]}/>'


def _circle_d(c: Circle) -> str:
    x, y, r = c.center.real, c.center.imag, c.radius
    return (
        f"M {_fmt(x + r)} {_fmt(y)} "
        f"A {_fmt(r)} {_fmt(r)} 0 1 0 {_fmt(x - r)} {_fmt(y)} "
        f"A {_fmt(r)} {_fmt(r)} 0 1 0 {_fmt(x + r)} {_fmt(y)} Z"
    )


def _dot_d(p: complex) -> str:
    x, y = p.real, p.imag
    return (
        f"M {_fmt(x + _DOT)} {_fmt(y)} "
        f"A {_fmt(_DOT)} {_fmt(_DOT)} 0 1 0 {_fmt(x - _DOT)} {_fmt(y)} "
        f"A {_fmt(_DOT)} {_fmt(_DOT)} 0 1 0 {_fmt(x + _DOT)} {_fmt(y)} Z"
    )


def _segment_d(a: complex, b: complex) -> str:
    return f"M {_fmt(a.real)} {_fmt(a.imag)} L {_fmt(b.real)} {_fmt(b.imag)}"


def _clip_line(l: Line) -> tuple[complex, complex] | None:
    """Liang–Barsky clip of an infinite line to the viewBox square."""
    p, d = l.anchor, l.direction
    t0, t1 = -math.inf, math.inf
    for coord, step in ((p.real, d.real), (p.imag, d.imag)):
        if abs(step) < 1e-15:
            if not -_BOX <= coord <= _BOX:
                return None
            continue
        lo = (-_BOX - coord) / step
        hi = (_BOX - coord) / step
        if lo > hi:
            lo, hi = hi, lo
        t0, t1 = max(t0, lo), min(t1, hi)
    if t0 >= t1:
        return None
    return l.point_at(t0), l.point_at(t1)


def _arc_d(carrier: Circle, a: complex, b: complex) -> str:
    # The in-disk arc of a carrier orthogonal to the absolute always subtends
    # less than pi, so large-arc is 0 and only the sweep has to be chosen.
    sweep = 1 if cross(a - carrier.center, b - carrier.center) > 0.0 else 0
    r = _fmt(carrier.radius)
    return f"M {_fmt(a.real)} {_fmt(a.imag)} A {r} {r} 0 0 {sweep} {_fmt(b.real)} {_fmt(b.imag)}"


def _hline_paths(l: HLine, name: str, model: str) -> list[str]:
    if model == "klein" or isinstance(l.carrier, Line):
        return [_path(_segment_d(l.ideal_a, l.ideal_b), "hline", name)]
    return [_path(_arc_d(l.carrier, l.ideal_a, l.ideal_b), "hline", name)]


def _value_paths(name: str, value: Value, model: str) -> list[str]:
    if isinstance(value, HPoint):
        z = value.z if model == "poincare" else poincare_to_klein(value.z)
        return [_path(_dot_d(z), "point", name)]
    if isinstance(value, KPoint):
        z = value.z if model == "klein" else klein_to_poincare(value.z)
        return [_path(_dot_d(z), "point", name)]
    if isinstance(value, complex):
        return [_path(_dot_d(value), "point", name)]
    if isinstance(value, Line):
        seg = _clip_line(value)
        return [] if seg is None else [_path(_segment_d(*seg), "euclid", name)]
    if isinstance(value, Circle):
        try:
            cls = classify_cycle(value)
        except GeometryError:
            cls = "outside"
        key = {
            "h_circle": "h_circle",
            "horocycle": "horocycle",
            "equidistant": "equidistant",
            "h_line": "hline",
        }.get(cls, "euclid")
        return [_path(_circle_d(value), key, name)]
    if isinstance(value, HLine):
        return _hline_paths(value, name, model)
    if isinstance(value, HCircle):
        if model == "klein":
            return []
        return [_path(_circle_d(value.euclid), "h_circle", name)]
    if isinstance(value, BolyaiSteps):
        out = []
        for i, par in enumerate(value.parallels):
            out.extend(_hline_paths(par, f"{name}[{i}]", model))
        return out
    return []  # scalars, sphere points, infinity: nothing to draw


def render_svg(
    report: EvalReport,
    selection: list[str] | None = None,
    width: int = 600,
    model: str | None = None,
) -> str:
    chart = model if model is not None else report.model
    if selection is not None:
        for name in selection:
            if name not in report.bindings:
                raise GeometryError(f"unknown selection name {name!r}")
        wanted = set(selection)
        names = [n for n in report.binding_order if n in wanted]
    else:
        names = list(report.binding_order)

    body = [_path(_circle_d(Circle(0j, 1.0)), "absolute", "absolute")]
    for name in names:
        value = report.bindings[name]
        if is_inf(value):
            continue
        body.extend(_value_paths(name, value, chart))

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{width}" '
        f'viewBox="-{_BOX} -{_BOX} {2 * _BOX} {2 * _BOX}">',
        '<g transform="scale(1,-1)">',
        *body,
        "</g>",
        "</svg>",
    ]
    return "\n".join(lines) + "\n"
