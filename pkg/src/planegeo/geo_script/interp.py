"""Evaluator for parsed construction scripts.

Statements run in order.  A geometric failure poisons its binding name: the
statement is recorded as an error, later statements that mention the name are
skipped (not errors of their own), and everything independent keeps running,
so a figure script with one bad line still renders the rest.
"""

from __future__ import annotations

import ast
import dataclasses
import math
from dataclasses import dataclass, field
from typing import Any, Union

import numpy as np

from ..core_numerics import DEFAULT_TOLERANCES, GeometryError, Tolerances
from ..euclid_plane import Circle, Line, dist, line_through, signed_angle
from ..inversive import (
    INF,
    ExtPoint,
    cline_through,
    invert_cline,
    invert_point,
    is_inf,
    ptolemy_residual,
    real_cross_ratio,
)
from ..klein import BolyaiSteps, bolyai_steps, klein_dist, klein_to_poincare, poincare_to_klein
from ..poincare import (
    HCircle,
    HLine,
    angle_of_parallelism,
    check_hpoint,
    conformal_factor,
    h_angle,
    h_circle_realize,
    h_circumference,
    h_defect,
    h_dist,
    h_foot,
    h_line_through,
    h_reflect,
)
from ..spherical import s_dist, s_excess
from .parser import (
    Arg,
    Assertion,
    Binding,
    CoordsArg,
    Directive,
    InfArg,
    NameRef,
    NumberArg,
    Script,
)


@dataclass(frozen=True)
class HPoint:
    """A point of the conformal disk model (tagged so renderers can convert)."""

    z: complex


@dataclass(frozen=True)
class KPoint:
    """A point in Klein coordinates."""

    z: complex


Value = Union[complex, float, HPoint, KPoint, Line, Circle, HLine, HCircle, BolyaiSteps, Any]


@dataclass
class StatementResult:
    line: int
    stype: str  # "binding" | "assertion" | "directive"
    text: str
    status: str  # "ok" | "fail" | "error" | "skipped"
    name: str | None = None
    value: float | None = None  # scalar bindings and assertion deltas only
    detail: str = ""


@dataclass(frozen=True)
class RenderRequest:
    path: str
    width: int
    model: str


@dataclass
class EvalReport:
    statements: list[StatementResult] = field(default_factory=list)
    bindings: dict[str, Value] = field(default_factory=dict)
    binding_order: list[str] = field(default_factory=list)
    renders: list[RenderRequest] = field(default_factory=list)
    model: str = "poincare"

    @property
    def assertions_passed(self) -> int:
        return sum(1 for s in self.statements if s.stype == "assertion" and s.status == "ok")

    @property
    def assertions_failed(self) -> int:
        return sum(1 for s in self.statements if s.status == "fail")

    @property
    def errors(self) -> int:
        return sum(1 for s in self.statements if s.status == "error")

    def exit_code(self) -> int:
        if self.errors:
            return 3
        if self.assertions_failed:
            return 2
        return 0


_EXPR_FUNCS = {"ln": math.log, "sqrt": math.sqrt, "sinh": math.sinh, "cosh": math.cosh}


def _eval_expr(src: str, scalars: dict[str, float]) -> float:
    """The parser already vetted the syntax; this walk just computes."""
    tree = ast.parse(src, mode="eval")

    def go(node: ast.expr) -> float:
        if isinstance(node, ast.BinOp):
            a, b = go(node.left), go(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                return a / b
            return a**b
        if isinstance(node, ast.UnaryOp):
            v = go(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.Call):
            assert isinstance(node.func, ast.Name)
            return _EXPR_FUNCS[node.func.id](go(node.args[0]))
        if isinstance(node, ast.Name):
            if node.id == "pi":
                return math.pi
            if node.id not in scalars:
                raise KeyError(node.id)
            return scalars[node.id]
        assert isinstance(node, ast.Constant)
        return float(node.value)

    return go(tree.body)


def _expr_names(src: str) -> set[str]:
    return {
        n.id for n in ast.walk(ast.parse(src, mode="eval")) if isinstance(n, ast.Name)
    } - set(_EXPR_FUNCS) - {"pi"}


def _as_point(v: Value, what: str) -> complex:
    if isinstance(v, (HPoint, KPoint)):
        return v.z
    if isinstance(v, complex):
        return v
    raise GeometryError(f"{what} expects a point")


def _as_ext(v: Value, what: str) -> ExtPoint:
    if is_inf(v):
        return INF
    return _as_point(v, what)


def _as_scalar(a: Arg, env: dict[str, Value], what: str) -> float:
    if isinstance(a, NumberArg):
        return a.value
    assert isinstance(a, NameRef)
    v = env[a.text]
    if not isinstance(v, float):
        raise GeometryError(f"{what} expects a scalar")
    return v


def _as_sphere(v: Value, what: str) -> np.ndarray:
    if isinstance(v, np.ndarray):
        return v
    raise GeometryError(f"{what} expects a sphere point")


def _require(v: Value, cls: type, what: str) -> Any:
    if not isinstance(v, cls):
        raise GeometryError(f"{what} expects {cls.__name__}")
    return v


def _bolyai_gap(steps: BolyaiSteps) -> float:
    """Largest over the two constructed parallels of its nearest ideal-point
    gap to the base line — zero iff each shares an end with the base."""
    ideals = (steps.base.ideal_a, steps.base.ideal_b)
    return max(
        min(abs(ia - ib) for ia in (par.ideal_a, par.ideal_b) for ib in ideals)
        for par in steps.parallels
    )


def _eval_binding(st: Binding, env: dict[str, Value], tol: Tolerances) -> Value:
    a = st.args

    def pt(i: int) -> complex:
        return _as_point(env[a[i].text], st.kind if st.op is None else st.op)

    if st.kind == "point":
        x, y = a[0].values
        return complex(x, y)
    if st.kind == "hpoint":
        x, y = a[0].values
        z = complex(x, y)
        check_hpoint(z, tol)
        return HPoint(z)
    if st.kind == "kpoint":
        x, y = a[0].values
        z = complex(x, y)
        if abs(z) >= 1.0 - tol.eps_degenerate:
            raise GeometryError(f"point {z} is not strictly inside the unit disk")
        return KPoint(z)
    if st.kind == "spoint":
        v = np.asarray(a[0].values, dtype=float)
        n = float(np.linalg.norm(v))
        if n <= tol.eps_degenerate:
            raise GeometryError("zero vector cannot be normalized to the sphere")
        return v / n
    if st.kind == "line":
        return line_through(pt(0), pt(1), tol)
    if st.kind == "circle":
        return Circle(pt(0), _as_scalar(a[1], env, "circle"))
    if st.kind == "cline3":
        pts = [
            INF if isinstance(arg, InfArg) else _as_ext(env[arg.text], "cline3")
            for arg in a
        ]
        return cline_through(pts[0], pts[1], pts[2], tol)
    if st.kind == "invert":
        w = _require(env[a[0].text], Circle, "invert")
        target = env[a[1].text]
        if isinstance(target, (Line, Circle)):
            return invert_cline(w, target, tol)
        return invert_point(w, _as_ext(target, "invert"))
    if st.kind == "hline":
        return h_line_through(pt(0), pt(1), tol)
    if st.kind == "hreflect":
        l = _require(env[a[0].text], HLine, "hreflect")
        return HPoint(h_reflect(l, pt(1), tol))
    if st.kind == "hcircle":
        return h_circle_realize(pt(0), _as_scalar(a[1], env, "hcircle"), tol)
    if st.kind == "klein":
        return KPoint(poincare_to_klein(pt(0), tol))
    if st.kind == "poincare":
        return HPoint(klein_to_poincare(pt(0), tol))
    if st.kind == "bolyai":
        l = _require(env[a[0].text], HLine, "bolyai")
        return bolyai_steps(l, pt(1), tol)

    assert st.kind == "measure" and st.op is not None
    op = st.op
    if op == "dist":
        return dist(pt(0), pt(1))
    if op == "hdist":
        return h_dist(pt(0), pt(1), tol)
    if op == "kdist":
        return klein_dist(pt(0), pt(1), tol)
    if op == "sdist":
        return s_dist(_as_sphere(env[a[0].text], op), _as_sphere(env[a[1].text], op))
    if op == "angle":
        return signed_angle(pt(0), pt(1), pt(2), tol)
    if op == "hangle":
        return h_angle(pt(0), pt(1), pt(2), tol)
    if op == "defect":
        return h_defect(pt(0), pt(1), pt(2), tol)
    if op == "excess":
        return s_excess(*(_as_sphere(env[arg.text], op) for arg in a))
    if op == "circum":
        return h_circumference(_as_scalar(a[0], env, op))
    if op == "parallelism":
        return angle_of_parallelism(_as_scalar(a[0], env, op))
    if op == "conformal":
        return conformal_factor(pt(0), tol)
    if op == "crossratio":
        return real_cross_ratio(pt(0), pt(1), pt(2), pt(3), tol)
    if op == "ptolemy":
        return ptolemy_residual(pt(0), pt(1), pt(2), pt(3))
    if op == "hlinedist":
        p = pt(0)
        l = _require(env[a[1].text], HLine, op)
        return h_dist(p, h_foot(p, l, tol), tol)
    if op == "bolyaigap":
        return _bolyai_gap(_require(env[a[0].text], BolyaiSteps, op))
    steps = _require(env[a[0].text], BolyaiSteps, op)
    if op == "bolyaiqr":
        return h_dist(steps.foot, steps.r, tol)
    assert op == "bolyaipt"
    return h_dist(steps.apex, steps.t_pair[0], tol)


def _stmt_text(st: Binding | Assertion | Directive) -> str:
    from .parser import print_script

    return print_script(Script((st,))).strip()


def evaluate(script: Script, tol: Tolerances = DEFAULT_TOLERANCES) -> EvalReport:
    report = EvalReport()
    env: dict[str, Value] = {}
    failed: set[str] = set()
    current = tol

    for st in script.statements:
        text = _stmt_text(st)
        if isinstance(st, Binding):
            used = {arg.text for arg in st.args if isinstance(arg, NameRef)}
            poisoned = used & failed
            if poisoned:
                report.statements.append(
                    StatementResult(
                        st.line,
                        "binding",
                        text,
                        "skipped",
                        name=st.name,
                        detail=f"uses failed binding {sorted(poisoned)[0]!r}",
                    )
                )
                failed.add(st.name)
                continue
            try:
                value = _eval_binding(st, env, current)
            except GeometryError as exc:
                report.statements.append(
                    StatementResult(
                        st.line, "binding", text, "error", name=st.name, detail=str(exc)
                    )
                )
                failed.add(st.name)
                continue
            env[st.name] = value
            report.bindings[st.name] = value
            report.binding_order.append(st.name)
            report.statements.append(
                StatementResult(
                    st.line,
                    "binding",
                    text,
                    "ok",
                    name=st.name,
                    value=value if isinstance(value, float) else None,
                )
            )
        elif isinstance(st, Assertion):
            needed = _expr_names(st.lhs) | _expr_names(st.rhs)
            poisoned = needed & failed
            if poisoned:
                report.statements.append(
                    StatementResult(
                        st.line,
                        "assertion",
                        text,
                        "skipped",
                        detail=f"uses failed binding {sorted(poisoned)[0]!r}",
                    )
                )
                continue
            scalars = {k: v for k, v in env.items() if isinstance(v, float)}
            try:
                delta = abs(_eval_expr(st.lhs, scalars) - _eval_expr(st.rhs, scalars))
            except (ZeroDivisionError, OverflowError, ValueError) as exc:
                report.statements.append(
                    StatementResult(
                        st.line, "assertion", text, "error", detail=f"expression: {exc}"
                    )
                )
                continue
            ok = delta <= st.tol_value
            report.statements.append(
                StatementResult(
                    st.line,
                    "assertion",
                    text,
                    "ok" if ok else "fail",
                    value=delta,
                    detail="" if ok else f"delta {delta:.3e} exceeds tol {st.tol_text}",
                )
            )
        else:
            if st.which == "tol":
                key, lex = st.args
                try:
                    current = dataclasses.replace(current, **{key: float(lex)})
                except ValueError as exc:  # Tolerances rejects bad orderings
                    report.statements.append(
                        StatementResult(st.line, "directive", text, "error", detail=str(exc))
                    )
                    continue
            elif st.which == "model":
                report.model = st.args[0]
            else:  # render
                width = int(st.args[2]) if len(st.args) == 3 else 600
                report.renders.append(RenderRequest(st.args[0], width, report.model))
            report.statements.append(StatementResult(st.line, "directive", text, "ok"))

    return report
