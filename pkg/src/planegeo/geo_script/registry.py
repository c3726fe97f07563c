"""Operation registry for the construction language.

Each binding kind and measurement op declares the shape of its right-hand
side, so arity and reference errors surface at parse time with a line and
column, before anything geometric runs.

Argument slot codes:
    name        reference to an earlier binding
    name_or_inf reference or the literal token ``inf``
    num         numeric literal, or reference to an earlier scalar binding
    coords2     parenthesized pair ``(x, y)``
    coords3     parenthesized triple ``(x, y, z)``
"""

from __future__ import annotations

# Binding kinds: KIND NAME = ARGS
BINDING_KINDS: dict[str, tuple[str, ...]] = {
    "point": ("coords2",),
    "hpoint": ("coords2",),
    "kpoint": ("coords2",),
    "spoint": ("coords3",),
    "line": ("name", "name"),
    "circle": ("name", "num"),
    "cline3": ("name_or_inf", "name_or_inf", "name_or_inf"),
    "invert": ("name", "name"),
    "hline": ("name", "name"),
    "hreflect": ("name", "name"),
    "hcircle": ("name", "num"),
    "klein": ("name",),
    "poincare": ("name",),
    "bolyai": ("name", "name"),
    # "measure" is handled specially: measure NAME = OP args
}

# Measurement ops: measure NAME = OP ARGS, or the shorthand OP NAME = ARGS
MEASURE_OPS: dict[str, tuple[str, ...]] = {
    "dist": ("name", "name"),
    "hdist": ("name", "name"),
    "kdist": ("name", "name"),
    "sdist": ("name", "name"),
    "angle": ("name", "name", "name"),
    "hangle": ("name", "name", "name"),
    "defect": ("name", "name", "name"),
    "excess": ("name", "name", "name"),
    "circum": ("num",),
    "parallelism": ("num",),
    "conformal": ("name",),
    "crossratio": ("name", "name", "name", "name"),
    "ptolemy": ("name", "name", "name", "name"),
    "hlinedist": ("name", "name"),
    "bolyaigap": ("name",),
    "bolyaiqr": ("name",),
    "bolyaipt": ("name",),
}

TOL_KEYS = ("eps_eq", "eps_assert", "eps_degenerate")
MODELS = ("poincare", "klein")

RESERVED = (
    set(BINDING_KINDS)
    | set(MEASURE_OPS)
    | {"measure", "assert_eq", "tol", "render", "model", "width", "inf", "pi"}
)
