"""Construction-script language: parser, evaluator, SVG renderer, CLI."""

from .interp import EvalReport, HPoint, KPoint, RenderRequest, StatementResult, evaluate
from .parser import (
    Assertion,
    Binding,
    Directive,
    ParseError,
    Script,
    parse,
    print_script,
)
from .render import render_svg

__all__ = [
    "Assertion",
    "Binding",
    "Directive",
    "EvalReport",
    "HPoint",
    "KPoint",
    "ParseError",
    "RenderRequest",
    "Script",
    "StatementResult",
    "evaluate",
    "parse",
    "print_script",
    "render_svg",
]
