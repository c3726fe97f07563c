"""Line-oriented parser for construction scripts.

One statement per line; ``#`` starts a comment.  Statement forms:

    KIND NAME = ARGS            binding (KIND from the registry)
    measure NAME = OP ARGS      measurement binding
    OP NAME = ARGS              shorthand for the above (OP a measurement op)
    assert_eq EXPR EXPR tol NUM assertion (EXPRs are whitespace-free)
    render PATH [width INT]     queue an SVG render of all drawable bindings
    tol KEY NUMBER              adjust a tolerance for later statements
    model poincare|klein        pick the disk model used for rendering

Names bind once, references must point at earlier lines, and arities are
checked against the registry — all before evaluation starts.
"""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass, field

from .registry import BINDING_KINDS, MEASURE_OPS, MODELS, RESERVED, TOL_KEYS


class ParseError(Exception):
    def __init__(self, message: str, line: int, col: int) -> None:
        super().__init__(f"line {line}, col {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


# A parenthesized group (possibly containing spaces) or a run of non-space.
_TOKEN_RE = re.compile(r"\(([^()]*)\)|\S+")
_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_NUMBER_RE = re.compile(r"[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?\Z")


@dataclass(frozen=True)
class NameRef:
    text: str


@dataclass(frozen=True)
class NumberArg:
    text: str
    value: float


@dataclass(frozen=True)
class CoordsArg:
    texts: tuple[str, ...]
    values: tuple[float, ...]


@dataclass(frozen=True)
class InfArg:
    pass


Arg = NameRef | NumberArg | CoordsArg | InfArg


@dataclass(frozen=True)
class Binding:
    kind: str  # registry kind, or "measure"
    name: str
    op: str | None  # measurement op when kind == "measure"
    args: tuple[Arg, ...]
    line: int = field(compare=False, default=0)


@dataclass(frozen=True)
class Assertion:
    lhs: str
    rhs: str
    tol_text: str
    tol_value: float
    line: int = field(compare=False, default=0)


@dataclass(frozen=True)
class Directive:
    which: str  # "render" | "tol" | "model"
    args: tuple[str, ...]
    line: int = field(compare=False, default=0)


Statement = Binding | Assertion | Directive


@dataclass(frozen=True)
class Script:
    statements: tuple[Statement, ...]


def _tokens(text: str) -> list[tuple[str, str | None, int]]:
    """(lexeme, paren-interior-or-None, column) triples for one line."""
    out = []
    for m in _TOKEN_RE.finditer(text):
        out.append((m.group(0), m.group(1), m.start() + 1))
    return out


def _parse_number(lexeme: str, line: int, col: int) -> float:
    if not _NUMBER_RE.match(lexeme):
        raise ParseError(f"expected a number, got {lexeme!r}", line, col)
    return float(lexeme)


def _parse_coords(interior: str, want: int, line: int, col: int) -> CoordsArg:
    parts = [p.strip() for p in interior.split(",")]
    if len(parts) != want:
        raise ParseError(f"expected {want} coordinates, got {len(parts)}", line, col)
    vals = tuple(_parse_number(p, line, col) for p in parts)
    return CoordsArg(tuple(parts), vals)


def _check_name(lexeme: str, line: int, col: int) -> str:
    if not _NAME_RE.match(lexeme):
        raise ParseError(f"invalid name {lexeme!r}", line, col)
    if lexeme in RESERVED:
        raise ParseError(f"{lexeme!r} is a reserved word", line, col)
    return lexeme


EXPR_FUNCS = ("ln", "sqrt", "sinh", "cosh")
_EXPR_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow)


def _validate_expr(src: str, known: dict[str, str], line: int, col: int) -> None:
    """Assertion expressions: arithmetic over numbers, pi, the four named
    functions, and previously bound scalar names.  Anything else is a parse
    error here rather than a surprise at evaluation time."""
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"bad expression {src!r}: {exc.msg}", line, col) from None

    def check(node: ast.expr) -> None:
        if isinstance(node, ast.BinOp) and isinstance(node.op, _EXPR_BINOPS):
            check(node.left)
            check(node.right)
        elif isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.UAdd, ast.USub)):
            check(node.operand)
        elif (
            isinstance(node, ast.Call)
            and isinstance(node.func, ast.Name)
            and node.func.id in EXPR_FUNCS
            and len(node.args) == 1
            and not node.keywords
        ):
            check(node.args[0])
        elif isinstance(node, ast.Name):
            if node.id == "pi":
                return
            if known.get(node.id) != "scalar":
                raise ParseError(f"unknown scalar {node.id!r} in expression", line, col)
        elif isinstance(node, ast.Constant) and not isinstance(node.value, bool) and isinstance(
            node.value, (int, float)
        ):
            return
        else:
            raise ParseError(f"unsupported syntax in expression {src!r}", line, col)

    check(tree.body)


def _parse_args(
    spec: tuple[str, ...],
    toks: list[tuple[str, str | None, int]],
    known: dict[str, str],
    line: int,
    what: str,
) -> tuple[Arg, ...]:
    if len(toks) != len(spec):
        col = toks[0][2] if toks else 1
        raise ParseError(
            f"{what} takes {len(spec)} argument(s), got {len(toks)}", line, col
        )
    args: list[Arg] = []
    for slot, (lexeme, interior, col) in zip(spec, toks):
        if slot in ("coords2", "coords3"):
            if interior is None:
                raise ParseError("expected a parenthesized coordinate tuple", line, col)
            args.append(_parse_coords(interior, 2 if slot == "coords2" else 3, line, col))
            continue
        if interior is not None:
            raise ParseError("unexpected parenthesized group", line, col)
        if slot == "name_or_inf" and lexeme == "inf":
            args.append(InfArg())
            continue
        if slot == "num" and _NUMBER_RE.match(lexeme):
            args.append(NumberArg(lexeme, float(lexeme)))
            continue
        if slot in ("name", "name_or_inf", "num"):
            if not _NAME_RE.match(lexeme) or lexeme in RESERVED:
                raise ParseError(f"expected a bound name, got {lexeme!r}", line, col)
            if lexeme not in known:
                raise ParseError(f"undefined name {lexeme!r}", line, col)
            if slot == "num" and known[lexeme] != "scalar":
                raise ParseError(
                    f"{lexeme!r} is not a scalar (expected a number here)", line, col
                )
            args.append(NameRef(lexeme))
            continue
        raise AssertionError(f"unknown slot {slot}")  # registry bug, not user error
    return tuple(args)


def parse(text: str) -> Script:
    statements: list[Statement] = []
    known: dict[str, str] = {}  # name -> "scalar" | "object"
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = _tokens(body)
        if not toks:
            continue
        head, head_interior, head_col = toks[0]
        if head_interior is not None:
            raise ParseError("statement cannot start with a group", lineno, head_col)

        if head == "assert_eq":
            if len(toks) != 5 or toks[3][0] != "tol":
                raise ParseError(
                    "assertion form is: assert_eq EXPR EXPR tol NUMBER", lineno, head_col
                )
            for lex, interior, col in toks[1:3]:
                if interior is not None:
                    raise ParseError(
                        "assertion expressions must not start with '('", lineno, col
                    )
                _validate_expr(lex, known, lineno, col)
            tol_lex, tol_interior, tol_col = toks[4]
            if tol_interior is not None:
                raise ParseError("expected a number after tol", lineno, tol_col)
            tol_value = _parse_number(tol_lex, lineno, tol_col)
            statements.append(
                Assertion(toks[1][0], toks[2][0], tol_lex, tol_value, line=lineno)
            )
            continue

        if head == "render":
            rest = toks[1:]
            if len(rest) not in (1, 3):
                raise ParseError("render form is: render PATH [width INT]", lineno, head_col)
            if any(interior is not None for _, interior, _ in rest):
                raise ParseError("render arguments cannot be groups", lineno, head_col)
            if len(rest) == 3:
                if rest[1][0] != "width":
                    raise ParseError("expected 'width'", lineno, rest[1][2])
                wl, _, wc = rest[2]
                if not wl.isdigit() or int(wl) <= 0:
                    raise ParseError("width must be a positive integer", lineno, wc)
            statements.append(
                Directive("render", tuple(t[0] for t in rest), line=lineno)
            )
            continue

        if head == "tol":
            if len(toks) != 3 or any(i is not None for _, i, _ in toks[1:]):
                raise ParseError("tol form is: tol KEY NUMBER", lineno, head_col)
            key, _, key_col = toks[1]
            if key not in TOL_KEYS:
                raise ParseError(
                    f"unknown tolerance key {key!r} (one of {', '.join(TOL_KEYS)})",
                    lineno,
                    key_col,
                )
            _parse_number(toks[2][0], lineno, toks[2][2])
            statements.append(Directive("tol", (key, toks[2][0]), line=lineno))
            continue

        if head == "model":
            if len(toks) != 2 or toks[1][1] is not None or toks[1][0] not in MODELS:
                raise ParseError("model form is: model poincare|klein", lineno, head_col)
            statements.append(Directive("model", (toks[1][0],), line=lineno))
            continue

        if head == "measure" or head in BINDING_KINDS or head in MEASURE_OPS:
            if len(toks) < 3 or toks[2][0] != "=":
                raise ParseError(f"binding form is: {head} NAME = ...", lineno, head_col)
            name_lex, name_interior, name_col = toks[1]
            if name_interior is not None:
                raise ParseError("expected a name", lineno, name_col)
            name = _check_name(name_lex, lineno, name_col)
            if name in known:
                raise ParseError(f"duplicate binding {name!r}", lineno, name_col)
            rest = toks[3:]
            if head == "measure":
                if not rest:
                    raise ParseError("measure form is: measure NAME = OP ...", lineno, head_col)
                op_lex, op_interior, op_col = rest[0]
                if op_interior is not None or op_lex not in MEASURE_OPS:
                    raise ParseError(f"unknown measurement op {op_lex!r}", lineno, op_col)
                args = _parse_args(MEASURE_OPS[op_lex], rest[1:], known, lineno, op_lex)
                statements.append(Binding("measure", name, op_lex, args, line=lineno))
            elif head in MEASURE_OPS:
                args = _parse_args(MEASURE_OPS[head], rest, known, lineno, head)
                statements.append(Binding("measure", name, head, args, line=lineno))
            else:
                args = _parse_args(BINDING_KINDS[head], rest, known, lineno, head)
                statements.append(Binding(head, name, None, args, line=lineno))
            last = statements[-1]
            known[name] = "scalar" if isinstance(last, Binding) and last.kind == "measure" else "object"
            continue

        raise ParseError(f"unknown statement {head!r}", lineno, head_col)

    return Script(tuple(statements))


def _print_arg(a: Arg) -> str:
    if isinstance(a, NameRef):
        return a.text
    if isinstance(a, NumberArg):
        return a.text
    if isinstance(a, CoordsArg):
        return "(" + ", ".join(a.texts) + ")"
    return "inf"


def print_script(s: Script) -> str:
    """Canonical text whose parse equals ``s`` (modulo line numbers)."""
    lines = []
    for st in s.statements:
        if isinstance(st, Binding):
            head = f"{st.kind} {st.name} =" if st.op is None else f"measure {st.name} = {st.op}"
            lines.append((head + " " + " ".join(map(_print_arg, st.args))).rstrip())
        elif isinstance(st, Assertion):
            lines.append(f"assert_eq {st.lhs} {st.rhs} tol {st.tol_text}")
        else:
            lines.append(st.which + " " + " ".join(st.args))
    return "\n".join(lines) + "\n"
