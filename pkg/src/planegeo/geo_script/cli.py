"""``geo run`` — evaluate a construction script, report, render, exit.

Exit codes: 0 all assertions pass, 1 parse failure (or unreadable file),
2 at least one assertion failed, 3 a statement hit a geometric error.
Geometric errors outrank assertion failures when both occur.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from ..core_numerics import Tolerances
from .interp import EvalReport, evaluate
from .parser import Assertion, ParseError, Script, parse
from .render import render_svg

_STATUS_TAG = {"ok": "PASS", "fail": "FAIL", "error": "ERROR", "skipped": "SKIP"}


def _text_report(report: EvalReport, out) -> None:
    for s in report.statements:
        if s.stype == "assertion":
            tag = _STATUS_TAG[s.status]
            extra = f" delta={s.value:.3e}" if s.value is not None else ""
        else:
            tag = "ok" if s.status == "ok" else _STATUS_TAG[s.status]
            extra = f" -> {s.value!r}" if s.value is not None else ""
        if s.detail:
            extra += f" ({s.detail})"
        print(f"line {s.line}: {tag}{extra}  {s.text}", file=out)
    print(
        f"assertions: {report.assertions_passed} passed, "
        f"{report.assertions_failed} failed; errors: {report.errors}; "
        f"exit {report.exit_code()}",
        file=out,
    )


def _json_report(report: EvalReport, out) -> None:
    doc = {
        "exit_code": report.exit_code(),
        "model": report.model,
        "assertions_passed": report.assertions_passed,
        "assertions_failed": report.assertions_failed,
        "errors": report.errors,
        "statements": [dataclasses.asdict(s) for s in report.statements],
    }
    print(json.dumps(doc, sort_keys=True, indent=2), file=out)


def _override_assertion_tols(script: Script, eps: float) -> Script:
    stmts = tuple(
        dataclasses.replace(st, tol_value=eps, tol_text=repr(eps))
        if isinstance(st, Assertion)
        else st
        for st in script.statements
    )
    return Script(stmts)


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(prog="geo", description="construction-script runner")
    sub = ap.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="evaluate a .geo script")
    run.add_argument("file", help="script path")
    run.add_argument(
        "--tol",
        type=float,
        default=None,
        metavar="EPS",
        help="override every assertion tolerance and the geometric eps_assert",
    )
    run.add_argument("--render", default=None, metavar="OUT_SVG", help="write an SVG of all bindings")
    run.add_argument("--report", choices=("json", "text"), default="text")
    args = ap.parse_args(argv)

    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"geo: cannot read {args.file}: {exc}", file=sys.stderr)
        return 1

    try:
        script = parse(text)
    except ParseError as exc:
        print(f"geo: parse error: {exc}", file=sys.stderr)
        return 1

    tol = Tolerances()
    if args.tol is not None:
        eps = args.tol
        if eps <= 0.0:
            print("geo: --tol must be positive", file=sys.stderr)
            return 1
        script = _override_assertion_tols(script, eps)
        tol = Tolerances(
            eps_eq=min(tol.eps_eq, eps),
            eps_assert=eps,
            eps_degenerate=min(tol.eps_degenerate, eps),
        )

    report = evaluate(script, tol)

    if args.report == "json":
        _json_report(report, sys.stdout)
    else:
        _text_report(report, sys.stdout)

    requests = list(report.renders)
    if args.render is not None:
        from .interp import RenderRequest

        requests.append(RenderRequest(args.render, 600, report.model))
    for req in requests:
        svg = render_svg(report, width=req.width, model=req.model)
        try:
            with open(req.path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(svg)
        except OSError as exc:
            print(f"geo: cannot write {req.path}: {exc}", file=sys.stderr)
            return 3

    return report.exit_code()


if __name__ == "__main__":
    raise SystemExit(main())
