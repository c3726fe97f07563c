"""Render every golden construction script to SVG in one directory.

Evaluates each golden/*.geo (skipping the deliberately failing ones), draws
all of its bindings, and additionally re-renders the hyperbolic scenes in the
Klein chart so the two disk models can be compared side by side.
"""

import argparse
import sys
from pathlib import Path

from planegeo.geo_script import evaluate, parse, render_svg

REPO = Path(__file__).resolve().parent.parent


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=REPO / "gallery")
    ap.add_argument("--width", type=int, default=480)
    ap.add_argument("--scripts", type=Path, default=REPO / "golden")
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    failures = 0
    for path in sorted(args.scripts.glob("*.geo")):
        if path.name.startswith("fails_"):
            continue
        report = evaluate(parse(path.read_text()))
        if report.exit_code() != 0:
            print(f"{path.name}: exit {report.exit_code()}, skipped", file=sys.stderr)
            failures += 1
            continue
        stem = path.stem
        (args.out / f"{stem}.svg").write_text(
            render_svg(report, width=args.width), encoding="utf-8"
        )
        wrote = [f"{stem}.svg"]
        if any(type(v).__name__ in ("HPoint", "KPoint", "HLine") for v in report.bindings.values()):
            (args.out / f"{stem}_klein.svg").write_text(
                render_svg(report, width=args.width, model="klein"), encoding="utf-8"
            )
            wrote.append(f"{stem}_klein.svg")
        print(f"{path.name}: {', '.join(wrote)}")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
