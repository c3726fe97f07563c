"""Convergence of inscribed regular n-gon perimeters to 2*pi*sinh(r).

For a circle of hyperbolic radius r, the perimeter of the inscribed regular
n-gon (vertices equally spaced on the Euclidean circle tanh(r/2)) converges
quadratically in 1/n to the circumference.  This prints the deficit table so
the rate is visible by eye: each doubling of n should cut the relative
deficit by about 4x.

Usage:
    python scripts/circumference_convergence.py --radius 0.5 --radius 2 --max-power 14
"""

import argparse
import cmath
import math

from planegeo.poincare import h_circumference, h_dist


def inscribed_perimeter(r: float, n: int) -> float:
    x = math.tanh(r / 2.0)
    verts = [x * cmath.exp(2j * math.pi * k / n) for k in range(n)]
    return sum(h_dist(verts[k], verts[(k + 1) % n]) for k in range(n))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--radius", type=float, action="append", help="h-radius (repeatable)")
    ap.add_argument("--max-power", type=int, default=13, help="largest n is 2**max_power")
    args = ap.parse_args()
    radii = args.radius or [0.5, 1.0, 2.0]

    for r in radii:
        target = h_circumference(r)
        print(f"r = {r:g}   circumference 2*pi*sinh(r) = {target:.12f}")
        print(f"  {'n':>8}  {'perimeter':>18}  {'rel deficit':>12}  ratio")
        last = None
        for p in range(3, args.max_power + 1):
            n = 2**p
            per = inscribed_perimeter(r, n)
            deficit = (target - per) / target
            ratio = "" if last is None else f"{last / deficit:6.2f}"
            print(f"  {n:>8}  {per:>18.12f}  {deficit:>12.3e}  {ratio}")
            last = deficit
        print()


if __name__ == "__main__":
    main()
