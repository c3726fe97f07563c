"""Profile of the angle of parallelism across distances.

Tabulates phi(h) = acos(tanh h) together with its two asymptotic regimes:
phi -> pi/2 - h as h -> 0 (nearly Euclidean at small scales) and
phi ~ 2*exp(-h) as h -> infinity (lines look ultraparallel almost at once).
Optionally emits CSV for plotting.
"""

import argparse
import math

from planegeo.poincare import angle_of_parallelism, parallelism_distance


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--h-min", type=float, default=0.05)
    ap.add_argument("--h-max", type=float, default=6.0)
    ap.add_argument("--steps", type=int, default=24)
    ap.add_argument("--csv", action="store_true", help="machine-readable output")
    args = ap.parse_args()

    if args.csv:
        print("h,phi,phi_degrees,small_h_model,large_h_model,round_trip_error")
    else:
        print(f"{'h':>8}  {'phi (rad)':>12}  {'phi (deg)':>10}  {'pi/2 - h':>10}  {'2e^-h':>10}  round-trip")

    for k in range(args.steps + 1):
        h = args.h_min * (args.h_max / args.h_min) ** (k / args.steps)
        phi = angle_of_parallelism(h)
        small = math.pi / 2.0 - h
        large = 2.0 * math.exp(-h)
        back = abs(parallelism_distance(phi) - h)
        if args.csv:
            print(f"{h:.6f},{phi:.12f},{math.degrees(phi):.6f},{small:.6f},{large:.6f},{back:.3e}")
        else:
            print(
                f"{h:8.4f}  {phi:12.8f}  {math.degrees(phi):10.5f}  "
                f"{small:10.5f}  {large:10.5f}  {back:9.2e}"
            )


if __name__ == "__main__":
    main()
