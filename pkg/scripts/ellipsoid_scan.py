"""Slide a small action window across [0, horizon] and record window homology.

Nonzero rows sit exactly at the actions k pi r_j^2; the spectrum is then
rebuilt from these rows and the radii recovered from the spectrum.

    python scripts/ellipsoid_scan.py 1 3/2 --horizon 4pi --steps 160
"""

import argparse
from fractions import Fraction

from symphom import domains
from symphom.actions import ActionValue, parse_action


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("radii", nargs="+")
    ap.add_argument("--horizon", default="4pi")
    ap.add_argument("--steps", type=int, default=160)
    args = ap.parse_args()

    r = domains.EllipsoidSpec.of(*(Fraction(x) for x in args.radii))
    horizon = parse_action(args.horizon)
    top = horizon.coeff
    width = top / args.steps

    print(f"E{r}, windows ]c, c + {width}] * pi")
    print("c/pi\thomology")
    for i in range(args.steps):
        a = width * i
        H = domains.ellipsoid_window_homology(r, ActionValue.pi(a), ActionValue.pi(a + width))
        if not H.is_zero():
            print(f"{a}\t{H}")

    spectrum = domains.spectrum_from_homology(r, horizon)
    print("\nspectrum from homology: action, lower degree, multiplicity")
    for e in spectrum:
        print(f"{e.action}\t{e.index}\t{e.multiplicity}")
    print(f"recovered radii: {domains.recover_radii(spectrum, r.n, horizon)}")


if __name__ == "__main__":
    main()
