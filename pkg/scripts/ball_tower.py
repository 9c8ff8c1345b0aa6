"""Stages of the ball tower FH(H_lam), lam = (k + 1/2) pi, and its limit.

    python scripts/ball_tower.py --n 2 --horizon 6pi
"""

import argparse

from symphom import domains
from symphom.actions import parse_action


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=1)
    ap.add_argument("--horizon", default="6pi")
    ap.add_argument("--field", type=int, default=0)
    args = ap.parse_args()

    T = domains.ball_full_homology(args.n, parse_action(args.horizon), args.field)
    print("slope\tstage homology\tmap rank to previous stage")
    for i, (lam, H) in enumerate(zip(T.slopes, T.tables)):
        link = "-" if i == 0 else (T.maps[i - 1] or "0")
        print(f"{lam}\t{H}\t{link}")
    print()
    stable = [d for d, s in T.limit.status.items() if s != "not stabilized"]
    print(f"limit: {T.limit.table or 0}")
    print(f"stabilization witnessed in degrees {min(stable)}..{max(stable)}")
    loose = sorted(d for d, s in T.limit.status.items() if s == "not stabilized")
    if loose:
        print(f"not stabilized within the horizon: {loose}")


if __name__ == "__main__":
    main()
