"""Table of Conley-Zehnder / Robbin-Salamon indices: closed form vs sampled copy.

    python scripts/index_table.py --kmax 4 --nmax 3
"""

import argparse
import math
import time

import numpy as np

from symphom import symplin


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--kmax", type=int, default=4)
    ap.add_argument("--nmax", type=int, default=3)
    ap.add_argument("--points", type=int, default=1601, help="grid size of the sampled copies")
    args = ap.parse_args()
    grid = np.linspace(0.0, 1.0, args.points)

    print("rotations, lambda = (k + 1/2) pi")
    print("n\tk\tclosed\tsampled\texpected")
    t0 = time.perf_counter()
    for n in range(1, args.nmax + 1):
        for k in range(args.kmax + 1):
            p = symplin.rotation((k + 0.5) * math.pi, n)
            a = symplin.cz_index(p)
            b = symplin.cz_index(symplin.sample_path(p, grid))
            print(f"{n}\t{k}\t{a}\t{b}\t{n * (2 * k + 1)}")

    print("\norbit spheres S_l and their two-point perturbations")
    print("l\tn\tsphere\tmin\tmax\tgap")
    for l in range(1, 4):
        for n in range(1, args.nmax + 1):
            s = symplin.rs_index(symplin.sphere_orbit_path(l, n, 1.0)).value
            lo = symplin.rs_index(symplin.perturbed_orbit_path(l, n, 0.01, [1.0] * (2 * n - 1))).value
            hi = symplin.rs_index(symplin.perturbed_orbit_path(l, n, 0.01, [-1.0] * (2 * n - 1))).value
            print(f"{l}\t{n}\t{s}\t{lo}\t{hi}\t{lo - hi}")
    print(f"\n{time.perf_counter() - t0:.2f} s")


if __name__ == "__main__":
    main()
