"""Acceptance criteria, one test each; a PASS/FAIL line per criterion is
printed in the terminal summary (see conftest.py).

Run alone with ``pytest tests/test_acceptance.py -v``.
"""

import math
from fractions import Fraction
from itertools import combinations

import numpy as np

from factories import pi, random_complex, random_exp_pair, record
from symphom import chainalg, domains, exact, symplin
from symphom.chainalg import HomologyTable
from symphom.domains import EllipsoidSpec


def test_1_rotation_indices():
    bad = []
    for n in (1, 2, 3):
        for k in range(5):
            got = symplin.cz_index(symplin.rotation((k + 0.5) * math.pi, n))
            if got != n * (2 * k + 1):
                bad.append((n, k, got))
    record("1 rotation indices", not bad, f"i_CZ = n(2k+1) for 15 (n, k); mismatches {bad}")


def test_2_morse_bott_indices():
    bad = []
    for l in (1, 2, 3):
        for n in (1, 2, 3):
            sphere = symplin.rs_index(symplin.sphere_orbit_path(l, n, 1.0)).value
            rep = domains.verify_perturbation_indices(l, n)
            if sphere != 2 * l * n + Fraction(1, 2):
                bad.append(("sphere", l, n, sphere))
            if (rep.minimum, rep.maximum, rep.gap) != (2 * l * n + n, 2 * l * n - n + 1, 2 * n - 1):
                bad.append(("perturbed", l, n, rep.minimum, rep.maximum))
    record("2 Morse-Bott indices", not bad, f"2ln+1/2, 2ln+n, 2ln-n+1, gap 2n-1 for l, n <= 3; mismatches {bad}")


def _band_free(rng, kmax):
    # rational multiple of pi at least 0.05 pi away from every l pi
    m = int(rng.integers(0, kmax + 1))
    return pi(m + Fraction(int(rng.integers(1, 19)), 20))


def test_3_ball_truncated_homology():
    bad = []
    for n in (1, 2, 3):
        for k in range(5):
            H = domains.ball_truncated_homology(domains.BallModel(n, pi(Fraction(2 * k + 1, 2))))
            if H != HomologyTable.free({n * (2 * k + 1): 1}):
                bad.append((n, k, str(H)))
    rng = np.random.default_rng(3)
    for _ in range(20):
        n = int(rng.integers(1, 4))
        k = int(rng.integers(0, 5))
        lam = pi(Fraction(2 * k + 1, 2))
        a, b = sorted([_band_free(rng, k), _band_free(rng, k)])
        while not a < b:
            a, b = sorted([_band_free(rng, k), _band_free(rng, k)])
        a = None if rng.random() < 0.3 else a
        ideal = chainalg.homology(chainalg.truncate(domains.ball_complex(domains.BallModel(n, lam)), a, b))
        pert = chainalg.homology(chainalg.truncate(domains.perturbed_ball_complex(n, lam, pi(Fraction(1, 100))), a, b))
        if ideal != pert:
            bad.append((n, k, str(a), str(b), str(ideal), str(pert)))
    record("3 ball truncated homology", not bad, f"Z in degree n(2k+1); perturbed = ideal on 20 windows; mismatches {bad}")


def test_4_ball_full_homology():
    bad = []
    for n in (1, 2):
        T = domains.ball_full_homology(n, pi(6))
        top = n * (2 * 6 - 1)
        if not T.limit.table.is_zero():
            bad.append((n, "limit", str(T.limit.table)))
        if T.witnessed_degrees != list(range(top + 1)):
            bad.append((n, "witnessed", T.witnessed_degrees))
        if any(T.limit.status[d] != "stable zero" for d in range(top + 1)):
            bad.append((n, "status"))
    record("4 ball full homology", not bad, f"limit 0, stabilization witnessed in degrees <= 11n, n <= 2; problems {bad}")


def _generic_radii(rng, n):
    # r_j in [1, 7/5] so r_n^2 < 2 r_1^2; distinct areas keep the windows apart
    while True:
        r = sorted({1 + Fraction(int(v), 50) for v in rng.integers(0, 21, size=n)})
        if len(r) == n:
            return EllipsoidSpec.of(*r)


def test_5_ellipsoid_windows():
    rng = np.random.default_rng(5)
    bad = []
    for _ in range(10):
        r = _generic_radii(rng, int(rng.integers(1, 5)))
        horizon = pi(max(r.areas))
        probe = domains.default_probe(r, horizon)
        for j, area in enumerate(r.areas, start=1):
            H = domains.ellipsoid_window_homology(r, pi(area - probe), pi(area + probe))
            if H != HomologyTable.free({r.n + 2 * j - 1: 1, r.n + 2 * j: 1}):
                bad.append((str(r), j, str(H)))
        for lo, hi in zip((0,) + r.areas, r.areas):
            mid = (lo + hi) / 2
            if not domains.ellipsoid_window_homology(r, pi(mid - probe), pi(mid + probe)).is_zero():
                bad.append((str(r), "midpoint", mid))
    record("5 ellipsoid windows", not bad, f"Z in n+2j-1, n+2j around pi r_j^2, midpoints 0, 10 radii vectors; problems {bad}")


def _random_radii(rng):
    n = int(rng.integers(1, 4))
    vals = [Fraction(int(rng.integers(2, 9)), int(rng.integers(2, 5))) for _ in range(n)]
    if n > 1 and rng.random() < 0.4:
        vals[1] = vals[0]
    return EllipsoidSpec.of(*vals)


def test_6_classification_round_trip():
    rng = np.random.default_rng(6)
    rs = [_random_radii(rng) for _ in range(25)]
    bad = []
    for r in rs:
        H = pi(max(r.areas) * 2)
        if domains.recover_radii(domains.ellipsoid_spectrum(r, H), r.n, H) != r:
            bad.append(("round trip", str(r)))
    pairs = 0
    for r, s in combinations(rs, 2):
        if r.n != s.n:
            continue
        H = pi(max(r.areas + s.areas) * 2)
        v = domains.classify(r, s, H)
        if v.equal != (r == s):
            bad.append(("verdict", str(r), str(s)))
            continue
        if not v.equal:
            pairs += 1
            H1 = domains.ellipsoid_window_homology(r, *v.window)
            H2 = domains.ellipsoid_window_homology(s, *v.window)
            if H1[v.degree] == H2[v.degree]:
                bad.append(("witness", str(r), str(s)))
    record("6 classification round trip", not bad, f"25 radii recovered, {pairs} unequal pairs witnessed; problems {bad}")


def _snf_ok(M):
    D, U, V = exact.smith_normal_form(M)
    if exact.matmul(exact.matmul(U, M), V) != D:
        return False
    if abs(exact.det(U)) != 1 or abs(exact.det(V)) != 1:
        return False
    diag = [D[i][i] for i in range(min(len(D), len(D[0])))]
    off = any(D[i][j] for i in range(len(D)) for j in range(len(D[0])) if i != j)
    nz = [d for d in diag if d]
    chain = all(b % a == 0 for a, b in zip(nz, nz[1:]))
    return not off and all(d >= 0 for d in diag) and chain and diag[: len(nz)] == nz


def test_7_algebraic_engine():
    rng = np.random.default_rng(7)
    bad = []
    built = [
        domains.ellipsoid_complex(EllipsoidSpec.of(1, Fraction(3, 2), 2), pi(8)),
        domains.ellipsoid_complex(EllipsoidSpec.of(1, 1, 1), pi(5)),
    ]
    built += [domains.ball_complex(domains.BallModel(n, pi(Fraction(9, 2)))) for n in (1, 2, 3, 4)]
    built += [domains.perturbed_ball_complex(n, pi(Fraction(9, 2)), pi(Fraction(1, 10))) for n in (1, 2, 3, 4)]
    built += [chainalg.tensor(built[0], built[2]), chainalg.truncate(built[1], pi(1), pi(3))]
    bad += [v for C in built for v in chainalg.validate(C).violations]

    snf_fail = 0
    for _ in range(200):
        m, k = (int(v) for v in rng.integers(1, 7, size=2))
        M = rng.integers(-6, 7, size=(m, k)).tolist()
        snf_fail += not _snf_ok(M)
    if snf_fail:
        bad.append(f"SNF failed on {snf_fail} matrices")

    kun_fail = 0
    for _ in range(100):
        A, B = random_complex(rng), random_complex(rng)
        for p in (0, 2):
            rep = chainalg.kunneth_check(A, B, p)
            kun_fail += not rep.ok
            bad += chainalg.validate(chainalg.tensor(A, B)).violations
    if kun_fail:
        bad.append(f"Kunneth failed {kun_fail} times")
    record("7 algebraic engine", not bad, f"{len(built)} constructed complexes, 200 SNF, 100 Kunneth pairs over Q and F_2; problems {bad[:3]}")


def test_8_index_additivity():
    rng = np.random.default_rng(8)
    bad = []
    grid = np.linspace(0.0, 1.0, 1601)
    for trial in range(100):
        n = int(rng.integers(1, 3))
        p, q, q_alone = random_exp_pair(rng, n)
        ip = symplin.rs_index(p).twice_value
        pq = symplin.concat(p, q)
        whole = symplin.rs_index(pq).twice_value
        if whole != ip + symplin.rs_index(q).twice_value:
            bad.append(("concat", trial))
        # a quarter of the trials also run a single spline through the whole path
        if trial % 4 == 0 and symplin.rs_index(symplin.sample_path(pq, grid)).twice_value != whole:
            bad.append(("sampled", trial))
        if symplin.rs_index(symplin.direct_sum(p, q_alone)).twice_value != ip + symplin.rs_index(q_alone).twice_value:
            bad.append(("direct sum", trial))
    record("8 index additivity", not bad, f"concatenation and direct sum on 100 random exp_const paths; failures {bad}")


def test_9_morse_examples():
    from symphom.verify import torus_fixture

    pts = [chainalg.CriticalPoint("min", 0, 0.0), chainalg.CriticalPoint("max", 2, 1.0)]
    sphere = chainalg.morse_homology(chainalg.morse_complex(pts, {}))
    torus = chainalg.morse_homology(chainalg.morse_complex(*torus_fixture()))
    bad_pts = [
        chainalg.CriticalPoint("a", 0, 0.0),
        chainalg.CriticalPoint("b", 1, 1.0),
        chainalg.CriticalPoint("c", 2, 2.0),
    ]
    try:
        chainalg.morse_complex(bad_pts, {("b", "a"): 1, ("c", "b"): 1})
        rejected = False
    except chainalg.ComplexError as exc:
        rejected = "d^2" in str(exc)
    ok = (
        sphere == HomologyTable.free({0: 1, 2: 1})
        and torus == HomologyTable.free({0: 1, 1: 2, 2: 1})
        and rejected
    )
    record("9 Morse examples", ok, f"S^2: {sphere}; T^2: {torus}; inconsistent counts rejected: {rejected}")


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-q"]))
