"""Executable checks of the closed-form index and homology values.

Each check carries a group (for ``--only``) and an anchor: the formula it
reproduces. Checks never raise; any exception is a failure with its message.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from symphom import chainalg, domains, symplin
from symphom.actions import ActionValue
from symphom.config import DEFAULT_TOL, Tolerances

GROUPS = ("index", "ball", "ellipsoid", "morse", "algebra")

Result = Tuple[bool, str]


@dataclass
class Check:
    name: str
    group: str
    anchor: str
    run: Callable[[Tolerances], Result]


@dataclass
class Outcome:
    check: Check
    ok: bool
    detail: str

    def to_json(self) -> dict:
        return {
            "name": self.check.name,
            "group": self.check.group,
            "anchor": self.check.anchor,
            "ok": self.ok,
            "detail": self.detail,
        }


def _pi(q) -> ActionValue:
    return ActionValue.pi(Fraction(q))


def _sampled_copy(p: symplin.SymplecticPath, points: int = 1601) -> symplin.SymplecticPath:
    return symplin.sample_path(p, np.linspace(0.0, 1.0, points))


# ------------------------------------------------------------ index


def _rotation_crossings(tol):
    cs, _ = symplin.find_crossings(symplin.rotation(math.pi / 2), tol)
    got = [(c.t, c.kernel_dim, c.signature) for c in cs]
    return got == [(0.0, 2, 2)], f"crossings {got}"


def _rotation_interior(tol):
    cs, _ = symplin.find_crossings(symplin.rotation(2.5 * math.pi), tol)
    ts = [round(c.t, 12) for c in cs]
    ok = ts == [0.0, 0.4, 0.8] and all(c.signature == 2 for c in cs)
    return ok, f"t = {ts}, signatures {[c.signature for c in cs]}"


def _small_rotation(tol):
    vals = [symplin.rs_index(symplin.rotation(0.3, n), tol).value for n in (1, 2, 3)]
    return vals == [1, 2, 3], f"i_RS = {vals} for n = 1, 2, 3"


def _rotation_table(sampled: bool):
    def run(tol):
        bad = []
        for n in (1, 2, 3):
            for k in range(5):
                p = symplin.rotation((k + 0.5) * math.pi, n)
                if sampled:
                    p = _sampled_copy(p)
                got = symplin.cz_index(p, tol)
                if got != n * (2 * k + 1):
                    bad.append(f"n={n} k={k}: {got}")
        return not bad, "; ".join(bad) or "15 cases, n <= 3, k <= 4"

    return run


def _cz_examples(tol):
    a = symplin.cz_index(symplin.rotation(1.5 * math.pi, 1), tol)
    b = symplin.cz_index(symplin.rotation(1.5 * math.pi, 2), tol)
    return (a, b) == (3, 6), f"i_CZ = {a} (n=1), {b} (n=2)"


def _sphere_indices(tol):
    bad = []
    for l in (1, 2, 3):
        for n in (1, 2, 3):
            v = symplin.rs_index(symplin.sphere_orbit_path(l, n, 1.0), tol).value
            if v != 2 * l * n + Fraction(1, 2):
                bad.append(f"l={l} n={n}: {v}")
    return not bad, "; ".join(bad) or "l, n <= 3"


def _perturbed_indices(tol):
    bad = []
    for l in (1, 2, 3):
        for n in (1, 2, 3):
            rep = domains.verify_perturbation_indices(l, n, tol=tol)
            if not rep.ok:
                bad.append(f"l={l} n={n}: " + ", ".join(rep.failures))
    return not bad, "; ".join(bad) or "minimum 2ln+n, maximum 2ln-n+1, gap 2n-1 for l, n <= 3"


def _product(tol):
    p = symplin.direct_sum(symplin.rotation(math.pi / 2), symplin.rotation(math.pi / 2))
    v = symplin.rs_index(p, tol).value
    return v == 2, f"i_RS = {v}"


def _loop_plus_shear(tol):
    loop = symplin.rs_index(symplin.rotation(2 * math.pi, 2), tol).value
    sh = symplin.rs_index(symplin.shear(0.1, 2), tol).value
    return (loop, sh) == (8, Fraction(1, 2)), f"loop {loop}, shear {sh}"


# ------------------------------------------------------------ ball


def _ball_truncated(tol):
    bad = []
    for n in (1, 2, 3):
        for k in range(5):
            H = domains.ball_truncated_homology(domains.BallModel(n, _pi(Fraction(2 * k + 1, 2))))
            if H != chainalg.HomologyTable.free({n * (2 * k + 1): 1}):
                bad.append(f"n={n} k={k}: {H}")
    return not bad, "; ".join(bad) or "Z in degree n(2k+1) only, n <= 3, k <= 4"


def _ball_full(tol):
    bad = []
    for n in (1, 2):
        T = domains.ball_full_homology(n, _pi(6))
        top = n * 11
        if not T.limit.table.is_zero() or T.witnessed_degrees != list(range(top + 1)):
            bad.append(f"n={n}: {T.limit.table}, witnessed {T.witnessed_degrees[-1:]}")
    return not bad, "; ".join(bad) or "limit 0, witnessed in all degrees <= 11n"


def _perturbed_diagram(tol):
    C = domains.perturbed_ball_complex(1, _pi(Fraction(7, 2)), _pi(Fraction(1, 100)))
    degs = [g.degree for g in C.generators]
    arrows = sorted((C.by_id[x].degree, C.by_id[y].degree) for (y, x) in C.differential)
    ok = degs == [1, 2, 3, 4, 5, 6, 7] and arrows == [(1, 2), (3, 4), (5, 6)]
    return ok, f"degrees {degs}, arrows {arrows}"


def _perturbed_homology(tol):
    bad = []
    for n in (1, 2, 3):
        for k in range(5):
            lam = _pi(Fraction(2 * k + 1, 2))
            H = chainalg.homology(domains.perturbed_ball_complex(n, lam, _pi(Fraction(1, 20))))
            if H != chainalg.HomologyTable.free({n + 2 * k * n: 1}):
                bad.append(f"n={n} k={k}: {H}")
    return not bad, "; ".join(bad) or "Z in degree n + 2kn only"


# ------------------------------------------------------------ ellipsoids


def _ellipsoid_display(tol):
    C = domains.ellipsoid_complex(domains.EllipsoidSpec.of(1), _pi(Fraction(5, 2)))
    got = [(g.degree, str(g.action)) for g in C.generators]
    want = [(1, "0"), (2, "1*pi"), (3, "1*pi"), (4, "2*pi"), (5, "2*pi")]
    H = chainalg.homology(C)
    ok = got == want and H == chainalg.HomologyTable.free({5: 1})
    return ok, f"generators {got}, homology {H}"


def _ellipsoid_top(tol):
    r = domains.EllipsoidSpec.of(1, 2)
    b = _pi(5)
    m = domains.m_count(r, b)
    H = domains.ellipsoid_window_homology(r, None, b)
    return H == chainalg.HomologyTable.free({r.n + 2 * m: 1}), f"m = {m}, homology {H}"


def _m_count(tol):
    m = domains.m_count(domains.EllipsoidSpec.of(1), _pi(Fraction(7, 2)))
    return m == 3, f"m = {m}"


def _ellipsoid_windows(tol):
    bad = []
    for radii in [(1, Fraction(6, 5)), (1, Fraction(11, 10), Fraction(13, 10)), (Fraction(3, 2), Fraction(8, 5))]:
        r = domains.EllipsoidSpec.of(*radii)
        probe = domains.default_probe(r, _pi(max(r.areas)))
        for j, area in enumerate(r.areas, start=1):
            H = domains.ellipsoid_window_homology(r, _pi(area - probe), _pi(area + probe))
            want = chainalg.HomologyTable.free({r.n + 2 * j - 1: 1, r.n + 2 * j: 1})
            if H != want:
                bad.append(f"r={r} j={j}: {H}")
    return not bad, "; ".join(bad) or "Z in degrees n+2j-1, n+2j around pi r_j^2"


def _spectrum_rebuild(tol):
    bad = []
    for radii in [(1,), (1, Fraction(3, 2)), (1, 1), (1, 1, 1), (Fraction(2, 3), 1, Fraction(5, 4))]:
        r = domains.EllipsoidSpec.of(*radii)
        H = _pi(4)
        if domains.spectrum_from_homology(r, H) != domains.ellipsoid_spectrum(r, H):
            bad.append(f"r={r}")
    return not bad, "; ".join(bad) or "window homology recovers (action, index, multiplicity); midpoints vanish"


def _classification(tol):
    rs = [(1,), (Fraction(3, 2),), (1, 2), (1, Fraction(3, 2)), (1, 1), (Fraction(3, 2), Fraction(3, 2))]
    bad = []
    for a in rs:
        for b in rs:
            if len(a) != len(b):
                continue
            ra, rb = domains.EllipsoidSpec.of(*a), domains.EllipsoidSpec.of(*b)
            v = domains.classify(ra, rb, _pi(5))
            if v.equal != (ra == rb):
                bad.append(f"{ra} vs {rb}")
    return not bad, "; ".join(bad) or "equal exactly when radii agree"


# ------------------------------------------------------------ morse and algebra


def _sphere_morse(tol):
    pts = [chainalg.CriticalPoint("min", 0, 0.0), chainalg.CriticalPoint("max", 2, 1.0)]
    H = chainalg.morse_homology(chainalg.morse_complex(pts, {}))
    return H == chainalg.HomologyTable.free({0: 1, 2: 1}), f"H_* = {H}"


def torus_fixture():
    pts = [
        chainalg.CriticalPoint("min", 0, 0.0),
        chainalg.CriticalPoint("s1", 1, 1.0),
        chainalg.CriticalPoint("s2", 1, 1.5),
        chainalg.CriticalPoint("max", 2, 3.0),
    ]
    counts = {
        ("s1", "min"): [1, -1],
        ("s2", "min"): [1, -1],
        ("max", "s1"): [1, -1],
        ("max", "s2"): [-1, 1],
    }
    return pts, counts


def _torus_morse(tol):
    H = chainalg.morse_homology(chainalg.morse_complex(*torus_fixture()))
    return H == chainalg.HomologyTable.free({0: 1, 1: 2, 2: 1}), f"H_* = {H}"


def _kunneth_ellipsoids(tol):
    A = domains.ellipsoid_complex(domains.EllipsoidSpec.of(1), _pi(Fraction(5, 2)))
    B = domains.ellipsoid_complex(domains.EllipsoidSpec.of(1, Fraction(3, 2)), _pi(3))
    reps = [chainalg.kunneth_check(A, B, p) for p in (0, 2)]
    return all(r.ok for r in reps), f"ranks {reps[0].lhs}"


def _complexes_valid(tol):
    cs = [domains.ellipsoid_complex(domains.EllipsoidSpec.of(1, Fraction(3, 2)), _pi(6))]
    cs += [domains.perturbed_ball_complex(n, _pi(Fraction(9, 2)), _pi(Fraction(1, 10))) for n in (1, 2, 3)]
    bad = [v for C in cs for v in chainalg.validate(C).violations]
    return not bad, "; ".join(bad[:3]) or f"{len(cs)} complexes valid"


CHECKS: List[Check] = [
    Check("rotation crossing at t=0", "index", "one initial crossing, signature 2", _rotation_crossings),
    Check("rotation interior crossings", "index", "interior crossings at t = l pi / lambda", _rotation_interior),
    Check("slow rotation index", "index", "i_RS(z = 0) = n", _small_rotation),
    Check("rotation index table", "index", "i_CZ = n(2k+1)", _rotation_table(False)),
    Check("rotation index table, sampled", "index", "i_CZ = n(2k+1)", _rotation_table(True)),
    Check("cz examples", "index", "i_CZ = n(2k+1)", _cz_examples),
    Check("sphere orbit index", "index", "i_RS(S_l) = 2ln + 1/2", _sphere_indices),
    Check("perturbed orbit indices", "index", "2ln + n / 2ln - n + 1", _perturbed_indices),
    Check("product additivity", "index", "i_RS(A + B) = i_RS(A) + i_RS(B)", _product),
    Check("loop and shear", "index", "i_RS = i_RS(Psi) + i_RS(chi Psi(1))", _loop_plus_shear),
    Check("ball truncated homology", "ball", "FH^* = Z in degree n(2k+1)", _ball_truncated),
    Check("ball full homology", "ball", "FH^*(D^2n) = 0", _ball_full),
    Check("perturbed complex arrows", "ball", "degrees n, n+1, 3n, 3n+1, ..., (2k+1)n", _perturbed_diagram),
    Check("perturbed complex homology", "ball", "nontrivial only in degree n + 2kn", _perturbed_homology),
    Check("ellipsoid complex", "ellipsoid", "(Z,n) -Id-> (Z,n+1) -0-> (Z,n+2) ...", _ellipsoid_display),
    Check("ellipsoid top class", "ellipsoid", "(Z, n + 2m(b;r))", _ellipsoid_top),
    Check("orbit count", "ellipsoid", "m(b;r) = #{(k,j) : k pi r_j^2 <= b}", _m_count),
    Check("ellipsoid windows", "ellipsoid", "FH^{n+2j} around pi r_j^2 = Z", _ellipsoid_windows),
    Check("spectrum from homology", "ellipsoid", "FH^k_a = 0 off the spectrum; Z in k and k+1", _spectrum_rebuild),
    Check("ellipsoid classification", "ellipsoid", "E(r) ~ E(r') iff r = r'", _classification),
    Check("sphere Morse homology", "morse", "H_*(S^2) = (Z, 0, Z)", _sphere_morse),
    Check("torus Morse homology", "morse", "H_*(T^2) = (Z, Z^2, Z)", _torus_morse),
    Check("Kunneth on ellipsoids", "algebra", "Kunneth isomorphism over a field", _kunneth_ellipsoids),
    Check("constructed complexes valid", "algebra", "delta^2 = 0, action monotone", _complexes_valid),
]


def run_checks(tol: Tolerances = DEFAULT_TOL, only: Optional[Sequence[str]] = None) -> List[Outcome]:
    if only:
        unknown = set(only) - set(GROUPS)
        if unknown:
            raise ValueError(f"unknown check group(s) {sorted(unknown)}; choose from {', '.join(GROUPS)}")
    out = []
    for c in CHECKS:
        if only and c.group not in only:
            continue
        try:
            ok, detail = c.run(tol)
        except Exception as exc:  # a check that crashes has failed
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(Outcome(c, bool(ok), detail))
    return out
