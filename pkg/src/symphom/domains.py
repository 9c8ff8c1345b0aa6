"""Complexes and action spectra of balls and ellipsoids.

The ellipsoid E(r) has closed characteristics with actions k*pi*r_j^2.
Its filtered complex has a generator in degree n at action 0 and, for
the i-th smallest action a_i (with multiplicity), a pair of generators
in degrees n+2i-1, n+2i at action a_i; the differential is the identity
from degree n+2i to n+2i+1 and zero otherwise. The ball of radius one is
the ellipsoid with all radii 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from symphom import chainalg, symplin
from symphom.actions import ActionValue
from symphom.chainalg import FilteredComplex, Generator, HomologyTable
from symphom.config import DEFAULT_TOL, Tolerances


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class EllipsoidSpec:
    radii: Tuple[Fraction, ...]

    def __post_init__(self):
        r = tuple(sorted(Fraction(x) for x in self.radii))
        if not r:
            raise DomainError("an ellipsoid needs at least one radius")
        if r[0] <= 0:
            raise DomainError("radii must be positive")
        object.__setattr__(self, "radii", r)

    @classmethod
    def of(cls, *radii) -> "EllipsoidSpec":
        return cls(tuple(Fraction(x) for x in radii))

    @property
    def n(self) -> int:
        return len(self.radii)

    @property
    def areas(self) -> Tuple[Fraction, ...]:
        """r_j^2: the action of the simple characteristic j is pi * r_j^2."""
        return tuple(r * r for r in self.radii)

    def is_generic(self, horizon: ActionValue) -> bool:
        vals = [v for v, _, _ in _orbit_values(self, horizon)]
        return len(vals) == len(set(vals))

    def __str__(self):
        return "(" + ", ".join(str(r) for r in self.radii) + ")"


def _coeff(b: ActionValue) -> Fraction:
    """Largest exact pi-coefficient bound usable for enumeration."""
    if b.exact:
        return b.coeff
    # k*r^2*pi <= b with b inexact: compare in floats but keep exact values
    return Fraction(float(b) / math.pi)


def _orbit_values(r: EllipsoidSpec, b: ActionValue) -> List[Tuple[Fraction, int, int]]:
    """Sorted (k*r_j^2, j, k) with k*pi*r_j^2 <= b; ties broken by j then k."""
    out = []
    for j, area in enumerate(r.areas, start=1):
        k = 1
        while ActionValue(coeff=k * area) <= b:
            out.append((k * area, j, k))
            k += 1
    out.sort()
    return out


def m_count(r: EllipsoidSpec, b: ActionValue) -> int:
    """#{(k, j) : k pi r_j^2 <= b}."""
    return len(_orbit_values(r, b))


def ellipsoid_complex(r: EllipsoidSpec, b: ActionValue) -> FilteredComplex:
    if not b > ActionValue.pi(0):
        raise DomainError("the action bound b must be positive")
    n = r.n
    gens = [Generator("e0", n, ActionValue.pi(0), "constant orbit")]
    d = {}
    for i, (val, j, k) in enumerate(_orbit_values(r, b), start=1):
        a = ActionValue(coeff=val)
        gens.append(Generator(f"e{2 * i - 1}", n + 2 * i - 1, a, f"(k={k}, j={j}) lower"))
        gens.append(Generator(f"e{2 * i}", n + 2 * i, a, f"(k={k}, j={j}) upper"))
        d[(f"e{2 * i - 1}", f"e{2 * i - 2}")] = 1
    return FilteredComplex(tuple(gens), d)


def ellipsoid_window_homology(
    r: EllipsoidSpec, a: Optional[ActionValue], b: ActionValue
) -> HomologyTable:
    return chainalg.homology(chainalg.truncate(ellipsoid_complex(r, b), a, b))


# ------------------------------------------------------------ balls


@dataclass(frozen=True)
class BallModel:
    """Cofinal ball Hamiltonian of slope lam, with k pi < lam < (k+1) pi."""

    n: int
    lam: ActionValue

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("n must be positive")
        if not self.lam > ActionValue.pi(0):
            raise DomainError("slope must be positive")
        if self.lam.exact:
            if self.lam.coeff.denominator == 1:
                raise DomainError(f"slope {self.lam} is a multiple of pi")
        elif abs(float(self.lam) / math.pi - round(float(self.lam) / math.pi)) < 1e-12:
            raise DomainError(f"slope {self.lam} is a multiple of pi")

    @property
    def k(self) -> int:
        if self.lam.exact:
            return math.floor(self.lam.coeff)
        return math.floor(float(self.lam) / math.pi)


def unit_ball(n: int) -> EllipsoidSpec:
    return EllipsoidSpec.of(*([1] * n))


def ball_complex(model: BallModel) -> FilteredComplex:
    return ellipsoid_complex(unit_ball(model.n), model.lam)


def ball_truncated_homology(model: BallModel, b: Optional[ActionValue] = None) -> HomologyTable:
    """FH_]-inf, b](H_lam) for b beyond lam; Z in degree n(2k+1)."""
    if b is not None and not b > model.lam:
        raise DomainError("b must exceed the slope")
    return chainalg.homology(ball_complex(model))


@dataclass
class BallTower:
    slopes: List[ActionValue]
    tables: List[HomologyTable]
    maps: List[Dict[int, int]]
    limit: chainalg.TowerLimit
    witnessed_degrees: List[int]

    def to_json(self) -> dict:
        return {
            "slopes": [a.to_json() for a in self.slopes],
            "stages": [t.to_json() for t in self.tables],
            "maps": [{str(k): v for k, v in sorted(m.items())} for m in self.maps],
            "witnessed_up_to": max(self.witnessed_degrees, default=None),
            **self.limit.to_json(),
        }


def ball_full_homology(n: int, horizon: ActionValue, p: int = 0) -> BallTower:
    """Inverse limit of FH(H_lam) over slopes (k + 1/2) pi, k = 0 .. K+1, K = floor(horizon/pi).

    Connecting maps are the projections C_{lam'} -> C_{lam} for lam < lam',
    i.e. truncation of the larger complex to ]-inf, lam]. Degrees up to
    n(2K - 1) are witnessed: their last two stages are both computed
    beyond the class that lives in that degree.
    """
    K = math.floor(_coeff(horizon))
    slopes = [ActionValue(coeff=Fraction(2 * k + 1, 2)) for k in range(K + 2)]
    complexes = [ball_complex(BallModel(n, lam)) for lam in slopes]
    tables = [chainalg.homology(C) for C in complexes]
    maps = []
    for lam, big in zip(slopes, complexes[1:]):
        f = chainalg.truncation_map(big, (None, None), (None, lam))
        maps.append(f.induced_ranks(p))
    top = n * (2 * (K + 1) + 1)
    limit = chainalg.tower_limit(tables, maps, "inverse", degrees=range(0, top + 1))
    witnessed = [d for d in range(0, n * (2 * K - 1) + 1) if limit.status[d] != "not stabilized"]
    return BallTower(slopes, tables, maps, limit, witnessed)


def perturbed_ball_complex(n: int, lam: ActionValue, eps: ActionValue) -> FilteredComplex:
    """Complex after perturbing each orbit sphere S_l by a two-point Morse function.

    Constant orbit: degree n, action eps. Sphere S_l, l = 1..k: maximum in
    degree 2ln-n+1 at action l pi - eps, minimum in degree 2ln+n at
    l pi + eps. Identity arrows run from each minimum (and the constant
    orbit) to the next maximum.
    """
    model = BallModel(n, lam)
    if not (ActionValue.pi(0) < eps < ActionValue.pi(Fraction(1, 4))):
        raise DomainError("eps must lie in ]0, pi/4[ so the action windows stay apart")
    gens = [Generator("c", n, eps, "constant orbit")]
    d = {}
    prev = "c"
    for l in range(1, model.k + 1):
        lpi = ActionValue.pi(l)
        gens.append(Generator(f"max{l}", 2 * l * n - n + 1, lpi - eps, f"S_{l} maximum"))
        gens.append(Generator(f"min{l}", 2 * l * n + n, lpi + eps, f"S_{l} minimum"))
        d[(f"max{l}", prev)] = 1
        prev = f"min{l}"
    return FilteredComplex(tuple(gens), d)


# ------------------------------------------------------------ spectra


@dataclass(frozen=True)
class SpectrumEntry:
    action: ActionValue
    index: int
    multiplicity: int

    def to_json(self) -> dict:
        return {"action": self.action.to_json(), "index": self.index, "multiplicity": self.multiplicity}


@dataclass(frozen=True)
class ActionSpectrum:
    entries: Tuple[SpectrumEntry, ...] = ()

    def __post_init__(self):
        e = tuple(self.entries)
        for a, b in zip(e, e[1:]):
            if not a.action < b.action:
                raise DomainError("spectrum actions must increase strictly")
        if any(x.multiplicity < 1 for x in e):
            raise DomainError("multiplicities are positive")
        object.__setattr__(self, "entries", e)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def to_json(self) -> list:
        return [x.to_json() for x in self.entries]


def ellipsoid_spectrum(r: EllipsoidSpec, horizon: ActionValue) -> ActionSpectrum:
    """(k pi r_j^2, lower degree of its pair block, multiplicity) up to the horizon."""
    vals = _orbit_values(r, horizon)
    entries = []
    i = 0
    while i < len(vals):
        v = vals[i][0]
        mult = sum(1 for x in vals if x[0] == v)
        entries.append(SpectrumEntry(ActionValue(coeff=v), r.n + 2 * (i + 1) - 1, mult))
        i += mult
    return ActionSpectrum(tuple(entries))


def _min_gap(r: EllipsoidSpec, horizon: ActionValue) -> Fraction:
    """Smallest distance between distinct values in {0} + spectrum, one step past the horizon."""
    top = max(r.areas)
    vals = sorted({0} | {v for v, _, _ in _orbit_values(r, ActionValue(coeff=_coeff(horizon) + top))})
    return min(b - a for a, b in zip(vals, vals[1:]))


def default_probe(r: EllipsoidSpec, horizon: ActionValue) -> Fraction:
    return _min_gap(r, horizon) / 4


def _window(center: Fraction, probe: Fraction) -> Tuple[ActionValue, ActionValue]:
    return ActionValue(coeff=center - probe), ActionValue(coeff=center + probe)


def read_window(H: HomologyTable) -> Optional[Tuple[int, int]]:
    """(lower degree, multiplicity) of a window around one action value.

    A block of mu coincident pairs leaves Z in its lowest and highest
    degrees, 2 mu - 1 apart; a single pair gives adjacent degrees.
    """
    degs = H.degrees()
    if not degs:
        return None
    if len(degs) != 2 or any(H[d] != chainalg.Group(1) for d in degs):
        raise DomainError(f"unexpected window homology {H}")
    lo, hi = degs
    if (hi - lo) % 2 == 0:
        raise DomainError(f"window classes in degrees {lo}, {hi} have the same parity")
    return lo, (hi - lo + 1) // 2


def spectrum_from_homology(
    r: EllipsoidSpec, horizon: ActionValue, probe: Optional[Fraction] = None
) -> ActionSpectrum:
    """Rebuild the spectrum from window homology around each candidate action.

    Candidates are all k r_j^2 up to the horizon; midpoints between
    consecutive candidates are probed as negative controls and must be zero.
    """
    gap = _min_gap(r, horizon)
    if probe is None:
        probe = gap / 4
    probe = Fraction(probe)
    if not 0 < probe < gap / 2:
        raise DomainError(f"probe {probe}*pi must be below half the minimal gap {gap / 2}*pi")
    cands = sorted({v for v, _, _ in _orbit_values(r, horizon)})
    entries = []
    for c in cands:
        a, b = _window(c, probe)
        got = read_window(ellipsoid_window_homology(r, a, b))
        if got is None:
            raise DomainError(f"no homology around candidate action {c}*pi")
        entries.append(SpectrumEntry(ActionValue(coeff=c), got[0], got[1]))
    for lo, hi in zip(cands, cands[1:]):
        mid = (lo + hi) / 2
        a, b = _window(mid, probe)
        if not ellipsoid_window_homology(r, a, b).is_zero():
            raise DomainError(f"nonzero homology at midpoint {mid}*pi")
    return ActionSpectrum(tuple(entries))


def recover_radii(spectrum: ActionSpectrum, n: int, horizon: ActionValue) -> EllipsoidSpec:
    """Greedy recovery: the smallest unexplained action is pi r_j^2 for the next radius."""
    remaining: Dict[Fraction, int] = {}
    for e in spectrum:
        if not e.action.exact:
            raise DomainError("spectrum recovery needs exact actions")
        remaining[e.action.coeff] = e.multiplicity
    areas = []
    bound = _coeff(horizon)
    for _ in range(n):
        live = sorted(v for v, m in remaining.items() if m > 0)
        if not live:
            raise DomainError("spectrum exhausted before n radii were recovered")
        area = live[0]
        areas.append(area)
        k = 1
        while k * area <= bound:
            if remaining.get(k * area, 0) < 1:
                raise DomainError(f"spectrum lacks the multiple {k}*{area}*pi")
            remaining[k * area] -= 1
            k += 1
    radii = []
    for area in areas:
        root = _exact_sqrt(area)
        if root is None:
            raise DomainError(f"area {area} is not the square of a rational radius")
        radii.append(root)
    result = EllipsoidSpec(tuple(radii))
    if ellipsoid_spectrum(result, horizon) != spectrum:
        raise DomainError("inconsistent spectrum: recovered radii do not reproduce it")
    return result


def _exact_sqrt(q: Fraction) -> Optional[Fraction]:
    num, den = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if num * num == q.numerator and den * den == q.denominator:
        return Fraction(num, den)
    return None


@dataclass
class Verdict:
    equal: bool
    window: Optional[Tuple[ActionValue, ActionValue]] = None
    degree: Optional[int] = None
    groups: Optional[Tuple[str, str]] = None

    def to_json(self) -> dict:
        if self.equal:
            return {"verdict": "equal"}
        return {
            "verdict": "distinct",
            "window": [self.window[0].to_json(), self.window[1].to_json()],
            "degree": self.degree,
            "groups": list(self.groups),
        }


def classify(r: EllipsoidSpec, r2: EllipsoidSpec, horizon: ActionValue) -> Verdict:
    """Compare window homologies of E(r) and E(r2) around every spectrum value."""
    if r.n != r2.n:
        raise DomainError("ellipsoids of different dimension")
    need = max(max(r.areas), max(r2.areas))
    if _coeff(horizon) < need:
        raise DomainError(f"horizon must reach {need}*pi to separate these ellipsoids")
    probe = min(_min_gap(r, horizon), _min_gap(r2, horizon))
    both = sorted({v for v, _, _ in _orbit_values(r, horizon)} | {v for v, _, _ in _orbit_values(r2, horizon)})
    # a window of half-width below half the merged gap isolates one value in each
    merged = sorted(set(both) | {Fraction(0)})
    gaps = [b - a for a, b in zip(merged, merged[1:])]
    probe = min([probe] + gaps) / 4
    for c in both:
        a, b = _window(c, probe)
        H1 = ellipsoid_window_homology(r, a, b)
        H2 = ellipsoid_window_homology(r2, a, b)
        if H1 != H2:
            deg = min(d for d in set(H1.degrees()) | set(H2.degrees()) if H1[d] != H2[d])
            return Verdict(False, (a, b), deg, (str(H1[deg]), str(H2[deg])))
    return Verdict(True)


# ------------------------------------------------------------ level orbits


@dataclass(frozen=True)
class LevelOrbitData:
    S: float
    slope: float
    value: float

    def __post_init__(self):
        if not self.S > 0:
            raise DomainError("level coordinate S must be positive")


def level_action(d: LevelOrbitData) -> float:
    """Action S h'(S) - h(S) of an orbit on the level S of a radial profile h."""
    return d.S * d.slope - d.value


# ------------------------------------------------------------ index checks


@dataclass
class PerturbationReport:
    l: int
    n: int
    sphere: Fraction
    minimum: Fraction
    maximum: Fraction
    ok: bool
    failures: List[str] = field(default_factory=list)

    @property
    def gap(self) -> Fraction:
        return self.minimum - self.maximum

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "n": self.n,
            "sphere_index": str(self.sphere),
            "minimum_index": str(self.minimum),
            "maximum_index": str(self.maximum),
            "gap": str(self.gap),
            "ok": self.ok,
            "failures": self.failures,
        }


def verify_perturbation_indices(
    l: int, n: int, curvature: float = 1.0, delta: float = 0.01, tol: Tolerances = DEFAULT_TOL
) -> PerturbationReport:
    """Index of a sphere S_l before and after the two-point Morse perturbation."""
    sphere = symplin.rs_index(symplin.sphere_orbit_path(l, n, curvature), tol)
    mn = symplin.rs_index(symplin.perturbed_orbit_path(l, n, delta, [1.0] * (2 * n - 1), curvature), tol)
    mx = symplin.rs_index(symplin.perturbed_orbit_path(l, n, delta, [-1.0] * (2 * n - 1), curvature), tol)
    fails = []
    if sphere.value != 2 * l * n + Fraction(1, 2):
        fails.append(f"sphere index {sphere.value} != 2ln + 1/2")
    if mn.value != 2 * l * n + n:
        fails.append(f"minimum index {mn.value} != 2ln + n")
    if mx.value != 2 * l * n - n + 1:
        fails.append(f"maximum index {mx.value} != 2ln - n + 1")
    if mn.value - mx.value != 2 * n - 1:
        fails.append(f"index gap {mn.value - mx.value} != 2n - 1")
    return PerturbationReport(l, n, sphere.value, mn.value, mx.value, not fails, fails)


def polydisc_complex(*args, **kwargs):
    raise NotImplementedError(
        "polydisc complexes are not built here; see Floer-Hofer-Wysocki, Math. Z. 217 (1994), p. 583"
    )
