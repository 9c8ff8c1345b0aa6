"""Paths of symplectic matrices, crossings and the Robbin-Salamon index.

Coordinates on R^{2n} are ordered (x_1..x_n, y_1..y_n) and the standard
complex structure is J(x, y) = (-y, x). A path Psi satisfies
Psi' = J S Psi with S symmetric; at a crossing t (Id - Psi(t) singular)
the crossing form is <v, S(t) v> on ker(Id - Psi(t)).

Indices are carried as ``twice_value`` so half-integers stay exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.linalg import expm

from symphom.config import DEFAULT_TOL, Tolerances

MIN_SAMPLES = 64


class SymplinError(ValueError):
    pass


class NonIsolatedCrossing(SymplinError):
    pass


class EndpointDegenerate(SymplinError):
    pass


class DataQualityError(SymplinError):
    pass


def standard_j(n: int) -> np.ndarray:
    J = np.zeros((2 * n, 2 * n))
    J[:n, n:] = -np.eye(n)
    J[n:, :n] = np.eye(n)
    return J


def _half_dim(M: np.ndarray) -> int:
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] % 2:
        raise SymplinError(f"expected a square matrix of even size, got shape {M.shape}")
    return M.shape[0] // 2


def symplectic_defect(M: np.ndarray) -> float:
    n = _half_dim(M)
    J = standard_j(n)
    return float(np.max(np.abs(M.T @ J @ M - J)))


def check_symplectic(M: np.ndarray, tau: float = DEFAULT_TOL.sym) -> bool:
    """True iff max|M^T J M - J| <= tau (and det M > 0)."""
    M = np.asarray(M, dtype=float)
    return symplectic_defect(M) <= tau and np.linalg.det(M) > 0


def _sigma_min(M: np.ndarray) -> float:
    return float(np.linalg.svd(np.eye(M.shape[0]) - M, compute_uv=False)[-1])


def _signature(form: np.ndarray, tau_eig: float) -> Tuple[int, bool]:
    if form.size == 0:
        return 0, False
    w = np.linalg.eigvalsh((form + form.T) / 2)
    pos = int(np.sum(w > tau_eig))
    neg = int(np.sum(w < -tau_eig))
    return pos - neg, pos + neg < len(w)


@dataclass
class Crossing:
    """A parameter where 1 is an eigenvalue of the path.

    ``weight`` is the contribution multiplier to ``twice_value``: 2 for an
    interior crossing of a segment, 1 at a segment end (half weight).
    """

    t: float
    kernel_basis: np.ndarray
    form: np.ndarray
    signature: int
    degenerate: bool
    endpoint: bool = False
    weight: int = 2

    @property
    def kernel_dim(self) -> int:
        return self.kernel_basis.shape[1]

    def __post_init__(self):
        assert abs(self.signature) <= self.kernel_dim
        if not self.degenerate:
            assert (self.signature - self.kernel_dim) % 2 == 0

    def to_json(self) -> dict:
        return {
            "t": round(float(self.t), 12),
            "kernel_dim": self.kernel_dim,
            "signature": self.signature,
            "degenerate": self.degenerate,
            "endpoint": self.endpoint,
            "weight": self.weight,
        }


@dataclass
class IndexResult:
    twice_value: int
    crossings: List[Crossing]
    diagnostics: List[str] = field(default_factory=list)

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice_value, 2)

    def __str__(self):
        return str(self.value)


# --------------------------------------------------------------------------
# segments


class Segment:
    """One piece of a path, parameterized by local time t in [0, 1]."""

    n: int

    def matrix(self, t: float) -> np.ndarray:
        raise NotImplementedError

    def derivative(self, t: float) -> np.ndarray:
        raise NotImplementedError

    def generator(self, t: float, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
        """S(t) = -J Psi'(t) Psi(t)^{-1}, symmetrized."""
        M = self.matrix(t)
        try:
            Minv = np.linalg.inv(M)
        except np.linalg.LinAlgError as exc:
            raise DataQualityError(f"path matrix singular at t={t}") from exc
        S = -standard_j(self.n) @ self.derivative(t) @ Minv
        asym = float(np.max(np.abs(S - S.T)))
        if asym > tol.gen * max(1.0, float(np.max(np.abs(S)))):
            raise DataQualityError(f"generator asymmetry {asym:.3g} at t={t:.6g}")
        return (S + S.T) / 2

    def scan_points(self) -> int:
        return 512

    def crossing_times(self, tol: Tolerances) -> List[float]:
        return _scan_crossing_times(self.matrix, self.scan_points(), tol)

    def crossings(self, tol: Tolerances = DEFAULT_TOL) -> Tuple[List[Crossing], List[str]]:
        out = []
        for t in self.crossing_times(tol):
            out.append(self._crossing_at(t, tol))
        return out, []

    def _crossing_at(self, t: float, tol: Tolerances) -> Crossing:
        M = self.matrix(t)
        _, s, vt = np.linalg.svd(np.eye(2 * self.n) - M)
        K = vt[s <= tol.ker].T
        if K.shape[1] == 0:
            raise SymplinError(
                f"crossing at t={t:.12g} not confirmed: smallest singular value {s[-1]:.3g}"
            )
        form = K.T @ self.generator(t, tol) @ K
        sig, degen = _signature(form, tol.eig)
        return Crossing(t, K, form, sig, degen, weight=1 if t in (0.0, 1.0) else 2)

    def describe(self) -> dict:
        raise NotImplementedError


def _golden_min(f, lo: float, hi: float, width: float) -> Tuple[float, float]:
    """Golden-section search down to a bracket of the given width.

    sigma_min is V-shaped at a crossing, so sign-change bisection does not
    apply; the bracket still shrinks geometrically.
    """
    g = (math.sqrt(5) - 1) / 2
    a, b = lo, hi
    c, d = b - g * (b - a), a + g * (b - a)
    fc, fd = f(c), f(d)
    best = min((f(lo), lo), (f(hi), hi), (fc, c), (fd, d))
    while b - a > width:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - g * (b - a)
            fc = f(c)
            best = min(best, (fc, c))
        else:
            a, c, fc = c, d, fd
            d = a + g * (b - a)
            fd = f(d)
            best = min(best, (fd, d))
    return best[1], best[0]


def _scan_crossing_times(matrix, npts: int, tol: Tolerances) -> List[float]:
    """Locate isolated zeros of sigma_min(Id - M(t)) on [0, 1].

    Grid local minima are refined to bracket width tol.cross and accepted
    when the refined value is <= tol.ker.
    """
    ts = np.linspace(0.0, 1.0, npts + 1)
    sig = np.array([_sigma_min(matrix(t)) for t in ts])
    small = sig <= tol.ker
    run = 0
    for flag in small:
        run = run + 1 if flag else 0
        if run >= 3:
            raise NonIsolatedCrossing(
                "non-isolated crossing (Id - Psi(t) singular on an interval); "
                "use a closed-form segment such as 'shear'"
            )
    h = ts[1] - ts[0]
    found: List[float] = []
    if small[0]:
        found.append(0.0)
    if small[-1]:
        found.append(1.0)

    def refine(lo, hi):
        return _golden_min(lambda t: _sigma_min(matrix(t)), lo, hi, tol.cross)

    candidates = []
    for i in range(npts + 1):
        left = sig[i - 1] if i > 0 else np.inf
        right = sig[i + 1] if i < npts else np.inf
        if sig[i] <= left and sig[i] <= right:
            if (i == 0 and small[0]) or (i == npts and small[-1]):
                continue
            candidates.append((ts[max(i - 1, 0)], ts[min(i + 1, npts)]))
    for lo, hi in candidates:
        t, s = refine(lo, hi)
        if s > tol.ker:
            continue
        if any(abs(t - u) < h for u in found):
            continue
        found.append(t)
    return sorted(found)


def _rotation_matrix(n: int, angle: float) -> np.ndarray:
    return math.cos(angle) * np.eye(2 * n) + math.sin(angle) * standard_j(n)


@dataclass(frozen=True)
class Rotation(Segment):
    """Psi(t) = exp(2 (phase + rate t) J): n copies of a planar rotation."""

    n: int
    rate: float
    phase: float = 0.0

    def matrix(self, t):
        return _rotation_matrix(self.n, 2 * (self.phase + self.rate * t))

    def derivative(self, t):
        return 2 * self.rate * standard_j(self.n) @ self.matrix(t)

    def generator(self, t, tol=DEFAULT_TOL):
        return 2 * self.rate * np.eye(2 * self.n)

    def crossing_times(self, tol):
        u0 = self.phase / math.pi
        u1 = (self.phase + self.rate) / math.pi
        if self.rate == 0:
            if abs(u0 - round(u0)) < 1e-12:
                raise NonIsolatedCrossing("constant rotation path sitting at the identity")
            return []
        lo, hi = min(u0, u1), max(u0, u1)
        times = []
        for m in range(math.ceil(lo - 1e-12), math.floor(hi + 1e-12) + 1):
            t = (m - u0) / (u1 - u0)
            if abs(t) < 1e-12:
                t = 0.0
            elif abs(t - 1) < 1e-12:
                t = 1.0
            times.append(t)
        return sorted(times)

    def _crossing_at(self, t, tol):
        K = np.eye(2 * self.n)
        form = self.generator(t)
        sig, degen = _signature(form, tol.eig)
        return Crossing(t, K, form, sig, degen, weight=1 if t in (0.0, 1.0) else 2)

    def describe(self):
        return {"kind": "rotation", "rate": self.rate, "phase": self.phase}


@dataclass(frozen=True)
class Shear(Segment):
    """Psi(t) = Id + rate * t * E with E: x_b -> y_b (the shear chi of a sphere orbit).

    Id - Psi(t) has a fixed kernel for every t > 0, so crossings are
    evaluated analytically: the full-kernel crossing at t = 0 carries the
    form diag(rate) on x_b, and the constant-kernel family on (0, 1] has a
    vanishing form and contributes nothing.
    """

    n: int
    rate: float
    block: int = 0

    def _e(self):
        E = np.zeros((2 * self.n, 2 * self.n))
        E[self.n + self.block, self.block] = 1.0
        return E

    def matrix(self, t):
        return np.eye(2 * self.n) + self.rate * t * self._e()

    def derivative(self, t):
        return self.rate * self._e()

    def generator(self, t, tol=DEFAULT_TOL):
        S = np.zeros((2 * self.n, 2 * self.n))
        S[self.block, self.block] = self.rate
        return S

    def crossings(self, tol=DEFAULT_TOL):
        if self.rate == 0:
            raise NonIsolatedCrossing("shear with zero rate is the constant identity path")
        S = self.generator(0.0)
        K0 = np.eye(2 * self.n)
        sig0, deg0 = _signature(S, tol.eig)
        keep = [i for i in range(2 * self.n) if i != self.block]
        K1 = np.eye(2 * self.n)[:, keep]
        form1 = K1.T @ S @ K1
        sig1, deg1 = _signature(form1, tol.eig)
        notes = ["shear: constant kernel on (0,1] with zero crossing form, no interior contribution"]
        return [Crossing(0.0, K0, S, sig0, deg0, weight=1), Crossing(1.0, K1, form1, sig1, deg1, weight=1)], notes

    def describe(self):
        return {"kind": "shear", "rate": self.rate, "block": self.block}


@dataclass(frozen=True, eq=False)
class ExpConst(Segment):
    """Psi(t) = L exp(t J S) for a constant symmetric S and constant symplectic L."""

    n: int
    S: np.ndarray
    left: Optional[np.ndarray] = None

    def __post_init__(self):
        S = np.asarray(self.S, dtype=float)
        if S.shape != (2 * self.n, 2 * self.n):
            raise SymplinError(f"generator must be {2 * self.n}x{2 * self.n}")
        if np.max(np.abs(S - S.T)) > 1e-12 * max(1.0, np.max(np.abs(S))):
            raise SymplinError("exp_const generator must be symmetric")
        object.__setattr__(self, "S", (S + S.T) / 2)
        if self.left is not None:
            L = np.asarray(self.left, dtype=float)
            if not check_symplectic(L, 1e-9):
                raise SymplinError("left factor of exp_const is not symplectic")
            object.__setattr__(self, "left", L)

    @property
    def A(self):
        return standard_j(self.n) @ self.S

    def _L(self):
        return np.eye(2 * self.n) if self.left is None else self.left

    def matrix(self, t):
        return self._L() @ expm(t * self.A)

    def derivative(self, t):
        return self._L() @ self.A @ expm(t * self.A)

    def generator(self, t, tol=DEFAULT_TOL):
        if self.left is None:
            return self.S.copy()
        return super().generator(t, tol)

    def scan_points(self):
        norm = float(np.linalg.norm(self.A, 2))
        return int(max(512, 64 * math.ceil(norm)))

    def crossing_times(self, tol):
        if self.left is not None:
            return super().crossing_times(tol)
        mu = np.linalg.eigvals(self.A)
        scale = max(1.0, float(np.max(np.abs(mu))))
        if np.any(np.abs(mu) <= 1e-10 * scale):
            raise NonIsolatedCrossing(
                "J S is singular, so exp(t J S) fixes a vector for every t"
            )
        times = [0.0]
        for m in mu:
            if abs(m.real) <= 1e-10 * scale and m.imag > 0:
                period = 2 * math.pi / m.imag
                k = 1
                while k * period <= 1 + 1e-12:
                    t = k * period
                    times.append(1.0 if abs(t - 1) < 1e-12 else t)
                    k += 1
        times.sort()
        merged = []
        for t in times:
            if not merged or t - merged[-1] > 1e-9:
                merged.append(t)
        return merged

    def describe(self):
        d = {"kind": "exp_const", "generator": self.S.tolist()}
        if self.left is not None:
            d["left"] = self.left.tolist()
        return d


@dataclass(frozen=True, eq=False)
class Sampled(Segment):
    """Matrices sampled on a grid of [0, 1], interpolated by cubic splines."""

    n: int
    grid: np.ndarray
    matrices: np.ndarray
    tol_sym: float = DEFAULT_TOL.sym

    def __post_init__(self):
        g = np.asarray(self.grid, dtype=float)
        Ms = np.asarray(self.matrices, dtype=float)
        if len(g) < MIN_SAMPLES:
            raise SymplinError(f"sampled segments need at least {MIN_SAMPLES} grid points")
        if np.any(np.diff(g) <= 0) or g[0] != 0.0 or g[-1] != 1.0:
            raise SymplinError("sample grid must increase strictly from 0 to 1")
        if Ms.shape != (len(g), 2 * self.n, 2 * self.n):
            raise SymplinError("sample matrices do not match grid/dimension")
        for t, M in zip(g, Ms):
            if not check_symplectic(M, self.tol_sym):
                raise SymplinError(f"sample at t={t} is not symplectic")
        object.__setattr__(self, "grid", g)
        object.__setattr__(self, "matrices", Ms)
        object.__setattr__(self, "_spline", CubicSpline(g, Ms, axis=0))

    def matrix(self, t):
        return self._spline(t)

    def derivative(self, t):
        return self._spline(t, 1)

    def scan_points(self):
        return 4 * (len(self.grid) - 1)

    def describe(self):
        return {"kind": "sampled", "grid": self.grid.tolist(), "matrices": self.matrices.tolist()}


@dataclass(frozen=True, eq=False)
class Restricted(Segment):
    """The piece of ``base`` over [t0, t1], rescaled to [0, 1]."""

    base: Segment
    t0: float
    t1: float

    @property
    def n(self):
        return self.base.n

    def _u(self, t):
        return self.t0 + (self.t1 - self.t0) * t

    def matrix(self, t):
        return self.base.matrix(self._u(t))

    def derivative(self, t):
        return (self.t1 - self.t0) * self.base.derivative(self._u(t))

    def scan_points(self):
        return self.base.scan_points()

    def describe(self):
        return {"kind": "restricted", "t0": self.t0, "t1": self.t1, "base": self.base.describe()}


def _embed_sum(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Block sum in (x, y) ordering: (x', x'', y', y'')."""
    p, q = A.shape[0] // 2, B.shape[0] // 2
    idx_a = list(range(p)) + list(range(p + q, 2 * p + q))
    idx_b = list(range(p, p + q)) + list(range(2 * p + q, 2 * (p + q)))
    out = np.zeros((2 * (p + q), 2 * (p + q)))
    out[np.ix_(idx_a, idx_a)] = A
    out[np.ix_(idx_b, idx_b)] = B
    return out


@dataclass(frozen=True, eq=False)
class DirectSum(Segment):
    """Pointwise block sum of two segments; crossings are found on the sum itself."""

    first: Segment
    second: Segment

    @property
    def n(self):
        return self.first.n + self.second.n

    def matrix(self, t):
        return _embed_sum(self.first.matrix(t), self.second.matrix(t))

    def derivative(self, t):
        return _embed_sum(self.first.derivative(t), self.second.derivative(t))

    def scan_points(self):
        return max(self.first.scan_points(), self.second.scan_points())

    def describe(self):
        return {"kind": "direct_sum", "first": self.first.describe(), "second": self.second.describe()}


# --------------------------------------------------------------------------
# paths


@dataclass(frozen=True)
class SymplecticPath:
    """Segments laid end to end; segment i covers [i/N, (i+1)/N]."""

    n: int
    segments: Tuple[Segment, ...]
    tol_sym: float = DEFAULT_TOL.sym

    def __post_init__(self):
        segs = tuple(self.segments)
        if not segs:
            raise SymplinError("a path needs at least one segment")
        for s in segs:
            if s.n != self.n:
                raise SymplinError("segment dimension mismatch")
        for a, b in zip(segs, segs[1:]):
            if np.max(np.abs(a.matrix(1.0) - b.matrix(0.0))) > self.tol_sym:
                raise SymplinError("consecutive segments do not join continuously")
        object.__setattr__(self, "segments", segs)

    def _locate(self, t: float) -> Tuple[int, float]:
        if not 0.0 <= t <= 1.0:
            raise SymplinError(f"t={t} outside [0, 1]")
        N = len(self.segments)
        i = min(int(t * N), N - 1)
        return i, t * N - i

    def __call__(self, t: float) -> np.ndarray:
        i, u = self._locate(t)
        return self.segments[i].matrix(u)

    def start(self):
        return self.segments[0].matrix(0.0)

    def end(self):
        return self.segments[-1].matrix(1.0)


def path(*segments: Segment) -> SymplecticPath:
    return SymplecticPath(segments[0].n, tuple(segments))


def rotation(rate: float, n: int = 1, phase: float = 0.0) -> SymplecticPath:
    """Closed-form path of 2x2 blocks (cos 2 rate t, -sin 2 rate t; sin, cos)."""
    return path(Rotation(n, float(rate), float(phase)))


def shear(rate: float, n: int = 1, block: int = 0) -> SymplecticPath:
    return path(Shear(n, float(rate), block))


def exp_const(S, left=None) -> SymplecticPath:
    S = np.asarray(S, dtype=float)
    return path(ExpConst(S.shape[0] // 2, S, left))


def sampled(grid, matrices) -> SymplecticPath:
    Ms = np.asarray(matrices, dtype=float)
    return path(Sampled(Ms.shape[1] // 2, np.asarray(grid, dtype=float), Ms))


def sample_path(p: SymplecticPath, grid, reparam=None) -> SymplecticPath:
    """Sampled copy of ``p``, optionally composed with a reparameterization of [0, 1]."""
    g = np.asarray(grid, dtype=float)
    u = g if reparam is None else np.array([reparam(t) for t in g])
    u[0], u[-1] = 0.0, 1.0
    return sampled(g, [p(t) for t in u])


def concat(p: SymplecticPath, q: SymplecticPath, tol: Tolerances = DEFAULT_TOL) -> SymplecticPath:
    if p.n != q.n:
        raise SymplinError("cannot concatenate paths of different dimension")
    if np.max(np.abs(p.end() - q.start())) > tol.sym:
        raise SymplinError("concat: p(1) != q(0)")
    return SymplecticPath(p.n, p.segments + q.segments, tol.sym)


def _breaks(p: SymplecticPath) -> List[Fraction]:
    N = len(p.segments)
    return [Fraction(i, N) for i in range(N + 1)]


def _piece(p: SymplecticPath, lo: Fraction, hi: Fraction) -> Segment:
    N = len(p.segments)
    i = int(lo * N)
    seg = p.segments[i]
    u0, u1 = lo * N - i, hi * N - i
    if u0 == 0 and u1 == 1:
        return seg
    return Restricted(seg, float(u0), float(u1))


def direct_sum(p: SymplecticPath, q: SymplecticPath) -> SymplecticPath:
    """Block-diagonal path of dimension 2(n_p + n_q), breakpoints merged."""
    cuts = sorted(set(_breaks(p)) | set(_breaks(q)))
    pieces = []
    for lo, hi in zip(cuts, cuts[1:]):
        pieces.append(DirectSum(_piece(p, lo, hi), _piece(q, lo, hi)))
    # pieces of unequal length get laid out uniformly: a reparameterization only
    return SymplecticPath(p.n + q.n, tuple(pieces))


# --------------------------------------------------------------------------
# crossings and indices


def generator_at(p: SymplecticPath, t: float, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Symmetric S(t) with Psi'(t) = J S(t) Psi(t), in the segment's local time."""
    i, u = p._locate(t)
    return p.segments[i].generator(u, tol)


def find_crossings(p: SymplecticPath, tol: Tolerances = DEFAULT_TOL) -> Tuple[List[Crossing], List[str]]:
    N = len(p.segments)
    out, notes = [], []
    for i, seg in enumerate(p.segments):
        cs, ns = seg.crossings(tol)
        notes.extend(ns)
        for c in cs:
            c.t = (i + c.t) / N
            c.endpoint = c.t in (0.0, 1.0)
            out.append(c)
    out.sort(key=lambda c: c.t)
    return out, notes


def rs_index(p: SymplecticPath, tol: Tolerances = DEFAULT_TOL) -> IndexResult:
    """Robbin-Salamon index: half weight at segment ends, full weight inside."""
    cs, notes = find_crossings(p, tol)
    for c in cs:
        if c.degenerate and np.any(np.abs(c.form) > tol.eig):
            notes.append(f"degenerate crossing form at t={c.t:.6g}: zero eigenvalues ignored")
    twice = sum(c.weight * c.signature for c in cs)
    return IndexResult(twice, cs, notes)


def cz_index(p: SymplecticPath, tol: Tolerances = DEFAULT_TOL) -> int:
    """Conley-Zehnder index of a path from Id with nondegenerate end."""
    if np.max(np.abs(p.start() - np.eye(2 * p.n))) > tol.sym:
        raise SymplinError("Conley-Zehnder index needs a path starting at the identity")
    if _sigma_min(p.end()) <= tol.ker:
        raise EndpointDegenerate("endpoint degenerate: Psi(1) has eigenvalue 1, use rs_index")
    res = rs_index(p, tol)
    if res.twice_value % 2:
        raise SymplinError("Conley-Zehnder index came out half-integral")
    return res.twice_value // 2


# --------------------------------------------------------------------------
# orbit paths of the ball Hamiltonians


def shear_rate(l: int, curvature: float) -> float:
    return curvature / (l * l * math.pi ** 2)


def sphere_orbit_path(l: int, n: int, curvature: float) -> SymplecticPath:
    """Linearized flow along an orbit of the sphere S_l, as loop then shear.

    chi(t) Psi(t) is homotopic with fixed ends to Psi followed by chi(t) Psi(1),
    where Psi(t) = exp(2 l pi J t) closes up at Psi(1) = Id.
    """
    if l < 1 or n < 1:
        raise SymplinError("l and n must be positive")
    if not curvature > 0:
        raise SymplinError("curvature must be positive (degenerate Hessian otherwise)")
    return path(Rotation(n, l * math.pi), Shear(n, shear_rate(l, curvature)))


def perturbed_orbit_path(
    l: int, n: int, delta: float, hessian_eigs: Sequence[float], curvature: float = 1.0
) -> SymplecticPath:
    """Sphere orbit path followed by Psi(1) exp(delta t J Hess), Hess zero along z_0 = e_{x_1}."""
    eigs = [float(e) for e in hessian_eigs]
    if len(eigs) != 2 * n - 1:
        raise SymplinError(f"need {2 * n - 1} Hessian eigenvalues, got {len(eigs)}")
    if delta == 0:
        raise SymplinError("delta must be nonzero")
    if not (all(e > 0 for e in eigs) or all(e < 0 for e in eigs)):
        raise SymplinError("mixed-sign Hessian unsupported: only the minimum or maximum of h")
    base = sphere_orbit_path(l, n, curvature)
    H = np.diag([0.0] + eigs)
    return concat(base, path(ExpConst(n, delta * H, left=base.end())))
