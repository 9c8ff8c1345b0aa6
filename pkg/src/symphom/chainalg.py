"""Action-filtered cochain complexes over the integers.

Conventions: the differential raises degree by one and never lowers
action, so for every a the span of generators with action > a is a
subcomplex and window complexes ]a, b] are quotients of such spans.
Homological complexes (Morse) are stored through the negation functor
degree -> -degree, action -> -action.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from symphom import exact
from symphom.actions import ActionValue


class ComplexError(ValueError):
    pass


@dataclass(frozen=True)
class Generator:
    id: str
    degree: int
    action: ActionValue
    label: str = ""


@dataclass(frozen=True)
class FilteredComplex:
    """Generators plus a sparse integer differential.

    ``differential[(y, x)]`` is the coefficient of y in delta(x).
    """

    generators: Tuple[Generator, ...]
    differential: Mapping[Tuple[str, str], int] = field(default_factory=dict)

    def __post_init__(self):
        gens = tuple(self.generators)
        ids = [g.id for g in gens]
        if len(set(ids)) != len(ids):
            raise ComplexError("generator ids must be unique")
        known = set(ids)
        d = {}
        for (y, x), c in dict(self.differential).items():
            if y not in known or x not in known:
                raise ComplexError(f"differential entry ({y}, {x}) names an unknown generator")
            if int(c) != 0:
                d[(y, x)] = int(c)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "differential", d)

    def __len__(self):
        return len(self.generators)

    @property
    def by_id(self) -> Dict[str, Generator]:
        return {g.id: g for g in self.generators}

    def degrees(self) -> List[int]:
        return sorted({g.degree for g in self.generators})

    def in_degree(self, k: int) -> List[Generator]:
        return [g for g in self.generators if g.degree == k]

    def block(self, k: int) -> List[List[int]]:
        """Matrix of delta: C^k -> C^{k+1} (rows: degree k+1, columns: degree k)."""
        src, dst = self.in_degree(k), self.in_degree(k + 1)
        return [[self.differential.get((y.id, x.id), 0) for x in src] for y in dst]

    def euler_characteristic(self) -> int:
        return sum((-1) ** (g.degree % 2) for g in self.generators)


# ------------------------------------------------------------ validation


@dataclass
class ValidationReport:
    ok: bool
    violations: List[str]

    def __bool__(self):
        return self.ok


def validate(C: FilteredComplex) -> ValidationReport:
    """Check degree +1, delta^2 = 0 and action monotonicity."""
    bad = []
    gens = C.by_id
    for (y, x), c in sorted(C.differential.items()):
        if gens[y].degree != gens[x].degree + 1:
            bad.append(f"degree: delta({x}) has {c}*{y} with degrees {gens[x].degree}->{gens[y].degree}")
        if gens[y].action < gens[x].action:
            bad.append(f"action: delta({x}) has {c}*{y} with action {gens[x].action} > {gens[y].action}")
    sq = _delta_squared(C)
    for (z, x), c in sorted(sq.items()):
        bad.append(f"delta^2: coefficient {c} of {z} in delta^2({x})")
    return ValidationReport(not bad, bad)


def _delta_squared(C: FilteredComplex) -> Dict[Tuple[str, str], int]:
    out: Dict[Tuple[str, str], int] = {}
    by_source: Dict[str, List[Tuple[str, int]]] = {}
    for (y, x), c in C.differential.items():
        by_source.setdefault(x, []).append((y, c))
    for x, ys in by_source.items():
        for y, c in ys:
            for z, c2 in by_source.get(y, []):
                out[(z, x)] = out.get((z, x), 0) + c * c2
    return {k: v for k, v in out.items() if v}


def require_valid(C: FilteredComplex) -> None:
    rep = validate(C)
    if not rep.ok:
        raise ComplexError("invalid complex: " + "; ".join(rep.violations[:5]))


# ------------------------------------------------------------ windows


def _above(action: ActionValue, a: Optional[ActionValue]) -> bool:
    return a is None or action > a


def _at_most(action: ActionValue, b: Optional[ActionValue]) -> bool:
    return b is None or action <= b


def truncate(C: FilteredComplex, a: Optional[ActionValue] = None, b: Optional[ActionValue] = None) -> FilteredComplex:
    """Window complex ]a, b]; None stands for -inf (a) or +inf (b)."""
    if a is not None and b is not None and not a < b:
        raise ComplexError(f"empty window: need a < b, got ]{a}, {b}]")
    keep = [g for g in C.generators if _above(g.action, a) and _at_most(g.action, b)]
    ids = {g.id for g in keep}
    d = {k: v for k, v in C.differential.items() if k[0] in ids and k[1] in ids}
    return FilteredComplex(tuple(keep), d)


def negate(C: FilteredComplex) -> FilteredComplex:
    """Degree and action negation: swaps homological and cohomological views."""
    gens = tuple(Generator(g.id, -g.degree, -g.action, g.label) for g in C.generators)
    return FilteredComplex(gens, dict(C.differential))


# ------------------------------------------------------------ homology


@dataclass(frozen=True)
class Group:
    free_rank: int = 0
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion factors must form a divisibility chain")
        if any(t < 2 for t in self.torsion):
            raise ValueError("torsion factors are >= 2")

    @property
    def is_zero(self):
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class HomologyTable:
    """Nonzero groups by degree; absent degrees are 0."""

    groups: Mapping[int, Group] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "groups", {k: v for k, v in sorted(dict(self.groups).items()) if not v.is_zero})

    def __getitem__(self, k: int) -> Group:
        return self.groups.get(k, Group())

    def rank(self, k: int) -> int:
        return self[k].free_rank

    def degrees(self) -> List[int]:
        return list(self.groups)

    def is_zero(self) -> bool:
        return not self.groups

    def total_rank(self) -> int:
        return sum(g.free_rank for g in self.groups.values())

    def __eq__(self, other):
        return isinstance(other, HomologyTable) and dict(self.groups) == dict(other.groups)

    def __hash__(self):
        return hash(tuple(self.groups.items()))

    def __str__(self):
        if not self.groups:
            return "0"
        return ", ".join(f"H^{k} = {g}" for k, g in self.groups.items())

    def to_json(self) -> dict:
        return {
            str(k): {"free_rank": g.free_rank, "torsion": list(g.torsion), "group": str(g)}
            for k, g in self.groups.items()
        }

    @classmethod
    def free(cls, ranks: Mapping[int, int]) -> "HomologyTable":
        return cls({k: Group(r) for k, r in ranks.items()})


def homology(C: FilteredComplex) -> HomologyTable:
    """Integer cohomology: free rank from SNF ranks, torsion from the incoming block."""
    require_valid(C)
    groups = {}
    for k in C.degrees():
        dim = len(C.in_degree(k))
        out_f = exact.invariant_factors(C.block(k)) if C.in_degree(k + 1) else []
        in_f = exact.invariant_factors(C.block(k - 1)) if C.in_degree(k - 1) else []
        free = dim - len(out_f) - len(in_f)
        groups[k] = Group(free, tuple(d for d in in_f if d > 1))
    return HomologyTable(groups)


def betti(C: FilteredComplex, p: int = 0) -> Dict[int, int]:
    """Dimensions of H^k(C; F) for F = Q (p = 0) or F_p, by Gaussian elimination."""
    out = {}
    for k in C.degrees():
        dim = len(C.in_degree(k))
        r_out = exact.rank(C.block(k), p) if C.in_degree(k + 1) else 0
        r_in = exact.rank(C.block(k - 1), p) if C.in_degree(k - 1) else 0
        if dim - r_out - r_in:
            out[k] = dim - r_out - r_in
    return out


# ------------------------------------------------------------ maps


@dataclass(frozen=True)
class ComplexMap:
    """Degree-preserving map; ``matrix[(y, x)]`` is the coefficient of target y in f(x)."""

    source: FilteredComplex
    target: FilteredComplex
    matrix: Mapping[Tuple[str, str], int]

    def is_chain_map(self) -> bool:
        lhs: Dict[Tuple[str, str], int] = {}
        rhs: Dict[Tuple[str, str], int] = {}
        for (y, x), c in self.matrix.items():
            for (z, yy), c2 in self.target.differential.items():
                if yy == y:
                    lhs[(z, x)] = lhs.get((z, x), 0) + c2 * c
        for (y, x), c in self.source.differential.items():
            for (z, yy), c2 in self.matrix.items():
                if yy == y:
                    rhs[(z, x)] = rhs.get((z, x), 0) + c2 * c
        clean = lambda d: {k: v for k, v in d.items() if v}
        return clean(lhs) == clean(rhs)

    def induced_ranks(self, p: int = 0) -> Dict[int, int]:
        """Rank of the induced map H^k(source; F) -> H^k(target; F) per degree."""
        out = {}
        for k in self.source.degrees():
            src = self.source.in_degree(k)
            tgt = self.target.in_degree(k)
            if not tgt:
                continue
            outgoing = self.source.block(k) if self.source.in_degree(k + 1) else []
            cycles = exact.nullspace(outgoing, len(src), p)
            if not cycles:
                continue
            F = [[self.matrix.get((y.id, x.id), 0) for x in src] for y in tgt]
            images = [[sum(F[i][j] * v[j] for j in range(len(src))) for i in range(len(tgt))] for v in cycles]
            bounds = []
            prev = self.target.in_degree(k - 1)
            if prev:
                B = self.target.block(k - 1)
                bounds = [[B[i][j] for i in range(len(tgt))] for j in range(len(prev))]
            # rows of these matrices are vectors in C^k(target)
            r_all = exact.rank(images + bounds, p) if images + bounds else 0
            r_b = exact.rank(bounds, p) if bounds else 0
            if r_all - r_b:
                out[k] = r_all - r_b
        return out


def truncation_map(
    C: FilteredComplex,
    window: Tuple[Optional[ActionValue], Optional[ActionValue]],
    target_window: Tuple[Optional[ActionValue], Optional[ActionValue]],
) -> ComplexMap:
    """Map FC_]a,b] -> FC_]a',b'] induced by inclusions, for a >= a', b >= b'."""
    (a, b), (a2, b2) = window, target_window
    if not _ge(a, a2, lower=True) or not _ge(b, b2, lower=False):
        raise ComplexError("truncation map needs a >= a' and b >= b'")
    src = truncate(C, a, b)
    tgt = truncate(C, a2, b2)
    tgt_ids = {g.id for g in tgt.generators}
    f = {(g.id, g.id): 1 for g in src.generators if g.id in tgt_ids}
    m = ComplexMap(src, tgt, f)
    assert m.is_chain_map()
    return m


def _ge(x: Optional[ActionValue], y: Optional[ActionValue], lower: bool) -> bool:
    """x >= y where None means -inf for lower window ends and +inf for upper ones."""
    if lower:
        return y is None or (x is not None and x >= y)
    return x is None or (y is not None and x >= y)


# ------------------------------------------------------------ towers


@dataclass
class TowerLimit:
    table: HomologyTable
    status: Dict[int, str]

    @property
    def stabilized(self) -> bool:
        return all(s != "not stabilized" for s in self.status.values())

    def to_json(self) -> dict:
        return {"limit": self.table.to_json(), "status": {str(k): v for k, v in sorted(self.status.items())}}


def tower_limit(
    tables: Sequence[HomologyTable],
    maps: Sequence[Mapping[int, int]],
    direction: str = "inverse",
    degrees: Optional[Iterable[int]] = None,
) -> TowerLimit:
    """Finite-tower limit with witnessed stabilization.

    ``maps[i]`` gives the per-degree rank of the connecting map between
    stages i and i+1 (from i+1 to i for an inverse tower, from i to i+1 for
    a direct one). A degree is stable when the last connecting map is an
    isomorphism: equal ranks at both ends and a full-rank map. Zero groups
    at the last two stages count as stably zero. Otherwise the degree is
    reported as not stabilized and contributes nothing to the table.
    """
    if direction not in ("inverse", "direct"):
        raise ValueError("direction must be 'inverse' or 'direct'")
    if len(tables) < 2:
        raise ComplexError("a tower needs at least two stages")
    if len(maps) != len(tables) - 1:
        raise ComplexError("need one connecting map per consecutive pair of stages")
    if degrees is None:
        degrees = sorted({k for t in tables for k in t.degrees()})
    last, prev, link = tables[-1], tables[-2], maps[-1]
    status, groups = {}, {}
    for k in degrees:
        r1, r0 = last.rank(k), prev.rank(k)
        if r1 == r0 == 0 and last[k].is_zero and prev[k].is_zero:
            status[k] = "stable zero"
        elif r1 == r0 and link.get(k, 0) == r1 and last[k] == prev[k]:
            status[k] = "stable"
            groups[k] = last[k]
        else:
            status[k] = "not stabilized"
    return TowerLimit(HomologyTable(groups), status)


# ------------------------------------------------------------ products


def tensor(A: FilteredComplex, B: FilteredComplex) -> FilteredComplex:
    """delta(x (x) y) = delta x (x) y + (-1)^{deg x} x (x) delta y; degrees and actions add."""
    gens = []
    for x, y in itertools.product(A.generators, B.generators):
        gens.append(Generator(f"{x.id}*{y.id}", x.degree + y.degree, x.action + y.action, f"{x.id} (x) {y.id}"))
    d: Dict[Tuple[str, str], int] = {}
    for (x2, x), c in A.differential.items():
        for y in B.generators:
            key = (f"{x2}*{y.id}", f"{x}*{y.id}")
            d[key] = d.get(key, 0) + c
    dega = {g.id: g.degree for g in A.generators}
    for (y2, y), c in B.differential.items():
        for x in A.generators:
            key = (f"{x.id}*{y2}", f"{x.id}*{y}")
            d[key] = d.get(key, 0) + (-1) ** (dega[x.id] % 2) * c
    return FilteredComplex(tuple(gens), d)


def unit_complex() -> FilteredComplex:
    return FilteredComplex((Generator("1", 0, ActionValue.pi(0)),), {})


@dataclass
class KunnethReport:
    field: int
    lhs: Dict[int, int]
    rhs: Dict[int, int]

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        degs = sorted(set(self.lhs) | set(self.rhs))
        return {
            "field": self.field,
            "ok": self.ok,
            "degrees": {str(k): {"tensor": self.lhs.get(k, 0), "product": self.rhs.get(k, 0)} for k in degs},
        }


def kunneth_check(A: FilteredComplex, B: FilteredComplex, p: int = 0) -> KunnethReport:
    """Compare dim H(A (x) B; F) with sum over r+s=k of dim H^r(A) dim H^s(B)."""
    require_valid(A)
    require_valid(B)
    T = tensor(A, B)
    require_valid(T)
    lhs = betti(T, p)
    ba, bb = betti(A, p), betti(B, p)
    rhs: Dict[int, int] = {}
    for r, da in ba.items():
        for s, db in bb.items():
            rhs[r + s] = rhs.get(r + s, 0) + da * db
    return KunnethReport(p, lhs, rhs)


# ------------------------------------------------------------ Morse


@dataclass(frozen=True)
class CriticalPoint:
    id: str
    index: int
    value: float


def morse_complex(
    critical_points: Sequence[CriticalPoint],
    counts: Mapping[Tuple[str, str], object],
) -> FilteredComplex:
    """Morse complex with boundary d x = sum_y n(x, y) y, stored negated.

    ``counts[(x, y)]`` is the signed count of gradient lines from x down to
    y; a list of signs is summed. Degree of the stored generator is minus
    the Morse index and its action minus the critical value.
    """
    pts = {c.id: c for c in critical_points}
    if len(pts) != len(critical_points):
        raise ComplexError("critical point ids must be unique")
    d = {}
    for (x, y), n in counts.items():
        if x not in pts or y not in pts:
            raise ComplexError(f"count ({x}, {y}) names an unknown critical point")
        total = sum(n) if isinstance(n, (list, tuple)) else int(n)
        if pts[x].index - pts[y].index != 1:
            raise ComplexError(f"count ({x}, {y}) joins indices {pts[x].index} and {pts[y].index}")
        if not pts[x].value > pts[y].value:
            raise ComplexError(f"f must decrease from {x} to {y}")
        if total:
            d[(y, x)] = total
    gens = tuple(Generator(c.id, -c.index, ActionValue(real=-float(c.value))) for c in critical_points)
    C = FilteredComplex(gens, d)
    sq = _delta_squared(C)
    if sq:
        (z, x), c = sorted(sq.items())[0]
        raise ComplexError(f"inconsistent counts: d^2({x}) has coefficient {c} on {z}")
    return C


def morse_homology(C: FilteredComplex) -> HomologyTable:
    """Homological Morse homology H_k from a complex built by morse_complex."""
    H = homology(C)
    return HomologyTable({-k: g for k, g in H.groups.items()})
