"""JSON file formats: path descriptions, filtered complexes, Morse data.

Numbers may be given as JSON numbers or as strings; strings accept a
``pi`` suffix ("3/2pi", "0.5*pi") and plain rationals ("3/2").

Path file::

    {"dim_half": 1,
     "segments": [{"kind": "rotation", "rate": "3/2pi", "phase": "0"},
                  {"kind": "shear", "rate": "0.1", "block": 0},
                  {"kind": "exp_const", "generator": [[...]], "left": "previous"},
                  {"kind": "sampled", "grid": [...], "matrices": [[[...]]]},
                  {"kind": "sphere_orbit", "l": 1, "curvature": "1"},
                  {"kind": "perturbed_orbit", "l": 1, "delta": "0.01",
                   "hessian_eigs": ["1"], "curvature": "1"}],
     "tolerances": {"cross": "1e-10"}}

``"left": "previous"`` starts an exp_const segment where the previous
segment ended.

Complex file::

    {"generators": [{"id": "a", "degree": 1, "action": "0", "label": ""}],
     "differential": [["b", "a", 1]]}      # coefficient of b in delta(a)

Morse file::

    {"critical_points": [{"id": "min", "index": 0, "value": "0"}],
     "counts": [{"from": "s", "to": "min", "count": 1},
                {"from": "m", "to": "s", "signs": [1, -1]}]}
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Tuple, Union

import numpy as np

from symphom import symplin
from symphom.actions import ActionValue, parse_action, parse_real
from symphom.chainalg import CriticalPoint, FilteredComplex, Generator, morse_complex
from symphom.config import Tolerances


class FormatError(ValueError):
    pass


def _num(x: Any) -> float:
    if isinstance(x, bool):
        raise FormatError(f"expected a number, got {x!r}")
    if isinstance(x, (int, float)):
        return float(x)
    if isinstance(x, str):
        try:
            if "/" in x and "pi" not in x.lower():
                return float(Fraction(x))
            return parse_real(x)
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
    raise FormatError(f"expected a number, got {x!r}")


def _matrix(x: Any) -> np.ndarray:
    try:
        return np.array([[_num(v) for v in row] for row in x], dtype=float)
    except TypeError as exc:
        raise FormatError("matrices are lists of rows") from exc


def _load(source: Union[str, Path, dict]) -> dict:
    if isinstance(source, dict):
        return source
    try:
        return json.loads(Path(source).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{source}: not valid JSON ({exc.msg})") from exc
    except OSError as exc:
        raise FormatError(f"{source}: {exc.strerror}") from exc


def _require(doc: dict, key: str) -> Any:
    if key not in doc:
        raise FormatError(f"missing field {key!r}")
    return doc[key]


# ------------------------------------------------------------ paths


def load_tolerances(doc: dict, base: Tolerances) -> Tolerances:
    tol = doc.get("tolerances") or {}
    if not isinstance(tol, dict):
        raise FormatError("tolerances must be an object")
    unknown = set(tol) - {"sym", "cross", "ker", "eig", "gen"}
    if unknown:
        raise FormatError(f"unknown tolerances {sorted(unknown)}")
    return base.with_overrides(**{k: _num(v) for k, v in tol.items()})


def _segments(seg: dict, n: int, prev_end) -> List[symplin.Segment]:
    kind = _require(seg, "kind")
    if kind == "rotation":
        return [symplin.Rotation(n, _num(_require(seg, "rate")), _num(seg.get("phase", 0)))]
    if kind == "shear":
        return [symplin.Shear(n, _num(_require(seg, "rate")), int(seg.get("block", 0)))]
    if kind == "exp_const":
        left = seg.get("left")
        if left == "previous":
            if prev_end is None:
                raise FormatError("'left': 'previous' on the first segment")
            left = prev_end
        elif left is not None:
            left = _matrix(left)
        return [symplin.ExpConst(n, _matrix(_require(seg, "generator")), left)]
    if kind == "sampled":
        grid = np.array([_num(t) for t in _require(seg, "grid")])
        mats = np.array([_matrix(m) for m in _require(seg, "matrices")])
        return [symplin.Sampled(n, grid, mats)]
    if kind == "sphere_orbit":
        p = symplin.sphere_orbit_path(int(_require(seg, "l")), n, _num(seg.get("curvature", 1)))
        return list(p.segments)
    if kind == "perturbed_orbit":
        eigs = [_num(e) for e in _require(seg, "hessian_eigs")]
        p = symplin.perturbed_orbit_path(
            int(_require(seg, "l")), n, _num(_require(seg, "delta")), eigs, _num(seg.get("curvature", 1))
        )
        return list(p.segments)
    raise FormatError(f"unknown segment kind {kind!r}")


def load_path(source, base: Tolerances = Tolerances()) -> Tuple[symplin.SymplecticPath, Tolerances]:
    doc = _load(source)
    if not isinstance(doc, dict):
        raise FormatError("a path file is a JSON object")
    n = _require(doc, "dim_half")
    if not isinstance(n, int) or n < 1:
        raise FormatError("dim_half must be a positive integer")
    tol = load_tolerances(doc, base)
    segs: List[symplin.Segment] = []
    raw = _require(doc, "segments")
    if not isinstance(raw, list) or not raw:
        raise FormatError("segments must be a non-empty list")
    for seg in raw:
        if not isinstance(seg, dict):
            raise FormatError("each segment is an object")
        segs.extend(_segments(seg, n, segs[-1].matrix(1.0) if segs else None))
    return symplin.SymplecticPath(n, tuple(segs), tol.sym), tol


# ------------------------------------------------------------ complexes


def _action(x: Any) -> ActionValue:
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return ActionValue(coeff=Fraction(x)) if x == 0 else ActionValue(real=float(x))
    if isinstance(x, str):
        if x.strip() == "0":
            return ActionValue.pi(0)
        a = parse_action(x)
        if a is None:
            raise FormatError("generator actions must be finite")
        return a
    raise FormatError(f"bad action {x!r}")


def load_complex(source) -> FilteredComplex:
    doc = _load(source)
    gens = []
    for g in _require(doc, "generators"):
        gens.append(Generator(str(_require(g, "id")), int(_require(g, "degree")), _action(_require(g, "action")), g.get("label", "")))
    d: Dict[Tuple[str, str], int] = {}
    for entry in doc.get("differential", []):
        if len(entry) != 3:
            raise FormatError("differential entries are [target, source, coefficient] triplets")
        y, x, c = entry
        d[(str(y), str(x))] = d.get((str(y), str(x)), 0) + int(c)
    return FilteredComplex(tuple(gens), d)


def complex_to_json(C: FilteredComplex) -> dict:
    return {
        "generators": [
            {"id": g.id, "degree": g.degree, "action": str(g.action), "label": g.label} for g in C.generators
        ],
        "differential": [[y, x, c] for (y, x), c in sorted(C.differential.items())],
    }


def load_morse(source) -> FilteredComplex:
    doc = _load(source)
    pts = [
        CriticalPoint(str(_require(c, "id")), int(_require(c, "index")), _num(_require(c, "value")))
        for c in _require(doc, "critical_points")
    ]
    counts: Dict[Tuple[str, str], List[int]] = {}
    for c in doc.get("counts", []):
        key = (str(_require(c, "from")), str(_require(c, "to")))
        signs = c.get("signs")
        vals = [int(s) for s in signs] if signs is not None else [int(_require(c, "count"))]
        counts.setdefault(key, []).extend(vals)
    return morse_complex(pts, counts)
