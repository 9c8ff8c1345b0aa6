"""Command-line front end.

Every subcommand prints either sorted-key JSON or a tab-separated table.
Exit codes: 0 success, 1 a verification or consistency check failed,
2 bad usage or unreadable input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import List, Optional, Sequence, Tuple

from symphom import chainalg, domains, formats, symplin
from symphom.actions import ActionValue, parse_action, parse_rational
from symphom.config import RunConfig, Tolerances
from symphom.verify import GROUPS, run_checks


class UsageError(ValueError):
    pass


# ------------------------------------------------------------ parsing helpers


def _action(text: str) -> Optional[ActionValue]:
    try:
        return parse_action(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _finite(text: str, what: str) -> ActionValue:
    a = _action(text)
    if a is None:
        raise UsageError(f"{what} must be finite")
    return a


def _radii(items: Sequence[str]) -> domains.EllipsoidSpec:
    vals = []
    for item in items:
        for piece in item.split(","):
            if piece.strip():
                try:
                    vals.append(parse_rational(piece))
                except ValueError as exc:
                    raise UsageError(str(exc)) from exc
    if not vals:
        raise UsageError("no radii given")
    return domains.EllipsoidSpec.of(*vals)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def _config(args) -> RunConfig:
    tol = Tolerances().with_overrides(
        sym=args.tol_sym, cross=args.tol_cross, ker=args.tol_ker, eig=args.tol_eig, gen=args.tol_gen
    )
    if args.field and not _is_prime(args.field):
        raise UsageError(f"--field must be 0 or a prime, got {args.field}")
    horizon = _finite(args.horizon, "--horizon") if args.horizon else ActionValue.pi(6)
    return RunConfig(tol, horizon, args.field, args.format, args.verbose)


def _inexact(*values: Optional[ActionValue]) -> bool:
    return any(v is not None and not v.exact for v in values)


def _window_json(a, b) -> list:
    return [None if a is None else a.to_json(), None if b is None else b.to_json()]


def _window_text(a, b) -> str:
    return f"]{'-inf' if a is None else a}, {'inf' if b is None else b}]"


# ------------------------------------------------------------ rendering


def _homology_rows(H: chainalg.HomologyTable) -> List[str]:
    rows = ["degree\tgroup"]
    rows += [f"{k}\t{g}" for k, g in H.groups.items()]
    if H.is_zero():
        rows.append("*\t0")
    return rows


def _inexact_rows(flag: bool) -> List[str]:
    return ["# warning: decimal input, actions compared in floating point"] if flag else []


# Each command returns (json document, tsv lines, exit code).
Outcome = Tuple[dict, List[str], int]


def cmd_index(args, cfg: RunConfig) -> Outcome:
    path, tol = formats.load_path(args.path_file, cfg.tol)
    res = symplin.rs_index(path, tol)
    doc = {
        "i_RS": str(res.value),
        "twice_value": res.twice_value,
        "crossings": [c.to_json() for c in res.crossings],
        "diagnostics": list(res.diagnostics),
    }
    rows = [f"i_RS = {res.value}"]
    if args.cz:
        cz = symplin.cz_index(path, tol)
        doc["i_CZ"] = cz
        rows.append(f"i_CZ = {cz}")
    rows.append("t\tkernel_dim\tsignature\tweight")
    rows += [f"{c.t:.12g}\t{c.kernel_dim}\t{c.signature}\t{c.weight}" for c in res.crossings]
    rows += [f"# {d}" for d in res.diagnostics]
    return doc, rows, 0


def cmd_ellipsoid(args, cfg: RunConfig) -> Outcome:
    r = _radii(args.radii)
    if args.window:
        a, b = _action(args.window[0]), _action(args.window[1])
    else:
        a, b = None, cfg.horizon
    if b is None:
        raise UsageError("the upper window end must be finite")
    H = domains.ellipsoid_window_homology(r, a, b)
    flag = _inexact(a, b)
    doc = {
        "radii": [str(x) for x in r.radii],
        "window": _window_json(a, b),
        "homology": H.to_json(),
        "inexact_inputs": flag,
    }
    rows = _inexact_rows(flag) + [f"# E{r} window {_window_text(a, b)}"] + _homology_rows(H)
    if a is None and b.exact:
        m = domains.m_count(r, b)
        doc["m"] = m
        rows.insert(len(rows) - len(H.groups) - 1, f"# m = {m}, top degree {r.n + 2 * m}")
    return doc, rows, 0


def cmd_ball(args, cfg: RunConfig) -> Outcome:
    if args.n < 1:
        raise UsageError("n must be positive")
    if args.full:
        T = domains.ball_full_homology(args.n, cfg.horizon, cfg.field)
        doc = {"n": args.n, "horizon": cfg.horizon.to_json(), "field": cfg.field, **T.to_json()}
        rows = [f"# D^{2 * args.n}, slopes up to {T.slopes[-1]}", "degree\tlimit\tstatus"]
        rows += [f"{k}\t{T.limit.table[k]}\t{s}" for k, s in sorted(T.limit.status.items())]
        return doc, rows, 0
    lam = _finite(args.lam, "--lam")
    model = domains.BallModel(args.n, lam)
    C = domains.ball_complex(model)
    if args.window:
        a, b = _action(args.window[0]), _action(args.window[1])
        H = chainalg.homology(chainalg.truncate(C, a, b))
    else:
        a, b = None, None
        H = domains.ball_truncated_homology(model)
    flag = _inexact(lam, a, b)
    doc = {
        "n": args.n,
        "slope": lam.to_json(),
        "window": _window_json(a, b),
        "homology": H.to_json(),
        "inexact_inputs": flag,
    }
    rows = _inexact_rows(flag) + [f"# D^{2 * args.n}, slope {lam}, window {_window_text(a, b)}"] + _homology_rows(H)
    return doc, rows, 0


def cmd_classify(args, cfg: RunConfig) -> Outcome:
    r1, r2 = _radii([args.first]), _radii([args.second])
    v = domains.classify(r1, r2, cfg.horizon)
    doc = {"first": [str(x) for x in r1.radii], "second": [str(x) for x in r2.radii], **v.to_json()}
    if v.equal:
        rows = [f"E{r1} and E{r2}: equal"]
    else:
        rows = [
            f"E{r1} and E{r2}: distinct",
            "window\tdegree\tfirst\tsecond",
            f"{_window_text(*v.window)}\t{v.degree}\t{v.groups[0]}\t{v.groups[1]}",
        ]
    return doc, rows, 0


def cmd_spectrum(args, cfg: RunConfig) -> Outcome:
    r = _radii(args.radii)
    geo = domains.ellipsoid_spectrum(r, cfg.horizon)
    doc = {"radii": [str(x) for x in r.radii], "horizon": cfg.horizon.to_json(), "spectrum": geo.to_json()}
    rows = ["action\tdecimal\tindex\tmultiplicity"]
    rows += [f"{e.action}\t{float(e.action):.6f}\t{e.index}\t{e.multiplicity}" for e in geo]
    code = 0
    if args.check:
        hom = domains.spectrum_from_homology(r, cfg.horizon)
        back = domains.recover_radii(geo, r.n, cfg.horizon)
        ok = hom == geo and back == r
        doc["from_homology_agrees"] = hom == geo
        doc["recovered_radii"] = [str(x) for x in back.radii]
        rows += [f"# from homology: {'agrees' if hom == geo else 'DIFFERS'}", f"# recovered radii: {back}"]
        code = 0 if ok else 1
    return doc, rows, code


def cmd_morse(args, cfg: RunConfig) -> Outcome:
    C = formats.load_morse(args.morse_file)
    H = chainalg.morse_homology(C)
    doc = {"complex": formats.complex_to_json(C), "homology": H.to_json()}
    return doc, _homology_rows(H), 0


def cmd_kunneth(args, cfg: RunConfig) -> Outcome:
    A, B = formats.load_complex(args.first), formats.load_complex(args.second)
    rep = chainalg.kunneth_check(A, B, cfg.field)
    rows = [f"Kunneth over {'Q' if not cfg.field else f'F_{cfg.field}'}: {'ok' if rep.ok else 'FAILED'}"]
    rows.append("degree\ttensor\tproduct")
    for k in sorted(set(rep.lhs) | set(rep.rhs)):
        rows.append(f"{k}\t{rep.lhs.get(k, 0)}\t{rep.rhs.get(k, 0)}")
    return rep.to_json(), rows, 0 if rep.ok else 1


def cmd_verify(args, cfg: RunConfig) -> Outcome:
    outs = run_checks(cfg.tol, args.only)
    ok = all(o.ok for o in outs)
    doc = {"ok": ok, "checks": [o.to_json() for o in outs]}
    rows = ["status\tgroup\tcheck\tanchor\tdetail"]
    rows += [f"{'PASS' if o.ok else 'FAIL'}\t{o.check.group}\t{o.check.name}\t{o.check.anchor}\t{o.detail}" for o in outs]
    rows.append(f"# {sum(o.ok for o in outs)}/{len(outs)} passed")
    return doc, rows, 0 if ok else 1


# ------------------------------------------------------------ argparse


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default="json")
    common.add_argument("--horizon", help='action bound, e.g. "6pi" (default 6pi)')
    common.add_argument("--field", type=int, default=0, help="0 for Q, or a prime p for F_p")
    common.add_argument("-v", "--verbose", action="count", default=0)
    for name in ("sym", "cross", "ker", "eig", "gen"):
        common.add_argument(f"--tol-{name}", type=float, default=None, metavar="X")

    p = argparse.ArgumentParser(prog="symphom", description="Symplectic indices and filtered Floer-type homology.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("index", parents=[common], help="Robbin-Salamon index of a path file")
    s.add_argument("path_file")
    s.add_argument("--cz", action="store_true", help="also report the Conley-Zehnder index")
    s.set_defaults(func=cmd_index)

    s = sub.add_parser("ellipsoid", parents=[common], help="window homology of an ellipsoid")
    s.add_argument("radii", nargs="+", help='exact rationals, e.g. 1 3/2')
    g = s.add_mutually_exclusive_group()
    g.add_argument("--window", nargs=2, metavar=("A", "B"))
    g.add_argument("--full", action="store_true", help="window ]-inf, horizon] (the default)")
    s.set_defaults(func=cmd_ellipsoid)

    s = sub.add_parser("ball", parents=[common], help="truncated or full homology of the ball")
    s.add_argument("n", type=int)
    s.add_argument("--lam", default="1/2pi", help="slope, not a multiple of pi")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--window", nargs=2, metavar=("A", "B"))
    g.add_argument("--full", action="store_true", help="tower limit up to the horizon")
    s.set_defaults(func=cmd_ball)

    s = sub.add_parser("classify", parents=[common], help="compare two ellipsoids")
    s.add_argument("first", help="comma-separated radii")
    s.add_argument("second", help="comma-separated radii")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("spectrum", parents=[common], help="action spectrum of an ellipsoid")
    s.add_argument("radii", nargs="+")
    s.add_argument("--check", action="store_true", help="rebuild from homology and recover the radii")
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("morse", parents=[common], help="Morse homology from a critical-point file")
    s.add_argument("morse_file")
    s.set_defaults(func=cmd_morse)

    s = sub.add_parser("kunneth", parents=[common], help="Kunneth rank check for two complex files")
    s.add_argument("first")
    s.add_argument("second")
    s.set_defaults(func=cmd_kunneth)

    s = sub.add_parser("verify", parents=[common], help="run the built-in check suite")
    s.add_argument("--only", action="append", choices=GROUPS, metavar="NAME", help=f"one of {', '.join(GROUPS)}")
    s.set_defaults(func=cmd_verify)
    return p


_INPUT_ERRORS = (
    UsageError,
    formats.FormatError,
    domains.DomainError,
    chainalg.ComplexError,
    symplin.SymplinError,
    ValueError,
)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        doc, rows, code = args.func(args, cfg)
    except _INPUT_ERRORS as exc:
        print(f"symphom {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except NotImplementedError as exc:
        print(f"symphom {args.command}: {exc}", file=sys.stderr)
        return 2
    if cfg.fmt == "json":
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        print("\n".join(rows))
    return code


if __name__ == "__main__":
    sys.exit(main())
