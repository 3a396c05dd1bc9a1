"""Command-line front end: ``arcval <command> ...``.

Exit codes: 0 success, 1 the set memberships disagree, 2 bad input or usage,
3 a mathematical precondition fails (trivial or non-normalized arc, precision
exhausted, missing root).
"""

from __future__ import annotations

import argparse
import sys

from .arcs import TrivialArcError, is_trivial, normalization_index, ord_poly
from .blowup import PrecisionExhaustedError, center_sequence
from .fields import FieldError
from .harness import (
    DEFAULT_CAP,
    EnumerationTooLargeError,
    NotNonsingularError,
    check_base_case,
    check_theorem,
)
from .hne import NotNormalizedError, hne_expand
from .ideals import aq_generators, iq_generators
from .io import REPORT_SCHEMA, DocumentError, dumps_canonical, load_arc, series_coeffs
from .poly import PolyError, parse_poly
from .reparam import NotReparametrizationError, solve_reparam
from .series import SeriesError

EXIT_OK, EXIT_DISAGREE, EXIT_INPUT, EXIT_MATH = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _arc(path, args):
    arc = load_arc(path)
    if args.precision is not None:
        if args.precision > arc.precision:
            raise UsageError(
                f"--precision {args.precision} exceeds the {arc.precision} known coefficients of {path}"
            )
        arc = arc.truncate(args.precision)
    return arc


def _coeff_list(text: str):
    coeffs = [s.strip() for s in text.split(",") if s.strip()]
    if not coeffs:
        raise UsageError("--coeffs must list at least one coefficient")
    return coeffs


def _emit(args, payload: dict, lines):
    if args.json:
        payload = {"schema": REPORT_SCHEMA, "command": args.command, **payload}
        sys.stdout.write(dumps_canonical(payload))
    else:
        for line in lines:
            print(line)


def _require_normalized(arc):
    if is_trivial(arc):
        raise TrivialArcError("this command")
    d = normalization_index(arc)
    if d != 1:
        raise NotNormalizedError(d)


def cmd_ord(args) -> int:
    arc = _arc(args.arc, args)
    psi = parse_poly(args.poly, arc.n, arc.field)
    o = ord_poly(arc, psi)
    _emit(args, {"order": str(o), "finite": o.finite, "value": o.value}, [str(o)])
    return EXIT_OK


def cmd_hne(args) -> int:
    arc = _arc(args.arc, args)
    h = hne_expand(arc)
    payload = {
        "depth": h.depth,
        "pivots": h.charts.pivots,
        "final_pivot": h.pivot,
        "iteration_orders": list(h.iteration_orders),
        "residual_precision": h.residual_precision,
        "P": {str(i): series_coeffs(p, h.field) for i, p in sorted(h.P.items())},
    }
    lines = [
        f"depth: {h.depth}",
        f"pivots: {h.charts.pivots}",
        f"final pivot: x{h.pivot}",
        f"iteration orders: {list(h.iteration_orders)}",
        f"residual precision: {h.residual_precision}",
    ]
    lines += [f"P_{i} = {p.format()}" for i, p in sorted(h.P.items())]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_centers(args) -> int:
    arc = _arc(args.arc, args)
    seq = center_sequence(arc, args.depth)
    rows = []
    lines = ["step  pivot  order  constants  precision"]
    for k, rec in enumerate(seq.steps, 1):
        consts = {str(i): arc.field.format(c) for i, c in sorted(rec.constants.items())}
        rows.append({"step": k, "pivot": rec.pivot, "pivot_order": rec.pivot_order,
                     "constants": consts, "precision": rec.precision})
        cs = ", ".join(f"c{i}={v}" for i, v in consts.items())
        lines.append(f"{k:>4}  x{rec.pivot:<4}  {rec.pivot_order:>5}  {cs}  {rec.precision}")
    if seq.exhausted:
        lines.append(f"precision exhausted after {len(seq)} blowups")
    _emit(args, {"steps": rows, "exhausted": seq.exhausted}, lines)
    return EXIT_OK


def cmd_ideals(args) -> int:
    arc = _arc(args.arc, args)
    h = hne_expand(arc)
    q = args.q if args.q is not None else args.qmax
    if q < 1:
        raise UsageError("q must be positive")
    aq = [str(g) for g in aq_generators(h, q)]
    iq = [str(g) for g in iq_generators(h, q)]
    lines = [f"chart depth {h.depth}, pivot x{h.pivot}", f"a_{q}:"]
    lines += [f"  {g}" for g in aq]
    lines += [f"I_{q}:"] + [f"  {g}" for g in iq]
    _emit(args, {"q": q, "depth": h.depth, "pivot": h.pivot, "aq": aq, "iq": iq}, lines)
    return EXIT_OK


def cmd_reparam(args) -> int:
    alpha = _arc(args.alpha, args)
    gamma = _arc(args.gamma, args)
    _require_normalized(alpha)
    try:
        res = solve_reparam(alpha, gamma)
    except NotReparametrizationError as exc:
        _emit(args, {"reparametrization": False, "witness": exc.witness(), "message": str(exc)},
              [f"not a reparametrization: {exc}"])
        return EXIT_OK
    payload = {"reparametrization": True, "trivial": res.trivial, "N": res.N,
               "verified_to": res.verified_to, "h": series_coeffs(res.h, alpha.field)}
    line = "trivial arc: h = 0" if res.trivial else f"h = {res.h.format()}  (N = {res.N}, verified to t^{res.verified_to})"
    _emit(args, payload, [line])
    return EXIT_OK


def cmd_check(args) -> int:
    alpha = _arc(args.alpha, args)
    _require_normalized(alpha)
    reports, summary = check_theorem(
        alpha, _coeff_list(args.coeffs), args.degree, args.precision or alpha.precision,
        args.qmax, args.cap, n_jobs=args.jobs,
    )
    bad = summary.disagreements + summary.cv_violations + summary.aq_iq_exceptions
    payload = summary.to_json()
    lines = [
        f"alpha: {alpha}",
        f"arcs checked: {summary.total}",
        f"members: {summary.members}",
        f"disagreements: {len(summary.disagreements)}",
        f"in_Cv outside the common set: {len(summary.cv_violations)}",
        f"a_q / I_q exceptions: {len(summary.aq_iq_exceptions)}",
        f"undetermined (precision): {len(summary.undetermined)}",
    ]
    if bad and not args.json:
        sys.stdout.write(dumps_canonical({"schema": REPORT_SCHEMA, "witnesses": [r.to_json() for r in bad]}))
    _emit(args, payload, lines)
    return EXIT_DISAGREE if bad else EXIT_OK


def cmd_base_case(args) -> int:
    alpha = _arc(args.alpha, args)
    _require_normalized(alpha)
    rep = check_base_case(alpha, args.samples, args.qmax, _coeff_list(args.coeffs),
                          args.degree, seed=args.seed, cap=args.cap)
    lines = [
        f"samples: {rep.samples}",
        f"formula mismatches: {len(rep.formula_mismatches)}",
        f"arcs checked: {rep.arcs_checked}",
        f"a_q / I_q exceptions: {len(rep.aq_iq_exceptions)}",
        f"valuation lower-bound violations: {len(rep.val_c_violations)}",
    ]
    _emit(args, rep.to_json(), lines)
    return EXIT_OK if rep.ok else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=None,
                        help="truncate input arcs (and enumerated arcs for check) to this precision")
    common.add_argument("--qmax", type=int, default=5, help="largest q checked (default 5)")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    enum = argparse.ArgumentParser(add_help=False)
    enum.add_argument("--coeffs", default="-1,0,1", help="coefficient set for enumeration")
    enum.add_argument("--degree", type=int, default=3, help="degree bound for enumeration")
    enum.add_argument("--cap", type=int, default=DEFAULT_CAP, help="refuse enumerations larger than this")

    p = argparse.ArgumentParser(prog="arcval", description="Arc valuations on affine n-space.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("ord", parents=[common], help="order of a polynomial along an arc")
    s.add_argument("arc")
    s.add_argument("poly")
    s.set_defaults(func=cmd_ord)

    s = sub.add_parser("hne", parents=[common], help="Hamburger-Noether expansion")
    s.add_argument("arc")
    s.set_defaults(func=cmd_hne)

    s = sub.add_parser("centers", parents=[common], help="blowup center sequence")
    s.add_argument("arc")
    s.add_argument("--depth", type=int, default=3)
    s.set_defaults(func=cmd_centers)

    s = sub.add_parser("ideals", parents=[common], help="generators of a_q and I_q")
    s.add_argument("arc")
    s.add_argument("--q", type=int, default=None, help="defaults to --qmax")
    s.set_defaults(func=cmd_ideals)

    s = sub.add_parser("reparam", parents=[common], help="solve gamma = alpha o h")
    s.add_argument("alpha")
    s.add_argument("gamma")
    s.set_defaults(func=cmd_reparam)

    s = sub.add_parser("check", parents=[common, enum], help="exhaustive five-set agreement check")
    s.add_argument("alpha")
    s.add_argument("--jobs", type=int, default=None, help="parallel workers (joblib)")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("base-case", parents=[common, enum], help="nonsingular-arc consistency checks")
    s.add_argument("alpha")
    s.add_argument("--samples", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_base_case)
    return p


def _fail(args, code: int, message: str) -> int:
    if args is not None and getattr(args, "json", False):
        sys.stdout.write(dumps_canonical({"schema": REPORT_SCHEMA, "error": message, "exit": code}))
    print(f"error: {message}", file=sys.stderr)
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (TrivialArcError, NotNormalizedError, NotNonsingularError,
            PrecisionExhaustedError, SeriesError) as exc:
        if isinstance(exc, TrivialArcError):
            return _fail(args, EXIT_MATH, f"trivial arc ({exc})")
        return _fail(args, EXIT_MATH, str(exc))
    except EnumerationTooLargeError as exc:
        return _fail(args, EXIT_INPUT, str(exc))
    except (DocumentError, PolyError, FieldError, UsageError, OSError) as exc:
        return _fail(args, EXIT_INPUT, str(exc))
    except ValueError as exc:  # includes ArcError: shape and dimension problems
        return _fail(args, EXIT_INPUT, str(exc))


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_entry()
