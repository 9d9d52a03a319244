"""``branchcheck`` command line.

Exit status: 0 for a definite answer, 2 when the criterion does not apply to
the input, 1 for malformed input or internal errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from .criteria import (
    IRREDUCIBLE,
    NOT_APPLICABLE,
    REDUCIBLE,
    SMOOTH,
    IrreducibilityReport,
    NotApplicable,
    abhyankar_moh_check,
    irreducible_at_infinity,
    irreducible_at_origin,
    irreducible_at_point,
    jacobian_newton_diagram,
)
from .merle import Condition, MerleVerdict, merle_test
from .newton import INF, CanonicalDiagram, format_diagram, parse_diagram
from .parser import ParseError, parse_polynomial

EXIT_OK, EXIT_ERROR, EXIT_NOT_APPLICABLE = 0, 1, 2

GRAMMAR_HELP = """\
polynomials are written in x and y with +, -, *, ^ and parentheses;
multiplication must be explicit ("x*y", not "xy"); rational constants are
allowed ("1/2*y^2"). Diagrams are written "L1,M1;L2,M2" with "inf" for an
infinite entry."""


def _num(v) -> Any:
    if v == INF:
        return "inf"
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else str(v)
    return v


def _diagram_json(d: CanonicalDiagram | None):
    if d is None:
        return None
    return [[_num(p.L), _num(p.M)] for p in d.pieces]


def _conditions_json(conds: Sequence[Condition]) -> list[dict]:
    return [{"name": c.name, "pass": c.passed, "detail": c.detail} for c in conds]


def _trace_json(v: MerleVerdict | None):
    if v is None:
        return None
    return {
        "H": list(v.H),
        "C": [_num(c) for c in v.C],
        "conditions": _conditions_json(v.conditions),
    }


def report_json(r: IrreducibilityReport, trace: bool = False) -> dict:
    out = {
        "verdict": r.verdict,
        "reason": r.reason,
        "semigroup": list(r.semigroup) if r.semigroup else None,
        "diagram": _diagram_json(r.diagram),
        "trace": _trace_json(r.merle),
        "preconditions": _conditions_json(r.preconditions),
    }
    if r.point is not None:
        out["point"] = _num(r.point)
    if r.degree is not None:
        out["degree"] = r.degree
    if r.polygon_at_infinity is not None:
        out["polygon_at_infinity"] = r.polygon_at_infinity.as_lists()
        out["transformed_polygon"] = (
            r.transformed_polygon.as_lists() if r.transformed_polygon else None
        )
    if trace:
        out["discriminant"] = str(r.discriminant) if r.discriminant is not None else None
    return out


def _hc_table(v: MerleVerdict) -> list[str]:
    lines = ["  i    H_i    C_i"]
    for i, c in enumerate(v.C):
        lines.append(f"  {i:<4} {v.H[i]:<6} {c}")
    lines.extend(f"  {'ok  ' if c.passed else 'FAIL'} {c.name} {c.detail}".rstrip()
                 for c in v.conditions)
    return lines


def _verdict_line(r: IrreducibilityReport, where: str) -> str:
    if r.verdict == IRREDUCIBLE:
        return f"irreducible{where}; semigroup <{','.join(map(str, r.semigroup))}>"
    if r.verdict == REDUCIBLE:
        return f"reducible{where}: {r.reason}"
    if r.verdict == SMOOTH:
        return r.reason
    return f"not applicable: {r.reason}"


def report_text(r: IrreducibilityReport, trace: bool = False, where: str = "") -> str:
    lines = []
    if trace:
        for c in r.preconditions:
            lines.append(f"check {'ok  ' if c.passed else 'FAIL'} {c.name} {c.detail}".rstrip())
        if r.discriminant is not None:
            lines.append(f"discriminant: {r.discriminant}")
    if r.polygon_at_infinity is not None:
        lines.append("polygon at infinity: " + " ".join(map(str, map(tuple, r.polygon_at_infinity.vertices))))
        if r.transformed_polygon is not None:
            lines.append("transformed polygon: " + " ".join(map(str, map(tuple, r.transformed_polygon.vertices))))
    if r.diagram is not None:
        lines.append(f"diagram: {r.diagram}")
    if trace and r.merle is not None and r.merle.H:
        lines.extend(_hc_table(r.merle))
    lines.append(_verdict_line(r, where))
    return "\n".join(lines)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _exit_for(r: IrreducibilityReport) -> int:
    return EXIT_NOT_APPLICABLE if r.verdict == NOT_APPLICABLE else EXIT_OK


def _cmd_local(args) -> int:
    r = irreducible_at_origin(parse_polynomial(args.polynomial))
    _emit(args, report_json(r, args.trace), report_text(r, args.trace))
    return _exit_for(r)


def _cmd_at_point(args) -> int:
    y0 = Fraction(args.y0) if args.y0 is not None else None
    r = irreducible_at_point(parse_polynomial(args.polynomial), y0)
    where = f" at (0,{r.point})" if r.point is not None else ""
    _emit(args, report_json(r, args.trace), report_text(r, args.trace, where))
    return _exit_for(r)


def _cmd_infinity(args) -> int:
    r = irreducible_at_infinity(parse_polynomial(args.polynomial))
    where = f" at Q=(1:{r.point}:0)" if r.point is not None else ""
    _emit(args, report_json(r, args.trace), report_text(r, args.trace, where))
    return _exit_for(r)


def _not_applicable(args, exc: NotApplicable) -> int:
    payload = {
        "verdict": NOT_APPLICABLE,
        "reason": exc.reason,
        "semigroup": None,
        "diagram": None,
        "trace": None,
        "preconditions": _conditions_json(exc.checks),
    }
    _emit(args, payload, f"not applicable: {exc.reason}")
    return EXIT_NOT_APPLICABLE


def _cmd_diagram(args) -> int:
    try:
        d = jacobian_newton_diagram(parse_polynomial(args.polynomial))
    except NotApplicable as exc:
        return _not_applicable(args, exc)
    payload = {"verdict": "diagram", "reason": None, "semigroup": None,
               "diagram": _diagram_json(d), "trace": None, "preconditions": [],
               "text": format_diagram(d)}
    _emit(args, payload, f"diagram: {d}\n{format_diagram(d)}")
    return EXIT_OK


def _cmd_merle(args) -> int:
    d = parse_diagram(args.diagram)
    v = merle_test(d)
    payload = {
        "verdict": v.outcome,
        "reason": v.reason or None,
        "semigroup": list(v.generators.b) if v.is_merle else None,
        "diagram": _diagram_json(d),
        "trace": _trace_json(v),
        "preconditions": [],
    }
    lines = [f"diagram: {d}"]
    if args.trace and v.H:
        lines.extend(_hc_table(v))
    lines.append(v.summary())
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _cmd_am(args) -> int:
    try:
        res = abhyankar_moh_check(parse_polynomial(args.polynomial))
    except NotApplicable as exc:
        return _not_applicable(args, exc)
    payload = {"verdict": "holds" if res.holds else "fails", "reason": None,
               "semigroup": None, "diagram": None, "trace": None, "preconditions": [],
               "q": _num(res.q), "n": res.n, "holds": res.holds}
    rel = "<" if res.holds else ">="
    _emit(args, payload,
          f"Abhyankar-Moh: q={_num(res.q)} {rel} n={res.n}; {'holds' if res.holds else 'fails'}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="branchcheck",
        description="Decide analytic irreducibility of plane curve singularities "
                    "from Newton diagrams of discriminants.",
        epilog=GRAMMAR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    common.add_argument("--trace", action="store_true",
                        help="show preconditions, the discriminant and the H/C table")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("local", parents=[common], help="irreducibility at the origin")
    p.add_argument("polynomial")
    p.set_defaults(func=_cmd_local)

    p = sub.add_parser("at-point", parents=[common],
                       help="irreducibility at the only point (0,y0) where the curve meets x=0")
    p.add_argument("polynomial")
    p.add_argument("--y0", help="rational y0 such as 1 or -3/2 (detected when omitted)")
    p.set_defaults(func=_cmd_at_point)

    p = sub.add_parser("infinity", parents=[common],
                       help="irreducibility at the only point at infinity")
    p.add_argument("polynomial")
    p.set_defaults(func=_cmd_infinity)

    p = sub.add_parser("diagram", parents=[common], help="jacobian Newton diagram of (x, f)")
    p.add_argument("polynomial")
    p.set_defaults(func=_cmd_diagram)

    p = sub.add_parser("merle", parents=[common], help="test whether a diagram is of Merle type")
    p.add_argument("diagram", help='e.g. "6,1;13,2"')
    p.set_defaults(func=_cmd_merle)

    p = sub.add_parser("am", parents=[common], help="Abhyankar-Moh inequality q < n at infinity")
    p.add_argument("polynomial")
    p.set_defaults(func=_cmd_am)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"branchcheck: parse error: {exc}", file=sys.stderr)
        if hasattr(args, "polynomial"):
            print(f"  {args.polynomial}\n  {' ' * exc.position}^", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, ZeroDivisionError, OverflowError) as exc:
        print(f"branchcheck: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
