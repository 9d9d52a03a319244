"""Irreducibility decisions for plane curves from jacobian Newton diagrams.

The local test takes ``l = x``: the jacobian Newton diagram of ``(x, f)`` is
the Newton diagram of ``D(u, v) = Discr_y(f(u, y) - v)``, and ``f`` is
irreducible at the origin exactly when that diagram is of Merle type.  The
test at infinity works with ``D_inf(x, t) = Discr_y(p(x, y) - t)`` and the
lattice map ``(i, k) -> (n(n-1) - i - nk, k)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exactpoly import Polynomial, Rational
from .merle import Condition, MerleVerdict, merle_test
from .newton import (
    CanonicalDiagram,
    LatticePolygon,
    apply_infinity_transform,
    diagram_from_polynomial,
    diagram_of_support,
    infinity_transform,
    max_inclination,
    polygon_at_infinity,
)
from .resultant import discriminant_fiber, discriminant_in, discriminant_surface

IRREDUCIBLE = "irreducible"
REDUCIBLE = "reducible"
SMOOTH = "smooth"
NOT_APPLICABLE = "not_applicable"


class NotApplicable(ValueError):
    """A hypothesis of the criterion fails for the given input."""

    def __init__(self, check: str, reason: str, checks: list[Condition] | None = None):
        super().__init__(reason)
        self.check = check
        self.reason = reason
        self.checks = list(checks or [])


@dataclass
class IrreducibilityReport:
    verdict: str
    reason: Optional[str] = None
    semigroup: Optional[tuple[int, ...]] = None
    diagram: Optional[CanonicalDiagram] = None
    merle: Optional[MerleVerdict] = None
    preconditions: list[Condition] = field(default_factory=list)
    discriminant: Optional[Polynomial] = None
    point: Optional[Fraction] = None
    degree: Optional[int] = None
    polygon_at_infinity: Optional[LatticePolygon] = None
    transformed_polygon: Optional[LatticePolygon] = None

    @property
    def definite(self) -> bool:
        return self.verdict != NOT_APPLICABLE


@dataclass(frozen=True)
class AbhyankarMoh:
    q: Fraction | float
    n: int
    holds: bool


# helpers

def _univariate_gcd(a: Polynomial, b: Polynomial, var: str) -> Polynomial:
    """Monic gcd of two univariate polynomials over the rationals."""
    def dense(p: Polynomial) -> list[Fraction]:
        if p.is_zero():
            return []
        parts = p.coefficients_in(var)
        return [Fraction(parts[k].constant_term()) if k in parts else Fraction(0)
                for k in range(max(parts) + 1)]

    def trim(c: list[Fraction]) -> list[Fraction]:
        while c and c[-1] == 0:
            c.pop()
        return c

    r0, r1 = trim(dense(a)), trim(dense(b))
    while r1:
        r = r0[:]
        while len(r) >= len(r1):
            q = r[-1] / r1[-1]
            off = len(r) - len(r1)
            for k, c in enumerate(r1):
                r[off + k] -= q * c
            r.pop()
            trim(r)
        r0, r1 = r1, r
    if not r0:
        return Polynomial()
    lead = r0[-1]
    return Polynomial.from_terms(({var: k}, c / lead) for k, c in enumerate(r0) if c)


def _check_weierstrass_like(f: Polynomial, checks: list[Condition]) -> int:
    """Leading coefficient of ``f`` in ``y`` must be a nonzero constant; returns the y-degree."""
    n = f.degree_in("y")
    lc = f.leading_coefficient_in("y")
    ok = n >= 1 and lc.is_constant()
    checks.append(Condition("constant leading coefficient in y", ok,
                            f"deg_y={n}, lc={lc}"))
    if not ok:
        raise NotApplicable("constant leading coefficient in y",
                            "f must have positive degree in y with constant leading coefficient",
                            checks)
    return n


def _require_xy(f: Polynomial) -> None:
    extra = set(f.variables()) - {"x", "y"}
    if extra:
        raise ValueError(f"expected a polynomial in x, y; found {sorted(extra)}")


# local criterion

def _jacobian_diagram(f: Polynomial, checks: list[Condition]):
    _check_weierstrass_like(f, checks)
    f0 = f.evaluate_at_zero("x")
    ok = not f0.is_zero()
    checks.append(Condition("f(0,y) not identically zero", ok))
    if not ok:
        raise NotApplicable("f(0,y) not identically zero", "f(0,y) vanishes identically", checks)
    m = min(e.get("y", 0) for e, _ in f0.terms())
    q = f0.exact_div(Polynomial.monomial(1, y=m))
    g = _univariate_gcd(q, q.partial_derivative("y"), "y")
    ok = g.is_constant()
    checks.append(Condition("nonzero roots of f(0,y) simple", ok, f"gcd(q,q')={g}"))
    if not ok:
        raise NotApplicable("nonzero roots of f(0,y) simple",
                            "f(0,y) has a multiple nonzero root; translate coordinates first",
                            checks)
    ok = not discriminant_in(f, "y").is_zero()
    checks.append(Condition("input reduced", ok, "Discr_y(f) != 0" if ok else "Discr_y(f) = 0"))
    if not ok:
        raise NotApplicable("input reduced", "input not reduced: f and df/dy share a factor", checks)
    D = discriminant_surface(f)
    polygon, diagram = diagram_from_polynomial(D, ("u", "v"))
    return D, polygon, diagram


def jacobian_newton_diagram(f: Polynomial) -> CanonicalDiagram:
    """Jacobian Newton diagram of ``(x, f)``; raises :class:`NotApplicable` on bad input."""
    _require_xy(f)
    return _jacobian_diagram(f, [])[2]


def _verdict_from_merle(report: IrreducibilityReport, verdict: MerleVerdict) -> IrreducibilityReport:
    report.merle = verdict
    if verdict.is_merle:
        report.verdict = IRREDUCIBLE
        report.semigroup = verdict.generators.b
    else:
        report.verdict = REDUCIBLE
        report.reason = verdict.reason
    return report


def irreducible_at_origin(f: Polynomial) -> IrreducibilityReport:
    """Decide analytic irreducibility of ``f = 0`` at the origin."""
    _require_xy(f)
    checks: list[Condition] = []
    if f.is_zero():
        raise ValueError("zero polynomial does not define a curve")
    ok = f.constant_term() == 0
    checks.append(Condition("passes through origin", ok))
    if not ok:
        return IrreducibilityReport(NOT_APPLICABLE, reason="curve does not pass through the origin",
                                    preconditions=checks)
    singular = f.ord_at_origin() > 1
    checks.append(Condition("singular at origin", singular, f"ord={f.ord_at_origin()}"))
    if not singular:
        return IrreducibilityReport(SMOOTH, reason="smooth at origin (trivially irreducible)",
                                    preconditions=checks)
    try:
        D, _, diagram = _jacobian_diagram(f, checks)
    except NotApplicable as exc:
        return IrreducibilityReport(NOT_APPLICABLE, reason=exc.reason, preconditions=exc.checks)
    report = IrreducibilityReport(REDUCIBLE, diagram=diagram, preconditions=checks, discriminant=D)
    return _verdict_from_merle(report, merle_test(diagram))


def _single_root(f0: Polynomial, n: int) -> Fraction | None:
    """``y0`` with ``f0 == c * (y - y0)**n``, or None."""
    c = f0.coefficient(y=n)
    y0 = -Fraction(f0.coefficient(y=n - 1)) / (n * c)
    target = (Polynomial.variable("y") - Polynomial.constant(y0)) ** n
    return y0 if f0 == target.scale(c) else None


def irreducible_at_point(f: Polynomial, y0: Rational | None = None) -> IrreducibilityReport:
    """Irreducibility at ``(0, y0)`` for a curve meeting ``x = 0`` only there.

    When ``y0`` is omitted it is read off ``f(0, y)``.
    """
    _require_xy(f)
    checks: list[Condition] = []
    try:
        n = _check_weierstrass_like(f, checks)
    except NotApplicable as exc:
        return IrreducibilityReport(NOT_APPLICABLE, reason=exc.reason, preconditions=exc.checks)
    found = _single_root(f.evaluate_at_zero("x"), n)
    ok = found is not None and (y0 is None or Fraction(y0) == found)
    detail = "f(0,y) = c*(y - y0)^N" if found is not None else "f(0,y) has several distinct roots"
    if found is not None and y0 is not None and Fraction(y0) != found:
        detail = f"curve meets x=0 only at y0={found}, not {y0}"
    checks.append(Condition("meets x=0 only at (0,y0)", ok, detail))
    if not ok:
        return IrreducibilityReport(NOT_APPLICABLE, reason=f"hypothesis fails: {detail}",
                                    preconditions=checks)
    shifted = f.substitute_shift("y", found)
    report = irreducible_at_origin(shifted)
    same = discriminant_surface(f) == discriminant_surface(shifted)
    checks.append(Condition("discriminant invariant under shift", same))
    report.preconditions = checks + report.preconditions
    report.point = found
    if report.verdict == SMOOTH:
        report.reason = f"smooth at (0,{found}) (trivially irreducible)"
    return report


# criterion at infinity

def point_at_infinity(p: Polynomial) -> tuple[int, Fraction]:
    """Degree ``n`` and ``y0`` with the highest form of ``p`` equal to ``c*(y - y0*x)**n``.

    Raises :class:`NotApplicable` if the curve has several points at infinity
    or its only one is ``(0:1:0)``.
    """
    n = p.total_degree()
    top = p.leading_form("highest")
    c = top.coefficient(y=n)
    if not c:
        if top == Polynomial.monomial(top.coefficient(x=n), x=n):
            raise NotApplicable("point at infinity is not (0:1:0)",
                                "the only point at infinity is (0:1:0), which is excluded")
        raise NotApplicable("one point at infinity", "the curve has several points at infinity")
    y0 = -Fraction(top.coefficient(x=1, y=n - 1)) / (n * c)
    line = Polynomial.variable("y") - Polynomial.variable("x").scale(y0)
    if top != (line ** n).scale(c):
        raise NotApplicable("one point at infinity", "the curve has several points at infinity")
    return n, y0


def _infinity_data(p: Polynomial, checks: list[Condition]):
    _require_xy(p)
    if p.is_zero():
        raise ValueError("zero polynomial does not define a curve")
    n = p.total_degree()
    ok = n >= 2
    checks.append(Condition("degree at least 2", ok, f"n={n}"))
    if not ok:
        raise NotApplicable("degree at least 2", "a line is smooth at infinity; nothing to decide", checks)
    try:
        n, y0 = point_at_infinity(p)
    except NotApplicable as exc:
        checks.append(Condition(exc.check, False, exc.reason))
        raise NotApplicable(exc.check, exc.reason, checks) from None
    checks.append(Condition("one point at infinity", True, f"Q=(1:{y0}:0)"))
    squarefree = not discriminant_in(p, "y").is_zero()
    checks.append(Condition("no multiple factors", squarefree))
    if not squarefree:
        raise NotApplicable("no multiple factors", "p has multiple factors", checks)
    D = discriminant_fiber(p)
    poly_inf = polygon_at_infinity(D, ("x", "t"))
    try:
        image = apply_infinity_transform(poly_inf, n)
    except ValueError:
        image = None
    support = [infinity_transform(pt, n) for pt in D.support("x", "t")]
    polygon0, diagram = diagram_of_support(support)
    return n, y0, D, poly_inf, image, polygon0, diagram


def irreducible_at_infinity(p: Polynomial) -> IrreducibilityReport:
    """Irreducibility of the projective closure of ``p = 0`` at its point at infinity."""
    checks: list[Condition] = []
    try:
        n, y0, D, poly_inf, image, _, diagram = _infinity_data(p, checks)
    except NotApplicable as exc:
        return IrreducibilityReport(NOT_APPLICABLE, reason=exc.reason, preconditions=exc.checks)
    report = IrreducibilityReport(
        REDUCIBLE, diagram=diagram, preconditions=checks, discriminant=D, point=y0,
        degree=n, polygon_at_infinity=poly_inf, transformed_polygon=image,
    )
    return _verdict_from_merle(report, merle_test(diagram))


def abhyankar_moh_check(p: Polynomial) -> AbhyankarMoh:
    """Maximal inclination ``q`` of the transformed discriminant polygon against ``n``."""
    checks: list[Condition] = []
    n, _, _, _, _, _, diagram = _infinity_data(p, checks)
    if not diagram.pieces:
        raise NotApplicable("nonempty diagram", "discriminant diagram is empty", checks)
    q = max_inclination(diagram)
    return AbhyankarMoh(q=q, n=n, holds=q < n)
