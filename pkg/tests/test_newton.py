import random
from fractions import Fraction

import pytest

from branchcheck.exactpoly import Polynomial
from branchcheck.newton import (
    INF,
    CanonicalDiagram,
    ElementaryDiagram,
    LatticePolygon,
    apply_infinity_transform,
    diagram_from_polynomial,
    diagram_from_vertices,
    format_diagram,
    max_inclination,
    minkowski_sum,
    parse_diagram,
    polygon_at_infinity,
    stretch,
    vertices_of,
)
from branchcheck.resultant import discriminant_fiber, discriminant_surface

from conftest import P, random_poly

DIRECTIONS = [(a, b) for a in range(0, 8) for b in range(0, 8) if (a, b) != (0, 0)]


def support_function(points, a, b):
    return min(a * i + b * j for i, j in points)


def diagram_support_function(d: CanonicalDiagram, a, b):
    """min of a*i + b*j over the diagram, read off its vertices and unbounded pieces."""
    verts = vertices_of(d)
    return min(a * i + b * j for i, j in verts)


def test_example_1_diagram():
    poly, d = diagram_from_polynomial(P("4*v+4*u^5"))
    assert poly.vertices == ((0, 1), (5, 0))
    assert d == CanonicalDiagram.of((5, 1))
    assert d.convenient


def test_example_4_diagram():
    _, d = diagram_from_polynomial(discriminant_surface(P("(y^2-x^3)^2-x^5*y")))
    assert d == CanonicalDiagram.of((6, 1), (13, 2))
    assert d.convenient


def test_monomial_diagram():
    poly, d = diagram_from_polynomial(P("u^3*v^2"))
    assert poly.vertices == ((3, 2),)
    assert d.pairs() == [(3, INF), (INF, 2)]
    assert not d.convenient


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        diagram_from_polynomial(Polynomial())


def test_minkowski_examples():
    a = CanonicalDiagram.of((5, 1))
    assert minkowski_sum(a, CanonicalDiagram()) == a
    assert minkowski_sum(CanonicalDiagram.of((2, 1)), CanonicalDiagram.of((5, 2))) == \
        CanonicalDiagram.of((2, 1), (5, 2))
    assert minkowski_sum(CanonicalDiagram.of((3, 1)), CanonicalDiagram.of((3, 1))) == \
        CanonicalDiagram.of((6, 2))
    assert minkowski_sum(CanonicalDiagram.of((2, INF)), CanonicalDiagram.of((3, INF), (INF, 1))) == \
        CanonicalDiagram.of((5, INF), (INF, 1))


def test_canonical_order_enforced():
    with pytest.raises(ValueError):
        CanonicalDiagram.of((5, 2), (2, 1))
    with pytest.raises(ValueError):
        ElementaryDiagram(INF, INF)
    with pytest.raises(ValueError):
        ElementaryDiagram(0, 1)


def test_inclination_conventions():
    assert ElementaryDiagram(3, INF).inclination == 0
    assert ElementaryDiagram(INF, 2).inclination == INF
    assert ElementaryDiagram(13, 2).inclination == Fraction(13, 2)


def test_polygon_at_infinity_examples():
    D = discriminant_fiber(P("x+(x+y^3)^3"))
    assert polygon_at_infinity(D).vertices == ((0, 8), (6, 6), (12, 0))
    assert polygon_at_infinity(P("x^2+t^2")).vertices == ((0, 2), (2, 0))
    assert polygon_at_infinity(P("1+x*t")).vertices == ((1, 1),)


def test_infinity_transform_examples():
    chain = LatticePolygon(((0, 8), (6, 6), (12, 0)), "at_infinity")
    assert apply_infinity_transform(chain, 9).vertices == ((0, 8), (12, 6), (60, 0))
    for n in (1, 2, 5, 9):
        assert apply_infinity_transform(LatticePolygon(((0, 0),), "at_infinity"), n).vertices == \
            ((n * (n - 1), 0),)
        assert apply_infinity_transform(LatticePolygon(((0, n - 1),), "at_infinity"), n).vertices == \
            ((0, n - 1),)


def test_infinity_transform_rejects_invalid_image():
    with pytest.raises(ValueError):
        apply_infinity_transform(LatticePolygon(((0, 2), (3, 2)), "at_infinity"), 4)
    with pytest.raises(ValueError):
        apply_infinity_transform(LatticePolygon(((10, 0),), "at_infinity"), 3)


def test_at_zero_chain_validation():
    with pytest.raises(ValueError):
        LatticePolygon(((0, 2), (1, 1), (3, 0), (4, 0)))
    with pytest.raises(ValueError):
        LatticePolygon(((0, 4), (1, 2), (2, 1), (3, 0), (10, -1)))
    with pytest.raises(ValueError):  # not convex
        LatticePolygon(((0, 2), (3, 1), (4, 0)))


def test_max_inclination():
    assert max_inclination(CanonicalDiagram.of((12, 2), (48, 6))) == 8
    assert max_inclination(CanonicalDiagram.of((5, 1))) == 5
    assert max_inclination(CanonicalDiagram.of((3, 1), (INF, 2))) == INF
    with pytest.raises(ValueError):
        max_inclination(CanonicalDiagram())


def test_text_format_roundtrip():
    d = CanonicalDiagram.of((2, INF), (6, 1), (13, 2), (INF, 3))
    assert format_diagram(d) == "2,inf;6,1;13,2;inf,3"
    assert parse_diagram(format_diagram(d)) == d
    assert parse_diagram("13,2;6,1") == CanonicalDiagram.of((6, 1), (13, 2))
    assert parse_diagram("3,1;6,2") == CanonicalDiagram.of((9, 3))
    for bad in ("6", "6,0", "a,b", "6,1;"):
        with pytest.raises(ValueError):
            parse_diagram(bad)


def test_vertices_roundtrip(rng):
    for _ in range(100):
        p = random_poly(rng, vars=("u", "v"), max_deg=6, max_terms=6)
        if p.is_zero():
            continue
        poly, d = diagram_from_polynomial(p, ("u", "v"))
        assert tuple(vertices_of(d)) == poly.vertices
        assert diagram_from_vertices(vertices_of(d)) == d


def test_diagram_matches_support_function(rng):
    for _ in range(100):
        p = random_poly(rng, vars=("u", "v"), max_deg=6, max_terms=6)
        if p.is_zero():
            continue
        _, d = diagram_from_polynomial(p, ("u", "v"))
        pts = p.support("u", "v")
        for a, b in DIRECTIONS:
            assert support_function(pts, a, b) == diagram_support_function(d, a, b)


def random_sparse(rng, max_total=6):
    terms = []
    for _ in range(rng.randint(1, 5)):
        i = rng.randint(0, max_total)
        j = rng.randint(0, max_total - i)
        terms.append(({"u": i, "v": j}, rng.choice([-3, -2, -1, 1, 2, 3])))
    return Polynomial.from_terms(terms)


def test_minkowski_property(rng):
    done = 0
    while done < 50:
        f, g = random_sparse(rng), random_sparse(rng)
        if f.is_zero() or g.is_zero():
            continue
        _, df = diagram_from_polynomial(f)
        _, dg = diagram_from_polynomial(g)
        _, dfg = diagram_from_polynomial(f * g)
        assert dfg == minkowski_sum(df, dg)
        done += 1


@pytest.mark.parametrize("f", ["y^2-x^3", "y^2-x^5"])
@pytest.mark.parametrize("n", [2, 3, 5])
def test_stretch_lemma(f, n):
    base = P(f)
    _, d = diagram_from_polynomial(discriminant_surface(base))
    _, dn = diagram_from_polynomial(discriminant_surface(base.substitute_power("x", n)))
    assert dn == stretch(d, n)


def test_surface_diagram_starts_on_vertical_axis(rng):
    for _ in range(20):
        n = rng.randint(2, 4)
        f = Polynomial.monomial(1, y=n)
        for k in range(n):
            f = f + Polynomial.monomial(rng.randint(-3, 3), x=rng.randint(1, 4), y=k)
        poly, _ = diagram_from_polynomial(discriminant_surface(f))
        assert poly.vertices[0] == (0, n - 1)
