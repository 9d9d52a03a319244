import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from branchcheck.exactpoly import Polynomial
from branchcheck.parser import ParseError, parse_polynomial

from conftest import polynomials


def test_worked_example_polynomials():
    f = parse_polynomial("(y^2-x^3)^2-x^5*y")
    expected = Polynomial.from_terms([
        ({"y": 4}, 1), ({"x": 3, "y": 2}, -2), ({"x": 6}, 1), ({"x": 5, "y": 1}, -1),
    ])
    assert f == expected
    p = parse_polynomial("x + (x+y^3)^3")
    assert p.coefficient(y=9) == 1 and p.coefficient(x=1) == 1 and p.coefficient(x=3) == 1


def test_zero_and_rationals():
    assert parse_polynomial("0").is_zero()
    assert parse_polynomial("1/2*y^2") == Polynomial.monomial(Fraction(1, 2), y=2)
    assert parse_polynomial("(x+y)/2") == parse_polynomial("1/2*x + 1/2*y")
    assert parse_polynomial("-x^2") == -parse_polynomial("x^2")
    assert parse_polynomial("--x") == parse_polynomial("x")


@pytest.mark.parametrize(
    "src, fragment",
    [
        ("y^-2", "exponent"),
        ("y^x", "exponent"),
        ("(x+y", "unbalanced"),
        ("x+y)", "unbalanced"),
        ("z^2", "unknown variable"),
        ("xy", "unknown variable"),
        ("x/y", "divisor"),
        ("x/0", "division by zero"),
        ("x +", "end of input"),
        ("2 x", "unexpected"),
        ("   ", "empty"),
    ],
)
def test_errors(src, fragment):
    with pytest.raises(ParseError) as info:
        parse_polynomial(src)
    assert fragment in info.value.message
    assert 0 <= info.value.position < max(len(src), 1)


def test_allowed_vars_restrict():
    assert parse_polynomial("u*v", {"u", "v"}) == parse_polynomial("v*u", "uv")
    with pytest.raises(ParseError):
        parse_polynomial("x", {"u", "v"})


@settings(max_examples=200, deadline=None)
@given(polynomials(vars=("x", "y", "t")))
def test_print_parse_roundtrip(p):
    text = str(p)
    assert parse_polynomial(text, "xyt") == p
    assert str(parse_polynomial(text, "xyt")) == text


@settings(max_examples=50, deadline=None)
@given(polynomials())
def test_whitespace_insensitive(p):
    text = str(p).replace(" ", "")
    rng = random.Random(len(text))
    # whitespace inside a number literal would split it, so keep digits together
    tokens = []
    for ch in text:
        if tokens and ch.isdigit() and tokens[-1][-1].isdigit():
            tokens[-1] += ch
        else:
            tokens.append(ch)
    spaced = "".join(tok + " " * rng.randint(0, 3) for tok in tokens)
    assert parse_polynomial(spaced) == parse_polynomial(text) == p
