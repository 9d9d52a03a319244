import random

import pytest
from hypothesis import strategies as st

from branchcheck.exactpoly import Polynomial
from branchcheck.parser import parse_polynomial

ACCEPTANCE_LINES: list[str] = []


def P(src: str, vars: str = "xyuvt") -> Polynomial:
    return parse_polynomial(src, vars)


coefficients = st.one_of(
    st.integers(-5, 5),
    st.fractions(min_value=-3, max_value=3, max_denominator=4),
)


@st.composite
def polynomials(draw, vars=("x", "y"), max_deg=4, max_terms=6):
    n = draw(st.integers(0, max_terms))
    terms = []
    for _ in range(n):
        exps = {v: draw(st.integers(0, max_deg)) for v in vars}
        terms.append((exps, draw(coefficients)))
    return Polynomial.from_terms(terms)


def random_poly(rng: random.Random, vars=("x", "y"), max_deg=3, max_terms=4, coef=5) -> Polynomial:
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        exps = {v: rng.randint(0, max_deg) for v in vars}
        terms.append((exps, rng.randint(-coef, coef)))
    return Polynomial.from_terms(terms)


@pytest.fixture
def rng():
    return random.Random(20261018)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
