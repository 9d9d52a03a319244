"""Sylvester resultants and discriminants with polynomial coefficients.

Determinants are computed by fraction-free Bareiss elimination, with a
Laplace (cofactor) expansion used for small matrices and kept available as an
independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactpoly import Polynomial

_ZERO = Polynomial()
_ONE = Polynomial.constant(1)


@dataclass(frozen=True)
class PolyMatrix:
    entries: tuple[tuple[Polynomial, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if n < 1 or any(len(row) != n for row in self.entries):
            raise ValueError("matrix must be square with dimension >= 1")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> PolyMatrix:
        def lift(e):
            return e if isinstance(e, Polynomial) else Polynomial.constant(e)

        return cls(tuple(tuple(lift(e) for e in row) for row in rows))

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> Polynomial:
        i, j = ij
        return self.entries[i][j]


def _coefficient_list(a: Polynomial, var: str) -> list[Polynomial]:
    """Coefficients of ``a`` in ``var`` from the leading one down to the constant."""
    parts = a.coefficients_in(var)
    deg = max(parts)
    return [parts.get(k, _ZERO) for k in range(deg, -1, -1)]


def sylvester_matrix(a: Polynomial, b: Polynomial, var: str) -> PolyMatrix:
    """Sylvester matrix of ``a`` and ``b`` regarded as polynomials in ``var``.

    The first ``deg b`` rows hold shifted coefficients of ``a``, the remaining
    ``deg a`` rows those of ``b``.
    """
    if a.is_zero() or b.is_zero():
        raise ValueError("Sylvester matrix of a zero polynomial")
    m, k = a.degree_in(var), b.degree_in(var)
    if m == 0 and k == 0:
        raise ValueError(f"both polynomials have degree 0 in {var}")
    size = m + k
    ca, cb = _coefficient_list(a, var), _coefficient_list(b, var)
    rows = []
    for shift in range(k):
        rows.append([_ZERO] * shift + ca + [_ZERO] * (size - shift - m - 1))
    for shift in range(m):
        rows.append([_ZERO] * shift + cb + [_ZERO] * (size - shift - k - 1))
    return PolyMatrix(tuple(tuple(r) for r in rows))


def cofactor_determinant(m: PolyMatrix) -> Polynomial:
    """Determinant by Laplace expansion along the first row (memoised on column sets)."""
    n = m.dimension
    rows = m.entries
    memo: dict[tuple[int, tuple[int, ...]], Polynomial] = {}

    def minor(r: int, cols: tuple[int, ...]) -> Polynomial:
        if r == n:
            return _ONE
        key = (r, cols)
        if key in memo:
            return memo[key]
        total = _ZERO
        for pos, c in enumerate(cols):
            e = rows[r][c]
            if e.is_zero():
                continue
            sub = minor(r + 1, cols[:pos] + cols[pos + 1:])
            term = e * sub
            total = total - term if pos % 2 else total + term
        memo[key] = total
        return total

    return minor(0, tuple(range(n)))


def bareiss_determinant(m: PolyMatrix) -> Polynomial:
    """Fraction-free Gaussian elimination with row pivoting on zero pivots."""
    n = m.dimension
    a = [list(row) for row in m.entries]
    sign = 1
    prev = _ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return _ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                if lead.is_zero():
                    num = pivot * row_i[j]
                elif row_k[j].is_zero():
                    num = pivot * row_i[j]
                else:
                    num = pivot * row_i[j] - lead * row_k[j]
                row_i[j] = num if prev is _ONE else num.exact_div(prev)
            row_i[k] = _ZERO
        prev = pivot
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def determinant(m: PolyMatrix) -> Polynomial:
    if m.dimension <= 4:
        return cofactor_determinant(m)
    return bareiss_determinant(m)


def resultant_in(a: Polynomial, b: Polynomial, var: str) -> Polynomial:
    """Resultant of ``a`` and ``b`` with respect to ``var``.

    A factor of degree 0 in ``var`` is handled by the usual convention
    ``Res(a, c) = c**deg(a)``.
    """
    if a.is_zero() or b.is_zero():
        raise ValueError("resultant with a zero polynomial")
    m, k = a.degree_in(var), b.degree_in(var)
    if m == 0 and k == 0:
        return _ONE
    if k == 0:
        return b ** m
    if m == 0:
        return a ** k
    return determinant(sylvester_matrix(a, b, var))


def discriminant_in(a: Polynomial, var: str) -> Polynomial:
    """``(-1)**(N(N-1)/2) * Res(a, da/dvar) / lc`` for ``a`` of degree ``N`` in ``var``.

    The leading coefficient must be a nonzero constant.
    """
    if a.is_zero():
        raise ValueError("discriminant of the zero polynomial")
    n = a.degree_in(var)
    if n < 1:
        raise ValueError(f"discriminant needs positive degree in {var}")
    lc = a.leading_coefficient_in(var)
    if not lc.is_constant():
        raise ValueError(f"leading coefficient in {var} is not constant: {lc}")
    if n == 1:
        return _ONE
    res = resultant_in(a, a.partial_derivative(var), var)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return res.scale(Fraction(sign) / lc.constant_term())


def discriminant_surface(f: Polynomial) -> Polynomial:
    """``Discr_y(f(u, y) - v)`` for ``f`` in ``x, y``; the result lives in ``u, v``."""
    _require_vars(f, {"x", "y"})
    g = f.rename({"x": "u"}) - Polynomial.variable("v")
    return discriminant_in(g, "y")


def discriminant_fiber(p: Polynomial) -> Polynomial:
    """``Discr_y(p(x, y) - t)``; the result lives in ``x, t``."""
    _require_vars(p, {"x", "y"})
    return discriminant_in(p - Polynomial.variable("t"), "y")


def _require_vars(f: Polynomial, allowed: set[str]) -> None:
    extra = set(f.variables()) - allowed
    if extra:
        raise ValueError(f"expected a polynomial in {sorted(allowed)}, got {sorted(extra)} too")
