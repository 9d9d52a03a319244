"""Sparse multivariate polynomials with exact rational coefficients.

Variables come from the fixed ordered set ``x, y, u, v, t``.  A monomial is
stored as a single packed integer: each variable owns a 16-bit field (15 bits
of exponent plus a guard bit), with ``x`` in the most significant field.
Comparing packed keys as integers is therefore lexicographic order with
``x > y > u > v > t``, and multiplying monomials is integer addition.

Coefficients are Python ``int`` when integral and ``fractions.Fraction``
otherwise, so every stored value is in lowest terms with a positive
denominator.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import comb, gcd, lcm
from typing import Iterable, Iterator, Mapping, Union

VARIABLES = ("x", "y", "u", "v", "t")

_WIDTH = 16
_MAX_EXP = (1 << (_WIDTH - 1)) - 1
_FIELD = (1 << _WIDTH) - 1
_SHIFT = {var: _WIDTH * (len(VARIABLES) - 1 - k) for k, var in enumerate(VARIABLES)}
_GUARD = sum(1 << (_WIDTH - 1 + s) for s in _SHIFT.values())

Rational = Union[int, Fraction]


def _check_var(var: str) -> int:
    try:
        return _SHIFT[var]
    except KeyError:
        raise ValueError(f"unknown variable {var!r}; expected one of {VARIABLES}") from None


def _coef(c) -> Rational:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"coefficient must be int or Fraction, not {type(c).__name__}")


def _div(a: Rational, b: Rational) -> Rational:
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        if r == 0:
            return q
    return _coef(Fraction(a) / b)


def pack(exponents: Mapping[str, int]) -> int:
    """Pack a ``{var: exponent}`` mapping into a monomial key."""
    key = 0
    for var, e in exponents.items():
        shift = _check_var(var)
        if e < 0 or e > _MAX_EXP:
            raise ValueError(f"exponent {e} of {var} out of range")
        key += e << shift
    return key


def unpack(key: int) -> dict[str, int]:
    """Inverse of :func:`pack`; zero exponents are omitted."""
    out = {}
    for var in VARIABLES:
        e = (key >> _SHIFT[var]) & _FIELD
        if e:
            out[var] = e
    return out


def _exp(key: int, shift: int) -> int:
    return (key >> shift) & _FIELD


def _total(key: int) -> int:
    return sum((key >> s) & _FIELD for s in _SHIFT.values())


def _divides(small: int, big: int) -> bool:
    return ((big | _GUARD) - small) & _GUARD == _GUARD


class Polynomial:
    """Immutable sparse polynomial over the rationals."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Rational] | None = None):
        clean = {}
        if terms:
            for key, c in terms.items():
                if key & _GUARD or key < 0:
                    raise OverflowError("exponent out of range")
                c = _coef(c)
                if c:
                    clean[key] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, Rational]) -> Polynomial:
        # terms must already be clean
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # construction

    @classmethod
    def constant(cls, c: Rational) -> Polynomial:
        return cls({0: c})

    @classmethod
    def variable(cls, var: str) -> Polynomial:
        return cls({1 << _check_var(var): 1})

    @classmethod
    def monomial(cls, coef: Rational = 1, **exponents: int) -> Polynomial:
        return cls({pack(exponents): coef})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Mapping[str, int], Rational]]) -> Polynomial:
        acc: dict[int, Rational] = {}
        for exps, c in terms:
            key = pack(exps)
            acc[key] = acc.get(key, 0) + _coef(c)
        return cls(acc)

    # inspection

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def constant_term(self) -> Rational:
        return self._terms.get(0, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def items(self) -> Iterator[tuple[int, Rational]]:
        """Packed ``(key, coefficient)`` pairs in no particular order."""
        return iter(self._terms.items())

    def terms(self) -> list[tuple[dict[str, int], Rational]]:
        """``(exponents, coefficient)`` pairs in graded-lex order, highest first."""
        return [(unpack(k), self._terms[k]) for k in self._ordered_keys()]

    def _ordered_keys(self) -> list[int]:
        return sorted(self._terms, key=lambda k: (_total(k), k), reverse=True)

    def coefficient(self, **exponents: int) -> Rational:
        return self._terms.get(pack(exponents), 0)

    def variables(self) -> tuple[str, ...]:
        present = 0
        for k in self._terms:
            present |= k
        return tuple(v for v in VARIABLES if (present >> _SHIFT[v]) & _FIELD)

    def degree_in(self, var: str) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        s = _check_var(var)
        return max(_exp(k, s) for k in self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return max(_total(k) for k in self._terms)

    def ord_at_origin(self) -> int:
        if not self._terms:
            raise ValueError("order of the zero polynomial")
        return min(_total(k) for k in self._terms)

    def support(self, first: str, second: str) -> list[tuple[int, int]]:
        """Exponent pairs ``(i, j)`` of ``first`` and ``second`` over all terms."""
        s1, s2 = _check_var(first), _check_var(second)
        other = set(self.variables()) - {first, second}
        if other:
            raise ValueError(f"polynomial involves {sorted(other)} besides {first}, {second}")
        return sorted({(_exp(k, s1), _exp(k, s2)) for k in self._terms})

    def coefficients_in(self, var: str) -> dict[int, Polynomial]:
        """Split as ``sum(c_k * var**k)``; returns ``{k: c_k}`` with nonzero ``c_k``."""
        s = _check_var(var)
        out: dict[int, dict[int, Rational]] = {}
        for k, c in self._terms.items():
            e = _exp(k, s)
            out.setdefault(e, {})[k - (e << s)] = c
        return {e: Polynomial._raw(t) for e, t in out.items()}

    def leading_coefficient_in(self, var: str) -> Polynomial:
        parts = self.coefficients_in(var)
        return parts[max(parts)]

    # arithmetic

    def _lift(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other) -> Polynomial:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for k, c in other._terms.items():
            s = acc.get(k, 0) + c
            if s:
                acc[k] = _coef(s) if type(s) is Fraction else s
            else:
                acc.pop(k, None)
        return Polynomial._raw(acc)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> Polynomial:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        acc: dict[int, Rational] = {}
        get = acc.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                acc[k] = get(k, 0) + ca * cb
        out = {}
        for k, c in acc.items():
            if c:
                if k & _GUARD:
                    raise OverflowError("exponent out of range")
                out[k] = _coef(c) if type(c) is Fraction else c
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c: Rational) -> Polynomial:
        c = _coef(c)
        if not c:
            return Polynomial()
        return Polynomial._raw({k: _coef(v * c) for k, v in self._terms.items()})

    def exact_div(self, other: Polynomial) -> Polynomial:
        """Quotient ``self / other``; raises ``ValueError`` unless it is exact."""
        if not other._terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if len(other._terms) == 1:
            (kb, cb), = other._terms.items()
            out = {}
            for k, c in self._terms.items():
                if not _divides(kb, k):
                    raise ValueError("division is not exact")
                out[k - kb] = _div(c, cb)
            return Polynomial._raw(out)
        lead = max(other._terms)
        lc = other._terms[lead]
        tail = [(k, c) for k, c in other._terms.items() if k != lead]
        rem = dict(self._terms)
        heap = [-k for k in rem]
        heapq.heapify(heap)
        quot = {}
        while heap:
            k = -heapq.heappop(heap)
            c = rem.pop(k, 0)
            if not c:
                continue
            if not _divides(lead, k):
                raise ValueError("division is not exact")
            d = k - lead
            q = _div(c, lc)
            quot[d] = q
            for kt, ct in tail:
                m = d + kt
                if m in rem:
                    rem[m] -= q * ct
                else:
                    rem[m] = -q * ct
                    heapq.heappush(heap, -m)
        return Polynomial._raw(quot)

    # calculus and substitutions

    def partial_derivative(self, var: str) -> Polynomial:
        s = _check_var(var)
        one = 1 << s
        out = {}
        for k, c in self._terms.items():
            e = _exp(k, s)
            if e:
                out[k - one] = c * e
        return Polynomial._raw(out)

    def substitute_shift(self, var: str, c: Rational) -> Polynomial:
        """Replace ``var`` by ``var + c`` and expand."""
        c = _coef(c)
        if not c:
            return self
        s = _check_var(var)
        acc: dict[int, Rational] = {}
        for k, a in self._terms.items():
            e = _exp(k, s)
            base = k - (e << s)
            for j in range(e + 1):
                m = base + (j << s)
                acc[m] = acc.get(m, 0) + a * comb(e, j) * c ** (e - j)
        return Polynomial(acc)

    def substitute_power(self, var: str, n: int) -> Polynomial:
        """Replace ``var`` by ``var**n``."""
        if n < 1:
            raise ValueError("power must be a positive integer")
        s = _check_var(var)
        out = {}
        for k, c in self._terms.items():
            e = _exp(k, s)
            if e * n > _MAX_EXP:
                raise OverflowError("exponent out of range")
            out[k + ((e * n - e) << s)] = c
        return Polynomial._raw(out)

    def evaluate_at_zero(self, var: str) -> Polynomial:
        s = _check_var(var)
        return Polynomial._raw({k: c for k, c in self._terms.items() if not _exp(k, s)})

    def rename(self, mapping: Mapping[str, str]) -> Polynomial:
        """Relabel variables, e.g. ``{"x": "u"}``; targets must not collide."""
        moves = [(_check_var(a), _check_var(b)) for a, b in mapping.items()]
        out: dict[int, Rational] = {}
        for k, c in self._terms.items():
            new = k
            for sa, _ in moves:
                new -= _exp(k, sa) << sa
            for sa, sb in moves:
                new += _exp(k, sa) << sb
            if new & _GUARD:
                raise OverflowError("exponent out of range")
            out[new] = out.get(new, 0) + c
        return Polynomial(out)

    def leading_form(self, mode: str = "lowest") -> Polynomial:
        """Homogeneous part of lowest or highest total degree."""
        if not self._terms:
            raise ValueError("leading form of the zero polynomial")
        if mode == "lowest":
            d = self.ord_at_origin()
        elif mode == "highest":
            d = self.total_degree()
        else:
            raise ValueError(f"mode must be 'lowest' or 'highest', not {mode!r}")
        return Polynomial._raw({k: c for k, c in self._terms.items() if _total(k) == d})

    def content(self) -> Fraction:
        """Positive rational ``c`` such that ``self / c`` has coprime integer coefficients."""
        if not self._terms:
            return Fraction(0)
        num = den = 0
        for c in self._terms.values():
            c = Fraction(c)
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator) if den else c.denominator
        return Fraction(num, den)

    # comparison and printing

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k in self._ordered_keys():
            c = self._terms[k]
            mono = "*".join(
                var if e == 1 else f"{var}^{e}"
                for var, e in unpack(k).items()
            )
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


# Function forms used by the rest of the package.

def add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def partial_derivative(a: Polynomial, var: str) -> Polynomial:
    return a.partial_derivative(var)


def substitute_shift(a: Polynomial, var: str, c: Rational) -> Polynomial:
    return a.substitute_shift(var, c)


def substitute_power(a: Polynomial, var: str, n: int) -> Polynomial:
    return a.substitute_power(var, n)


def evaluate_at_zero(a: Polynomial, var: str) -> Polynomial:
    return a.evaluate_at_zero(var)


def leading_form(a: Polynomial, mode: str) -> Polynomial:
    return a.leading_form(mode)


def degree_in(a: Polynomial, var: str) -> int:
    return a.degree_in(var)


def ord_at_origin(a: Polynomial) -> int:
    return a.ord_at_origin()


X, Y, U, V, T = (Polynomial.variable(v) for v in VARIABLES)
