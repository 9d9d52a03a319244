"""Semigroup generator sequences of branches and Merle type diagrams.

A sequence ``b_0, ..., b_h`` (``h >= 1``) of positive integers is a valid
generator sequence when, with ``n_k = gcd(b_0..b_{k-1}) / gcd(b_0..b_k)``,

* (Z1) every ``n_k > 1`` and ``n_1 * ... * n_h == b_0``;
* (Z2) ``n_k * b_k < b_{k+1}`` for ``k < h``.

Its Merle diagram is ``sum_k Teis{(n_k - 1) b_k}{(n_k - 1) n_1 ... n_{k-1}}``.
:func:`merle_test` decides whether a given diagram is of this form and, if so,
recovers the sequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod
from typing import Sequence

from .newton import CanonicalDiagram, ElementaryDiagram


@dataclass(frozen=True)
class Condition:
    name: str
    passed: bool
    detail: str = ""


def _ratios(b: Sequence[int]) -> list[Fraction]:
    out = []
    g = b[0]
    for bk in b[1:]:
        g_next = gcd(g, bk)
        out.append(Fraction(g, g_next))
        g = g_next
    return out


def validate_generators(b: Sequence[int]) -> tuple[bool, list[Condition]]:
    """Check conditions (Z1) and (Z2); returns ``(valid, per-condition report)``."""
    b = list(b)
    if len(b) < 2:
        raise ValueError("a generator sequence needs at least two entries")
    if any(not isinstance(v, int) or v <= 0 for v in b):
        raise ValueError("generators must be positive integers")
    n = _ratios(b)
    report = []
    bad = [k + 1 for k, nk in enumerate(n) if nk <= 1]
    report.append(Condition("Z1: n_k > 1", not bad, f"n={[int(v) for v in n]}" + (f", fails at k={bad[0]}" if bad else "")))
    product = prod(n)
    report.append(Condition("Z1: n_1...n_h = b_0", product == b[0], f"{product} vs {b[0]}"))
    z2 = [k for k in range(1, len(n)) if not n[k - 1] * b[k] < b[k + 1]]
    report.append(Condition("Z2: n_k b_k < b_{k+1}", not z2, f"fails at k={z2[0]}" if z2 else ""))
    return all(c.passed for c in report), report


@dataclass(frozen=True)
class GeneratorSequence:
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(self.b))
        ok, report = validate_generators(self.b)
        if not ok:
            failed = next(c for c in report if not c.passed)
            raise ValueError(f"invalid generator sequence {self.b}: {failed.name} ({failed.detail})")

    @property
    def h(self) -> int:
        return len(self.b) - 1

    @property
    def n(self) -> tuple[int, ...]:
        return tuple(int(v) for v in _ratios(self.b))

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.b)) + ">"


def merle_diagram(b: GeneratorSequence | Sequence[int]) -> CanonicalDiagram:
    if not isinstance(b, GeneratorSequence):
        b = GeneratorSequence(tuple(b))
    pieces = []
    running = 1
    for bk, nk in zip(b.b[1:], b.n):
        pieces.append(ElementaryDiagram((nk - 1) * bk, (nk - 1) * running))
        running *= nk
    return CanonicalDiagram(tuple(pieces))


@dataclass(frozen=True)
class MerleVerdict:
    is_merle: bool
    generators: GeneratorSequence | None = None
    reason: str = ""
    H: tuple[int, ...] = ()
    C: tuple[Fraction, ...] = ()
    conditions: tuple[Condition, ...] = field(default_factory=tuple)

    @property
    def outcome(self) -> str:
        return "merle" if self.is_merle else "not_merle"

    def summary(self) -> str:
        if self.is_merle:
            return "Merle type diagram M(" + ",".join(map(str, self.generators.b)) + ")"
        return f"not Merle: {self.reason}"


def _int_or_none(q: Fraction) -> int | None:
    return q.numerator if q.denominator == 1 else None


def merle_test(d: CanonicalDiagram) -> MerleVerdict:
    """Decide whether ``d`` is a Merle type diagram.

    Checks, in order: convenience, (i) ``H_i / H_{i-1}`` integral for
    ``i >= 2``, (ii) ``C_i`` integral, (iii) ``gcd(C_0..C_i) == C_0 / H_i``.
    The first failure is named in ``reason``; all values are kept.
    """
    pieces = d.pieces
    if not pieces:
        return MerleVerdict(False, reason="empty diagram")
    if not d.convenient:
        return MerleVerdict(False, reason="diagram is not convenient",
                            conditions=(Condition("convenient", False),))
    h = len(pieces)
    H = [1]
    for p in pieces:
        H.append(H[-1] + p.M)
    C = [Fraction(H[h])] + [Fraction(H[i - 1] * p.L, p.M) for i, p in enumerate(pieces, 1)]
    conditions = [Condition("convenient", True)]
    trace = dict(H=tuple(H), C=tuple(C))

    def fail(reason: str) -> MerleVerdict:
        return MerleVerdict(False, reason=reason, conditions=tuple(conditions), **trace)

    for i in range(2, h + 1):
        if H[i] % H[i - 1]:
            conditions.append(Condition(f"(i) i={i}", False, f"H_{i}/H_{i - 1} = {H[i]}/{H[i - 1]}"))
            return fail(f"condition (i) fails at i={i} (H_{i}/H_{i - 1} = {H[i]}/{H[i - 1]} is not an integer)")
        conditions.append(Condition(f"(i) i={i}", True, f"H_{i}/H_{i - 1} = {H[i] // H[i - 1]}"))
    for i in range(1, h + 1):
        if _int_or_none(C[i]) is None:
            conditions.append(Condition(f"(ii) i={i}", False, f"C_{i} = {C[i]}"))
            return fail(f"condition (ii) fails at i={i} (C_{i} = {C[i]} is not an integer)")
        conditions.append(Condition(f"(ii) i={i}", True, f"C_{i} = {C[i]}"))
    Cint = [int(c) for c in C]
    g = Cint[0]
    for i in range(1, h + 1):
        g = gcd(g, Cint[i])
        expected = Fraction(Cint[0], H[i])
        if g != expected:
            conditions.append(Condition(f"(iii) i={i}", False, f"gcd={g}, expected {expected}"))
            return fail(f"condition (iii) fails at i={i} (gcd={g}, expected {expected})")
        conditions.append(Condition(f"(iii) i={i}", True, f"gcd={g}"))
    return MerleVerdict(True, generators=GeneratorSequence(tuple(Cint)),
                        conditions=tuple(conditions), **trace)
