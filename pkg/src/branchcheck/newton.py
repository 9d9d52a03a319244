"""Newton diagrams, elementary diagrams and Newton polygons at zero and at infinity.

A Newton diagram is kept in canonical form: a list of elementary diagrams
``Teis{L}{M}`` (the diagram of ``x^L + y^M``) with strictly increasing
inclination ``L/M``.  ``INF`` stands for an infinite ``L`` or ``M``; by
convention ``L/INF = 0`` and ``INF/M = +inf``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

from .exactpoly import Polynomial

INF = math.inf

Extended = Union[int, float]  # a positive int or INF


class LatticePoint(NamedTuple):
    i: int
    j: int


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class LatticePolygon:
    """Vertex chain of a Newton polygon.

    ``at_zero`` chains run from the vertical axis side to the horizontal axis
    side with ``i`` strictly increasing, ``j`` strictly decreasing and
    inclinations strictly increasing.  ``at_infinity`` chains run along the
    part of the hull facing away from the origin, vertical-axis end first.
    """

    vertices: tuple[LatticePoint, ...]
    kind: str = "at_zero"

    def __post_init__(self):
        if self.kind not in ("at_zero", "at_infinity"):
            raise ValueError(f"unknown polygon kind {self.kind!r}")
        pts = tuple(LatticePoint(int(i), int(j)) for i, j in self.vertices)
        object.__setattr__(self, "vertices", pts)
        if not pts:
            raise ValueError("polygon needs at least one vertex")
        if any(p.i < 0 or p.j < 0 for p in pts):
            raise ValueError("vertices must be nonnegative")
        if self.kind == "at_zero":
            for a, b in zip(pts, pts[1:]):
                if not (a.i < b.i and a.j > b.j):
                    raise ValueError(f"not an at_zero chain: {a} -> {b}")
            for a, b, c in zip(pts, pts[1:], pts[2:]):
                if _cross(a, b, c) <= 0:
                    raise ValueError(f"chain is not strictly convex at {b}")

    def edges(self) -> list[tuple[LatticePoint, LatticePoint]]:
        return list(zip(self.vertices, self.vertices[1:]))

    def as_lists(self) -> list[list[int]]:
        return [[p.i, p.j] for p in self.vertices]


@dataclass(frozen=True)
class ElementaryDiagram:
    L: Extended
    M: Extended

    def __post_init__(self):
        for v in (self.L, self.M):
            if not (v == INF or (isinstance(v, int) and v > 0)):
                raise ValueError(f"L and M must be positive integers or INF, got {v!r}")
        if self.L == INF and self.M == INF:
            raise ValueError("L and M cannot both be infinite")

    @property
    def inclination(self) -> Fraction | float:
        if self.M == INF:
            return Fraction(0)
        if self.L == INF:
            return INF
        return Fraction(self.L, self.M)

    def __str__(self) -> str:
        return f"Teis{{{_fmt(self.L)}}}{{{_fmt(self.M)}}}"


def _fmt(v: Extended) -> str:
    return "inf" if v == INF else str(v)


@dataclass(frozen=True)
class CanonicalDiagram:
    pieces: tuple[ElementaryDiagram, ...] = ()

    def __post_init__(self):
        pieces = tuple(self.pieces)
        object.__setattr__(self, "pieces", pieces)
        for a, b in zip(pieces, pieces[1:]):
            if not a.inclination < b.inclination:
                raise ValueError("inclinations must strictly increase")

    @classmethod
    def of(cls, *pairs: tuple[Extended, Extended]) -> CanonicalDiagram:
        return cls(tuple(ElementaryDiagram(L, M) for L, M in pairs))

    @property
    def convenient(self) -> bool:
        """True when the diagram meets both coordinate axes."""
        return all(p.L != INF and p.M != INF for p in self.pieces)

    def __len__(self) -> int:
        return len(self.pieces)

    def __iter__(self):
        return iter(self.pieces)

    def pairs(self) -> list[tuple[Extended, Extended]]:
        return [(p.L, p.M) for p in self.pieces]

    def __str__(self) -> str:
        return " + ".join(map(str, self.pieces)) if self.pieces else "0"


# Diagrams at zero

def _newton_chain(points: Iterable[tuple[int, int]]) -> list[LatticePoint]:
    pts = sorted(set(points))
    if not pts:
        raise ValueError("empty support")
    jmin = min(j for _, j in pts)
    lower: list[tuple[int, int]] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    # the first point in sorted order is the leftmost-lowest; stop at the first
    # vertex reaching the minimal height
    chain = []
    for p in lower:
        chain.append(LatticePoint(*p))
        if p[1] == jmin:
            break
    return chain


def diagram_from_vertices(vertices: Sequence[tuple[int, int]]) -> CanonicalDiagram:
    """Canonical form of the diagram whose compact boundary has these vertices."""
    pts = [LatticePoint(*v) for v in vertices]
    pieces = []
    first, last = pts[0], pts[-1]
    if first.i > 0:
        pieces.append(ElementaryDiagram(first.i, INF))
    for a, b in zip(pts, pts[1:]):
        pieces.append(ElementaryDiagram(b.i - a.i, a.j - b.j))
    if last.j > 0:
        pieces.append(ElementaryDiagram(INF, last.j))
    return CanonicalDiagram(tuple(pieces))


def vertices_of(d: CanonicalDiagram) -> list[LatticePoint]:
    """Vertices of the compact boundary of ``d``; inverse of :func:`diagram_from_vertices`."""
    pieces = list(d.pieces)
    i0 = 0
    if pieces and pieces[0].M == INF:
        i0 = pieces.pop(0).L
    tail = 0
    if pieces and pieces[-1].L == INF:
        tail = pieces.pop().M
    j = tail + sum(p.M for p in pieces)
    i = i0
    out = [LatticePoint(i, j)]
    for p in pieces:
        i += p.L
        j -= p.M
        out.append(LatticePoint(i, j))
    return out


def diagram_from_polynomial(
    p: Polynomial, axis_vars: tuple[str, str] = ("u", "v")
) -> tuple[LatticePolygon, CanonicalDiagram]:
    """Newton polygon at zero and canonical diagram of ``p`` in the given coordinates."""
    if p.is_zero():
        raise ValueError("Newton diagram of the zero polynomial")
    chain = _newton_chain(p.support(*axis_vars))
    return LatticePolygon(tuple(chain), "at_zero"), diagram_from_vertices(chain)


def diagram_of_support(points: Iterable[tuple[int, int]]) -> tuple[LatticePolygon, CanonicalDiagram]:
    chain = _newton_chain(points)
    return LatticePolygon(tuple(chain), "at_zero"), diagram_from_vertices(chain)


def minkowski_sum(a: CanonicalDiagram, b: CanonicalDiagram) -> CanonicalDiagram:
    """Sum of diagrams: merge pieces by inclination, adding pieces of equal inclination."""
    merged: dict = {}
    for piece in (*a.pieces, *b.pieces):
        key = piece.inclination
        if key in merged:
            L, M = merged[key]
            merged[key] = (L + piece.L, M + piece.M)
        else:
            merged[key] = (piece.L, piece.M)
    return CanonicalDiagram(tuple(ElementaryDiagram(*merged[k]) for k in sorted(merged)))


def stretch(d: CanonicalDiagram, factor: int) -> CanonicalDiagram:
    """Image of ``d`` under ``(i, j) -> (factor * i, j)``."""
    return CanonicalDiagram(tuple(ElementaryDiagram(p.L * factor, p.M) for p in d.pieces))


def max_inclination(d: CanonicalDiagram) -> Fraction | float:
    if not d.pieces:
        raise ValueError("empty diagram has no inclination")
    return d.pieces[-1].inclination


# Polygons at infinity

def _hull_ccw(points: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list[tuple[int, int]] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[int, int]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def polygon_at_infinity_of_support(points: Iterable[tuple[int, int]]) -> LatticePolygon:
    hull = _hull_ccw(list(points) + [(0, 0)])
    top = max(hull, key=lambda q: (q[1], -q[0]))
    right = max(hull, key=lambda q: (q[0], -q[1]))
    k = hull.index(top)
    chain = [hull[k]]
    while hull[k] != right:
        k = (k - 1) % len(hull)
        chain.append(hull[k])
    return LatticePolygon(tuple(chain), "at_infinity")


def polygon_at_infinity(
    p: Polynomial, axis_vars: tuple[str, str] = ("x", "t")
) -> LatticePolygon:
    """Boundary of ``conv(supp p + {(0, 0)})`` facing away from the origin."""
    if p.is_zero():
        raise ValueError("Newton polygon of the zero polynomial")
    return polygon_at_infinity_of_support(p.support(*axis_vars))


def infinity_transform(point: tuple[int, int], n: int) -> LatticePoint:
    i, k = point
    return LatticePoint(n * (n - 1) - i - n * k, k)


def apply_infinity_transform(poly: LatticePolygon, n: int) -> LatticePolygon:
    """Map an at-infinity chain by ``(i, k) -> (n(n-1) - i - nk, k)``.

    Raises ``ValueError`` if the image is not a valid chain at zero.
    """
    if n < 1:
        raise ValueError("degree must be positive")
    image = []
    for v in poly.vertices:
        i, k = n * (n - 1) - v.i - n * v.j, v.j
        if i < 0:
            raise ValueError(f"vertex {tuple(v)} maps outside the quadrant")
        image.append((i, k))
    return LatticePolygon(tuple(image), "at_zero")


# Text form "L1,M1;L2,M2" with "inf"

def format_diagram(d: CanonicalDiagram) -> str:
    return ";".join(f"{_fmt(p.L)},{_fmt(p.M)}" for p in d.pieces)


def parse_diagram(text: str) -> CanonicalDiagram:
    """Read ``"L1,M1;L2,M2;..."``; pieces may come in any order and equal
    inclinations are combined."""

    def value(s: str) -> Extended:
        s = s.strip()
        if s.lower() in ("inf", "infinity", "∞"):
            return INF
        try:
            v = int(s)
        except ValueError:
            raise ValueError(f"bad diagram entry {s!r}") from None
        if v <= 0:
            raise ValueError(f"diagram entries must be positive, got {v}")
        return v

    text = text.strip()
    if not text:
        return CanonicalDiagram()
    result = CanonicalDiagram()
    for chunk in text.split(";"):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'L,M', got {chunk!r}")
        piece = CanonicalDiagram((ElementaryDiagram(value(parts[0]), value(parts[1])),))
        result = minkowski_sum(result, piece)
    return result
