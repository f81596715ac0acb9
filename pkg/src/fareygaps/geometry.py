"""Exact geometry of the index regions inside the Farey triangle.

The Farey triangle is T = {0 < x, y <= 1, x + y > 1}.  Normalized pairs
of consecutive Farey denominators (q/Q, q'/Q) land in T, and the
transfer map

    step(x, y) = (y, k*y - x),   k = floor((1 + x) / y)

reproduces the next-denominator recurrence.  The region of all points
whose first r transfer indices are k_1, ..., k_r is a convex polygon (or
empty); this module builds its closure exactly, with Fraction
coordinates, by clipping the closed base triangle with two half-planes
per index:

    y * P_i - x * Q_i <= 1
    y * (P_i + P_{i-1}) - x * (Q_i + Q_{i-1}) >= 1

where P_i = K(k_1..k_i) and Q_i = K(k_2..k_i) are continuants of the
prefix with and without its first entry (P_0 = Q_1 = 1, Q_0 = 0).  Open
boundary pieces are deliberately dropped: every downstream quantity is
an area, and the closure differs from the true region only by edges.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Tuple

from .tuples import TupleSpec, as_indices


def _q(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True)
class Point2Q:
    """An exact rational point."""

    x: Fraction
    y: Fraction

    def __init__(self, x, y):
        object.__setattr__(self, "x", _q(x))
        object.__setattr__(self, "y", _q(y))

    def in_triangle(self) -> bool:
        """Membership in T = {0 < x, y <= 1, x + y > 1}."""
        return 0 < self.x <= 1 and 0 < self.y <= 1 and self.x + self.y > 1

    def as_pair(self) -> tuple[Fraction, Fraction]:
        return (self.x, self.y)

    def as_json(self) -> list[str]:
        return [str(self.x), str(self.y)]

    def __iter__(self):
        return iter((self.x, self.y))


@dataclass(frozen=True)
class HalfPlane:
    """The half-plane a*x + b*y <= c (or < c when strict)."""

    a: Fraction
    b: Fraction
    c: Fraction
    strict: bool = False

    def __init__(self, a, b, c, strict: bool = False):
        a, b, c = _q(a), _q(b), _q(c)
        if a == 0 and b == 0:
            raise ValueError("degenerate half-plane: a = b = 0")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "strict", strict)

    def evaluate(self, p: Point2Q) -> Fraction:
        return self.a * p.x + self.b * p.y - self.c

    def contains(self, p: Point2Q) -> bool:
        v = self.evaluate(p)
        return v < 0 if self.strict else v <= 0


def _signed_area2(pts: Sequence[tuple[Fraction, Fraction]]) -> Fraction:
    """Twice the signed area (shoelace sum of 2x2 determinants)."""
    s = Fraction(0)
    n = len(pts)
    for i in range(n):
        x1, y1 = pts[i]
        x2, y2 = pts[(i + 1) % n]
        s += x1 * y2 - x2 * y1
    return s


def _dedupe_collinear(pts: list[tuple[Fraction, Fraction]]) -> list[tuple[Fraction, Fraction]]:
    out = []
    for p in pts:
        if p not in out:
            out.append(p)
    changed = True
    while changed and len(out) >= 3:
        changed = False
        for i in range(len(out)):
            a, b, c = out[i - 1], out[i], out[(i + 1) % len(out)]
            cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
            if cross == 0:
                out.pop(i)
                changed = True
                break
    return out


class ConvexRegion:
    """Closure of a convex region, canonically ordered.

    Vertices run counter-clockwise starting from the lexicographically
    smallest vertex, with duplicates and collinear points removed.  A
    region whose closure has zero area is flagged empty (lower-dimensional
    leftovers from clipping count as empty).
    """

    __slots__ = ("vertices", "empty", "_area")

    def __init__(self, vertices: Sequence[Point2Q] | Sequence[tuple], *, _trusted=False):
        pts = [(p.x, p.y) if isinstance(p, Point2Q) else (_q(p[0]), _q(p[1]))
               for p in vertices]
        if not _trusted:
            pts = _dedupe_collinear(pts)
            if len(pts) >= 3:
                if _signed_area2(pts) < 0:
                    pts.reverse()
                start = pts.index(min(pts))
                pts = pts[start:] + pts[:start]
        area2 = _signed_area2(pts) if len(pts) >= 3 else Fraction(0)
        self.vertices: Tuple[Point2Q, ...] = tuple(Point2Q(x, y) for x, y in pts)
        self._area = area2 / 2
        self.empty = self._area == 0

    @property
    def area(self) -> Fraction:
        return self._area

    def clip(self, hp: HalfPlane) -> "ConvexRegion":
        """Intersect with a (closed) half-plane."""
        pts = [(p.x, p.y) for p in self.vertices]
        if not pts:
            return self
        out: list[tuple[Fraction, Fraction]] = []
        n = len(pts)
        for i in range(n):
            p, q = pts[i], pts[(i + 1) % n]
            fp = hp.a * p[0] + hp.b * p[1] - hp.c
            fq = hp.a * q[0] + hp.b * q[1] - hp.c
            if fp <= 0:
                out.append(p)
            if (fp < 0 < fq) or (fq < 0 < fp):
                t = fp / (fp - fq)
                out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
        return ConvexRegion(out)

    def contains(self, p: Point2Q) -> bool:
        pts = [(v.x, v.y) for v in self.vertices]
        n = len(pts)
        if n < 3:
            return False
        for i in range(n):
            a, b = pts[i], pts[(i + 1) % n]
            cross = (b[0] - a[0]) * (p.y - a[1]) - (b[1] - a[1]) * (p.x - a[0])
            if cross < 0:
                return False
        return True

    def validate(self) -> None:
        """Assert canonical form: CCW convex, no duplicate/collinear vertices."""
        pts = [(v.x, v.y) for v in self.vertices]
        n = len(pts)
        if n == 0:
            return
        if len(set(pts)) != n:
            raise AssertionError("duplicate vertices")
        if n >= 3:
            for i in range(n):
                a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
                cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
                if cross <= 0:
                    raise AssertionError(f"not strictly convex CCW at vertex {i}")
            if pts[0] != min(pts):
                raise AssertionError("does not start at the lexicographically smallest vertex")

    def to_json(self, t=None) -> dict:
        doc = {
            "vertices": [v.as_json() for v in self.vertices],
            "area": str(self._area),
            "empty": self.empty,
        }
        if t is not None:
            doc = {"tuple": str(t if isinstance(t, TupleSpec) else TupleSpec.from_indices(t)),
                   **doc}
        return doc

    def to_svg(self, size: int = 480) -> str:
        """A static picture: the base triangle with this region filled.

        (x, y) in (0,1]^2 maps onto an SVG viewBox with y pointing up.
        """
        def sx(v: Fraction) -> float:
            return float(v) * size

        def sy(v: Fraction) -> float:
            return (1 - float(v)) * size

        tri = " ".join(f"{sx(x):.3f},{sy(y):.3f}" for x, y in
                       [(Fraction(0), Fraction(1)), (Fraction(1), Fraction(0)),
                        (Fraction(1), Fraction(1))])
        parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {size} {size}" '
            f'width="{size}" height="{size}">',
            f'<rect width="{size}" height="{size}" fill="white"/>',
            f'<polygon points="{tri}" fill="none" stroke="#888" stroke-width="1"/>',
        ]
        if self.vertices and not self.empty:
            poly = " ".join(f"{sx(v.x):.3f},{sy(v.y):.3f}" for v in self.vertices)
            parts.append(f'<polygon points="{poly}" fill="#9ecae1" '
                         f'fill-opacity="0.8" stroke="#3182bd" stroke-width="1.2"/>')
        parts.append("</svg>")
        return "\n".join(parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, ConvexRegion) and self.vertices == other.vertices

    def __repr__(self) -> str:
        if self.empty:
            return "ConvexRegion(empty)"
        vs = ", ".join(f"({v.x},{v.y})" for v in self.vertices)
        return f"ConvexRegion[{vs}]"


#: Closure of the Farey triangle itself.
FAREY_TRIANGLE = ConvexRegion([(0, 1), (1, 0), (1, 1)])


# ---------------------------------------------------------------------------
# transfer map
# ---------------------------------------------------------------------------

def bcz_index(p: Point2Q) -> int:
    """First transfer index k = floor((1 + x) / y) at a point of T."""
    if not p.in_triangle():
        raise ValueError(f"point ({p.x}, {p.y}) lies outside the open Farey triangle")
    return int((1 + p.x) // p.y)


def bcz_map(p: Point2Q) -> Point2Q:
    """One transfer step (y, k*y - x); the image lies in T again."""
    k = bcz_index(p)
    return Point2Q(p.y, k * p.y - p.x)


# ---------------------------------------------------------------------------
# index regions
# ---------------------------------------------------------------------------

def region_halfplanes(t) -> list[HalfPlane]:
    """The 2r constraints carving the index region out of the base triangle."""
    ks = as_indices(t)
    r = len(ks)
    ps = [0, 1]  # P_{-1}, P_0
    p_prev, p = 0, 1
    for k in ks:
        p_prev, p = p, k * p - p_prev
        ps.append(p)
    qs = [0, 1]  # Q_0, Q_1 (continuants of k_2..k_i)
    for i in range(2, r + 1):
        qs.append(ks[i - 1] * qs[i - 1] - qs[i - 2])
    out = []
    for i in range(1, r + 1):
        pi, pim1 = ps[i + 1], ps[i]
        qi, qim1 = qs[i], qs[i - 1]
        out.append(HalfPlane(-qi, pi, 1))
        out.append(HalfPlane(qi + qim1, -(pi + pim1), -1, strict=True))
    return out


def region(t) -> ConvexRegion:
    """Exact closure of the region with transfer indices k_1, ..., k_r."""
    ks = as_indices(t)
    if len(ks) < 1 or any(k < 1 for k in ks):
        raise ValueError("region needs a non-empty tuple of indices >= 1")
    reg = FAREY_TRIANGLE
    for hp in region_halfplanes(ks):
        reg = reg.clip(hp)  # clipping is on closures; strictness is metadata
        if not reg.vertices:
            break
    return reg


@lru_cache(maxsize=200000)
def _area_of(ks: tuple[int, ...]) -> Fraction:
    return region(ks).area


def area(obj) -> Fraction:
    """Area of a ConvexRegion, or of the region of a tuple (cached)."""
    if isinstance(obj, ConvexRegion):
        return obj.area
    return _area_of(as_indices(obj))


def is_empty(t) -> bool:
    return area(t) == 0


def single_slice_area(k: int) -> Fraction:
    """Area of the region whose first transfer index is k.

    1/6 for k = 1 and 4/(k(k+1)(k+2)) for k >= 2; these tile the base
    triangle (total 1/2).
    """
    if k < 1:
        raise ValueError("index must be >= 1")
    return Fraction(1, 6) if k == 1 else Fraction(4, k * (k + 1) * (k + 2))


def reverse_map_check(t) -> tuple[Fraction, Fraction]:
    """Areas of the region of (k_1..k_r) and of (k_r..k_1), computed
    independently; callers assert they agree."""
    ks = as_indices(t)
    return area(ks), area(ks[::-1])


def region_to_json_str(t, reg: ConvexRegion | None = None) -> str:
    if reg is None:
        reg = region(t)
    return json.dumps(reg.to_json(t), indent=2)
