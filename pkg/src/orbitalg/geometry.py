"""Exact planar geometry for the line-arrangement counterexample.

An arrangement is a list of triples ``(x, y, z)``; each one contributes the
open half-plane ``a*x + b*y + z > 0`` in the ``(a, b)`` plane.  The
region ``K`` is their intersection.  Polygons inscribed in the unit circle
are built from the rational parametrization of the circle, so every vertex
lies on it exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "LineArrangement", "circle_point", "default_ngon_parameters",
    "ngon_instance", "region_escapes_disk", "clip_region",
]

Point = tuple


@dataclass(frozen=True)
class LineArrangement:
    lines: tuple

    def __init__(self, lines: Iterable[Sequence]):
        object.__setattr__(self, "lines", tuple(tuple(Fraction(c) for c in t) for t in lines))
        for t in self.lines:
            if len(t) != 3:
                raise ValueError(f"line {t} must be a triple (x, y, z)")

    def __len__(self):
        return len(self.lines)

    def drop(self, j: int) -> "LineArrangement":
        return LineArrangement(self.lines[:j] + self.lines[j + 1:])

    def offsets_positive(self) -> bool:
        return all(z > 0 for _, _, z in self.lines)

    def contains(self, a, b) -> bool:
        return all(a * x + b * y + z > 0 for x, y, z in self.lines)


def circle_point(t) -> Point:
    """``t -> ((1-t^2)/(1+t^2), 2t/(1+t^2))``; ``None`` stands for ``t = ∞``, i.e. ``(-1, 0)``."""
    if t is None:
        return (Fraction(-1), Fraction(0))
    t = Fraction(t)
    d = 1 + t * t
    return ((1 - t * t) / d, 2 * t / d)


def default_ngon_parameters(N: int) -> list:
    """Rational stand-ins for the vertices of the regular ``N``-gon.

    Vertex ``k`` sits at angle ``2πk/N``, i.e. at parameter ``tan(πk/N)``;
    that tangent is replaced by a nearby rational, and the vertex at angle
    ``π`` becomes the point at parameter ``∞``.
    """
    den = 8
    while True:
        out = [None if 2 * k == N else
               Fraction(math.tan(math.pi * k / N)).limit_denominator(den)
               for k in range(N)]
        if len(set(out)) == N:
            return out
        den *= 4


def _param_key(t):
    # the parametrization is angle-monotone in t, with t = ∞ at angle π
    return (1, 0) if t is None else (0, Fraction(t))


def ngon_instance(N: int, params: Sequence | None = None) -> LineArrangement:
    """Edges of a convex polygon inscribed in the unit circle.

    Vertices come from :func:`circle_point` at the given parameters (default
    :func:`default_ngon_parameters`), ordered counterclockwise.  Edge
    ``P -> Q`` yields the line with ``a*x + b*y + z = cross((a,b)-P, Q-P)``
    up to sign, oriented so the polygon interior is positive.
    """
    if N < 3:
        raise ValueError("a polygon needs at least 3 vertices")
    params = list(default_ngon_parameters(N) if params is None else params)
    if len(params) != N:
        raise ValueError(f"expected {N} parameters, got {len(params)}")
    if len({_param_key(t) for t in params}) != N:
        raise ValueError("vertex parameters must be distinct")
    pts = [circle_point(t) for t in sorted(params, key=_param_key)]
    lines = []
    for P, Q in zip(pts, pts[1:] + pts[:1]):
        dx, dy = Q[0] - P[0], Q[1] - P[1]
        lines.append((-dy, dx, P[0] * Q[1] - P[1] * Q[0]))
    return LineArrangement(lines)


def _intersect(l1, l2):
    x1, y1, z1 = l1
    x2, y2, z2 = l2
    det = x1 * y2 - x2 * y1
    if det == 0:
        return None
    return ((y1 * z2 - y2 * z1) / det, (x2 * z1 - x1 * z2) / det)


def clip_region(arr: LineArrangement):
    """Closure polygon of ``K`` clipped to a box that contains every arrangement vertex.

    Returns ``(vertices, box)``; ``vertices`` is empty when the closed region
    misses the box, or when a degenerate line ``0*a + 0*b + z > 0`` fails.
    """
    real = []
    for x, y, z in arr.lines:
        if x == 0 and y == 0:
            if z <= 0:
                return [], None
            continue
        real.append((x, y, z))
    bound = Fraction(1)
    for i in range(len(real)):
        for j in range(i + 1, len(real)):
            p = _intersect(real[i], real[j])
            if p is not None:
                bound = max(bound, abs(p[0]), abs(p[1]))
    for x, y, z in real:
        # the foot of the perpendicular from the origin keeps single lines inside
        n2 = x * x + y * y
        bound = max(bound, abs(x * z / n2), abs(y * z / n2))
    B = 2 * bound + 1
    poly = [(-B, -B), (B, -B), (B, B), (-B, B)]
    for x, y, z in real:
        poly = _clip(poly, x, y, z)
        if not poly:
            break
    return poly, B


def _clip(poly, x, y, z):
    """Sutherland-Hodgman step against ``a*x + b*y + z >= 0``."""
    out = []
    n = len(poly)
    for i in range(n):
        P, Q = poly[i], poly[(i + 1) % n]
        vp = P[0] * x + P[1] * y + z
        vq = Q[0] * x + Q[1] * y + z
        if vp >= 0:
            out.append(P)
        if (vp > 0 > vq) or (vp < 0 < vq):
            t = vp / (vp - vq)
            out.append((P[0] + t * (Q[0] - P[0]), P[1] + t * (Q[1] - P[1])))
    dedup = []
    for p in out:
        if not dedup or dedup[-1] != p:
            dedup.append(p)
    if len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup


def _area2(poly) -> Fraction:
    return sum(P[0] * Q[1] - P[1] * Q[0] for P, Q in zip(poly, poly[1:] + poly[:1]))


def region_escapes_disk(arr: LineArrangement) -> bool:
    """Does ``K`` meet ``{a^2 + b^2 > 1}``?

    The open region is empty when its closure has no area.  A nonempty
    unbounded region always escapes.  A bounded one escapes exactly when a
    vertex lies outside the closed disk, since the squared norm is convex.
    """
    poly, B = clip_region(arr)
    if B is None:
        return False
    if len(poly) < 3 or _area2(poly) == 0:
        return False
    if any(abs(c) == B for P in poly for c in P):
        return True
    return any(P[0] ** 2 + P[1] ** 2 > 1 for P in poly)
