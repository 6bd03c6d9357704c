"""Geometry of polynomial supports.

Convex hulls are computed with the monotone chain algorithm in exact integer
arithmetic.  Edge normals are primitive integer vectors pointing outward.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .algebra import LaurentPoly
from .errors import ZeroPolynomialError

Point = tuple[int, int]


class Direction(NamedTuple):
    """Primitive nonzero vector with ``a > 0``, or ``a == 0`` and ``b > 0``."""

    a: int
    b: int

    @classmethod
    def of(cls, v) -> Direction:
        a, b = int(v[0]), int(v[1])
        if a == 0 and b == 0:
            raise ValueError("zero vector has no direction")
        g = math.gcd(a, b)
        a, b = a // g, b // g
        if a < 0 or (a == 0 and b < 0):
            a, b = -a, -b
        return cls(a, b)

    def __str__(self):
        return f"({self.a},{self.b})"


def primitive(v) -> Point:
    g = math.gcd(v[0], v[1])
    return (v[0] // g, v[1] // g)


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points) -> list[Point]:
    """Extreme points in counter-clockwise order from the lexicographic minimum."""
    pts = sorted(set(map(tuple, points)))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


class Edge(NamedTuple):
    start: Point
    end: Point
    normal: Point  # outward, primitive


@dataclass(frozen=True)
class NewtonPolygon:
    vertices: tuple[Point, ...]
    edges: tuple[Edge, ...]

    @property
    def is_point(self) -> bool:
        return len(self.vertices) == 1

    @property
    def is_segment(self) -> bool:
        return len(self.vertices) == 2

    def contains(self, q: Point) -> bool:
        """True if ``q`` lies in the closed hull."""
        v = self.vertices
        if len(v) == 1:
            return q == v[0]
        if len(v) == 2:
            return _cross(v[0], v[1], q) == 0 and min(v[0], v[1]) <= q <= max(v[0], v[1])
        return all(_cross(v[k], v[(k + 1) % len(v)], q) >= 0 for k in range(len(v)))


def hull_of_points(points) -> NewtonPolygon:
    hull = convex_hull(points)
    if len(hull) == 1:
        return NewtonPolygon(tuple(hull), ())
    if len(hull) == 2:
        p, q = hull
        d = (q[0] - p[0], q[1] - p[1])
        n = primitive((d[1], -d[0]))
        return NewtonPolygon(
            tuple(hull),
            (Edge(p, q, n), Edge(q, p, (-n[0], -n[1]))),
        )
    edges = []
    for k, p in enumerate(hull):
        q = hull[(k + 1) % len(hull)]
        # CCW traversal: outward normal is the edge vector rotated clockwise
        edges.append(Edge(p, q, primitive((q[1] - p[1], p[0] - q[0]))))
    return NewtonPolygon(tuple(hull), tuple(edges))


def newton_polygon(f: LaurentPoly) -> NewtonPolygon:
    if f.is_zero():
        raise ZeroPolynomialError("Newton polygon of the zero polynomial")
    return hull_of_points(f.support())


def parallel_edge_directions(poly: NewtonPolygon) -> set[Direction]:
    """Directions of edges whose opposite-normal partner edge also exists."""
    if poly.is_point:
        return set()
    if poly.is_segment:
        e = poly.edges[0]
        return {Direction.of((e.end[0] - e.start[0], e.end[1] - e.start[1]))}
    normals = {e.normal for e in poly.edges}
    out = set()
    for e in poly.edges:
        if (-e.normal[0], -e.normal[1]) in normals:
            out.add(Direction.of((e.end[0] - e.start[0], e.end[1] - e.start[1])))
    return out


def candidate_line_directions(f: LaurentPoly) -> set[Direction]:
    """Directions in which ``f`` could have a line polynomial factor.

    A line factor in direction ``u`` forces outer edges on both sides
    perpendicular to ``u``, so only directions of parallel hull edge pairs
    qualify.  A collinear support yields its own direction.
    """
    return parallel_edge_directions(newton_polygon(f))


def lattice_index(vectors) -> int | float:
    """Index in Z^2 of the lattice spanned by ``vectors`` (``inf`` if rank < 2).

    Uses that the gcd of all 2x2 minors equals the product of the invariant
    factors.
    """
    vs = [tuple(v) for v in vectors if v[0] or v[1]]
    g = 0
    for k, (a, b) in enumerate(vs):
        for c, d in vs[k + 1:]:
            g = math.gcd(g, a * d - b * c)
            if g == 1:
                return 1
    return g if g else math.inf


def sublattice_index(f: LaurentPoly) -> int | float:
    if f.is_zero():
        raise ZeroPolynomialError("sublattice index of the zero polynomial")
    pts = f.support()
    x0, y0 = pts[0]
    return lattice_index([(x - x0, y - y0) for x, y in pts[1:]])
