"""Exact planar predicates over rational coordinates.

Points are pairs of :class:`fractions.Fraction` (plain ``int`` works too).
Nothing in here ever touches a float.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

Number = Union[int, Fraction]
Point = Tuple[Number, Number]

__all__ = [
    "Point",
    "as_point",
    "orient",
    "cross",
    "segment_intersection",
    "point_in_polygon",
    "on_segment",
    "signed_area2",
    "is_strictly_convex",
    "boundary_parameter",
    "boundary_path",
    "centroid",
]


def as_point(p: Iterable[Number]) -> Tuple[Fraction, Fraction]:
    x, y = p
    return Fraction(x), Fraction(y)


def cross(o: Point, a: Point, b: Point) -> Number:
    """Twice the signed area of triangle ``o a b``."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def orient(a: Point, b: Point, c: Point) -> int:
    """+1 if ``a b c`` turns left, -1 if right, 0 if collinear."""
    v = cross(a, b, c)
    return (v > 0) - (v < 0)


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True iff ``p`` lies on the closed segment ``a b``."""
    if orient(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def _lerp(a: Point, b: Point, t: Fraction) -> Tuple[Fraction, Fraction]:
    return (a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t)


def segment_intersection(
    p1: Point, p2: Point, q1: Point, q2: Point
) -> Optional[Tuple]:
    """Intersection of closed segments ``p1 p2`` and ``q1 q2``.

    Returns ``None``, ``("cross", pt)`` for a proper transversal crossing
    interior to both segments, ``("touch", pt)`` for a single common point
    that is an endpoint of at least one segment (or collinear contact in a
    point), or ``("overlap", a, b)`` for a collinear overlap of positive
    length.
    """
    o1 = orient(p1, p2, q1)
    o2 = orient(p1, p2, q2)
    o3 = orient(q1, q2, p1)
    o4 = orient(q1, q2, p2)
    if o1 * o2 < 0 and o3 * o4 < 0:
        dq = (q2[0] - q1[0], q2[1] - q1[1])
        d = cross((0, 0), (p2[0] - p1[0], p2[1] - p1[1]), dq)
        t = Fraction(cross((0, 0), (q1[0] - p1[0], q1[1] - p1[1]), dq)) / d
        return ("cross", _lerp(p1, p2, t))
    if o1 == o2 == o3 == o4 == 0:
        # collinear: project on the dominant axis
        axis = 0 if p1[0] != p2[0] or q1[0] != q2[0] else 1
        a0, a1 = sorted((p1, p2), key=lambda p: (p[axis], p[1 - axis]))
        b0, b1 = sorted((q1, q2), key=lambda p: (p[axis], p[1 - axis]))
        lo = max(a0, b0, key=lambda p: (p[axis], p[1 - axis]))
        hi = min(a1, b1, key=lambda p: (p[axis], p[1 - axis]))
        if (lo[axis], lo[1 - axis]) > (hi[axis], hi[1 - axis]):
            return None
        if lo == hi:
            return ("touch", as_point(lo))
        return ("overlap", as_point(lo), as_point(hi))
    for p, a, b in ((q1, p1, p2), (q2, p1, p2), (p1, q1, q2), (p2, q1, q2)):
        if on_segment(p, a, b):
            return ("touch", as_point(p))
    return None


def signed_area2(poly: Sequence[Point]) -> Number:
    """Twice the signed area (positive for counterclockwise polygons)."""
    s = 0
    for i in range(len(poly)):
        x0, y0 = poly[i]
        x1, y1 = poly[(i + 1) % len(poly)]
        s += x0 * y1 - x1 * y0
    return s


def is_strictly_convex(poly: Sequence[Point]) -> bool:
    """Counterclockwise, no three corners collinear, every corner left of every other edge."""
    k = len(poly)
    if k < 3:
        return False
    for i in range(k):
        a, b = poly[i], poly[(i + 1) % k]
        if any(orient(a, b, poly[j]) <= 0 for j in range(k) if j != i and j != (i + 1) % k):
            return False
    return True


def point_in_polygon(p: Point, poly: Sequence[Point]) -> int:
    """+1 if ``p`` is strictly inside the simple polygon, 0 on its boundary, -1 outside."""
    k = len(poly)
    inside = False
    for i in range(k):
        a = poly[i]
        b = poly[(i + 1) % k]
        if on_segment(p, a, b):
            return 0
        if (a[1] > p[1]) != (b[1] > p[1]):
            # x-coordinate of the edge at height p.y, compared exactly
            lhs = (p[0] - a[0]) * (b[1] - a[1])
            rhs = (b[0] - a[0]) * (p[1] - a[1])
            if (b[1] - a[1] > 0 and lhs < rhs) or (b[1] - a[1] < 0 and lhs > rhs):
                inside = not inside
    return 1 if inside else -1


def boundary_parameter(poly: Sequence[Point], p: Point) -> Optional[Tuple[int, Fraction]]:
    """Locate ``p`` on the boundary of ``poly`` as ``(edge index, t in [0, 1))``."""
    k = len(poly)
    for i in range(k):
        a = poly[i]
        b = poly[(i + 1) % k]
        if on_segment(p, a, b):
            if a[0] != b[0]:
                t = Fraction(p[0] - a[0]) / (b[0] - a[0])
            else:
                t = Fraction(p[1] - a[1]) / (b[1] - a[1])
            if t == 1:
                return ((i + 1) % k, Fraction(0))
            return (i, t)
    return None


def boundary_path(poly: Sequence[Point], p: Point, q: Point, ccw: bool = True) -> list:
    """Corners of ``poly`` met walking its boundary from ``p`` to ``q``.

    ``poly`` is counterclockwise.  The walk goes counterclockwise when
    ``ccw`` is true and clockwise otherwise; endpoints are excluded.  When
    ``p == q`` the walk goes all the way round.
    """
    if not ccw:
        return list(reversed(boundary_path(poly, q, p, True)))
    k = len(poly)
    ip, tp = boundary_parameter(poly, p)
    iq, tq = boundary_parameter(poly, q)
    if ip == iq and tp < tq:
        return []
    corners = []
    i = (ip + 1) % k
    while True:
        corners.append(poly[i])
        if i == iq:
            break
        i = (i + 1) % k
    if tq == 0:
        # q sits on corner iq itself
        corners.pop()
    return corners


def centroid(poly: Sequence[Point]) -> Tuple[Fraction, Fraction]:
    """Vertex average; strictly interior for a strictly convex polygon."""
    k = len(poly)
    return (Fraction(sum(p[0] for p in poly), k), Fraction(sum(p[1] for p in poly), k))
