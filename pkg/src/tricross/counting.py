"""Crossing counters.

Three routes to the same numbers, kept deliberately independent:

* :func:`theorem_total` evaluates the label formula for simple
  tripartite-circle drawings of ``K_{m,n,p}``;
* :func:`lb_total` is the ``K_{2,2,n}`` accounting (red bound plus
  green-green sum), a lower bound valid for every label tuple;
* :func:`geometric_count` intersects polylines with exact predicates.

:func:`star_oracle` recomputes ``f`` from a model of two stars in an annulus.
"""

from __future__ import annotations

import enum
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .cyclic import DomainError, check_label, dist_cw, f
from .geometry import segment_intersection
from .model import (
    CrossingReport,
    GeometricDrawing,
    K22nLabels,
    TripartiteLabels,
    ValidationError,
    validate_k22n,
    validate_tripartite,
)

__all__ = [
    "CcwCase",
    "NonSimpleDrawingError",
    "theorem_total",
    "red_lower_bound",
    "green_green",
    "lb_total",
    "star_oracle",
    "geometric_count",
    "ccw_case",
    "ccw_excess",
]

# the three cyclic assignments (A, B, C)
CYCLIC_ASSIGNMENTS = (("M", "N", "P"), ("N", "P", "M"), ("P", "M", "N"))


class NonSimpleDrawingError(DomainError):
    """Two edges meet in a way a simple drawing forbids."""


def _f_or_zero(size: int, u: int, v: int) -> int:
    # a circle with a single vertex carries no pair of positions: C(0,2) + C(1,2) = 0
    return f(size, u, v) if size > 1 else 0


def theorem_total(L: TripartiteLabels) -> int:
    """Crossings of a simple tripartite-circle drawing from its nine label tables."""
    problems = validate_tripartite(L)
    if problems:
        raise ValidationError(problems)
    total = 0
    for a, b, c in CYCLIC_ASSIGNMENTS:
        xs = L.tables[f"x_{a}_{b}"]
        nb = L.size(b)
        for i, j in combinations(range(L.size(a)), 2):
            total += _f_or_zero(nb, xs[i], xs[j])
        ya = L.tables[f"y_{a}_{c}"]
        yb = L.tables[f"y_{b}_{c}"]
        nc = L.size(c)
        for yi in ya:
            for yj in yb:
                total += _f_or_zero(nc, yi, yj)
    return total


def _checked(L: K22nLabels) -> K22nLabels:
    problems = validate_k22n(L)
    if problems:
        raise ValidationError(problems)
    return L


def red_lower_bound(L: K22nLabels) -> int:
    """Lower bound on the crossings involving red edges, by drawing type.

    Odd-indexed inner vertices pay for outer vertices in ``[y_i, x_i)``,
    even-indexed ones for ``[x_i, y_i)``.
    """
    n, (x1, x2, x3, x4), (y1, y2, y3, y4) = _checked(L).n, L.x, L.y
    if L.type == 1:
        return 2 * (dist_cw(n, y1, x1) + dist_cw(n, x2, y2) + dist_cw(n, y3, x3) + dist_cw(n, x4, y4)) + 1
    if L.type in (2, 3):
        return 2 * n + 1
    return 2 * (dist_cw(n, y1, x1) + dist_cw(n, x2, y2)) + n


def green_green(L: K22nLabels) -> int:
    """Green-green crossings: the two same-circle star pairs plus the four cross pairs."""
    n, (x1, x2, x3, x4), (y1, y2, y3, y4) = _checked(L).n, L.x, L.y
    return (
        f(n, x1, x2)
        + f(n, x3, x4)
        + f(n, y1, y3)
        + f(n, y1, y4)
        + f(n, y2, y3)
        + f(n, y2, y4)
    )


def lb_total(L: K22nLabels) -> int:
    return red_lower_bound(L) + green_green(L)


def star_oracle(n: int, xi: int, xj: int) -> int:
    """Count crossings between two stars in an annulus by brute force.

    Outer vertex ``k`` sits at angle ``k``; star ``i`` leaves the inner
    circle from the gap just before ``xi`` and every edge sweeps
    counterclockwise to its target with angle linear in the radius.  Two
    edges cross once for every lift of one edge whose start and end angles
    straddle the other's.  All angles are scaled by 3 to stay integral and to
    keep the two apexes apart when ``xi == xj``.
    """
    check_label(n, xi, "xi")
    check_label(n, xj, "xj")
    period = 3 * n
    apex = (3 * xi - 2, 3 * xj - 1)
    stars = []
    for a in apex:
        # (start, end) of each edge in lifted angle, end reached sweeping ccw
        stars.append({k: (a, a + (3 * k - a) % period) for k in range(1, n + 1)})
    count = 0
    for u, (s1, e1) in stars[0].items():
        for v, (s2, e2) in stars[1].items():
            if u == v:
                continue
            for lift in range(-2, 3):
                lo = s1 - s2 - lift * period
                hi = e1 - e2 - lift * period
                if lo * hi < 0:
                    count += 1
    return count


class CcwCase(enum.Enum):
    CHAIN = "chain"
    REVERSE = "reverse"
    OTHER = "other"


def ccw_excess(n: int, a: int, b: int, c: int, d: int) -> int:
    return dist_cw(n, a, b) + dist_cw(n, b, c) + dist_cw(n, c, d) - dist_cw(n, a, d)


def ccw_case(n: int, a: int, b: int, c: int, d: int) -> CcwCase:
    """Classify four labels by the three-term distance identity.

    ``chain`` means ``a b c d`` is the counterclockwise order, ``reverse``
    means ``a d c b``; coincident labels are classified by the same
    arithmetic.
    """
    excess = ccw_excess(n, a, b, c, d)
    if excess == 0:
        return CcwCase.CHAIN
    if excess == 2 * n:
        return CcwCase.REVERSE
    if excess == n:
        return CcwCase.OTHER
    raise AssertionError(f"three-term excess {excess} not in {{0, {n}, {2 * n}}} for {(n, a, b, c, d)}")


def _pair_crossings(d: GeometricDrawing, e1, e2, shared: Optional[str]) -> int:
    p = d.polyline(e1)
    q = d.polyline(e2)
    shared_pt = d.vertex(shared).point if shared else None
    tag = f"edges {e1.u}-{e1.v} and {e2.u}-{e2.v}"
    hits = 0
    for i in range(len(p) - 1):
        for j in range(len(q) - 1):
            r = segment_intersection(p[i], p[i + 1], q[j], q[j + 1])
            if r is None:
                continue
            if r[0] == "overlap":
                raise NonSimpleDrawingError(f"{tag} overlap")
            pt = r[1]
            if shared is not None and pt == shared_pt:
                continue
            if shared is not None:
                raise NonSimpleDrawingError(f"{tag} share a vertex but also meet at {pt}")
            if r[0] == "touch":
                raise NonSimpleDrawingError(f"{tag} meet at a segment endpoint {pt} (degenerate intersection)")
            hits += 1
    if hits > 1:
        raise NonSimpleDrawingError(f"{tag} cross {hits} times")
    return hits


def geometric_count(d: GeometricDrawing) -> CrossingReport:
    """Exact crossing count of a geometric drawing, split by edge colour.

    Raises :class:`NonSimpleDrawingError` on any degenerate contact: collinear
    overlap, an intersection at a polyline joint, adjacent edges meeting away
    from their common vertex, or an edge pair crossing more than once.
    """
    counts = {"red_red": 0, "red_green": 0, "green_green": 0}
    edges = list(d.edges)
    red = [d.is_red(e) for e in edges]
    for a, b in combinations(range(len(edges)), 2):
        e1, e2 = edges[a], edges[b]
        common = {e1.u, e1.v} & {e2.u, e2.v}
        shared = next(iter(common)) if len(common) == 1 else None
        if len(common) > 1:
            raise NonSimpleDrawingError(f"edges {e1.u}-{e1.v} and {e2.u}-{e2.v} are parallel edges")
        if _pair_crossings(d, e1, e2, shared):
            key = "red_red" if red[a] and red[b] else "green_green" if not (red[a] or red[b]) else "red_green"
            counts[key] += 1
    return CrossingReport(**counts)
