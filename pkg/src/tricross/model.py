"""Data model for combinatorial and geometric tripartite-circle drawings.

Circles are named ``"M"`` and ``"N"`` (the two inner circles) and ``"P"``
(the outer one).  In a drawing of ``K_{2,2,n}`` the inner vertices are
numbered 1..4 with 1, 2 on M and 3, 4 on N; the geometric model calls them
``M1, M2, N1, N2`` and the outer vertices ``P1..Pn``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .cyclic import DomainError
from .geometry import (
    Point,
    as_point,
    boundary_parameter,
    is_strictly_convex,
    point_in_polygon,
    segment_intersection,
)

__all__ = [
    "CIRCLES",
    "INNER",
    "TABLES",
    "K22nLabels",
    "TripartiteLabels",
    "Circle",
    "Vertex",
    "Edge",
    "GeometricDrawing",
    "CrossingReport",
    "validate_k22n",
    "validate_tripartite",
    "validate_geometry",
    "ValidationError",
]

CIRCLES = ("M", "N", "P")
INNER = ("M", "N")
READING = {"M": "cw", "N": "cw", "P": "ccw"}

# table name -> (source circle, target circle); order is the canonical field order
TABLES: Dict[str, Tuple[str, str]] = {
    "x_M_N": ("M", "N"),
    "x_N_P": ("N", "P"),
    "x_P_M": ("P", "M"),
    "y_M_P": ("M", "P"),
    "y_N_P": ("N", "P"),
    "y_N_M": ("N", "M"),
    "y_P_M": ("P", "M"),
    "y_P_N": ("P", "N"),
    "y_M_N": ("M", "N"),
}


class ValidationError(DomainError):
    """A value violates the invariants of its type."""

    def __init__(self, violations: Sequence[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


@dataclass(frozen=True)
class K22nLabels:
    n: int
    type: int
    x: Tuple[int, int, int, int]
    y: Tuple[int, int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(self.x))
        object.__setattr__(self, "y", tuple(self.y))


def validate_k22n(labels: K22nLabels) -> List[str]:
    """Every invariant violation of ``labels``; empty iff valid."""
    out = []
    n = labels.n
    if not isinstance(n, int) or n < 3:
        out.append(f"n must be an integer >= 3, got {n!r}")
    if labels.type not in (1, 2, 3, 4):
        out.append(f"type must be one of 1, 2, 3, 4, got {labels.type!r}")
    for name, values in (("x", labels.x), ("y", labels.y)):
        if len(values) != 4:
            out.append(f"{name} must have 4 entries, got {len(values)}")
            continue
        for i, v in enumerate(values, 1):
            if not isinstance(v, int) or isinstance(n, int) and not 1 <= v <= n:
                out.append(f"{name}{i} = {v!r} out of range [1..{n}]")
    return out


@dataclass(frozen=True)
class TripartiteLabels:
    """The nine label tables of a simple tripartite-circle drawing of ``K_{m,n,p}``.

    ``tables[name][i]`` is the label (on the target circle) of source vertex
    ``i + 1``; see :data:`TABLES` for the names.
    """

    m: int
    n: int
    p: int
    tables: Mapping[str, Tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "tables", {k: tuple(v) for k, v in self.tables.items()})

    def size(self, circle: str) -> int:
        return {"M": self.m, "N": self.n, "P": self.p}[circle]


def validate_tripartite(labels: TripartiteLabels) -> List[str]:
    out = []
    for c in CIRCLES:
        s = labels.size(c)
        if not isinstance(s, int) or s < 0:
            out.append(f"size of circle {c} must be a non-negative integer, got {s!r}")
    if out:
        return out
    unknown = set(labels.tables) - set(TABLES)
    for name in sorted(unknown):
        out.append(f"unknown table {name}")
    for name, (src, dst) in TABLES.items():
        table = labels.tables.get(name)
        if table is None:
            out.append(f"missing table {name}")
            continue
        if len(table) != labels.size(src):
            out.append(f"table {name} has {len(table)} entries, circle {src} has {labels.size(src)} vertices")
        top = labels.size(dst)
        for i, v in enumerate(table, 1):
            if not isinstance(v, int) or not 1 <= v <= top:
                out.append(f"{name}[{i}] = {v!r} out of range [1..{top}]")
    return out


@dataclass(frozen=True)
class Circle:
    """A topological circle realised as a strictly convex integer polygon.

    ``polygon`` is stored counterclockwise.  ``orientation`` is the reading
    direction of the vertex labels on this circle.
    """

    name: str
    polygon: Tuple[Point, ...]
    orientation: str

    def __post_init__(self):
        object.__setattr__(self, "polygon", tuple(as_point(p) for p in self.polygon))


@dataclass(frozen=True)
class Vertex:
    id: str
    circle: str
    label: int
    point: Point

    def __post_init__(self):
        object.__setattr__(self, "point", as_point(self.point))


@dataclass(frozen=True)
class Edge:
    u: str
    v: str
    waypoints: Tuple[Point, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "waypoints", tuple(as_point(p) for p in self.waypoints))


@dataclass(frozen=True)
class GeometricDrawing:
    circles: Tuple[Circle, ...]
    vertices: Tuple[Vertex, ...]
    edges: Tuple[Edge, ...]
    parts: Mapping[str, Tuple[str, ...]]

    def __post_init__(self):
        object.__setattr__(self, "circles", tuple(self.circles))
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        object.__setattr__(self, "parts", {k: tuple(v) for k, v in self.parts.items()})

    def circle(self, name: str) -> Circle:
        for c in self.circles:
            if c.name == name:
                return c
        raise KeyError(name)

    def vertex(self, vid: str) -> Vertex:
        return self._index()[vid]

    def _index(self) -> Dict[str, Vertex]:
        idx = self.__dict__.get("_vertex_index")
        if idx is None:
            idx = {v.id: v for v in self.vertices}
            object.__setattr__(self, "_vertex_index", idx)
        return idx

    def on_circle(self, name: str) -> List[Vertex]:
        """Vertices on circle ``name`` sorted by label."""
        return sorted((v for v in self.vertices if v.circle == name), key=lambda v: v.label)

    def polyline(self, e: Edge) -> List[Point]:
        return [self.vertex(e.u).point, *e.waypoints, self.vertex(e.v).point]

    def is_red(self, e: Edge) -> bool:
        """Red edges join the two inner circles."""
        return self.vertex(e.u).circle in INNER and self.vertex(e.v).circle in INNER


@dataclass(frozen=True)
class CrossingReport:
    red_red: int
    red_green: int
    green_green: int

    @property
    def total(self) -> int:
        return self.red_red + self.red_green + self.green_green


def _cyclic_order_ok(circle: Circle, verts: Sequence[Vertex]) -> Optional[str]:
    """Labels 1..k must follow the boundary in the circle's reading direction."""
    k = len(verts)
    if sorted(v.label for v in verts) != list(range(1, k + 1)):
        return f"labels on circle {circle.name} are not exactly 1..{k}"
    if k < 3:
        return None
    params = [boundary_parameter(circle.polygon, v.point) for v in sorted(verts, key=lambda v: v.label)]
    if circle.orientation == "cw":
        params.reverse()
    descents = sum(1 for a, b in zip(params, params[1:] + params[:1]) if b <= a)
    if descents != 1:
        return f"labels on circle {circle.name} do not follow its {circle.orientation} reading direction"
    return None


def _contacts(seg: Tuple[Point, Point], poly: Sequence[Point]) -> List[Tuple]:
    hits = []
    for i in range(len(poly)):
        r = segment_intersection(seg[0], seg[1], poly[i], poly[(i + 1) % len(poly)])
        if r is not None:
            hits.append(r)
    return hits


def _convex_disjoint(a: Sequence[Point], b: Sequence[Point]) -> bool:
    if any(point_in_polygon(p, b) >= 0 for p in a) or any(point_in_polygon(p, a) >= 0 for p in b):
        return False
    for i in range(len(a)):
        if _contacts((a[i], a[(i + 1) % len(a)]), b):
            return False
    return True


def validate_geometry(d: GeometricDrawing) -> List[str]:
    """Check a geometric drawing exactly; returns the violations (empty iff valid).

    Checks: three strictly convex circles M, N, P with the standard reading
    directions; M and N disjoint and strictly inside P; every vertex on its
    circle's boundary with cyclically consistent labels; parts match
    circles; every edge joins two different circles, starts and ends at its
    vertices, and meets a circle only at its own endpoint on that circle.
    """
    out: List[str] = []
    names = [c.name for c in d.circles]
    if sorted(names) != sorted(CIRCLES):
        return [f"circles must be exactly M, N, P, got {names}"]
    for c in d.circles:
        if not is_strictly_convex(c.polygon):
            out.append(f"circle {c.name} is not a strictly convex counterclockwise polygon")
        if c.orientation != READING[c.name]:
            out.append(f"circle {c.name} must be read {READING[c.name]}, got {c.orientation!r}")
    if out:
        return out
    M, N, P = (d.circle(x).polygon for x in CIRCLES)
    for name, poly in (("M", M), ("N", N)):
        if any(point_in_polygon(p, P) <= 0 for p in poly):
            out.append(f"circle {name} is not strictly inside circle P")
    if not _convex_disjoint(M, N):
        if all(point_in_polygon(p, N) > 0 for p in M) or all(point_in_polygon(p, M) > 0 for p in N):
            out.append("circles M and N are nested; they must be disjoint siblings inside P")
        else:
            out.append("circles M and N intersect")

    seen = set()
    for v in d.vertices:
        if v.id in seen:
            out.append(f"duplicate vertex id {v.id}")
        seen.add(v.id)
        if v.circle not in CIRCLES:
            out.append(f"vertex {v.id} on unknown circle {v.circle!r}")
        elif point_in_polygon(v.point, d.circle(v.circle).polygon) != 0:
            out.append(f"vertex {v.id} does not lie on the boundary of circle {v.circle}")
    if out:
        return out
    for c in d.circles:
        msg = _cyclic_order_ok(c, [v for v in d.vertices if v.circle == c.name])
        if msg:
            out.append(msg)
    for name in CIRCLES:
        want = sorted(v.id for v in d.vertices if v.circle == name)
        if sorted(d.parts.get(name, ())) != want:
            out.append(f"part {name} does not match the vertices on circle {name}")
    for extra in sorted(set(d.parts) - set(CIRCLES)):
        out.append(f"unknown part {extra}")

    pairs = set()
    for e in d.edges:
        tag = f"edge {e.u}-{e.v}"
        if e.u not in seen or e.v not in seen:
            out.append(f"{tag} references an unknown vertex")
            continue
        cu, cv = d.vertex(e.u).circle, d.vertex(e.v).circle
        if cu == cv:
            out.append(f"{tag} joins two vertices of circle {cu}")
        key = frozenset((e.u, e.v))
        if key in pairs:
            out.append(f"{tag} is a duplicate")
        pairs.add(key)
        pts = d.polyline(e)
        for k in range(len(pts) - 1):
            seg = (pts[k], pts[k + 1])
            if seg[0] == seg[1]:
                out.append(f"{tag} has a zero-length segment")
                continue
            for c in d.circles:
                allowed = set()
                if k == 0 and cu == c.name:
                    allowed.add(seg[0])
                if k == len(pts) - 2 and cv == c.name:
                    allowed.add(seg[1])
                bad = False
                for hit in _contacts(seg, c.polygon):
                    if hit[0] == "overlap" or hit[1] not in allowed:
                        bad = True
                mid = ((seg[0][0] + seg[1][0]) / 2, (seg[0][1] + seg[1][1]) / 2)
                side = point_in_polygon(mid, c.polygon)
                if c.name == "P":
                    bad = bad or side <= 0
                else:
                    bad = bad or side >= 0
                if bad:
                    out.append(f"{tag} crosses circle {c.name}")
                    break
    return out
