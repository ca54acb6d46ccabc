"""Read x- and y-labels off a geometric drawing.

The star of a vertex ``i`` on circle A towards circle B cuts the plane into
faces, one per pair of B-consecutive targets.  Face ``k`` is bounded by the
edge to ``b_k``, the arc of B from ``b_k`` to ``b_{k+1}`` in B's reading
direction, and the edge back from ``b_{k+1}``; its label is that of
``b_{k+1}``.  Which face holds a given circle is decided by exact
point-in-polygon tests on these boundary curves.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Tuple

from .geometry import Point, boundary_path, centroid, point_in_polygon
from .model import CIRCLES, TABLES, GeometricDrawing, K22nLabels, TripartiteLabels, Vertex

__all__ = ["star_label", "tripartite_labels", "k22n_labels", "LabelExtractionError"]


class LabelExtractionError(RuntimeError):
    """The face structure of a star is not what a valid simple drawing produces."""


def _edge_path(d: GeometricDrawing, a: str, b: str) -> List[Point]:
    for e in d.edges:
        if (e.u, e.v) == (a, b):
            return d.polyline(e)
        if (e.u, e.v) == (b, a):
            return list(reversed(d.polyline(e)))
    raise LabelExtractionError(f"no edge between {a} and {b}")


def _probe(d: GeometricDrawing, circle: str) -> Point:
    """A point certainly inside the region occupied by ``circle``."""
    if circle != "P":
        return centroid(d.circle(circle).polygon)
    # anything outside P sits in the same face as P's boundary
    xs = [p[0] for p in d.circle("P").polygon]
    ys = [p[1] for p in d.circle("P").polygon]
    return (max(xs) + 1, max(ys) + 1)


def _face_curves(d: GeometricDrawing, v: Vertex, target: str) -> List[List[Point]]:
    circ = d.circle(target)
    ring = d.on_circle(target)
    ccw = circ.orientation == "ccw"
    curves = []
    for k, bk in enumerate(ring):
        bnext = ring[(k + 1) % len(ring)]
        out = _edge_path(d, v.id, bk.id)
        back = _edge_path(d, bnext.id, v.id)
        arc = boundary_path(circ.polygon, bk.point, bnext.point, ccw=ccw)
        curves.append(out + arc + back[:-1])
    return curves


def star_label(d: GeometricDrawing, vid: str, target: str, containing: str) -> int:
    """Label on ``target`` of the face of ``vid``'s star that contains circle ``containing``."""
    v = d.vertex(vid)
    ring = d.on_circle(target)
    if len(ring) == 1:
        return ring[0].label
    curves = _face_curves(d, v, target)

    def inside(pt: Point) -> List[int]:
        hits = []
        for k, curve in enumerate(curves):
            side = point_in_polygon(pt, curve)
            if side == 0:
                raise LabelExtractionError(f"probe point lies on a face boundary of {vid}'s star")
            if side > 0:
                hits.append(k)
        return hits

    hits = inside(_probe(d, containing))
    if target == "P":
        face = hits
    else:
        # exactly one face is unbounded; its boundary curve encloses the target circle
        outer = inside(_probe(d, target))
        if len(outer) != 1:
            raise LabelExtractionError(f"star of {vid} towards {target}: no unique unbounded face")
        face = [k for k in hits if k != outer[0]] if hits else outer
    if len(face) != 1:
        raise LabelExtractionError(f"star of {vid} towards {target}: circle {containing} is not in a unique face")
    return ring[(face[0] + 1) % len(ring)].label


def _third(a: str, b: str) -> str:
    return next(c for c in CIRCLES if c not in (a, b))


def _table(d: GeometricDrawing, kind: str, src: str, dst: str) -> Tuple[int, ...]:
    containing = src if kind == "x" else _third(src, dst)
    return tuple(star_label(d, v.id, dst, containing) for v in d.on_circle(src))


def tripartite_labels(d: GeometricDrawing) -> TripartiteLabels:
    """All nine label tables of a valid simple geometric drawing."""
    tables: Dict[str, Tuple[int, ...]] = {}
    for name, (src, dst) in TABLES.items():
        tables[name] = _table(d, name[0], src, dst)
    m, n, p = (len(d.on_circle(c)) for c in CIRCLES)
    return TripartiteLabels(m, n, p, tables)


def k22n_labels(d: GeometricDrawing, drawing_type: int) -> K22nLabels:
    """The x/y labels on P of the four inner vertices (1, 2 on M; 3, 4 on N)."""
    inner = d.on_circle("M") + d.on_circle("N")
    if len(inner) != 4:
        raise LabelExtractionError("not a drawing of K_{2,2,n}")
    x = tuple(star_label(d, v.id, "P", v.circle) for v in inner)
    y = tuple(star_label(d, v.id, "P", _third(v.circle, "P")) for v in inner)
    return K22nLabels(len(d.on_circle("P")), drawing_type, x, y)
