from fractions import Fraction

import pytest

from tricross.constructions import build, realize_geometric
from tricross.geometry import (
    boundary_path,
    is_strictly_convex,
    orient,
    point_in_polygon,
    segment_intersection,
)
from tricross.model import (
    Circle,
    CrossingReport,
    Edge,
    GeometricDrawing,
    K22nLabels,
    Vertex,
    validate_geometry,
    validate_k22n,
)


def square(r, cx=0, cy=0):
    return [(cx - r, cy - r), (cx + r, cy - r), (cx + r, cy + r), (cx - r, cy + r)]


# -- geometry primitives ----------------------------------------------------


def test_orient():
    assert orient((0, 0), (1, 0), (0, 1)) == 1
    assert orient((0, 0), (1, 0), (0, -1)) == -1
    assert orient((0, 0), (1, 1), (2, 2)) == 0


def test_segment_intersection_kinds():
    kind, pt = segment_intersection((0, 0), (2, 2), (0, 2), (2, 0))
    assert kind == "cross" and pt == (1, 1)
    assert segment_intersection((0, 0), (1, 0), (0, 1), (1, 1)) is None
    assert segment_intersection((0, 0), (2, 0), (2, 0), (3, 1))[0] == "touch"
    assert segment_intersection((0, 0), (2, 0), (1, 0), (3, 0))[0] == "overlap"
    kind, pt = segment_intersection((0, 0), (3, 1), (0, 1), (3, 0))
    assert pt == (Fraction(3, 2), Fraction(1, 2))


def test_point_in_polygon():
    sq = square(2)
    assert point_in_polygon((0, 0), sq) == 1
    assert point_in_polygon((2, 0), sq) == 0
    assert point_in_polygon((3, 0), sq) == -1


def test_convexity():
    assert is_strictly_convex(square(1))
    assert not is_strictly_convex(list(reversed(square(1))))
    assert not is_strictly_convex([(0, 0), (1, 0), (2, 0), (1, 1)])


def test_boundary_path():
    sq = square(2)
    assert boundary_path(sq, (0, -2), (2, 0)) == [(2, -2)]
    assert boundary_path(sq, (2, 0), (0, -2), ccw=False) == [(2, -2)]
    assert boundary_path(sq, (-1, -2), (1, -2)) == []


# -- label validation -------------------------------------------------------


def test_validate_k22n_ok():
    assert validate_k22n(K22nLabels(4, 1, (1, 1, 1, 1), (1, 1, 1, 1))) == []


def test_validate_k22n_out_of_range():
    problems = validate_k22n(K22nLabels(4, 1, (5, 1, 1, 1), (1, 1, 1, 1)))
    assert problems == ["x1 = 5 out of range [1..4]"]


def test_validate_k22n_small_n_and_type():
    problems = validate_k22n(K22nLabels(2, 5, (1, 1, 1, 1), (1, 1, 1, 1)))
    assert any("n must be" in p for p in problems)
    assert any("type" in p for p in problems)


def test_crossing_report_total():
    assert CrossingReport(1, 2, 3).total == 6


# -- geometric validation ---------------------------------------------------


def test_construction_validates():
    for n in range(3, 11):
        for variant in ("type1", "type4") if n % 2 else ("type1",):
            assert validate_geometry(realize_geometric(build(n, variant))) == []


def test_edge_through_circle_rejected():
    d = realize_geometric(build(3, "type1"))
    # send M1-P1 through the middle of circle N
    n_centre = (0, -10)
    edges = [Edge(e.u, e.v, (n_centre,)) if (e.u, e.v) == ("M1", "P1") else e for e in d.edges]
    problems = validate_geometry(GeometricDrawing(d.circles, d.vertices, edges, d.parts))
    assert "edge M1-P1 crosses circle N" in problems


def test_nested_circles_rejected():
    circles = [Circle("M", square(5), "cw"), Circle("N", square(20), "cw"), Circle("P", square(100), "ccw")]
    problems = validate_geometry(GeometricDrawing(circles, [], [], {"M": (), "N": (), "P": ()}))
    assert any("nested" in p for p in problems)


def test_wrong_orientation_and_vertex_off_boundary():
    circles = [Circle("M", square(5, -20), "ccw"), Circle("N", square(5, 20), "cw"), Circle("P", square(100), "ccw")]
    vertices = [Vertex("M1", "M", 1, (-20, 0))]
    problems = validate_geometry(GeometricDrawing(circles, vertices, [], {"M": ("M1",), "N": (), "P": ()}))
    assert any("must be read cw" in p for p in problems)
    circles[0] = Circle("M", square(5, -20), "cw")
    problems = validate_geometry(GeometricDrawing(circles, vertices, [], {"M": ("M1",), "N": (), "P": ()}))
    assert problems == ["vertex M1 does not lie on the boundary of circle M"]
