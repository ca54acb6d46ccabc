import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tricross.constructions import build, realize_geometric
from tricross.counting import (
    CcwCase,
    NonSimpleDrawingError,
    ccw_case,
    ccw_excess,
    geometric_count,
    green_green,
    lb_total,
    red_lower_bound,
    star_oracle,
    theorem_total,
)
from tricross.cyclic import DomainError, cr3_k22n, f
from tricross.model import (
    TABLES,
    Circle,
    Edge,
    GeometricDrawing,
    K22nLabels,
    TripartiteLabels,
    ValidationError,
    Vertex,
)


def ones(m, n, p, **override):
    sizes = {"M": m, "N": n, "P": p}
    tables = {name: (1,) * sizes[src] for name, (src, _dst) in TABLES.items()}
    tables.update(override)
    return TripartiteLabels(m, n, p, tables)


# -- theorem ----------------------------------------------------------------


def test_theorem_k111():
    assert theorem_total(ones(1, 1, 1)) == 0


def test_theorem_k112():
    assert theorem_total(ones(1, 1, 2, y_M_P=(1,), y_N_P=(2,))) == 0


def test_theorem_rejects_invalid():
    with pytest.raises(ValidationError):
        theorem_total(ones(1, 1, 2, y_M_P=(3,)))


def test_theorem_singleton_circles_contribute_nothing():
    # f on a one-vertex circle is 0, so only the y-term on P survives for K_{1,1,p}
    for p in range(1, 7):
        for a in range(1, p + 1):
            for b in range(1, p + 1):
                assert theorem_total(ones(1, 1, p, y_M_P=(a,), y_N_P=(b,))) == f(p, a, b)
    assert theorem_total(ones(0, 0, 0)) == 0


# -- lower-bound accounting -------------------------------------------------


def test_red_lower_bound_examples():
    assert red_lower_bound(K22nLabels(5, 2, (1, 2, 3, 4), (5, 4, 3, 2))) == 11
    assert red_lower_bound(K22nLabels(5, 3, (1, 1, 1, 1), (1, 1, 1, 1))) == 11
    assert red_lower_bound(K22nLabels(4, 4, (2, 3, 1, 1), (2, 3, 4, 4))) == 4
    # d(y1,x1) = 1, d(x2,y2) = 2, others 0
    assert red_lower_bound(K22nLabels(6, 1, (2, 1, 3, 3), (1, 3, 3, 3))) == 7


def test_green_green_examples():
    assert green_green(K22nLabels(4, 1, (1, 3, 1, 3), (1, 3, 1, 3))) == 20
    assert green_green(K22nLabels(3, 1, (1, 1, 1, 1), (1, 1, 1, 1))) == 18
    for n in range(3, 12):
        h = n // 2
        L = K22nLabels(n, 1, (1, 1 + h, 1, 1 + h), (1, 1, 1 + h, 1 + h))
        assert green_green(L) == 6 * (n // 2) * ((n - 1) // 2)


def test_lb_total_examples():
    assert lb_total(K22nLabels(3, 2, (1, 1, 1, 1), (1, 1, 1, 1))) == 25


@given(st.integers(3, 9), st.data())
def test_type23_has_slack_four(n, data):
    lab = st.integers(1, n)
    x = tuple(data.draw(lab) for _ in range(4))
    y = tuple(data.draw(lab) for _ in range(4))
    for t in (2, 3):
        assert lb_total(K22nLabels(n, t, x, y)) >= cr3_k22n(n) + 4


def test_lb_rejects_invalid():
    with pytest.raises(ValidationError):
        lb_total(K22nLabels(4, 1, (5, 1, 1, 1), (1, 1, 1, 1)))


# -- oracle and ccw classification -----------------------------------------


def test_star_oracle_examples():
    assert star_oracle(4, 1, 3) == 2
    assert star_oracle(5, 2, 2) == 10
    assert star_oracle(1, 1, 1) == 0
    with pytest.raises(DomainError):
        star_oracle(4, 0, 1)


@given(st.integers(1, 16), st.data())
def test_star_oracle_matches_f(n, data):
    xi = data.draw(st.integers(1, n))
    xj = data.draw(st.integers(1, n))
    assert star_oracle(n, xi, xj) == f(n, xi, xj)


def test_ccw_case_examples():
    assert ccw_case(8, 1, 3, 5, 7) is CcwCase.CHAIN
    assert ccw_case(8, 1, 7, 5, 3) is CcwCase.REVERSE
    assert ccw_case(8, 1, 5, 3, 7) is CcwCase.OTHER


@given(st.integers(1, 30), st.data())
def test_ccw_excess_trichotomy(n, data):
    a, b, c, d = (data.draw(st.integers(1, n)) for _ in range(4))
    assert ccw_excess(n, a, b, c, d) in (0, n, 2 * n)


# -- geometric counting -----------------------------------------------------


def _frame(vertices, edges):
    circles = [
        Circle("M", [(-30, -5), (-20, -5), (-20, 5), (-30, 5)], "cw"),
        Circle("N", [(20, -5), (30, -5), (30, 5), (20, 5)], "cw"),
        Circle("P", [(-100, -100), (100, -100), (100, 100), (-100, 100)], "ccw"),
    ]
    parts = {c: tuple(v.id for v in vertices if v.circle == c) for c in "MNP"}
    return GeometricDrawing(circles, vertices, edges, parts)


def _two_edges(waypoints=()):
    vertices = [
        Vertex("M1", "M", 1, (-25, 5)),
        Vertex("N1", "N", 1, (25, 5)),
        Vertex("P1", "P", 1, (-50, 100)),
        Vertex("P2", "P", 2, (50, 100)),
    ]
    return vertices, [Edge("M1", "P1"), Edge("N1", "P2", waypoints)]


def test_disjoint_segments():
    vertices, edges = _two_edges()
    assert geometric_count(_frame(vertices, edges)).total == 0


def test_double_crossing_is_an_error():
    vertices = [
        Vertex("M1", "M", 1, (-25, 5)),
        Vertex("P1", "P", 1, (100, 50)),
        Vertex("N1", "N", 1, (25, 5)),
        Vertex("P2", "P", 2, (100, -50)),
    ]
    # M1-P1 runs up-right; N1-P2 climbs over it and comes back down
    edges = [Edge("M1", "P1"), Edge("N1", "P2", ((60, 80),))]
    with pytest.raises(NonSimpleDrawingError, match="N1-P2"):
        geometric_count(_frame(vertices, edges))


def test_crossing_at_joint_is_an_error():
    vertices = [
        Vertex("M1", "M", 1, (-25, 5)),
        Vertex("N1", "N", 1, (25, 5)),
        Vertex("P1", "P", 1, (-50, 100)),
        Vertex("P2", "P", 2, (50, 100)),
    ]
    # both edges bend at the same point
    edges = [Edge("M1", "P2", ((0, 50),)), Edge("N1", "P1", ((0, 50),))]
    with pytest.raises(NonSimpleDrawingError, match="segment endpoint"):
        geometric_count(_frame(vertices, edges))


def _transform(d, k, tx, ty):
    def t(p):
        return (p[0] * k + tx, p[1] * k + ty)

    circles = [Circle(c.name, [t(p) for p in c.polygon], c.orientation) for c in d.circles]
    vertices = [Vertex(v.id, v.circle, v.label, t(v.point)) for v in d.vertices]
    edges = [Edge(e.u, e.v, tuple(t(p) for p in e.waypoints)) for e in d.edges]
    return GeometricDrawing(circles, vertices, edges, d.parts)


@settings(max_examples=15, deadline=None)
@given(
    st.sampled_from([(3, "type1"), (4, "type1"), (5, "type4"), (5, "type1"), (7, "type4")]),
    st.integers(1, 7),
    st.integers(-10**6, 10**6),
    st.integers(-10**6, 10**6),
)
def test_geometric_count_invariant_under_translation_and_scaling(case, k, tx, ty):
    d = realize_geometric(build(*case))
    assert geometric_count(_transform(d, k, tx, ty)) == geometric_count(d)
