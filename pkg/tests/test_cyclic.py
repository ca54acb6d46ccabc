from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tricross.cyclic import (
    DomainError,
    c_n,
    cr2_kmn_div,
    cr2_knn,
    cr3_k22n,
    cyc_dist,
    delta,
    dist_cw,
    f,
    f_min,
    half_product,
)


@st.composite
def label_pair(draw, max_n=30):
    n = draw(st.integers(1, max_n))
    return n, draw(st.integers(1, n)), draw(st.integers(1, n))


@pytest.mark.parametrize("n,k,l,want", [(5, 4, 2, 3), (7, 3, 3, 0), (7, 3, 5, 2)])
def test_dist_cw_examples(n, k, l, want):
    assert dist_cw(n, k, l) == want


@pytest.mark.parametrize("n,a,b,want", [(7, 1, 6, 2), (6, 1, 4, 3), (5, 2, 2, 0)])
def test_cyc_dist_examples(n, a, b, want):
    assert cyc_dist(n, a, b) == want


@pytest.mark.parametrize("n,u,v,want", [(6, 1, 4, 6), (5, 1, 2, 6), (5, 1, 1, 10)])
def test_f_examples(n, u, v, want):
    assert f(n, u, v) == want


@pytest.mark.parametrize("args", [(5, 0, 1), (5, 6, 1), (5, 1, 6), (0, 1, 1), (5, True, 1)])
def test_label_out_of_range(args):
    for fn in (dist_cw, cyc_dist, f):
        with pytest.raises(DomainError):
            fn(*args)


def test_f_min_examples():
    assert f_min(6) == (6, 1)
    assert f_min(5) == (4, 2)
    # n = 2: distinct labels give f = 0, coincident ones f = 1
    assert f_min(2) == (0, 1)
    with pytest.raises(DomainError):
        f_min(1)


def test_delta():
    assert [delta(4), delta(7), delta(0)] == [0, 1, 0]
    with pytest.raises(DomainError):
        delta(-1)


def test_cr3_values():
    assert [cr3_k22n(n) for n in (3, 4, 5)] == [9, 17, 31]
    for bad in (2, 0, -1):
        with pytest.raises(DomainError):
            cr3_k22n(bad)


def test_c_n_values():
    assert [c_n(4), c_n(5), c_n(1)] == [12, 24, 0]


def test_bipartite_values():
    assert [cr2_knn(4), cr2_knn(3), cr2_knn(2)] == [16, 3, 0]
    assert cr2_kmn_div(2, 4) == 2
    assert cr2_kmn_div(1, 5) == 0
    assert cr2_kmn_div(4, 4) == cr2_knn(4) == 16


def test_kmn_requires_divisibility():
    with pytest.raises(DomainError, match="does not divide"):
        cr2_kmn_div(3, 4)


@given(label_pair())
def test_f_symmetric(t):
    n, u, v = t
    assert f(n, u, v) == f(n, v, u)


@given(label_pair())
def test_f_floor_bound(t):
    n, u, v = t
    assert f(n, u, v) >= half_product(n)


@given(label_pair())
def test_distances_sum(t):
    n, u, v = t
    s = dist_cw(n, u, v) + dist_cw(n, v, u)
    assert s == (0 if u == v else n)


@given(label_pair())
def test_cyc_dist_range(t):
    n, u, v = t
    assert 0 <= cyc_dist(n, u, v) <= n // 2


def test_c_n_relations():
    for n in range(2, 31):
        assert c_n(n) == 6 * half_product(n) == 6 * f_min(n)[0]
    assert c_n(1) == 6 * half_product(1)


def test_f_min_matches_scan():
    for n in range(2, 31):
        values = [f(n, 1, v) for v in range(1, n + 1)]
        assert f_min(n)[0] == min(values) == comb(n // 2, 2) + comb((n + 1) // 2, 2)
        assert f_min(n)[1] == (1 if n % 2 == 0 else 2)


def test_bipartite_balanced_consistency():
    for n in range(1, 21):
        assert cr2_kmn_div(n, n) == cr2_knn(n)
