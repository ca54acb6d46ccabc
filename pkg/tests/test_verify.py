import pytest

from tricross import verify
from tricross.counting import lb_total
from tricross.cyclic import DomainError, cr3_k22n
from tricross.verify import (
    VerificationReport,
    check_f_bounds,
    check_lemma_mixed,
    check_lemma_ys,
    check_quadratic,
    check_threeterms,
    exhaustive_lb_min,
    mixed_slack,
    sweep,
    sweep_csv,
    sweep_table,
    ys_value,
)


@pytest.mark.parametrize("n,want", [(3, 9), (4, 17), (5, 31), (6, 45)])
def test_lb_min_examples(n, want):
    rep = exhaustive_lb_min(n)
    assert rep.passed and rep.min == want == cr3_k22n(n)
    assert rep.counterexamples == []
    assert rep.universe == n**8 + 2 * n**6


@pytest.mark.parametrize("n", [3, 4])
def test_pruned_equals_naive(n):
    pruned = exhaustive_lb_min(n, method="pruned")
    naive = exhaustive_lb_min(n, method="naive")
    assert pruned.min == naive.min
    assert pruned.details["per_type"] == naive.details["per_type"]


@pytest.mark.parametrize("n", range(3, 8))
def test_lb_witness_reevaluates(n):
    rep = exhaustive_lb_min(n)
    t, labels = rep.witness
    assert labels.type == t
    assert lb_total(labels) == rep.min


def test_lb_range():
    for n in (2, 8):
        with pytest.raises(DomainError):
            exhaustive_lb_min(n)
    assert exhaustive_lb_min(8, limit=8).min == cr3_k22n(8)
    with pytest.raises(DomainError, match="method"):
        exhaustive_lb_min(3, method="clever")


def test_lemma_mixed_examples():
    rep = check_lemma_mixed(3)
    assert rep.passed and rep.universe == 81
    rep = check_lemma_mixed(10)
    assert rep.passed and rep.universe == 10**4


@pytest.mark.parametrize("n", range(3, 16))
def test_lemma_mixed_witness_is_tight(n):
    rep = check_lemma_mixed(n)
    assert mixed_slack(n, *rep.witness) == rep.min
    assert rep.min == 0  # the general bound is attained


def test_lemma_ys_examples():
    assert check_lemma_ys(3).passed
    assert check_lemma_ys(12).passed


@pytest.mark.parametrize("n", range(3, 16))
def test_lemma_ys_witness(n):
    rep = check_lemma_ys(n)
    assert ys_value(n, *rep.witness) == rep.min == 0
    h = n // 2
    assert ys_value(n, 1, 1, 1 + h, 1 + h) == 0


def test_threeterms_examples():
    rep = check_threeterms(8)
    assert rep.passed and rep.universe == 4096
    assert check_threeterms(1).passed
    assert check_threeterms(30).passed


def test_quadratic_examples():
    rep = check_quadratic(6)
    assert rep.passed and (rep.min, rep.witness) == (11, 2)
    rep = check_quadratic(5)
    assert rep.passed and (rep.min, rep.witness) == (8, 1)
    for n in range(2, 31):
        assert check_quadratic(n).passed


def test_f_bounds_examples():
    rep = check_f_bounds(6)
    assert rep.passed and rep.details["gap"] == 1
    assert check_f_bounds(7).details["gap"] == 2
    rep = check_f_bounds(2)
    assert rep.passed and rep.min == 0 and rep.witness == (1, 2)


def test_report_pass_means_no_counterexamples():
    with pytest.raises(AssertionError):
        VerificationReport(3, "x", 1, True, [("bad",)])


def test_sweep_small():
    rows = sweep(3, 5)
    assert [r.n for r in rows] == [3, 4, 5]
    assert all(r.passed for r in rows)


def test_sweep_lb_limit_and_even_type4():
    rows = sweep(3, 12, lb_max=7, checks=["lb"])
    assert [r.cells["lb_min"] for r in rows] == [str(cr3_k22n(n)) for n in range(3, 8)] + ["skipped"] * 5
    assert sweep(4, 4)[0].cells["type4"] == "n even: undefined"


def test_sweep_deterministic_across_jobs():
    one = sweep_csv(sweep(3, 9, jobs=1))
    many = sweep_csv(sweep(3, 9, jobs=3))
    assert one == many
    assert one.splitlines()[0] == ",".join(verify.COLUMNS)


def test_sweep_errors_become_notes(monkeypatch):
    def broken(n, cap):
        raise DomainError("boom")

    monkeypatch.setitem(verify._LEMMAS, "mixed", broken)
    rows = sweep(3, 4)
    assert [r.cells["lemma_mixed"] for r in rows] == ["error", "error"]
    assert all(not r.passed and "mixed: boom" in r.notes for r in rows)
    assert "NO" in sweep_table(rows)


def test_sweep_rejects_bad_arguments():
    with pytest.raises(DomainError):
        sweep(2, 5)
    with pytest.raises(DomainError, match="unknown check"):
        sweep(3, 4, checks=["nope"])
