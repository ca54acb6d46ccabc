"""Exhaustive certification of the ``K_{2,2,n}`` lower bound and its lemmas.

Every check scans a complete label space in lexicographic order and
returns a :class:`VerificationReport`.  The heavy loops live in
:mod:`tricross.kernels`; the small quadratic scans are plain Python.
"""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from . import kernels
from .constructions import build, construction_count
from .counting import lb_total
from .cyclic import DomainError, cr3_k22n, cyc_dist, dist_cw, f, f_min, half_product
from .model import K22nLabels

__all__ = [
    "DEFAULT_CAP",
    "DEFAULT_LB_LIMIT",
    "CHECKS",
    "VerificationReport",
    "exhaustive_lb_min",
    "check_lemma_mixed",
    "check_lemma_ys",
    "check_threeterms",
    "check_quadratic",
    "check_f_bounds",
    "mixed_slack",
    "ys_value",
    "SweepRow",
    "sweep",
    "sweep_csv",
    "sweep_table",
]

DEFAULT_CAP = 10
DEFAULT_LB_LIMIT = 7


@dataclass
class VerificationReport:
    n: int
    check: str
    universe: int
    passed: bool
    counterexamples: List[Tuple] = field(default_factory=list)
    min: Optional[int] = None
    witness: Optional[Any] = None
    wall_time: float = 0.0
    details: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        assert self.passed == (not self.counterexamples), "passed must mean no counterexamples"


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


# -- lower bound ------------------------------------------------------------


def exhaustive_lb_min(
    n: int, limit: int = DEFAULT_LB_LIMIT, method: str = "pruned", cap: int = DEFAULT_CAP
) -> VerificationReport:
    """Minimum of the lower-bound expression over every type and label tuple.

    ``method`` is ``"pruned"`` (nested minimisation, see
    :func:`tricross._pykernels.lb_pruned`) or ``"naive"`` (full ``n^8``
    scan).  The universe counts ``n^8`` type-1 tuples plus ``n^6`` tuples
    each for type 4 and for types 2/3, which share one expression.  The check
    passes iff the minimum equals ``cr3_k22n(n)``; the witness is
    ``(type, K22nLabels)`` and is re-evaluated through :func:`lb_total`.
    """
    if not isinstance(n, int) or isinstance(n, bool) or not 3 <= n <= limit:
        raise DomainError(f"n must be in [3..{limit}] (raise the limit to go further), got {n!r}")
    scan = {"pruned": kernels.lb_pruned, "naive": kernels.lb_naive}.get(method)
    if scan is None:
        raise DomainError(f"unknown method {method!r}; expected pruned or naive")
    with _Timer() as t:
        per_type = scan(n)
    best_type = min(per_type, key=lambda k: (per_type[k][0], k))
    value, tup = per_type[best_type]
    labels = K22nLabels(n, best_type, tup[:4], tup[4:])
    if lb_total(labels) != value:
        raise AssertionError(f"stale witness: lb_total{tup} = {lb_total(labels)}, kernel reported {value}")
    target = cr3_k22n(n)
    bad = []
    if value < target:
        bad.append(("below", best_type) + tup)
    elif value > target:
        bad.append(("not-attained", value, target))
    return VerificationReport(
        n,
        "lb",
        n**8 + 2 * n**6,
        not bad,
        bad[:cap],
        value,
        (best_type, labels),
        t.elapsed,
        {"method": method, "per_type": {k: per_type[k][0] for k in sorted(per_type)}, "target": target},
    )


# -- supporting lemmas ------------------------------------------------------


def _need(n: int, lo: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < lo:
        raise DomainError(f"n must be an integer >= {lo}, got {n!r}")


def mixed_slack(n: int, x1: int, y1: int, x2: int, y2: int) -> int:
    """Left side minus right side of the general mixed-term inequality."""
    lhs = 2 * dist_cw(n, y1, x1) + 2 * dist_cw(n, x2, y2) + f(n, x1, x2)
    return lhs - (half_product(n) + n - 1 - 2 * dist_cw(n, y2, y1))


def ys_value(n: int, y1: int, y2: int, y3: int, y4: int) -> int:
    """``S``: the four cross ``f`` terms minus ``4 floor(n/2) floor((n-1)/2)``."""
    return f(n, y1, y3) + f(n, y1, y4) + f(n, y2, y3) + f(n, y2, y4) - 4 * half_product(n)


def check_lemma_mixed(n: int, cap: int = DEFAULT_CAP) -> VerificationReport:
    """The mixed red/green inequality with its two strengthenings, over ``[n]^4``.

    Counterexamples are ``(case, x1, y1, x2, y2)`` with case ``a`` (general
    bound), ``b`` (non-chain, ``+2n``) or ``c`` (chain with ``2Z >= n``).
    ``min``/``witness`` give the least slack of the general bound.
    """
    _need(n, 3)
    with _Timer() as t:
        count, bad, slack, wit = kernels.scan_mixed(n, cap)
    return VerificationReport(n, "mixed", n**4, count == 0, bad, slack, wit, t.elapsed, {"failures": count})


def check_lemma_ys(n: int, cap: int = DEFAULT_CAP) -> VerificationReport:
    """The y-label inequalities over ``[n]^4``.

    Case ``i`` uses closed arcs, case ``ii`` open arcs; every tuple is also
    checked against the bound that holds in all cases (``all``).
    ``min``/``witness`` give the least value of ``S``.
    """
    _need(n, 3)
    with _Timer() as t:
        count, bad, smin, wit = kernels.scan_ys(n, cap)
    return VerificationReport(n, "ys", n**4, count == 0, bad, smin, wit, t.elapsed, {"failures": count})


def check_threeterms(n: int, cap: int = DEFAULT_CAP) -> VerificationReport:
    """The three-term distance identity and its agreement with counterclockwise order."""
    _need(n, 1)
    with _Timer() as t:
        count, bad = kernels.scan_threeterms(n, cap)
    return VerificationReport(n, "threeterms", n**4, count == 0, bad, None, None, t.elapsed, {"failures": count})


def check_quadratic(n: int, cap: int = DEFAULT_CAP) -> VerificationReport:
    """``2 d(v,u) + f(u,v)`` as a quadratic in ``d = d(v,u)``, and its minimum."""
    _need(n, 2)
    bad: List[Tuple] = []
    count = 0
    with _Timer() as t:
        for u in range(1, n + 1):
            for v in range(1, n + 1):
                d = dist_cw(n, v, u)
                if 2 * d + f(n, u, v) != d * d + (2 - n) * d + comb(n, 2):
                    count += 1
                    if len(bad) < cap:
                        bad.append(("identity", u, v))
        q = [d * d + (2 - n) * d + comb(n, 2) for d in range(n)]
        d_star = (n - 2) // 2
        expected = half_product(n) + n - 1
        if min(q) != q[d_star]:
            count += 1
            bad.append(("argmin", d_star, q[d_star], min(q)))
        if q[d_star] != expected:
            count += 1
            bad.append(("minimum", d_star, q[d_star], expected))
    return VerificationReport(n, "quadratic", n * n, count == 0, bad[:cap], min(q), d_star, t.elapsed, {"failures": count})


def check_f_bounds(n: int, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Floor bound on ``f``, the exact argmin set, and the runner-up gap."""
    _need(n, 2)
    bad: List[Tuple] = []
    count = 0
    floor_bound = half_product(n)
    halves = (n // 2, (n + 1) // 2)
    with _Timer() as t:
        values = {(u, v): f(n, u, v) for u in range(1, n + 1) for v in range(1, n + 1)}
        m = min(values.values())
        for (u, v), val in values.items():
            problems = []
            if val < floor_bound:
                problems.append("floor")
            if (val == m) != (cyc_dist(n, u, v) in halves):
                problems.append("argmin")
            for p in problems:
                count += 1
                if len(bad) < cap:
                    bad.append((p, u, v, val))
        others = [val for (u, v), val in values.items() if cyc_dist(n, u, v) not in halves]
        gap = min(others) - m if others else None
        want_m, want_gap = f_min(n)
        if (m, gap) != (want_m, want_gap):
            count += 1
            bad.append(("gap", m, gap, want_m, want_gap))
        witness = next(k for k in sorted(values) if values[k] == m)
    return VerificationReport(
        n, "f_bounds", n * n, count == 0, bad[:cap], m, witness, t.elapsed, {"gap": gap, "failures": count}
    )


# -- sweep ------------------------------------------------------------------

# check name -> column header, in output order
CHECKS = {
    "lb": "lb_min",
    "mixed": "lemma_mixed",
    "ys": "lemma_ys",
    "threeterms": "threeterms",
    "quadratic": "quadratic",
    "f_bounds": "f_bounds",
}
COLUMNS = ("n", "cr3", "type1", "type4") + tuple(CHECKS.values()) + ("pass", "note")

_LEMMAS = {
    "mixed": check_lemma_mixed,
    "ys": check_lemma_ys,
    "threeterms": check_threeterms,
    "quadratic": check_quadratic,
    "f_bounds": check_f_bounds,
}


@dataclass
class SweepRow:
    n: int
    cells: Dict[str, str]
    passed: bool
    notes: List[str]

    def as_list(self) -> List[str]:
        return [self.cells.get(c, "") for c in COLUMNS[:-2]] + ["yes" if self.passed else "NO", "; ".join(self.notes)]


def _row(args) -> SweepRow:
    n, lb_max, checks, cap = args
    cells: Dict[str, str] = {"n": str(n)}
    notes: List[str] = []
    ok = True
    try:
        target = cr3_k22n(n)
        cells["cr3"] = str(target)
    except DomainError as exc:
        return SweepRow(n, cells, False, [str(exc)])
    for variant, col in (("type1", "type1"), ("type4", "type4")):
        if variant == "type4" and n % 2 == 0:
            cells[col] = "n even: undefined"
            continue
        try:
            value = construction_count(build(n, variant))
            cells[col] = str(value)
            if value != target:
                ok = False
                notes.append(f"{variant} construction gives {value}")
        except (DomainError, AssertionError) as exc:
            ok = False
            cells[col] = "error"
            notes.append(f"{variant}: {exc}")
    for name, col in CHECKS.items():
        if name not in checks:
            cells[col] = "-"
            continue
        try:
            if name == "lb":
                if n > lb_max:
                    cells[col] = "skipped"
                    continue
                rep = exhaustive_lb_min(n, limit=lb_max)
                cells[col] = f"{rep.min}" if rep.passed else f"{rep.min} FAIL"
            else:
                rep = _LEMMAS[name](n, cap)
                cells[col] = "pass" if rep.passed else f"FAIL({rep.details['failures']})"
            if not rep.passed:
                ok = False
                notes.append(f"{name}: first counterexample {rep.counterexamples[0]}")
        except (DomainError, AssertionError) as exc:
            ok = False
            cells[col] = "error"
            notes.append(f"{name}: {exc}")
    return SweepRow(n, cells, ok, notes)


def sweep(
    n_lo: int,
    n_hi: int,
    lb_max: int = DEFAULT_LB_LIMIT,
    checks: Iterable[str] = tuple(CHECKS),
    jobs: int = 1,
    cap: int = DEFAULT_CAP,
) -> List[SweepRow]:
    """One row per ``n`` in ``[n_lo, n_hi]``; errors become row notes, never exceptions.

    With ``jobs > 1`` rows are computed in worker processes and collected
    in ``n`` order, so the result does not depend on ``jobs``.
    """
    if not isinstance(n_lo, int) or not isinstance(n_hi, int) or not 3 <= n_lo <= n_hi:
        raise DomainError(f"need 3 <= n_lo <= n_hi, got ({n_lo!r}, {n_hi!r})")
    checks = tuple(checks)
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise DomainError(f"unknown check(s) {', '.join(unknown)}; expected {', '.join(CHECKS)}")
    args = [(n, lb_max, checks, cap) for n in range(n_lo, n_hi + 1)]
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_row, args))
    return [_row(a) for a in args]


def sweep_csv(rows: Sequence[SweepRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in rows:
        w.writerow(r.as_list())
    return buf.getvalue()


def sweep_table(rows: Sequence[SweepRow]) -> str:
    grid = [list(COLUMNS)] + [r.as_list() for r in rows]
    widths = [max(len(line[i]) for line in grid) for i in range(len(COLUMNS))]
    out = []
    for k, line in enumerate(grid):
        out.append("  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip())
        if k == 0:
            out.append("  ".join("-" * w for w in widths))
    return "\n".join(out) + "\n"
