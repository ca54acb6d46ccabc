"""Pure-Python scan kernels.

Reference implementation of the exhaustive loops behind
:mod:`tricross.verify`; :mod:`tricross._kernels` is a line-by-line Cython
port.  Labels run over ``0..n-1`` inside the loops and every tuple handed
back is 1-based.  Tuples are visited in lexicographic order, so the first
``cap`` counterexamples and every reported witness are reproducible.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

IMPLEMENTATION = "python"


def _ftab(n: int) -> List[int]:
    return [d * (d - 1) // 2 + (n - d) * (n - d - 1) // 2 for d in range(n)]


def _one(*t: int) -> Tuple[int, ...]:
    return tuple(v + 1 for v in t)


def lb_naive(n: int) -> Dict[int, Tuple[int, Tuple[int, ...]]]:
    """Minimum of the lower-bound expression per type by a full ``n^8`` scan.

    Returns ``{type: (min, (x1..x4, y1..y4))}`` for types 1, 2 and 4; type 3
    shares type 2's expression.
    """
    F = _ftab(n)
    best = {1: (None, None), 2: (None, None), 4: (None, None)}
    r = range(n)
    for x1 in r:
        for x2 in r:
            fx12 = F[(x2 - x1) % n]
            for x3 in r:
                for x4 in r:
                    fx34 = F[(x4 - x3) % n]
                    for y1 in r:
                        a1 = (x1 - y1) % n
                        for y2 in r:
                            a2 = (y2 - x2) % n
                            for y3 in r:
                                a3 = (x3 - y3) % n
                                f13 = F[(y3 - y1) % n]
                                f23 = F[(y3 - y2) % n]
                                for y4 in r:
                                    a4 = (y4 - x4) % n
                                    gg = fx12 + fx34 + f13 + F[(y4 - y1) % n] + f23 + F[(y4 - y2) % n]
                                    for t, red in (
                                        (1, 2 * (a1 + a2 + a3 + a4) + 1),
                                        (2, 2 * n + 1),
                                        (4, 2 * (a1 + a2) + n),
                                    ):
                                        v = red + gg
                                        if best[t][0] is None or v < best[t][0]:
                                            best[t] = (v, _one(x1, x2, x3, x4, y1, y2, y3, y4))
    return best


def _g_table(n: int, F: List[int]):
    """``g[y1][y2]`` = min over ``x1, x2`` of ``2d(y1,x1) + 2d(x2,y2) + f(x1,x2)`` and its argmin."""
    g = [[0] * n for _ in range(n)]
    arg = [[(0, 0)] * n for _ in range(n)]
    for y1 in range(n):
        for y2 in range(n):
            best = None
            for x1 in range(n):
                base = 2 * ((x1 - y1) % n)
                for x2 in range(n):
                    v = base + 2 * ((y2 - x2) % n) + F[(x2 - x1) % n]
                    if best is None or v < best:
                        best = v
                        arg[y1][y2] = (x1, x2)
            g[y1][y2] = best
    return g, arg


def lb_pruned(n: int) -> Dict[int, Tuple[int, Tuple[int, ...]]]:
    """Same result as :func:`lb_naive`, using the separable structure of the expression.

    ``x1, x2`` only meet ``y1, y2`` (through the red term and ``f(x1,x2)``),
    and likewise ``x3, x4`` with ``y3, y4``; those inner minimisations are
    tabulated once in ``g``.  In type 4 the pair ``x3, x4`` appears only in
    ``f(x3,x4)`` and in types 2/3 no ``x`` meets the red term at all.
    """
    F = _ftab(n)
    g, arg = _g_table(n, F)
    h = n // 2
    fmin = F[h]
    best1 = best4 = best2 = None
    w1 = w4 = w2 = None
    r = range(n)
    for y1 in r:
        for y2 in r:
            g12 = g[y1][y2]
            for y3 in r:
                f13 = F[(y3 - y1) % n]
                f23 = F[(y3 - y2) % n]
                for y4 in r:
                    cross = f13 + F[(y4 - y1) % n] + f23 + F[(y4 - y2) % n]
                    v1 = 1 + g12 + g[y3][y4] + cross
                    if best1 is None or v1 < best1:
                        best1, w1 = v1, (y1, y2, y3, y4)
                    v4 = n + fmin + g12 + cross
                    if best4 is None or v4 < best4:
                        best4, w4 = v4, (y1, y2, y3, y4)
                    v2 = 2 * n + 1 + 2 * fmin + cross
                    if best2 is None or v2 < best2:
                        best2, w2 = v2, (y1, y2, y3, y4)
    y1, y2, y3, y4 = w1
    x1, x2 = arg[y1][y2]
    x3, x4 = arg[y3][y4]
    out = {1: (best1, _one(x1, x2, x3, x4, y1, y2, y3, y4))}
    y1, y2, y3, y4 = w4
    x1, x2 = arg[y1][y2]
    out[4] = (best4, _one(x1, x2, 0, h, y1, y2, y3, y4))
    y1, y2, y3, y4 = w2
    out[2] = (best2, _one(0, h, 0, h, y1, y2, y3, y4))
    return out


def scan_mixed(n: int, cap: int):
    """Check the mixed-term inequality over all ``(x1, y1, x2, y2)``.

    Returns ``(bad_count, bad, min_slack, witness)`` where ``bad`` holds the
    first ``cap`` failures as ``(case, x1, y1, x2, y2)`` and ``min_slack`` is
    the least ``lhs - rhs`` of the general bound, attained at ``witness``.
    """
    F = _ftab(n)
    M = (n // 2) * ((n - 1) // 2)
    bad_count, bad = 0, []
    min_slack, witness = None, None
    r = range(n)
    for x1 in r:
        for y1 in r:
            for x2 in r:
                for y2 in r:
                    d_y1x1 = (x1 - y1) % n
                    d_x2y2 = (y2 - x2) % n
                    z = (y1 - y2) % n
                    lhs = 2 * d_y1x1 + 2 * d_x2y2 + F[(x2 - x1) % n]
                    rhs = M + n - 1 - 2 * z
                    excess = d_x2y2 + z + d_y1x1 - (x1 - x2) % n
                    failed = []
                    if lhs < rhs:
                        failed.append("a")
                    if excess != 0 and lhs < rhs + 2 * n:
                        failed.append("b")
                    if excess == 0 and 2 * z >= n:
                        q = 2 * z - n + 2
                        if lhs < rhs + q * q // 4:
                            failed.append("c")
                    if min_slack is None or lhs - rhs < min_slack:
                        min_slack, witness = lhs - rhs, _one(x1, y1, x2, y2)
                    for case in failed:
                        bad_count += 1
                        if len(bad) < cap:
                            bad.append((case,) + _one(x1, y1, x2, y2))
    return bad_count, bad, min_slack, witness


def scan_ys(n: int, cap: int):
    """Check the y-label inequalities over all ``(y1, y2, y3, y4)``.

    Returns ``(bad_count, bad, min_s, witness)``; ``min_s`` is the least
    value of ``S`` (the four cross terms minus ``4M``).
    """
    F = _ftab(n)
    M = (n // 2) * ((n - 1) // 2)
    dn = n % 2
    bad_count, bad = 0, []
    min_s, witness = None, None
    r = range(n)
    for y1 in r:
        for y2 in r:
            z1 = min((y2 - y1) % n, (y1 - y2) % n)
            for y3 in r:
                for y4 in r:
                    z3 = min((y4 - y3) % n, (y3 - y4) % n)
                    s = F[(y3 - y1) % n] + F[(y4 - y1) % n] + F[(y3 - y2) % n] + F[(y4 - y2) % n] - 4 * M
                    d34 = (y4 - y3) % n
                    d43 = (y3 - y4) % n
                    p1, p2 = (y1 - y3) % n, (y2 - y3) % n
                    q1, q2 = (y1 - y4) % n, (y2 - y4) % n
                    closed = (p1 <= d34 and p2 <= d34) or (q1 <= d43 and q2 <= d43)
                    opened = (0 < p1 < d34 and 0 < q2 < d43) or (0 < p2 < d34 and 0 < q1 < d43)
                    failed = []
                    if closed and s < z1 * z1 + z3 * z3 - dn * ((z1 + z3) % 2):
                        failed.append("i")
                    if opened and 4 * s < z1 * z1 + (n - z1) ** 2 + z3 * z3 + (n - z3) ** 2 - 2 * dn:
                        failed.append("ii")
                    if s < z1 * z1 - dn * (z1 % 2):
                        failed.append("all")
                    if min_s is None or s < min_s:
                        min_s, witness = s, _one(y1, y2, y3, y4)
                    for case in failed:
                        bad_count += 1
                        if len(bad) < cap:
                            bad.append((case,) + _one(y1, y2, y3, y4))
    return bad_count, bad, min_s, witness


def scan_threeterms(n: int, cap: int):
    """Check the three-term distance identity over all ``(a, b, c, d)``.

    The excess must lie in ``{0, n, 2n}``; for four distinct labels its case
    must match the order in which ``b, c, d`` follow ``a`` counterclockwise.
    Returns ``(bad_count, bad)``.
    """
    bad_count, bad = 0, []
    r = range(n)
    for a in r:
        for b in r:
            for c in r:
                for d in r:
                    excess = (b - a) % n + (c - b) % n + (d - c) % n - (d - a) % n
                    ok = excess in (0, n, 2 * n)
                    if ok and len({a, b, c, d}) == 4:
                        pb, pc, pd = (b - a) % n, (c - a) % n, (d - a) % n
                        if pb < pc < pd:
                            want = 0
                        elif pd < pc < pb:
                            want = 2 * n
                        else:
                            want = n
                        ok = excess == want
                    if not ok:
                        bad_count += 1
                        if len(bad) < cap:
                            bad.append(("excess",) + _one(a, b, c, d))
    return bad_count, bad
