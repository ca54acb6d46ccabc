# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels; see ``_pykernels.py`` for the documented reference.

Same signatures, same visiting order, same results.  ``cdivision`` is on,
so every modulus below is taken of a non-negative operand (``a - b + n``).
"""

from libc.stdlib cimport malloc, free

IMPLEMENTATION = "cython"


cdef long long* _ftab(int n) except NULL:
    cdef long long* F = <long long*> malloc(n * sizeof(long long))
    if F == NULL:
        raise MemoryError()
    cdef long long d
    for d in range(n):
        F[d] = d * (d - 1) // 2 + (n - d) * (n - d - 1) // 2
    return F


cdef inline int _d(int a, int b, int n) nogil:
    # (b - a) mod n for a, b in [0, n)
    return (b - a + n) % n


def _one(*t):
    return tuple(v + 1 for v in t)


def lb_naive(int n):
    cdef long long* F = _ftab(n)
    cdef int x1, x2, x3, x4, y1, y2, y3, y4, a1, a2, a3, a4
    cdef long long fx12, fx34, f13, f23, gg, v
    cdef long long b1 = -1, b2 = -1, b4 = -1
    cdef int w1[8]
    cdef int w2[8]
    cdef int w4[8]
    try:
        for x1 in range(n):
            for x2 in range(n):
                fx12 = F[_d(x1, x2, n)]
                for x3 in range(n):
                    for x4 in range(n):
                        fx34 = F[_d(x3, x4, n)]
                        for y1 in range(n):
                            a1 = _d(y1, x1, n)
                            for y2 in range(n):
                                a2 = _d(x2, y2, n)
                                for y3 in range(n):
                                    a3 = _d(y3, x3, n)
                                    f13 = F[_d(y1, y3, n)]
                                    f23 = F[_d(y2, y3, n)]
                                    for y4 in range(n):
                                        a4 = _d(x4, y4, n)
                                        gg = fx12 + fx34 + f13 + F[_d(y1, y4, n)] + f23 + F[_d(y2, y4, n)]
                                        v = 2 * (a1 + a2 + a3 + a4) + 1 + gg
                                        if b1 < 0 or v < b1:
                                            b1 = v
                                            w1[0] = x1; w1[1] = x2; w1[2] = x3; w1[3] = x4
                                            w1[4] = y1; w1[5] = y2; w1[6] = y3; w1[7] = y4
                                        v = 2 * n + 1 + gg
                                        if b2 < 0 or v < b2:
                                            b2 = v
                                            w2[0] = x1; w2[1] = x2; w2[2] = x3; w2[3] = x4
                                            w2[4] = y1; w2[5] = y2; w2[6] = y3; w2[7] = y4
                                        v = 2 * (a1 + a2) + n + gg
                                        if b4 < 0 or v < b4:
                                            b4 = v
                                            w4[0] = x1; w4[1] = x2; w4[2] = x3; w4[3] = x4
                                            w4[4] = y1; w4[5] = y2; w4[6] = y3; w4[7] = y4
    finally:
        free(F)
    return {
        1: (b1, tuple(w1[i] + 1 for i in range(8))),
        2: (b2, tuple(w2[i] + 1 for i in range(8))),
        4: (b4, tuple(w4[i] + 1 for i in range(8))),
    }


def lb_pruned(int n):
    cdef long long* F = _ftab(n)
    cdef long long* g = <long long*> malloc(n * n * sizeof(long long))
    cdef int* ax = <int*> malloc(2 * n * n * sizeof(int))
    cdef int x1, x2, y1, y2, y3, y4, h = n // 2
    cdef long long best, base, v, v1, v4, v2, g12, f13, f23, cross, fmin
    cdef long long best1 = -1, best4 = -1, best2 = -1
    cdef int w1[4]
    cdef int w4[4]
    cdef int w2[4]
    if g == NULL or ax == NULL:
        free(F); free(g); free(ax)
        raise MemoryError()
    try:
        fmin = F[h]
        for y1 in range(n):
            for y2 in range(n):
                best = -1
                for x1 in range(n):
                    base = 2 * _d(y1, x1, n)
                    for x2 in range(n):
                        v = base + 2 * _d(x2, y2, n) + F[_d(x1, x2, n)]
                        if best < 0 or v < best:
                            best = v
                            ax[2 * (y1 * n + y2)] = x1
                            ax[2 * (y1 * n + y2) + 1] = x2
                g[y1 * n + y2] = best
        for y1 in range(n):
            for y2 in range(n):
                g12 = g[y1 * n + y2]
                for y3 in range(n):
                    f13 = F[_d(y1, y3, n)]
                    f23 = F[_d(y2, y3, n)]
                    for y4 in range(n):
                        cross = f13 + F[_d(y1, y4, n)] + f23 + F[_d(y2, y4, n)]
                        v1 = 1 + g12 + g[y3 * n + y4] + cross
                        if best1 < 0 or v1 < best1:
                            best1 = v1
                            w1[0] = y1; w1[1] = y2; w1[2] = y3; w1[3] = y4
                        v4 = n + fmin + g12 + cross
                        if best4 < 0 or v4 < best4:
                            best4 = v4
                            w4[0] = y1; w4[1] = y2; w4[2] = y3; w4[3] = y4
                        v2 = 2 * n + 1 + 2 * fmin + cross
                        if best2 < 0 or v2 < best2:
                            best2 = v2
                            w2[0] = y1; w2[1] = y2; w2[2] = y3; w2[3] = y4
        k12 = 2 * (w1[0] * n + w1[1])
        k34 = 2 * (w1[2] * n + w1[3])
        out = {1: (best1, _one(ax[k12], ax[k12 + 1], ax[k34], ax[k34 + 1], w1[0], w1[1], w1[2], w1[3]))}
        k12 = 2 * (w4[0] * n + w4[1])
        out[4] = (best4, _one(ax[k12], ax[k12 + 1], 0, h, w4[0], w4[1], w4[2], w4[3]))
        out[2] = (best2, _one(0, h, 0, h, w2[0], w2[1], w2[2], w2[3]))
    finally:
        free(F); free(g); free(ax)
    return out


def scan_mixed(int n, int cap):
    cdef long long* F = _ftab(n)
    cdef long long M = (n // 2) * ((n - 1) // 2)
    cdef int x1, y1, x2, y2, d_y1x1, d_x2y2, z, excess
    cdef long long lhs, rhs, q, min_slack = 0
    cdef bint have = False, fa, fb, fc
    cdef long long bad_count = 0
    bad = []
    witness = None
    try:
        for x1 in range(n):
            for y1 in range(n):
                for x2 in range(n):
                    for y2 in range(n):
                        d_y1x1 = _d(y1, x1, n)
                        d_x2y2 = _d(x2, y2, n)
                        z = _d(y2, y1, n)
                        lhs = 2 * d_y1x1 + 2 * d_x2y2 + F[_d(x1, x2, n)]
                        rhs = M + n - 1 - 2 * z
                        excess = d_x2y2 + z + d_y1x1 - _d(x2, x1, n)
                        fa = lhs < rhs
                        fb = excess != 0 and lhs < rhs + 2 * n
                        fc = False
                        if excess == 0 and 2 * z >= n:
                            q = 2 * z - n + 2
                            fc = lhs < rhs + q * q // 4
                        if not have or lhs - rhs < min_slack:
                            have = True
                            min_slack = lhs - rhs
                            witness = _one(x1, y1, x2, y2)
                        if fa or fb or fc:
                            for case, hit in (("a", fa), ("b", fb), ("c", fc)):
                                if hit:
                                    bad_count += 1
                                    if len(bad) < cap:
                                        bad.append((case,) + _one(x1, y1, x2, y2))
    finally:
        free(F)
    return bad_count, bad, (min_slack if have else None), witness


def scan_ys(int n, int cap):
    cdef long long* F = _ftab(n)
    cdef long long M = (n // 2) * ((n - 1) // 2)
    cdef int dn = n % 2
    cdef int y1, y2, y3, y4, z1, z3, d34, d43, p1, p2, q1, q2
    cdef long long s, min_s = 0
    cdef bint have = False, closed, opened, fi, fii, fall
    cdef long long bad_count = 0
    bad = []
    witness = None
    try:
        for y1 in range(n):
            for y2 in range(n):
                z1 = min(_d(y1, y2, n), _d(y2, y1, n))
                for y3 in range(n):
                    for y4 in range(n):
                        z3 = min(_d(y3, y4, n), _d(y4, y3, n))
                        s = F[_d(y1, y3, n)] + F[_d(y1, y4, n)] + F[_d(y2, y3, n)] + F[_d(y2, y4, n)] - 4 * M
                        d34 = _d(y3, y4, n)
                        d43 = _d(y4, y3, n)
                        p1 = _d(y3, y1, n)
                        p2 = _d(y3, y2, n)
                        q1 = _d(y4, y1, n)
                        q2 = _d(y4, y2, n)
                        closed = (p1 <= d34 and p2 <= d34) or (q1 <= d43 and q2 <= d43)
                        opened = (0 < p1 < d34 and 0 < q2 < d43) or (0 < p2 < d34 and 0 < q1 < d43)
                        fi = closed and s < z1 * z1 + z3 * z3 - dn * ((z1 + z3) % 2)
                        fii = opened and 4 * s < z1 * z1 + (n - z1) * (n - z1) + z3 * z3 + (n - z3) * (n - z3) - 2 * dn
                        fall = s < z1 * z1 - dn * (z1 % 2)
                        if not have or s < min_s:
                            have = True
                            min_s = s
                            witness = _one(y1, y2, y3, y4)
                        if fi or fii or fall:
                            for case, hit in (("i", fi), ("ii", fii), ("all", fall)):
                                if hit:
                                    bad_count += 1
                                    if len(bad) < cap:
                                        bad.append((case,) + _one(y1, y2, y3, y4))
    finally:
        free(F)
    return bad_count, bad, (min_s if have else None), witness


def scan_threeterms(int n, int cap):
    cdef int a, b, c, d, excess, pb, pc, pd, want
    cdef bint ok
    cdef long long bad_count = 0
    bad = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    excess = _d(a, b, n) + _d(b, c, n) + _d(c, d, n) - _d(a, d, n)
                    ok = excess == 0 or excess == n or excess == 2 * n
                    if ok and a != b and a != c and a != d and b != c and b != d and c != d:
                        pb = _d(a, b, n)
                        pc = _d(a, c, n)
                        pd = _d(a, d, n)
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
