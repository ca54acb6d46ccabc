"""Cyclic combinatorics on labelled circles and closed-form crossing numbers.

Labels are 1-based everywhere in this module: a circle with ``n`` vertices
carries the labels ``1..n`` in its reading direction (clockwise for the two
inner circles, counterclockwise for the outer one).
"""

from __future__ import annotations

from math import comb

__all__ = [
    "DomainError",
    "check_label",
    "dist_cw",
    "cyc_dist",
    "f",
    "f_min",
    "delta",
    "half_product",
    "cr3_k22n",
    "c_n",
    "cr2_knn",
    "cr2_kmn_div",
]

# Largest value any count may reach; everything here fits a signed 64-bit word.
INT64_MAX = 2**63 - 1


class DomainError(ValueError):
    """An argument lies outside the domain of a formula or operation."""


def _check_size(n: int, minimum: int = 1, what: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"{what} must be an integer, got {n!r}")
    if n < minimum:
        raise DomainError(f"{what} must be >= {minimum}, got {n}")


def check_label(n: int, k: int, what: str = "label") -> None:
    """Raise :class:`DomainError` unless ``k`` is a valid label on an ``n``-circle."""
    _check_size(n)
    if not isinstance(k, int) or isinstance(k, bool) or not 1 <= k <= n:
        raise DomainError(f"{what} {k!r} is not in [1..{n}]")


def _fits(value: int) -> int:
    assert -INT64_MAX <= value <= INT64_MAX, "count overflows 64 bits"
    return value


def dist_cw(n: int, k: int, l: int) -> int:
    """Directed distance ``(l - k) mod n`` from label ``k`` to label ``l``."""
    check_label(n, k)
    check_label(n, l)
    return (l - k) % n


def cyc_dist(n: int, a: int, b: int) -> int:
    """Distance between two labels measured the short way round."""
    d = dist_cw(n, a, b)
    return min(d, n - d) if d else 0


def f(n: int, u: int, v: int) -> int:
    """Crossings between two complete stars whose wrap gaps sit at ``u`` and ``v``.

    Equal to ``C(d, 2) + C(n - d, 2)`` with ``d = dist_cw(n, u, v)``.
    """
    d = dist_cw(n, u, v)
    return comb(d, 2) + comb(n - d, 2)


def half_product(n: int) -> int:
    """``floor(n/2) * floor((n-1)/2)``, the minimum value of :func:`f`."""
    return (n // 2) * ((n - 1) // 2)


def f_min(n: int) -> tuple[int, int]:
    """Minimum ``M`` of :func:`f` and the excess of the runner-up.

    The runner-up is the smallest value over label pairs (coincident pairs
    included) whose cyclic separation is neither ``floor(n/2)`` nor
    ``ceil(n/2)``.  The excess is 1 for even ``n`` and 2 for odd ``n``.
    """
    _check_size(n, 2)
    lo, hi = n // 2, (n + 1) // 2
    values = [comb(d, 2) + comb(n - d, 2) for d in range(n)]
    m = min(values)
    runner_up = min(v for d, v in enumerate(values) if min(d, n - d) not in (lo, hi))
    return m, runner_up - m


def delta(k: int) -> int:
    """Parity indicator: 0 for even ``k``, 1 for odd ``k``."""
    if k < 0:
        raise DomainError(f"delta expects k >= 0, got {k}")
    return k % 2


def cr3_k22n(n: int) -> int:
    """Tripartite-circle crossing number of ``K_{2,2,n}`` (defined for ``n >= 3``)."""
    _check_size(n, 3)
    return _fits(6 * half_product(n) + 2 * n - 3)


def c_n(n: int) -> int:
    """Green-green crossings of the optimal constructions: ``6 (C(n//2, 2) + C(ceil(n/2), 2))``."""
    _check_size(n)
    return _fits(6 * (comb(n // 2, 2) + comb((n + 1) // 2, 2)))


def cr2_knn(n: int) -> int:
    """Bipartite-circle crossing number of the balanced ``K_{n,n}``: ``n * C(n, 3)``."""
    _check_size(n)
    return _fits(n * comb(n, 3))


def cr2_kmn_div(m: int, n: int) -> int:
    """Bipartite-circle crossing number of ``K_{m,n}`` when ``m`` divides ``n``.

    Evaluates ``n (m-1) (2mn - 3m - n) / 12`` exactly and refuses to
    truncate: a numerator not divisible by 12 raises :class:`DomainError`.
    """
    _check_size(m, 1, "m")
    _check_size(n, 1, "n")
    if n % m:
        raise DomainError(f"m={m} does not divide n={n}")
    numerator = n * (m - 1) * (2 * m * n - 3 * m - n)
    q, r = divmod(numerator, 12)
    if r:
        raise DomainError(f"numerator {numerator} for (m={m}, n={n}) is not divisible by 12")
    return _fits(q)
