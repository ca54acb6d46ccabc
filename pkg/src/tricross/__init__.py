"""Tripartite-circle crossing numbers of ``K_{2,2,n}``: formulas, constructions, counters and verifiers."""

from .cyclic import DomainError, c_n, cr2_kmn_div, cr2_knn, cr3_k22n, cyc_dist, delta, dist_cw, f, f_min

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "dist_cw",
    "cyc_dist",
    "f",
    "f_min",
    "delta",
    "cr3_k22n",
    "c_n",
    "cr2_knn",
    "cr2_kmn_div",
]
