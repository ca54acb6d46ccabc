"""Scan kernels, compiled when available.

The Cython extension :mod:`tricross._kernels` is used when it was built;
otherwise, or when the environment variable ``TRICROSS_PURE`` is set to a
non-empty value other than ``0``, the pure-Python module
:mod:`tricross._pykernels` is used.  Both expose the same functions and
return identical results.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("TRICROSS_PURE", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _kernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

IMPLEMENTATION: str = _impl.IMPLEMENTATION
lb_naive = _impl.lb_naive
lb_pruned = _impl.lb_pruned
scan_mixed = _impl.scan_mixed
scan_ys = _impl.scan_ys
scan_threeterms = _impl.scan_threeterms

__all__ = ["IMPLEMENTATION", "lb_naive", "lb_pruned", "scan_mixed", "scan_ys", "scan_threeterms"]
