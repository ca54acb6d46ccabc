"""Compare the compiled and pure-Python scan kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--quick]

Prints one line per workload with the best wall time of each implementation
and the speedup.  Also checks that both return identical results.
"""

from __future__ import annotations

import argparse
import time

from tricross import _pykernels

try:
    from tricross import _kernels
except ImportError:  # extension not built
    _kernels = None

WORKLOADS = [
    ("lb_naive", (5,)),
    ("lb_pruned", (9,)),
    ("scan_mixed", (20, 10)),
    ("scan_ys", (20, 10)),
    ("scan_threeterms", (20, 10)),
]
QUICK = [("lb_naive", (4,)), ("lb_pruned", (7,)), ("scan_mixed", (10, 10)), ("scan_ys", (10, 10)), ("scan_threeterms", (10, 10))]


def best_time(fn, args, repeat: int):
    best, result = None, None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn(*args)
        dt = time.perf_counter() - t
        best = dt if best is None else min(best, dt)
    return best, result


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="small sizes, for smoke testing")
    args = ap.parse_args()
    if _kernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation` first")
        return 1
    print(f"{'workload':<28}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, fargs in QUICK if args.quick else WORKLOADS:
        tp, rp = best_time(getattr(_pykernels, name), fargs, args.repeat)
        tc, rc = best_time(getattr(_kernels, name), fargs, args.repeat)
        if rp != rc:
            print(f"{name}{fargs}: implementations disagree")
            return 1
        label = f"{name}{fargs}"
        print(f"{label:<28}{tp:>12.4f}{tc:>12.4f}{tp / max(tc, 1e-9):>9.0f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
