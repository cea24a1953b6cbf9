"""Benchmark the compiled enumeration kernel against the numpy fallback.

Usage: python benchmarks/bench_kernel.py [q ...]
"""

import sys
import time

from contextant import _kernel_py

try:
    from contextant import _kernel_c
except ImportError:
    _kernel_c = None


def time_one(fn, q, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(q)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    qs = [int(a) for a in sys.argv[1:]] or [16, 20, 22, 24]
    print(f"{'q':>4} {'numpy [s]':>12} {'cython [s]':>12} {'speedup':>8}")
    for q in qs:
        t_py, r_py = time_one(_kernel_py.min_cycle_sum, q)
        if _kernel_c is None:
            print(f"{q:>4} {t_py:>12.4f} {'(not built)':>12}")
            continue
        t_c, r_c = time_one(_kernel_c.min_cycle_sum, q)
        assert r_py == r_c, f"backends disagree at q={q}: {r_py} vs {r_c}"
        print(f"{q:>4} {t_py:>12.4f} {t_c:>12.4f} {t_py / t_c:>8.1f}")


if __name__ == "__main__":
    main()
