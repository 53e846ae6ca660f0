#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-numpy fallback.

Usage: python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from choqmc._kernels import _fallback

try:
    from choqmc._kernels import _native
except ImportError:
    _native = None


def timeit(fn, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench(name, make_call):
    fb = timeit(make_call(_fallback))
    line = f"{name:45s} fallback {fb * 1e3:9.2f} ms"
    if _native is not None:
        nat = timeit(make_call(_native))
        line += f"   native {nat * 1e3:9.2f} ms   speedup {fb / nat:6.1f}x"
    print(line)


def main():
    rng = np.random.default_rng(0)

    bench("radical inverse, base 2, n=10^6",
          lambda mod: lambda: mod.radical_inverse_sequence(2, 1, 10**6))
    bench("radical inverse, base 97, n=10^6",
          lambda mod: lambda: mod.radical_inverse_sequence(97, 1, 10**6))

    pts2 = rng.random((256, 2))
    grids2 = [np.unique(np.concatenate([pts2[:, j], [1.0]])) for j in range(2)]
    bench("exact star discrepancy, d=2, n=256",
          lambda mod: lambda: mod.max_local_discrepancy(pts2, grids2))

    pts5 = rng.random((1000, 5))
    g = np.arange(1, 9) / 8.0
    bench("lower-bound discrepancy, d=5, n=1000, g=8",
          lambda mod: lambda: mod.max_local_discrepancy(pts5, [g] * 5))


if __name__ == "__main__":
    main()
