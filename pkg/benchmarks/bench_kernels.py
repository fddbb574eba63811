#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times the hot scalar engines (digamma, polygamma, log-gamma) and the
critical-line series partial sums over representative grids.  Run after an
editable install:

    python3 benchmarks/bench_kernels.py
"""

import time

import numpy as np

from localspec import _kernels_numpy

try:
    from localspec import _kernels_numba

    HAVE_NUMBA = True
except ImportError:
    _kernels_numba = None
    HAVE_NUMBA = False


def timeit(fn, *args, repeat=5):
    fn(*args)  # warm up (and trigger jit compilation)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    rng = np.random.default_rng(0)
    z = rng.uniform(0.1, 20.0, 200_000) + 1j * rng.uniform(-50.0, 50.0, 200_000)
    t = np.linspace(0.0, 500.0, 20_000)
    nterms = np.maximum(64, np.ceil(4.0 * (np.abs(t) + 0.5))).astype(np.int64)

    cases = [
        ("digamma [200k pts]", lambda k: k.digamma(z)),
        ("polygamma n=3 [200k pts]", lambda k: k.polygamma(3, z)),
        ("log_gamma [200k pts]", lambda k: k.loggamma(z)),
        ("h series partial [20k pts]", lambda k: k.h_series_partial(t, nterms, 1.0, 2.0, 0.5)),
        ("k series partial [20k pts]", lambda k: k.k_series_partial(t, nterms, 2.0, 0.5)),
    ]

    if not HAVE_NUMBA:
        print("numba unavailable; timing the numpy path only")
    print(f"{'kernel':<30s} {'numpy':>10s} {'numba':>10s} {'speedup':>9s}")
    for name, call in cases:
        t_np = timeit(call, _kernels_numpy)
        if HAVE_NUMBA:
            t_nb = timeit(call, _kernels_numba)
            a = call(_kernels_numpy)
            b = call(_kernels_numba)
            assert np.allclose(a, b, rtol=1e-12, atol=1e-12), name
            print(f"{name:<30s} {t_np*1e3:9.1f}ms {t_nb*1e3:9.1f}ms {t_np/t_nb:8.1f}x")
        else:
            print(f"{name:<30s} {t_np*1e3:9.1f}ms {'-':>10s} {'-':>9s}")


if __name__ == "__main__":
    main()
