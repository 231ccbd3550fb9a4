#!/usr/bin/env python3
"""Benchmark the compiled convolution kernel against the pure-Python fallback.

The kernel (truncated sparse convolution over exact rationals) is the hot
inner loop of every series multiplication, Euler-class product, and residue
division.  Run from the repository root after building the extension:

    python benchmarks/bench_kernels.py
"""

import random
import time
from fractions import Fraction

from torcob import _convolve_py

try:
    from torcob import _convolve_c
except ImportError:
    _convolve_c = None


def rand_table(rng, nvars, maxdeg, nterms, mterms):
    out = {}
    for _ in range(nterms):
        exps = [0] * nvars
        for _ in range(rng.randint(0, maxdeg)):
            exps[rng.randrange(nvars)] += 1
        coeff = {}
        for _ in range(mterms):
            m = [rng.randint(0, 2) for _ in range(rng.randint(0, 3))]
            while m and m[-1] == 0:
                m.pop()
            coeff[tuple(m)] = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
        coeff = {k: v for k, v in coeff.items() if v}
        if coeff:
            out[tuple(exps)] = coeff
    return out


def timeit(fn, *args, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def workload_series_mul(rng):
    """Two dense-ish degree-6 series in three variables, capped product."""
    a = rand_table(rng, 3, 6, 70, 3)
    b = rand_table(rng, 3, 6, 70, 3)
    return (a, b, 6)


def workload_polynomial_mul(rng):
    """Uncapped product of sparse higher-degree tables (coinvariant style)."""
    a = rand_table(rng, 4, 8, 40, 2)
    b = rand_table(rng, 4, 8, 40, 2)
    return (a, b, None)


def workload_euler_chain(rng):
    """Chained products imitating an Euler-class denominator build."""
    tables = [rand_table(rng, 3, 2, 8, 2) for _ in range(6)]

    def chain(convolve):
        acc = tables[0]
        for t in tables[1:]:
            acc = convolve(acc, t, 12)
        return acc

    return chain


def main():
    rng = random.Random(2024)
    rows = []
    for name, make in [
        ("series mul (3 vars, deg 6)", workload_series_mul),
        ("polynomial mul (uncapped)", workload_polynomial_mul),
    ]:
        args = make(rng)
        t_py = timeit(_convolve_py.convolve, *args)
        if _convolve_c is not None:
            t_c = timeit(_convolve_c.convolve, *args)
            assert _convolve_py.convolve(*args) == _convolve_c.convolve(*args)
        else:
            t_c = None
        rows.append((name, t_py, t_c))
    chain = workload_euler_chain(rng)
    t_py = timeit(chain, _convolve_py.convolve)
    t_c = timeit(chain, _convolve_c.convolve) if _convolve_c is not None else None
    rows.append(("euler chain (6 factors)", t_py, t_c))

    print(f"{'workload':34s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, t_py, t_c in rows:
        if t_c is None:
            print(f"{name:34s} {t_py * 1e3:9.2f}ms {'n/a':>10s} {'':>8s}")
        else:
            print(f"{name:34s} {t_py * 1e3:9.2f}ms {t_c * 1e3:9.2f}ms {t_py / t_c:7.2f}x")
    if _convolve_c is None:
        print("compiled kernel not built; install with Cython for the comparison")


if __name__ == "__main__":
    main()
