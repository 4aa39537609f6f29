"""Compiled vs numpy kernels on the workloads the package actually runs.

    python benchmarks/bench_kernels.py [--repeat 5]

Cases
-----
oracle : 4 lowest eigenvalues of the count=4000 radial matrix
gauss  : all 200 eigenvalues of the Gauss-Laguerre Jacobi matrix
laguerre : L_n^tau on 100000 points, n = 40
"""
import argparse
import timeit

import numpy as np

from lvosc import _kernels_py, oracle
from lvosc.tridiag import _prepare, gershgorin_bounds

try:
    from lvosc import _kernels
except ImportError:  # extension not built
    _kernels = None


def _bisect_case(diag, off, m):
    d, e2, pivmin = _prepare(diag, off)
    lo, hi = gershgorin_bounds(d, off)
    lo -= 1e-12 * max(1.0, abs(lo))
    hi += 1e-12 * max(1.0, abs(hi))
    idx = np.arange(m, dtype=np.int64)
    return lambda mod: mod.bisect_eigenvalues(d, e2, idx, lo, hi, 4e-16, 2.0 * pivmin,
                                              pivmin, 200)


def cases():
    grid = oracle.RadialGrid.for_scale(1.0, count=4000)
    diag, off = oracle.assemble(1.0, 1.0, grid)
    yield "oracle (count=4000, m=4)", _bisect_case(diag, off, 4)

    k = np.arange(200, dtype=float)
    tau = 1.3
    yield "gauss (200 nodes)", _bisect_case(2 * k + 1 + tau, np.sqrt(k[1:] * (k[1:] + tau)), 200)

    s = np.linspace(0.0, 60.0, 100_000)
    yield "laguerre (n=40, 1e5 pts)", lambda mod: mod.laguerre_array(40, 2.5, s)


def best_of(fn, repeat):
    number = 1
    while timeit.timeit(fn, number=number) < 0.2:
        number *= 2
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)
    if _kernels is None:
        print("compiled extension not built; only the numpy fallback is timed")
    print(f"{'case':28s} {'cython [ms]':>12s} {'numpy [ms]':>12s} {'speedup':>8s}")
    for name, run in cases():
        t_py = best_of(lambda: run(_kernels_py), args.repeat)
        if _kernels is not None:
            t_cy = best_of(lambda: run(_kernels), args.repeat)
            a, b = np.asarray(_first(run(_kernels))), np.asarray(_first(run(_kernels_py)))
            assert np.allclose(a, b, rtol=1e-12, atol=1e-12), name
            print(f"{name:28s} {1e3 * t_cy:12.3f} {1e3 * t_py:12.3f} {t_py / t_cy:8.1f}x")
        else:
            print(f"{name:28s} {'-':>12s} {1e3 * t_py:12.3f} {'-':>8s}")


def _first(result):
    return result[0] if isinstance(result, tuple) else result


if __name__ == "__main__":
    main()
