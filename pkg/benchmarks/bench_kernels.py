"""Time the numba and numpy kernel backends on representative workloads.

Usage::

    python benchmarks/bench_kernels.py [--repeat 5]

Each kernel runs once untimed (numba compilation, caches) and then
``--repeat`` times; the best wall time is reported together with the largest
difference between the two backends' outputs.
"""
import argparse
import time

import numpy as np

from exclusion_bounds._kernels import get_backend


def _workloads(rng):
    x = np.linspace(0.0, 300.0, 20001)[1:]
    n = 200_000
    d = 2.0 + rng.random(n)
    e = -np.ones(n - 1)
    lams = np.linspace(1.0, 30.0, 64)
    cells = rng.random(2000) * 5.0
    edges = np.linspace(0.0, 10.0, cells.size + 1)
    prefix = np.concatenate(([0.0], np.cumsum(cells) * (edges[1] - edges[0])))
    return {
        "jv_pair (nu=7.3, 20k points)": lambda k: k.jv_pair(7.3, x),
        "tridiag_lowest (n=200k)": lambda k: k.tridiag_lowest(d, e),
        "shoot_neumann (64 trials, 4000 steps)": lambda k: k.shoot_neumann(2.0, lams, 4000, 1e-3),
        "maximal_cell_lower (2000 cells)": lambda k: k.maximal_cell_lower(edges, prefix, cells),
        "maximal_center (2000 cells)": lambda k: k.maximal_center(edges, prefix, cells),
    }


def _best(fn, repeat):
    fn()
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def _flat(out):
    if isinstance(out, tuple):
        return np.concatenate([np.atleast_1d(np.asarray(o, dtype=float)) for o in out])
    return np.atleast_1d(np.asarray(out, dtype=float))


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)

    jit = get_backend("numba")
    ref = get_backend("numpy")
    work = _workloads(np.random.default_rng(args.seed))
    print(f"{'kernel':40s} {'numba [s]':>11s} {'numpy [s]':>11s} {'speedup':>8s} {'max |diff|':>11s}")
    for name, call in work.items():
        t_jit, o_jit = _best(lambda: call(jit), args.repeat)
        t_ref, o_ref = _best(lambda: call(ref), args.repeat)
        a, b = _flat(o_jit), _flat(o_ref)
        diff = float(np.max(np.abs(a - b))) if a.shape == b.shape else float("nan")
        print(f"{name:40s} {t_jit:11.4f} {t_ref:11.4f} {t_ref / t_jit:8.1f} {diff:11.2e}")


if __name__ == "__main__":
    main()
