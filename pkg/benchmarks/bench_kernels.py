"""Time the numba kernels against their numpy fallbacks.

Run ``python3 benchmarks/bench_kernels.py [--repeat N]``.  Compilation is
excluded: every jit kernel is called once before timing.  Both paths are
also compared numerically so a speedup never hides a wrong answer.
"""

from __future__ import annotations

import argparse
import math
import timeit

import numpy as np

from fraclab import _kernels as K


def _cases():
    rng = np.random.default_rng(0)
    nus = np.arange(1.0, 9.0)
    cre = rng.standard_normal(nus.size)
    cim = rng.standard_normal(nus.size)
    xs = np.linspace(0.0, 2 * math.pi, 64, endpoint=False)

    ncell = 200
    y0 = np.sort(rng.uniform(-30, 30, ncell))
    y1 = y0 + rng.uniform(0.1, 3.0, ncell)
    A = rng.uniform(0.1, 2.0, ncell)
    B = rng.uniform(0.1, 2.0, ncell)
    glx, glw = np.polynomial.legendre.leggauss(16)

    return {
        "binom_partial_sum": (K.binom_partial_sum_jit, K.binom_partial_sum_np, (0.7, 0.3, 1_000_000)),
        "shifted_sum": (K.shifted_sum_jit, K.shifted_sum_np, (0.7, 0.05, 4000, nus, cre, cim, xs)),
        "interp_cells": (K.interp_cells_jit, K.interp_cells_np, (y0, y1, A, B, 0.4, 2.0, 2.0, glx, glw, 0.5)),
    }


def _max_rel_diff(a, b) -> float:
    a = np.atleast_1d(np.asarray(a, dtype=np.float64).ravel())
    b = np.atleast_1d(np.asarray(b, dtype=np.float64).ravel())
    return float(np.max(np.abs(a - b)) / max(np.max(np.abs(b)), 1e-300))


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)

    print(f"{'kernel':<20}{'numba [ms]':>12}{'numpy [ms]':>12}{'speedup':>10}{'rel diff':>12}")
    for name, (jit_fn, np_fn, fargs) in _cases().items():
        ref = jit_fn(*fargs)  # warm-up, triggers compilation
        got = np_fn(*fargs)
        t_jit = min(timeit.repeat(lambda: jit_fn(*fargs), number=1, repeat=args.repeat))
        t_np = min(timeit.repeat(lambda: np_fn(*fargs), number=1, repeat=args.repeat))
        print(f"{name:<20}{1e3 * t_jit:>12.3f}{1e3 * t_np:>12.3f}{t_np / t_jit:>10.2f}{_max_rel_diff(got, ref):>12.2e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
