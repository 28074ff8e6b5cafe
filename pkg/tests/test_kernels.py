import math
import os
import subprocess
import sys

import numpy as np
import pytest

from fraclab import _kernels as K


@pytest.fixture(scope="module")
def cases():
    rng = np.random.default_rng(11)
    nus = np.arange(1.0, 6.0)
    cre, cim = rng.standard_normal(5), rng.standard_normal(5)
    xs = np.linspace(0.0, 2 * math.pi, 32, endpoint=False)
    y0 = np.sort(rng.uniform(-20, 20, 40))
    y1 = y0 + rng.uniform(0.1, 3.0, 40)
    A, B = rng.uniform(0.1, 2.0, 40), rng.uniform(0.1, 2.0, 40)
    glx, glw = np.polynomial.legendre.leggauss(12)
    return {
        "binom_partial_sum": (K.binom_partial_sum_jit, K.binom_partial_sum_np, (0.7, 0.3, 200_000)),
        "shifted_sum": (K.shifted_sum_jit, K.shifted_sum_np, (0.6, 0.05, 3000, nus, cre, cim, xs)),
        "interp_cells": (K.interp_cells_jit, K.interp_cells_np, (y0, y1, A, B, 0.4, 2.0, 3.0, glx, glw, 0.5)),
    }


@pytest.mark.parametrize("name", ["binom_partial_sum", "shifted_sum", "interp_cells"])
def test_compiled_and_numpy_paths_agree(cases, name):
    jit, np_fn, args = cases[name]
    a = np.asarray(jit(*args), dtype=np.complex128).ravel()
    b = np.asarray(np_fn(*args), dtype=np.complex128).ravel()
    assert np.max(np.abs(a - b)) <= 1e-12 * np.max(np.abs(b))


def test_disable_flag_selects_numpy():
    env = dict(os.environ, FRACLAB_DISABLE_NUMBA="1")
    code = "from fraclab import _kernels as K; print(K.USE_NUMBA, K.shifted_sum is K.shifted_sum_np)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True).stdout
    assert out.split() == ["False", "True"]


def test_fallback_reproduces_cli_output():
    args = ["-m", "fraclab.cli", "bbm-sweep", "--func", "cos:1,1;cos:3,0.25", "--s-grid", "geometric:0.3:0.0375:4"]
    runs = []
    for flag in ("0", "1"):
        env = dict(os.environ, FRACLAB_DISABLE_NUMBA=flag)
        runs.append(subprocess.run([sys.executable, *args], env=env, capture_output=True, text=True, check=True).stdout)
    fast, slow = ([line.split(",") for line in r.splitlines()[1:]] for r in runs)
    for a, b in zip(fast, slow):
        assert float(a[-1]) == pytest.approx(float(b[-1]), rel=1e-10)
