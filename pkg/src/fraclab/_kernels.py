"""Hot loops, each in a numba flavour and a pure-numpy flavour.

The public names at the bottom dispatch on :data:`fraclab._jit.USE_NUMBA`.
Both flavours are importable directly (``*_jit`` / ``*_np``) so that the
benchmark and the tests can compare them side by side.
"""

from __future__ import annotations

import math

import numpy as np

from ._jit import USE_NUMBA, njit

# --------------------------------------------------------------------------
# binomial series partial sums  sum_{j<n} (-1)^j C(t,j) e^{-i j theta}
# --------------------------------------------------------------------------


def _binom_partial_sum_py(t, theta, n):
    a = 1.0
    sr = 0.0
    si = 0.0
    cr = 0.0
    ci = 0.0
    for j in range(n):
        if j > 0:
            a = a * ((j - 1.0 - t) / j)
        ang = j * theta
        # Kahan-compensated accumulation of both components
        yr = a * math.cos(ang) - cr
        tr = sr + yr
        cr = (tr - sr) - yr
        sr = tr
        yi = -a * math.sin(ang) - ci
        ti = si + yi
        ci = (ti - si) - yi
        si = ti
    return sr, si


binom_partial_sum_jit = njit(_binom_partial_sum_py)


def binom_partial_sum_np(t, theta, n, chunk=1 << 16):
    """Numpy version of the partial binomial sum (chunked, pairwise sums)."""
    sr = []
    si = []
    a_prev = 1.0
    for start in range(0, n, chunk):
        j = np.arange(start, min(n, start + chunk), dtype=np.float64)
        ratio = np.where(j > 0, (j - 1.0 - t) / np.maximum(j, 1.0), 1.0)
        if start == 0:
            a = np.cumprod(ratio)
        else:
            a = a_prev * np.cumprod(ratio)
        a_prev = a[-1]
        ang = j * theta
        sr.append(float(np.sum(a * np.cos(ang))))
        si.append(float(np.sum(-a * np.sin(ang))))
    return math.fsum(sr), math.fsum(si)


# --------------------------------------------------------------------------
# shifted-sample sums  sum_{j<n} (-1)^j C(t,j) f(x + (t-j) h)
# --------------------------------------------------------------------------


def _shifted_sum_py(t, h, n, nus, cre, cim, xs):
    npts = xs.shape[0]
    nmod = nus.shape[0]
    out_r = np.zeros(npts)
    out_i = np.zeros(npts)
    comp_r = np.zeros(npts)
    comp_i = np.zeros(npts)
    a = 1.0
    for j in range(n):
        if j > 0:
            a = a * ((j - 1.0 - t) / j)
        shift = (t - j) * h
        for k in range(npts):
            y = xs[k] + shift
            fr = 0.0
            fi = 0.0
            for m in range(nmod):
                ang = nus[m] * y
                c = math.cos(ang)
                s = math.sin(ang)
                fr += cre[m] * c - cim[m] * s
                fi += cre[m] * s + cim[m] * c
            yr = a * fr - comp_r[k]
            tr = out_r[k] + yr
            comp_r[k] = (tr - out_r[k]) - yr
            out_r[k] = tr
            yi = a * fi - comp_i[k]
            ti = out_i[k] + yi
            comp_i[k] = (ti - out_i[k]) - yi
            out_i[k] = ti
    return out_r, out_i


shifted_sum_jit = njit(_shifted_sum_py)


def shifted_sum_np(t, h, n, nus, cre, cim, xs, chunk=2048):
    """Numpy version of the shifted-sample sum, blocked over the series index."""
    coef = cre + 1j * cim
    total = np.zeros(xs.shape[0], dtype=np.complex128)
    a_prev = 1.0
    for start in range(0, n, chunk):
        j = np.arange(start, min(n, start + chunk), dtype=np.float64)
        ratio = np.where(j > 0, (j - 1.0 - t) / np.maximum(j, 1.0), 1.0)
        a = np.cumprod(ratio) if start == 0 else a_prev * np.cumprod(ratio)
        a_prev = a[-1]
        y = xs[None, :] + ((t - j) * h)[:, None]
        f = np.zeros(y.shape, dtype=np.complex128)
        for m in range(nus.shape[0]):
            f += coef[m] * np.exp(1j * nus[m] * y)
        total += a @ f
    return total.real.copy(), total.imag.copy()


# --------------------------------------------------------------------------
# piecewise interpolation integrand  int exp(-theta p y) (A e^{qy} + B)^{p/q} dy
# --------------------------------------------------------------------------


def _interp_cells_py(y0, y1, A, B, theta, p, q, glx, glw, wmax):
    total = 0.0
    comp = 0.0
    r = p / q
    for c in range(y0.shape[0]):
        width = y1[c] - y0[c]
        if width <= 0.0:
            continue
        npan = int(math.ceil(width / wmax))
        step = width / npan
        for k in range(npan):
            a = y0[c] + k * step
            half = 0.5 * step
            mid = a + half
            acc = 0.0
            for g in range(glx.shape[0]):
                y = mid + half * glx[g]
                inner = A[c] * math.exp(q * y) + B[c]
                acc += glw[g] * math.exp(-theta * p * y + r * math.log(inner))
            val = acc * half - comp
            tt = total + val
            comp = (tt - total) - val
            total = tt
    return total


interp_cells_jit = njit(_interp_cells_py)


def interp_cells_np(y0, y1, A, B, theta, p, q, glx, glw, wmax):
    """Numpy version of the per-cell Gauss-Legendre integral."""
    width = y1 - y0
    keep = width > 0.0
    y0, width, A, B = y0[keep], width[keep], A[keep], B[keep]
    if y0.size == 0:
        return 0.0
    npan = np.ceil(width / wmax).astype(np.int64)
    cell = np.repeat(np.arange(y0.size), npan)
    k = np.arange(cell.size) - np.repeat(np.cumsum(npan) - npan, npan)
    step = width[cell] / npan[cell]
    mid = y0[cell] + (k + 0.5) * step
    y = mid[:, None] + 0.5 * step[:, None] * glx[None, :]
    inner = A[cell][:, None] * np.exp(q * y) + B[cell][:, None]
    vals = np.exp(-theta * p * y + (p / q) * np.log(inner)) @ glw
    return math.fsum((vals * 0.5 * step).tolist())


if USE_NUMBA:
    binom_partial_sum = binom_partial_sum_jit
    shifted_sum = shifted_sum_jit
    interp_cells = interp_cells_jit
else:
    binom_partial_sum = binom_partial_sum_np
    shifted_sum = shifted_sum_np
    interp_cells = interp_cells_np

__all__ = [
    "USE_NUMBA",
    "binom_partial_sum",
    "binom_partial_sum_jit",
    "binom_partial_sum_np",
    "shifted_sum",
    "shifted_sum_jit",
    "shifted_sum_np",
    "interp_cells",
    "interp_cells_jit",
    "interp_cells_np",
]
