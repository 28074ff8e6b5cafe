"""Fractional binomial coefficients and the fractional difference operator.

The operator acts on a trigonometric polynomial through its Fourier
coefficients.  For a mode ``exp(i nu x)`` and a shift ``h`` the difference of
order ``t`` multiplies by

.. math::

    m(\\nu, h) = e^{i \\nu t h} \\sum_{j \\ge 0} (-1)^j \\binom{t}{j} e^{-i \\nu j h},

an absolutely convergent series for every ``t > 0``.  :func:`frac_multiplier`
evaluates the series itself, summing a head explicitly and bounding (or
resumming) the tail with a certified error.  :func:`multiplier_grid` is the
vectorised Abel limit of the same series, used by the quadrature routines and
validated against :func:`frac_multiplier` in the test-suite.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import TruncationFailure

__all__ = [
    "TrigPoly",
    "TruncationSpec",
    "SeriesValue",
    "frac_binomial",
    "frac_binomials",
    "abs_tail_bound",
    "frac_multiplier",
    "multiplier_series",
    "multiplier_grid",
    "small_shift_symbol",
    "apply_frac_difference",
    "frac_difference_pointwise",
]

TWO_PI = 2.0 * math.pi


def _is_integer(t: float) -> bool:
    return float(t).is_integer()


# --------------------------------------------------------------------------
# data types
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class TrigPoly:
    """Real trigonometric polynomial ``sum_{|nu|<=N} c_nu exp(i nu x)``.

    Parameters
    ----------
    coeffs : array_like of complex, shape (2N+1,)
        Entry ``k`` holds the coefficient of mode ``k - N``.  Conjugate
        symmetry ``c_{-nu} = conj(c_nu)`` is required (checked to 1e-12
        relative), so the polynomial is real valued.

    Notes
    -----
    A cosine amplitude ``a cos(nu x)`` is stored as ``c_{+nu} = c_{-nu} = a/2``.
    """

    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=np.complex128).ravel()
        if c.size % 2 != 1:
            raise ValueError("coefficient array must have odd length 2N+1")
        scale = float(np.max(np.abs(c))) if c.size else 0.0
        if scale > 0.0 and np.max(np.abs(c - np.conj(c[::-1]))) > 1e-12 * scale:
            raise ValueError("coefficients are not conjugate symmetric")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        # symmetrise exactly so downstream maps stay real
        c = 0.5 * (c + np.conj(c[::-1]))
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    # constructors ---------------------------------------------------------
    @classmethod
    def zero(cls, degree: int = 0) -> "TrigPoly":
        return cls(np.zeros(2 * degree + 1, dtype=np.complex128))

    @classmethod
    def constant(cls, value: float, degree: int = 0) -> "TrigPoly":
        c = np.zeros(2 * degree + 1, dtype=np.complex128)
        c[degree] = value
        return cls(c)

    @classmethod
    def from_cosines(cls, pairs) -> "TrigPoly":
        """Build ``sum a cos(nu x)`` from ``(nu, a)`` pairs."""
        pairs = [(abs(int(nu)), float(a)) for nu, a in pairs]
        N = max((nu for nu, _ in pairs), default=0)
        c = np.zeros(2 * N + 1, dtype=np.complex128)
        for nu, a in pairs:
            if nu == 0:
                c[N] += a
            else:
                c[N + nu] += 0.5 * a
                c[N - nu] += 0.5 * a
        return cls(c)

    @classmethod
    def from_modes(cls, modes: dict) -> "TrigPoly":
        """Build from ``{nu: c_nu}`` for ``nu >= 0``; negative modes by symmetry."""
        N = max((abs(int(k)) for k in modes), default=0)
        c = np.zeros(2 * N + 1, dtype=np.complex128)
        for nu, val in modes.items():
            nu = int(nu)
            if nu < 0:
                raise ValueError("give nonnegative modes only")
            if nu == 0:
                c[N] = complex(val).real
            else:
                c[N + nu] = val
                c[N - nu] = np.conj(val)
        return cls(c)

    # basic accessors ------------------------------------------------------
    @property
    def degree(self) -> int:
        return (self.coeffs.size - 1) // 2

    @property
    def modes(self) -> np.ndarray:
        N = self.degree
        return np.arange(-N, N + 1)

    def coeff(self, nu: int) -> complex:
        N = self.degree
        return complex(self.coeffs[N + nu]) if abs(nu) <= N else 0j

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def effective_degree(self) -> int:
        nz = np.nonzero(self.coeffs)[0]
        if nz.size == 0:
            return 0
        return int(np.max(np.abs(nz - self.degree)))

    def trimmed(self) -> "TrigPoly":
        d = self.effective_degree()
        N = self.degree
        return TrigPoly(self.coeffs[N - d: N + d + 1])

    def padded(self, degree: int) -> "TrigPoly":
        N = self.degree
        if degree < N:
            raise ValueError("cannot pad to a smaller degree")
        c = np.zeros(2 * degree + 1, dtype=np.complex128)
        c[degree - N: degree + N + 1] = self.coeffs
        return TrigPoly(c)

    def with_coeffs(self, coeffs) -> "TrigPoly":
        return TrigPoly(coeffs)

    # evaluation -----------------------------------------------------------
    def __call__(self, x):
        x = np.asarray(x, dtype=np.float64)
        phase = np.exp(1j * np.multiply.outer(x, self.modes))
        return (phase @ self.coeffs).real

    def grid_values(self, M: int) -> np.ndarray:
        """Values at ``x_k = 2 pi k / M`` via an inverse FFT (needs ``M >= 2N+1``)."""
        N = self.degree
        if M < 2 * N + 1:
            raise ValueError("grid too small to hold every mode")
        a = np.zeros(M, dtype=np.complex128)
        a[np.mod(self.modes, M)] = self.coeffs
        return (np.fft.ifft(a) * M).real

    # arithmetic -----------------------------------------------------------
    def _aligned(self, other: "TrigPoly"):
        N = max(self.degree, other.degree)
        return self.padded(N).coeffs, other.padded(N).coeffs

    def __add__(self, other):
        if not isinstance(other, TrigPoly):
            return NotImplemented
        a, b = self._aligned(other)
        return TrigPoly(a + b)

    def __sub__(self, other):
        if not isinstance(other, TrigPoly):
            return NotImplemented
        a, b = self._aligned(other)
        return TrigPoly(a - b)

    def __mul__(self, lam):
        if isinstance(lam, TrigPoly):
            return NotImplemented
        return TrigPoly(self.coeffs * float(lam))

    __rmul__ = __mul__

    def __neg__(self):
        return TrigPoly(-self.coeffs)

    def allclose(self, other: "TrigPoly", rtol=1e-12, atol=1e-14) -> bool:
        a, b = self._aligned(other)
        return bool(np.allclose(a, b, rtol=rtol, atol=atol))


@dataclass(frozen=True)
class TruncationSpec:
    """Truncation control for the binomial series.

    Attributes
    ----------
    tail_tol : float
        Certified bound on the discarded (or resummed) part of the series.
    j_max_cap : int
        Largest number of explicitly summed terms.
    """

    tail_tol: float = 1e-10
    j_max_cap: int = 10**6

    def __post_init__(self):
        if not self.tail_tol > 0:
            raise ValueError("tail_tol must be positive")
        if self.j_max_cap < 1:
            raise ValueError("j_max_cap must be at least 1")


@dataclass(frozen=True)
class SeriesValue:
    """A multiplier value together with its certificate."""

    value: complex
    bound: float
    n_terms: int
    route: str


# --------------------------------------------------------------------------
# binomial coefficients
# --------------------------------------------------------------------------


def frac_binomial(t: float, j: int) -> float:
    """Generalised binomial coefficient ``C(t, j)`` by the product recursion.

    For integer ``t = k`` the factor ``t - j + 1`` vanishes at ``j = k + 1``,
    so every later coefficient is exactly zero.

    Examples
    --------
    >>> frac_binomial(0.5, 2)
    -0.125
    """
    if j < 0:
        raise ValueError("j must be nonnegative")
    c = 1.0
    for i in range(1, int(j) + 1):
        c *= (t - i + 1.0) / i
    return c


def frac_binomials(t: float, n: int) -> np.ndarray:
    """Array ``[C(t,0), ..., C(t,n-1)]`` by the same recursion."""
    j = np.arange(1, n, dtype=np.float64)
    out = np.empty(n)
    if n == 0:
        return out
    out[0] = 1.0
    out[1:] = np.cumprod((t - j + 1.0) / j)
    return out


def _log_abs_binom(t: float, j: int) -> float:
    return math.lgamma(t + 1.0) - math.lgamma(j + 1.0) - math.lgamma(t - j + 1.0)


def abs_tail_bound(t: float, J: int) -> float:
    """Upper bound for ``sum_{j>J} |C(t,j)|``.

    For ``J > t`` the ratio ``|C(t,j+1)/C(t,j)| = 1 - (t+1)/(j+1)`` gives
    ``|C(t,j)| <= |C(t,J)| ((J+1)/(j+1))^{t+1}``; comparing the resulting sum
    with the integral of ``x^{-t-1}`` yields ``|C(t,J)| (J+1) / t``.
    """
    if _is_integer(t) and J >= t:
        return 0.0
    if J <= t:
        return math.inf
    return math.exp(_log_abs_binom(t, J)) * (J + 1.0) / t


def _abs_route_length(t: float, tol: float, cap: int) -> int | None:
    """Smallest ``n`` with ``abs_tail_bound(t, n-1) < tol``, or None past ``cap``."""
    lo = int(math.floor(t)) + 2
    if abs_tail_bound(t, lo - 1) < tol:
        return lo
    if abs_tail_bound(t, cap - 1) >= tol:
        return None
    hi = cap
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if abs_tail_bound(t, mid - 1) < tol:
            hi = mid
        else:
            lo = mid
    return hi


def _euler_tail(t: float, theta: float, n: int, tol: float, kmax: int = 400):
    """Resum ``sum_{j>=n} (-1)^j C(t,j) e^{-i j theta}`` by repeated Abel summation.

    For ``j > t`` the magnitudes ``b_j`` form a completely monotone sequence
    with ``|Delta^k b_n| = b_n prod_{i<=k} (t+i)/(n+i)``.  Summing by parts
    ``K`` times leaves a remainder bounded by twice the first omitted term
    divided by ``|1 - z|``.

    Returns ``(tail, bound)``; ``bound`` is ``inf`` when the expansion does
    not reach ``tol`` at this ``n``.
    """
    z = cmath.exp(-1j * theta)
    one_minus_z = 1.0 - z
    dz = abs(one_minus_z)
    w = z / one_minus_z
    sign = _tail_sign(t, n)
    b_n = math.exp(_log_abs_binom(t, n))
    term = complex(b_n)
    acc = 0j
    best = math.inf
    for k in range(kmax):
        acc += term
        nxt = term * (-(t + k + 1.0) / (n + k + 1.0)) * w
        bound = 2.0 * abs(nxt) / dz
        if bound < tol:
            best = bound
            break
        if abs(nxt) >= abs(term):
            break
        term = nxt
    if not best < tol:
        return 0j, math.inf
    prefactor = sign * cmath.exp(-1j * n * theta) / one_minus_z
    return prefactor * acc, best


def _tail_sign(t: float, n: int) -> float:
    """Sign of ``(-1)^n C(t, n)`` for ``n > t`` (constant beyond ``t``)."""
    c = frac_binomial(t, n)
    return math.copysign(1.0, c) * (1.0 if n % 2 == 0 else -1.0)


def multiplier_series(t: float, nu: int, h: float, spec: TruncationSpec | None = None) -> SeriesValue:
    """Evaluate the per-mode multiplier from its binomial series with a certificate.

    Routes
    ------
    ``finite``
        integer ``t``: the series terminates, the value is exact.
    ``identity``
        ``nu h`` is a multiple of ``2 pi``: the head is summed and the tail is
        the exact remainder of ``sum_j (-1)^j C(t,j) = 0``.
    ``absolute``
        the head is long enough that ``sum_{j>J} |C(t,j)| < tail_tol``.
    ``euler``
        oscillating tail resummed by repeated summation by parts.

    Raises
    ------
    TruncationFailure
        If no route certifies ``tail_tol`` within ``j_max_cap`` terms.
    """
    spec = spec or TruncationSpec()
    if not t > 0:
        raise ValueError("order t must be positive")
    theta = float(nu) * float(h)
    outer = cmath.exp(1j * t * theta)
    if _is_integer(t):
        n = int(t) + 1
        head = complex(*_kernels.binom_partial_sum(float(t), theta, n))
        return SeriesValue(outer * head, 0.0, n, "finite")

    red = math.remainder(theta, TWO_PI)
    if red == 0.0:
        n = int(math.floor(t)) + 2
        head = complex(*_kernels.binom_partial_sum(float(t), theta, n))
        # sum_{j<n} (-1)^j C(t,j) = (-1)^{n-1} C(t-1, n-1), the full sum is zero
        tail = -((-1.0) ** (n - 1)) * frac_binomial(t - 1.0, n - 1)
        return SeriesValue(outer * (head + tail), 0.0, n, "identity")

    tol = spec.tail_tol
    n_abs = _abs_route_length(t, tol, spec.j_max_cap)
    dz = 2.0 * abs(math.sin(0.5 * red))
    n_eul = max(int(math.floor(t)) + 1, 16, int(math.ceil(8.0 / dz)))
    if n_abs is not None and n_abs <= n_eul:
        head = complex(*_kernels.binom_partial_sum(float(t), theta, n_abs))
        return SeriesValue(outer * head, abs_tail_bound(t, n_abs - 1), n_abs, "absolute")

    while n_eul <= spec.j_max_cap:
        tail, bound = _euler_tail(t, red, n_eul, tol)
        if bound < tol:
            head = complex(*_kernels.binom_partial_sum(float(t), theta, n_eul))
            # the tail used the reduced angle; e^{-i j theta} only depends on it mod 2 pi
            return SeriesValue(outer * (head + tail), bound, n_eul, "euler")
        n_eul *= 4
    if n_abs is not None:
        head = complex(*_kernels.binom_partial_sum(float(t), theta, n_abs))
        return SeriesValue(outer * head, abs_tail_bound(t, n_abs - 1), n_abs, "absolute")
    raise TruncationFailure(
        f"binomial series for t={t}, nu*h={theta:.6g} needs more than "
        f"{spec.j_max_cap} terms to reach tail_tol={tol:g}"
    )


def frac_multiplier(t: float, nu: int, h: float, spec: TruncationSpec | None = None) -> complex:
    """Multiplier of the order-``t`` difference on ``exp(i nu x)``.

    Examples
    --------
    >>> abs(frac_multiplier(1, 3, 0.2) - (cmath.exp(0.6j) - 1)) < 1e-15
    True
    """
    return multiplier_series(t, nu, h, spec).value


def multiplier_grid(t: float, nus, hs) -> np.ndarray:
    """Abel-limit values of the multiplier series on a grid of modes and shifts.

    With ``theta = nu h`` reduced to ``r`` in ``[-pi, pi]`` the binomial series
    equals ``(2 sin(|r|/2))^t exp(i t (sign(r) pi - r)/2)`` times ``exp(i t nu h)``
    (it converges on the unit circle, so Abel's theorem identifies the sum).
    Only real powers of positive numbers are taken.

    Returns
    -------
    ndarray, shape (len(hs), len(nus))
    """
    nus = np.asarray(nus, dtype=np.float64)
    hs = np.asarray(hs, dtype=np.float64)
    theta = np.multiply.outer(hs, nus)
    # symmetric reduction to [-pi, pi] keeps tiny negative angles accurate
    red = theta - TWO_PI * np.round(theta / TWO_PI)
    mag = np.power(2.0 * np.sin(0.5 * np.abs(red)), t)
    phase = t * theta + 0.5 * t * (np.sign(red) * math.pi - red)
    out = mag * np.exp(1j * phase)
    if _is_integer(t):
        # classical differences: expand the finite sum, no rounding from the closed form
        k = int(t)
        z = np.exp(-1j * theta)
        acc = np.zeros_like(out)
        for j in range(k + 1):
            acc += ((-1) ** j) * math.comb(k, j) * z**j
        out = np.exp(1j * t * theta) * acc
    out[red == 0.0] = 0.0
    return out


def small_shift_symbol(t: float, nus) -> np.ndarray:
    """Leading small-``h`` behaviour: ``m(nu, h) / h^t -> (i nu)^t``.

    ``(i nu)^t = |nu|^t exp(+- i pi t / 2)`` with the sign of ``nu``.
    """
    nus = np.asarray(nus, dtype=np.float64)
    return np.power(np.abs(nus), t) * np.exp(1j * np.sign(nus) * 0.5 * math.pi * t)


# --------------------------------------------------------------------------
# the operator
# --------------------------------------------------------------------------


def apply_frac_difference(f: TrigPoly, t: float, h: float, spec: TruncationSpec | None = None) -> TrigPoly:
    """Apply the order-``t`` difference with shift ``h`` mode by mode.

    Only ``nu >= 0`` is computed; negative modes follow by conjugation, which
    keeps the output exactly conjugate symmetric.

    Raises
    ------
    TruncationFailure
        Propagated from :func:`multiplier_series`.
    """
    N = f.degree
    out = np.zeros_like(f.coeffs)
    for nu in range(0, N + 1):
        c = f.coeffs[N + nu]
        if c == 0:
            continue
        m = frac_multiplier(t, nu, h, spec)
        out[N + nu] = m * c
        if nu:
            out[N - nu] = np.conj(m * c)
    if N >= 0:
        out[N] = out[N].real
    return TrigPoly(out)


def frac_difference_pointwise(f: TrigPoly, t: float, h: float, x, spec: TruncationSpec | None = None) -> np.ndarray:
    """Evaluate ``sum_j (-1)^j C(t,j) f(x + (t-j) h)`` at the points ``x``.

    The head of the series is summed by sampling ``f`` at the shifted points;
    the tail beyond the head length chosen by :func:`multiplier_series` is
    added per mode.  Useful as an independent check of
    :func:`apply_frac_difference`.
    """
    spec = spec or TruncationSpec()
    x = np.atleast_1d(np.asarray(x, dtype=np.float64))
    N = f.degree
    nus = f.modes.astype(np.float64)
    keep = f.coeffs != 0
    if not np.any(keep):
        return np.zeros_like(x)
    plans = {nu: multiplier_series(t, nu, h, spec) for nu in range(0, N + 1) if f.coeffs[N + nu] != 0}
    n = max(p.n_terms for p in plans.values())
    cre = np.ascontiguousarray(f.coeffs.real[keep])
    cim = np.ascontiguousarray(f.coeffs.imag[keep])
    vr, vi = _kernels.shifted_sum(float(t), float(h), int(n), np.ascontiguousarray(nus[keep]), cre, cim, x)
    head = vr + 1j * vi
    # per-mode remainder: full multiplier minus the same n-term head
    corr = np.zeros_like(head)
    for nu, plan in plans.items():
        theta = nu * h
        part = complex(*_kernels.binom_partial_sum(float(t), theta, n))
        rest = plan.value - cmath.exp(1j * t * theta) * part
        if rest == 0:
            continue
        c = f.coeffs[N + nu]
        corr += rest * c * np.exp(1j * nu * x)
        if nu:
            corr += np.conj(rest * c) * np.exp(-1j * nu * x)
    return (head + corr).real
