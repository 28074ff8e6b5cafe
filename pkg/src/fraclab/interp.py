"""Real interpolation on weighted sequence spaces.

The base couple is ``(l_q^{s0}, l_q^{s1})`` over integer indices with weights
``2^{j s}``.  Two K-type functionals appear:

* :func:`k_seq`, the modified functional
  ``K_q(u) = inf (||x0||_{s0}^q + u^q ||x1||_{s1}^q)^{1/q}``, which decouples
  over coordinates and has a closed form for every ``q``;
* :func:`k_split`, ``(sum_j min(2^{j s0}, 2^{j s1} u)^q |xi_j|^q)^{1/q}``, the
  infimum over decompositions that send each coordinate wholly to one side.
  It agrees with :func:`k_seq` for ``q <= 1`` and exceeds it by at most a
  factor ``2^{1 - 1/q}`` otherwise.  On a single atom it is also the plain
  K-functional, which is why the interpolation norm below is built on it:
  atoms then carry exactly the weight ``(theta (1-theta) p)^{-1/p}``.

Interpolation norms ``(int_0^inf (u^{-theta} K(u))^p du/u)^{1/p}`` are
computed cell by cell between the breakpoints ``u_j = 2^{j (s0 - s1)}`` of
:func:`k_split`, with the two unbounded ends integrated in closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.optimize import minimize_scalar

from ._kernels import interp_cells
from .errors import NumericalFailure, RegimeViolation, SupportTooLarge, TailNotGeometric
from .report import Row

__all__ = [
    "Seq",
    "PairParams",
    "InterpParams",
    "IntegralSpec",
    "NormFactor",
    "wlq_norm",
    "k_seq",
    "k_split",
    "interp_norm",
    "norm_factor",
    "sup_k",
    "sup_k_over_u",
    "limit_recovery_check",
    "EnvelopeReport",
    "lemma4_envelope_check",
    "normalized_monotonicity_check",
    "coarse_bound_check",
    "SequenceComparison",
    "appendixB_comparison_check",
    "theorem343_rbar",
    "theorem343_seq_terms",
    "theorem343_seq_check",
    "ReiterationRow",
    "reiteration_check",
]

LN2 = math.log(2.0)


# --------------------------------------------------------------------------
# domain types
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Seq:
    """Finitely supported sequence ``xi_j``, ``j = j_min .. j_min + len(values) - 1``."""

    j_min: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.array(self.values, dtype=np.float64).ravel()
        if v.size == 0:
            raise ValueError("a Seq needs at least one entry")
        if not np.all(np.isfinite(v)):
            raise ValueError("sequence values must be finite")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "j_min", int(self.j_min))

    @classmethod
    def atom(cls, j: int, amplitude: float = 1.0) -> "Seq":
        return cls(j, [amplitude])

    @classmethod
    def zero(cls, j_min: int = 0) -> "Seq":
        return cls(j_min, [0.0])

    @classmethod
    def from_mapping(cls, mapping: dict) -> "Seq":
        if not mapping:
            return cls.zero()
        lo, hi = min(mapping), max(mapping)
        v = np.zeros(hi - lo + 1)
        for j, x in mapping.items():
            v[j - lo] = x
        return cls(lo, v)

    @property
    def j_max(self) -> int:
        return self.j_min + self.values.size - 1

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self.j_min, self.j_max + 1)

    def support(self) -> tuple[np.ndarray, np.ndarray]:
        """Indices and absolute values of the nonzero entries."""
        mask = self.values != 0.0
        return self.indices[mask], np.abs(self.values[mask])

    def support_size(self) -> int:
        return int(np.count_nonzero(self.values))

    def is_zero(self) -> bool:
        return not np.any(self.values)

    def scaled(self, c: float) -> "Seq":
        return Seq(self.j_min, c * self.values)


@dataclass(frozen=True)
class PairParams:
    """Weights ``s0 != s1`` and inner exponent ``q > 0`` of the couple ``(l_q^{s0}, l_q^{s1})``.

    ``s0 > s1`` is allowed; it describes the reflected couple.
    """

    s0: float
    s1: float
    q: float

    def __post_init__(self):
        if self.s0 == self.s1:
            raise ValueError("s0 and s1 must differ")
        if not 0.0 < self.q < math.inf:
            raise ValueError("q must lie in (0, inf)")

    def reflected(self) -> "PairParams":
        return PairParams(self.s1, self.s0, self.q)


@dataclass(frozen=True)
class InterpParams:
    """Interpolation parameter ``theta`` in ``(0, 1)`` and outer exponent ``p`` in ``(0, inf)``."""

    theta: float
    p: float

    def __post_init__(self):
        if not 0.0 < self.theta < 1.0:
            raise ValueError("theta must lie in (0, 1)")
        if not 0.0 < self.p < math.inf:
            raise ValueError("p must lie in (0, inf)")


@dataclass(frozen=True)
class IntegralSpec:
    """Discretisation of the interpolation integral.

    Attributes
    ----------
    l_span : int
        Padding, in breakpoint steps, of the tabulated ``u`` grids used by the
        cross-checks (:func:`sup_k`, :func:`sup_k_over_u`).
    tail_tol : float
        Accepted relative discrepancy in those cross-checks.
    G : int
        Gauss-Legendre nodes per panel.
    panel_width : float
        Maximum panel width in ``log u``.
    """

    l_span: int = 40
    tail_tol: float = 1e-12
    G: int = 16
    panel_width: float = 0.5

    def __post_init__(self):
        if self.l_span < 1:
            raise ValueError("l_span must be at least 1")
        if self.G < 2:
            raise ValueError("G must be at least 2")


DEFAULT_INTEGRAL = IntegralSpec()


@dataclass(frozen=True)
class NormFactor:
    """Normalising constant ``(theta (1 - theta) q)^{1/q}`` (1 for ``q = inf``)."""

    c: float

    def __float__(self):
        return self.c


# --------------------------------------------------------------------------
# norms and K-functionals
# --------------------------------------------------------------------------


def wlq_norm(xi: Seq, s: float, q: float) -> float:
    """``(sum_j 2^{j s q} |xi_j|^q)^{1/q}``; ``q = inf`` gives the weighted sup."""
    j, a = xi.support()
    if a.size == 0:
        return 0.0
    w = np.exp2(j * s) * a
    if q == math.inf:
        return float(w.max())
    return math.fsum((w**q).tolist()) ** (1.0 / q)


def _endpoint_weights(xi: Seq, pp: PairParams):
    j, a = xi.support()
    return j, np.exp2(j * pp.s0) * a, np.exp2(j * pp.s1) * a


def k_split(u, xi: Seq, pp: PairParams):
    """``(sum_j [min(2^{j s0}, 2^{j s1} u) |xi_j|]^q)^{1/q}``; vectorised over ``u``."""
    _, a, b = _endpoint_weights(xi, pp)
    u_arr = np.asarray(u, dtype=np.float64)
    m = np.minimum(a, np.multiply.outer(u_arr, b))
    out = np.sum(m**pp.q, axis=-1) ** (1.0 / pp.q)
    return float(out) if out.ndim == 0 else out


def k_seq(u: float, xi: Seq, pp: PairParams) -> float:
    """Modified K-functional ``K_q(u, xi)`` of the couple, in closed form.

    The infimum splits over coordinates.  For ``q <= 1`` each coordinate goes
    wholly to one side and the value is :func:`k_split`.  For ``q > 1``
    coordinate ``j`` contributes ``(a^{-q'} + (u b)^{-q'})^{-1/q'}`` with
    ``a = 2^{j s0}|xi_j|``, ``b = 2^{j s1}|xi_j|`` and ``q' = q/(q-1)``.
    """
    if u <= 0:
        raise ValueError("u must be positive")
    _, a, b = _endpoint_weights(xi, pp)
    if a.size == 0:
        return 0.0
    c = u * b
    lo = np.minimum(a, c)
    if pp.q <= 1.0:
        m = lo
    else:
        qd = pp.q / (pp.q - 1.0)
        hi = np.maximum(a, c)
        m = lo * (1.0 + (lo / hi) ** qd) ** (-1.0 / qd)
    return math.fsum((m**pp.q).tolist()) ** (1.0 / pp.q)


def norm_factor(theta: float, q: float) -> NormFactor:
    """``(theta (1 - theta) q)^{1/q}``, or 1 when ``q = inf``."""
    if not 0.0 < theta < 1.0:
        raise ValueError("theta must lie in (0, 1)")
    if q == math.inf:
        return NormFactor(1.0)
    return NormFactor(float((theta * (1.0 - theta) * q) ** (1.0 / q)))


_GL_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gl(G: int):
    if G not in _GL_CACHE:
        _GL_CACHE[G] = leggauss(G)
    return _GL_CACHE[G]


def _interp_pth_power(j, absval, s0, s1, theta, p, q, spec: IntegralSpec) -> float:
    """``int_0^inf u^{-theta p} k_split(u)^p du/u`` for nonzero entries ``absval`` at ``j``."""
    if s0 > s1:
        return _interp_pth_power(j, absval, s1, s0, 1.0 - theta, p, q, spec)
    a_q = (np.exp2(j * s0) * absval) ** q
    b_q = (np.exp2(j * s1) * absval) ** q
    # breakpoints y_j = log u_j, decreasing in j since s0 < s1
    y = j * (s0 - s1) * LN2
    order = np.argsort(y, kind="stable")
    y, a_q, b_q = y[order], a_q[order], b_q[order]
    # on (y_k, y_{k+1}) terms with y_j > y contribute b u, the rest a
    rest_b = np.cumsum(b_q[::-1])[::-1]
    upto_a = np.cumsum(a_q)
    A = rest_b[1:].copy()
    B = upto_a[:-1].copy()
    glx, glw = _gl(spec.G)
    wmax = min(spec.panel_width, 2.0 / q)
    cells = interp_cells(y[:-1].copy(), y[1:].copy(), A, B, theta, p, q, glx, glw, wmax) if y.size > 1 else 0.0
    total_b = rest_b[0]
    total_a = upto_a[-1]
    left = total_b ** (p / q) * math.exp((1.0 - theta) * p * y[0]) / ((1.0 - theta) * p)
    right = total_a ** (p / q) * math.exp(-theta * p * y[-1]) / (theta * p)
    value = math.fsum([left, cells, right])
    if not math.isfinite(value):
        raise TailNotGeometric("interpolation integral did not evaluate to a finite value")
    return value


def interp_norm(xi: Seq, pp: PairParams, ip: InterpParams, spec: IntegralSpec | None = None) -> float:
    """``(int_0^inf (u^{-theta} k_split(u, xi))^p du/u)^{1/p}``.

    Between consecutive breakpoints ``k_split^q = A u^q + B`` with constant
    ``A, B``; each cell is integrated by Gauss-Legendre in ``log u`` on panels
    no wider than ``min(panel_width, 2/q)``.  The integrand is analytic within
    distance ``pi/q`` of the real ``log u`` axis, which keeps the panel error
    far below double precision.  Below the first and above the last breakpoint
    the integrand is a pure power and is integrated exactly.

    For a single atom ``e_j`` the value is ``2^{j s} (theta (1-theta) p)^{-1/p}``
    with ``s = (1 - theta) s0 + theta s1``.

    Raises
    ------
    TailNotGeometric
        Defensive; cannot happen for finitely supported input.
    """
    spec = spec or DEFAULT_INTEGRAL
    j, a = xi.support()
    if a.size == 0:
        return 0.0
    val = _interp_pth_power(j.astype(np.float64), a, pp.s0, pp.s1, ip.theta, ip.p, pp.q, spec)
    return val ** (1.0 / ip.p)


def _scan_grid(xi: Seq, pp: PairParams, spec: IntegralSpec) -> np.ndarray:
    step = abs(pp.s1 - pp.s0)
    ks = np.arange(-(xi.j_max + spec.l_span), -(xi.j_min - spec.l_span) + 1, 0.25)
    return np.exp2(ks * step * np.sign(pp.s1 - pp.s0))


def sup_k(xi: Seq, pp: PairParams, spec: IntegralSpec | None = None) -> float:
    """``sup_u k_split(u) = ||xi||_{l_q^{s0}}``, cross-checked on a tabulated ``u`` grid."""
    spec = spec or DEFAULT_INTEGRAL
    value = wlq_norm(xi, pp.s0, pp.q)
    scan = np.max(k_split(_scan_grid(xi, pp, spec), xi, pp)) if not xi.is_zero() else 0.0
    if scan > value * (1.0 + 1e-12) or scan < value * (1.0 - 1e-8):
        raise NumericalFailure(f"sup K scan {scan!r} disagrees with closed form {value!r}")
    return value


def sup_k_over_u(xi: Seq, pp: PairParams, spec: IntegralSpec | None = None) -> float:
    """``sup_u k_split(u)/u = ||xi||_{l_q^{s1}}``, cross-checked on a tabulated ``u`` grid."""
    spec = spec or DEFAULT_INTEGRAL
    value = wlq_norm(xi, pp.s1, pp.q)
    if xi.is_zero():
        return 0.0
    u = _scan_grid(xi, pp, spec)
    scan = np.max(k_split(u, xi, pp) / u)
    if scan > value * (1.0 + 1e-12) or scan < value * (1.0 - 1e-8):
        raise NumericalFailure(f"sup K/u scan {scan!r} disagrees with closed form {value!r}")
    return value


# --------------------------------------------------------------------------
# checks
# --------------------------------------------------------------------------


def limit_recovery_check(xi: Seq, pp: PairParams, p: float, thetas, spec: IntegralSpec | None = None) -> list[Row]:
    """Normalised norms along ``thetas``, each paired with its endpoint limit.

    Rows carry ``raw = interp_norm``, ``normalized = norm_factor * raw`` and
    ``reference = sup K/u`` for ``theta > 1/2`` or ``sup K`` otherwise.
    """
    spec = spec or DEFAULT_INTEGRAL
    top = sup_k_over_u(xi, pp, spec)
    bottom = sup_k(xi, pp, spec)
    rows = []
    for th in thetas:
        raw = interp_norm(xi, pp, InterpParams(th, p), spec)
        nf = norm_factor(th, p).c
        rows.append(Row.build(th, raw, nf * raw, top if th > 0.5 else bottom))
    return rows


def _fit_slope(x, y) -> float:
    return float(np.polyfit(np.asarray(x), np.asarray(y), 1)[0])


@dataclass(frozen=True)
class EnvelopeReport:
    """Ratios ``R(theta) = interp_norm / ||xi||_{l_p^{s_theta}}`` against the two envelopes."""

    thetas: np.ndarray
    ratios: np.ndarray
    p: float
    q: float

    @property
    def exponent_low(self) -> float:
        return 1.0 / max(self.p, self.q)

    @property
    def exponent_high(self) -> float:
        return 1.0 / min(self.p, self.q)

    def envelope(self, exponent: float) -> np.ndarray:
        return self.thetas ** (-exponent) + (1.0 - self.thetas) ** (-exponent)

    @property
    def lower_constant(self) -> float:
        """Smallest ``R / (theta^{-1/max} + (1-theta)^{-1/max})`` on the grid."""
        return float(np.min(self.ratios / self.envelope(self.exponent_low)))

    @property
    def upper_constant(self) -> float:
        """Largest ``R / (theta^{-1/min} + (1-theta)^{-1/min})`` on the grid."""
        return float(np.max(self.ratios / self.envelope(self.exponent_high)))

    def blowup_exponent(self, end: str) -> float:
        """Fitted exponent ``a`` in ``R ~ (1-theta)^{-a}`` (``end="one"``) or ``R ~ theta^{-a}`` (``end="zero"``)."""
        if end == "one":
            sel = self.thetas > 0.5
            dist = 1.0 - self.thetas[sel]
        elif end == "zero":
            sel = self.thetas < 0.5
            dist = self.thetas[sel]
        else:
            raise ValueError("end must be 'one' or 'zero'")
        if np.count_nonzero(sel) < 2:
            raise ValueError(f"need at least two grid points near theta -> {end}")
        return -_fit_slope(np.log(dist), np.log(self.ratios[sel]))

    def rows(self) -> list[Row]:
        return [Row.build(th, r, r, 1.0) for th, r in zip(self.thetas, self.ratios)]


def lemma4_envelope_check(xi: Seq, pp: PairParams, p: float, thetas, spec: IntegralSpec | None = None) -> EnvelopeReport:
    """Tabulate ``interp_norm(xi; theta, p) / ||xi||_{l_p^{(1-theta)s0 + theta s1}}`` over ``thetas``."""
    spec = spec or DEFAULT_INTEGRAL
    th = np.asarray(thetas, dtype=np.float64)
    ratios = np.empty_like(th)
    for k, t in enumerate(th):
        num = interp_norm(xi, pp, InterpParams(t, p), spec)
        den = wlq_norm(xi, (1.0 - t) * pp.s0 + t * pp.s1, p)
        ratios[k] = num / den
    return EnvelopeReport(th, ratios, p, pp.q)


def normalized_monotonicity_check(
    xi: Seq, pp: PairParams, theta: float, q: float, r: float, spec: IntegralSpec | None = None, slack: float = 1e-9
) -> bool:
    """``norm_factor(theta, r) ||xi||_{theta,r} <= norm_factor(theta, q) ||xi||_{theta,q}`` for ``q <= r``."""
    if q > r:
        raise ValueError("need q <= r")
    spec = spec or DEFAULT_INTEGRAL
    big = norm_factor(theta, r).c * interp_norm(xi, pp, InterpParams(theta, r), spec)
    small = norm_factor(theta, q).c * interp_norm(xi, pp, InterpParams(theta, q), spec)
    return big <= small * (1.0 + slack)


def coarse_bound_check(xi: Seq, pp: PairParams, ip: InterpParams, spec: IntegralSpec | None = None, slack: float = 1e-9) -> bool:
    """Crude bound from ``K <= ||xi||_{A0}`` and ``K <= u ||xi||_{A1}``.

    Splitting the integral at ``u = 1`` gives
    ``||xi||_{theta,p}^p <= ||xi||_{A1}^p / ((1-theta) p) + ||xi||_{A0}^p / (theta p)``.
    The summed form ``c_p (theta^{-1/p} ||xi||_{A0} + (1-theta)^{-1/p} ||xi||_{A1})``
    with ``c_p = p^{-1/p} max(1, 2^{1/p - 1})`` is checked as well.
    """
    spec = spec or DEFAULT_INTEGRAL
    th, p = ip.theta, ip.p
    lhs = interp_norm(xi, pp, ip, spec)
    a0 = wlq_norm(xi, pp.s0, pp.q)
    a1 = wlq_norm(xi, pp.s1, pp.q)
    if pp.s0 > pp.s1:
        a0, a1 = a1, a0
        th = 1.0 - th
    power_form = a1**p / ((1.0 - th) * p) + a0**p / (th * p)
    cp = p ** (-1.0 / p) * max(1.0, 2.0 ** (1.0 / p - 1.0))
    summed = cp * (th ** (-1.0 / p) * a0 + (1.0 - th) ** (-1.0 / p) * a1)
    return lhs**p <= power_form * (1.0 + slack) and lhs <= summed * (1.0 + slack)


@dataclass(frozen=True)
class SequenceComparison:
    """Two-sided comparison of ``||xi||_{(l_2, l_2^t)_{s/t, p}}`` with ``||xi||_{l_p^s}``."""

    s: float
    t: float
    p: float
    interp: float
    weighted: float

    def envelope(self, exponent: float) -> float:
        return self.s ** (-exponent) + (self.t - self.s) ** (-exponent)

    @property
    def lower_ratio(self) -> float:
        """``interp / (envelope_max * weighted)``; bounded below uniformly in ``s``."""
        return self.interp / (self.envelope(1.0 / max(self.p, 2.0)) * self.weighted)

    @property
    def upper_ratio(self) -> float:
        """``interp / (envelope_min * weighted)``; bounded above uniformly in ``s``."""
        return self.interp / (self.envelope(1.0 / min(self.p, 2.0)) * self.weighted)

    def row(self) -> Row:
        return Row(self.s, self.interp, self.lower_ratio, self.weighted, self.upper_ratio)


def appendixB_comparison_check(xi: Seq, t: float, s: float, p: float, spec: IntegralSpec | None = None) -> SequenceComparison:
    """Compare the ``(l_2, l_2^t)_{s/t, p}`` norm with ``l_p^s`` through both envelopes."""
    if not 0.0 < s < t:
        raise ValueError("need 0 < s < t")
    spec = spec or DEFAULT_INTEGRAL
    val = interp_norm(xi, PairParams(0.0, t, 2.0), InterpParams(s / t, p), spec)
    return SequenceComparison(s, t, p, val, wlq_norm(xi, s, p))


def theorem343_rbar(t: float, s: float, lam: float) -> float:
    """Target smoothness for the improved embedding.

    ``t - lam (t - s)`` when ``t - s <= t / (2 lam)``; otherwise ``s / lam``
    when ``s < 1 / (2 lam)``.

    Raises
    ------
    RegimeViolation
        If neither condition holds or ``lam <= 1``.
    """
    if lam <= 1.0:
        raise RegimeViolation(f"need lambda > 1, got {lam}")
    if not 0.0 < s < t:
        raise RegimeViolation(f"need 0 < s < t, got s={s}, t={t}")
    if t - s <= t / (2.0 * lam):
        return t - lam * (t - s)
    if s < 1.0 / (2.0 * lam):
        return s / lam
    raise RegimeViolation(f"(t={t}, s={s}, lambda={lam}) violates both t-s <= t/(2 lambda) and s < 1/(2 lambda)")


def theorem343_seq_terms(xi: Seq, t: float, s: float, p: float, lam: float, spec: IntegralSpec | None = None):
    """Both sides of the improved sequence embedding.

    Returns ``(lhs, rhs, rbar)`` with
    ``lhs = (s (t-s))^{1/p} ||xi||_{(l_2, l_2^t)_{s/t, p}}`` and
    ``rhs = (rbar (t-rbar))^{1/2} ||xi||_{(l_2, l_2^t)_{rbar/t, 2}}``.
    Indices must be nonnegative: on all of the integers the ratio
    ``rhs / lhs`` is unbounded (atoms at ``j -> -inf`` scale like ``2^{j (rbar - s)}``).
    """
    if xi.j_min < 0:
        raise ValueError("the embedding is stated for nonnegative indices")
    rbar = theorem343_rbar(t, s, lam)
    spec = spec or DEFAULT_INTEGRAL
    pair = PairParams(0.0, t, 2.0)
    lhs = (s * (t - s)) ** (1.0 / p) * interp_norm(xi, pair, InterpParams(s / t, p), spec)
    rhs = math.sqrt(rbar * (t - rbar)) * interp_norm(xi, pair, InterpParams(rbar / t, 2.0), spec)
    return lhs, rhs, rbar


def theorem343_seq_check(
    xi: Seq, t: float, s: float, p: float, lam: float, constant: float | None = None, spec: IntegralSpec | None = None
) -> bool:
    """``rhs <= constant * lhs`` for the terms of :func:`theorem343_seq_terms`.

    ``constant`` defaults to the frozen calibration value.
    """
    if constant is None:
        from .calibration import FROZEN

        constant = FROZEN["t343_seq"]
    lhs, rhs, _ = theorem343_seq_terms(xi, t, s, p, lam, spec)
    return rhs <= constant * lhs


# --------------------------------------------------------------------------
# reiteration
# --------------------------------------------------------------------------

MAX_REITERATION_SUPPORT = 5


@dataclass(frozen=True)
class ReiterationRow:
    """Outer norm of ``((A0,A1)_{s0,q}, (A0,A1)_{s1,q})_{theta,p}`` against ``(A0,A1)_{s,p}``."""

    theta: float
    outer: float
    target: float
    p: float
    q: float

    @property
    def ratio(self) -> float:
        return self.outer / self.target

    @property
    def exponent_low(self) -> float:
        return 1.0 / max(self.p, self.q)

    @property
    def exponent_high(self) -> float:
        return 1.0 / min(self.p, self.q)

    def scaled(self, exponent: float) -> float:
        """``ratio * (theta (1 - theta))^{exponent}``."""
        return self.ratio * (self.theta * (1.0 - self.theta)) ** exponent

    def row(self) -> Row:
        return Row.build(self.theta, self.outer, self.outer, self.target)


def _lattice_norm(w, x, q):
    return math.fsum([(wi * xi) ** q for wi, xi in zip(w, x)]) ** (1.0 / q)


def _outer_k(u, w0, w1, x, q, lam):
    """``min_lambda ||lambda x||_{w0} + u ||(1 - lambda) x||_{w1}`` by coordinate descent.

    The objective is convex in each ``lambda_k`` on ``[0, 1]``, so a bounded
    Brent search per coordinate finds the coordinate minimum; sweeps repeat
    until the value stalls.  ``lam`` is updated in place (warm start).
    """

    def total(lv):
        return _lattice_norm(w0, [l * xi for l, xi in zip(lv, x)], q) + u * _lattice_norm(
            w1, [(1.0 - l) * xi for l, xi in zip(lv, x)], q
        )

    best = total(lam)
    for _ in range(60):
        prev = best
        for k in range(len(x)):

            def along(v, k=k):
                trial = list(lam)
                trial[k] = v
                return total(trial)

            res = minimize_scalar(along, bounds=(0.0, 1.0), method="bounded", options={"xatol": 1e-10})
            for cand in (res.x, 0.0, 1.0):
                val = along(cand)
                if val < best:
                    best, lam[k] = val, cand
        if prev - best <= 1e-13 * best:
            break
    return best


def reiteration_check(
    xi: Seq, s0: float, s1: float, theta: float, p: float, q: float, spec: IntegralSpec | None = None
) -> ReiterationRow:
    """Reiteration on the base couple ``(l_q^0, l_q^1)``.

    With outer exponent ``q`` the split functional decouples, so each inner
    space ``(A0,A1)_{s_i,q}`` is the weighted ``l_q`` norm whose weights are
    the atom norms ``interp_norm(e_j)``.  The outer K-functional (plain,
    not modified) is found by a decomposition search over ``xi_0 = lambda xi``,
    ``lambda in [0,1]^n``, which loses nothing because both inner norms are
    lattice norms.  The outer integral uses Gauss-Legendre in ``log u`` on the
    transition range and exact power tails outside it.

    Raises
    ------
    SupportTooLarge
        If more than five entries are nonzero.
    """
    if not (0.0 < s0 < 1.0 and 0.0 < s1 < 1.0 and s0 != s1):
        raise ValueError("need distinct s0, s1 in (0, 1)")
    ip = InterpParams(theta, p)
    spec = spec or DEFAULT_INTEGRAL
    if xi.support_size() > MAX_REITERATION_SUPPORT:
        raise SupportTooLarge(f"support {xi.support_size()} exceeds {MAX_REITERATION_SUPPORT}")
    base = PairParams(0.0, 1.0, q)
    s = (1.0 - theta) * s0 + theta * s1
    target = interp_norm(xi, base, InterpParams(s, p), spec)
    j, x = xi.support()
    if x.size == 0:
        return ReiterationRow(theta, 0.0, 0.0, p, q)
    w0 = [interp_norm(Seq.atom(int(jj)), base, InterpParams(s0, q), spec) for jj in j]
    w1 = [interp_norm(Seq.atom(int(jj)), base, InterpParams(s1, q), spec) for jj in j]
    x = x.tolist()
    n0 = _lattice_norm(w0, x, q)
    n1 = _lattice_norm(w1, x, q)

    ratios = [a / b for a, b in zip(w0, w1)]
    y_lo = math.log(min(ratios)) - 4.0
    y_hi = math.log(max(ratios)) + 4.0

    # widen until K is a pure power at both ends
    while True:
        lam = [0.0] * len(x)
        if _outer_k(math.exp(y_lo), w0, w1, x, q, lam) >= math.exp(y_lo) * n1 * (1.0 - 1e-12):
            break
        y_lo -= 2.0
    while True:
        lam = [1.0] * len(x)
        if _outer_k(math.exp(y_hi), w0, w1, x, q, lam) >= n0 * (1.0 - 1e-12):
            break
        y_hi += 2.0

    gx, gw = _gl(8)
    n_pan = max(1, math.ceil((y_hi - y_lo) / 0.25))
    step = (y_hi - y_lo) / n_pan
    lam = [1.0] * len(x)
    parts = []
    for k in range(n_pan):
        mid = y_lo + (k + 0.5) * step
        for g, wgt in zip(gx, gw):
            y = mid + 0.5 * step * g
            kv = _outer_k(math.exp(y), w0, w1, x, q, lam)
            parts.append(0.5 * step * wgt * math.exp(-theta * p * y) * kv**p)
    left = n1**p * math.exp((1.0 - theta) * p * y_lo) / ((1.0 - theta) * p)
    right = n0**p * math.exp(-theta * p * y_hi) / (theta * p)
    outer = math.fsum(parts + [left, right]) ** (1.0 / p)
    return ReiterationRow(ip.theta, outer, target, p, q)
