"""Experiment drivers: parameter sweeps, coefficient-side counterexample and inequality suites.

Every driver returns a :class:`~fraclab.report.SweepReport` whose rows are
computed independently, so ``jobs > 1`` only changes wall time.
"""

from __future__ import annotations

import math
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import partial

import numpy as np
from scipy import special

from . import __version__
from .errors import RegimeViolation
from .fracdiff import TrigPoly, TruncationSpec
from .interp import (
    Seq,
    appendixB_comparison_check,
    theorem343_rbar,
    theorem343_seq_terms,
)
from .norms import (
    MonotoneCoeffs,
    QuadratureSpec,
    butzer_seminorm,
    butzer_seminorm_spectral_p2,
    frac_laplacian,
    gagliardo_seminorm,
    hl_lp_proxy,
    hl_sobolev_partial_sums,
    l2_norm_exact,
    lp_norm,
)
from .report import Row, SweepReport

__all__ = [
    "FuncSpec",
    "parse_s_grid",
    "bbm_sweep",
    "ms_sweep",
    "CounterexampleReport",
    "counterexample_sweep",
    "counterexample_gagliardo_value",
    "counterexample_butzer_value",
    "blowup_sweep",
    "fit_loglog_slope",
    "sobolev_ineq_check",
    "sharp_tl_check_p2",
    "theorem343_p2_check",
    "random_trig_set",
    "SUITES",
    "run_suite",
    "suite_report",
]


# --------------------------------------------------------------------------
# inputs
# --------------------------------------------------------------------------

_COS_RE = re.compile(r"^cos:(\d+),([-+0-9.eE]+)$")


@dataclass(frozen=True)
class FuncSpec:
    """A test function: a cosine list or a truncated power-law cosine series.

    ``counterexample`` series have ``c_nu = nu^{-t0 - 1 + 1/p}`` for ``nu <= N``.
    """

    kind: str
    pairs: tuple = ()
    t0: float = 0.0
    p: float = 2.0
    N: int = 0

    def __post_init__(self):
        if self.kind == "cosine-list":
            if not self.pairs:
                raise ValueError("a cosine list needs at least one term")
            for nu, _ in self.pairs:
                if nu < 0:
                    raise ValueError("cosine modes must be nonnegative")
        elif self.kind == "counterexample":
            if not (0.0 < self.t0 and 1.0 < self.p < math.inf and self.N >= 1):
                raise ValueError("counterexample needs t0 > 0, 1 < p < inf, N >= 1")
        else:
            raise ValueError(f"unknown function kind {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> "FuncSpec":
        """Parse ``cos:<nu>,<amp>[;cos:<nu>,<amp>]*`` or ``counterexample:<t0>,<p>,<N>``."""
        text = text.strip()
        if text.startswith("counterexample:"):
            parts = text[len("counterexample:"):].split(",")
            if len(parts) != 3:
                raise ValueError(f"bad counterexample spec {text!r}")
            return cls("counterexample", t0=float(parts[0]), p=float(parts[1]), N=int(parts[2]))
        pairs = []
        for chunk in text.split(";"):
            m = _COS_RE.match(chunk.strip())
            if not m:
                raise ValueError(f"bad cosine term {chunk!r} in {text!r}")
            pairs.append((int(m.group(1)), float(m.group(2))))
        return cls("cosine-list", pairs=tuple(pairs))

    def __str__(self):
        if self.kind == "counterexample":
            return f"counterexample:{self.t0!r},{self.p!r},{self.N}"
        return ";".join(f"cos:{nu},{amp!r}" for nu, amp in self.pairs)

    def coefficients(self) -> MonotoneCoeffs:
        if self.kind != "counterexample":
            raise ValueError("only counterexample specs have monotone coefficients")
        nu = np.arange(1, self.N + 1, dtype=np.float64)
        return MonotoneCoeffs(nu ** (-self.t0 - 1.0 + 1.0 / self.p))

    def trigpoly(self) -> TrigPoly:
        if self.kind == "counterexample":
            return self.coefficients().as_trigpoly()
        return TrigPoly.from_cosines(self.pairs)


def _as_poly(f) -> TrigPoly:
    if isinstance(f, TrigPoly):
        return f
    if isinstance(f, str):
        f = FuncSpec.parse(f)
    return f.trigpoly()


def _describe(f) -> str:
    return str(f) if isinstance(f, (str, FuncSpec)) else f"trigpoly(degree={f.degree})"


def parse_s_grid(text: str) -> np.ndarray:
    """``geometric:<a>:<b>:<n>`` -> ``n`` geometrically spaced values from ``a`` to ``b``."""
    parts = text.split(":")
    if len(parts) != 4 or parts[0] != "geometric":
        raise ValueError(f"expected geometric:<a>:<b>:<n>, got {text!r}")
    a, b, n = float(parts[1]), float(parts[2]), int(parts[3])
    if a <= 0 or b <= 0 or n < 1:
        raise ValueError("geometric grid needs positive endpoints and n >= 1")
    return np.geomspace(a, b, n)


def _pmap(fn, items, jobs: int):
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _metadata(spec: QuadratureSpec | None, **extra) -> dict:
    meta = {"code_version": __version__}
    meta["quadrature"] = asdict(spec or QuadratureSpec())
    meta["truncation"] = asdict(TruncationSpec())
    meta.update(extra)
    return meta


def _seminorm(f: TrigPoly, s: float, t: float, p: float, spec, method: str) -> float:
    if method == "spectral":
        if p != 2.0:
            raise ValueError("the spectral path exists only for p = 2")
        return butzer_seminorm_spectral_p2(f, s, t, (spec or QuadratureSpec()).shifts)
    return butzer_seminorm(f, (s, t, p), spec)


# --------------------------------------------------------------------------
# limits s -> t and s -> 0
# --------------------------------------------------------------------------


def _bbm_row(s, f, t, p, spec, method, reference):
    raw = _seminorm(f, s, t, p, spec, method)
    return Row.build(s, raw, (t - s) ** (1.0 / p) * raw, reference)


def bbm_sweep(f, t: float, p: float, s_grid, spec: QuadratureSpec | None = None, method: str = "grid", jobs: int = 1) -> SweepReport:
    """Rows ``(s, B, (t-s)^{1/p} B, ||(-Delta)^{t/2} f||_p, ratio)`` with ``B`` the Butzer seminorm."""
    poly = _as_poly(f)
    s_grid = np.asarray(s_grid, dtype=np.float64)
    if np.any(s_grid <= 0) or np.any(s_grid >= t):
        raise ValueError("s_grid must lie in (0, t)")
    reference = lp_norm(frac_laplacian(poly, t), p, spec)
    rows = _pmap(partial(_bbm_row, f=poly, t=t, p=p, spec=spec, method=method, reference=reference), s_grid.tolist(), jobs)
    return SweepReport("bbm", p, t, rows, _metadata(spec, func=_describe(f), method=method))


def _ms_row(s, f, t, p, spec, method, reference):
    raw = _seminorm(f, s, t, p, spec, method)
    return Row.build(s, raw, s ** (1.0 / p) * raw, reference)


def ms_sweep(f, t: float, p: float, s_grid, spec: QuadratureSpec | None = None, method: str = "grid", jobs: int = 1) -> SweepReport:
    """Rows ``(s, B, s^{1/p} B, ||f||_p, ratio)``."""
    poly = _as_poly(f)
    s_grid = np.asarray(s_grid, dtype=np.float64)
    if np.any(s_grid <= 0) or np.any(s_grid >= t):
        raise ValueError("s_grid must lie in (0, t)")
    reference = lp_norm(poly, p, spec)
    rows = _pmap(partial(_ms_row, f=poly, t=t, p=p, spec=spec, method=method, reference=reference), s_grid.tolist(), jobs)
    return SweepReport("ms", p, t, rows, _metadata(spec, func=_describe(f), method=method))


# --------------------------------------------------------------------------
# counterexample on the coefficient side
# --------------------------------------------------------------------------


def counterexample_gagliardo_value(t0: float, p: float, s: float, N: int) -> float:
    """First-difference seminorm proxy of the infinite series ``c_nu = nu^{-t0-1+1/p}``.

    Uses ``sum_{l >= 1} l^{sp-1} omega(1/l)^p`` with the coefficient modulus
    ``omega(1/l)^p = l^{-p} sum_{nu<=l} nu^{2p-2} c_nu^p + sum_{nu>l} nu^{p-2} c_nu^p``
    (the ``p``-th power of :func:`~fraclab.norms.gm_modulus_proxy` at ``u = 1/l``).
    Terms ``l <= N`` are summed exactly, the modulus tail through the Hurwitz
    zeta function; for ``l > N`` the Euler-Maclaurin form
    ``omega(1/l)^p = l^{-t0 p} / (p t0 (1-t0)) + zeta(-a) l^{-p} + O(l^{-1-p})``
    with ``a = p - 1 - t0 p`` is summed in closed form.
    """
    if not 0.0 < s < t0 < 1.0:
        raise ValueError("need 0 < s < t0 < 1")
    a = p - 1.0 - t0 * p
    nu = np.arange(1, N + 1, dtype=np.float64)
    head_sum = np.cumsum(nu**a)
    omega_p = nu ** (-p) * head_sum + special.zeta(1.0 + t0 * p, nu + 1.0)
    head = math.fsum((nu ** (s * p - 1.0) * omega_p).tolist())
    amp = 1.0 / (p * t0 * (1.0 - t0))
    tail = amp * special.zeta(1.0 + (t0 - s) * p, N + 1.0) + special.zeta(-a) * special.zeta(1.0 + p - s * p, N + 1.0)
    return (head + tail) ** (1.0 / p)


_EULER_GAMMA = 0.5772156649015329


def counterexample_butzer_value(t0: float, p: float, s: float) -> float:
    """Order-``t0`` seminorm proxy of the same series through its K-functional.

    For the couple ``(L^p, H^{t0,p})`` and ``n = 2^l`` the splitting at
    frequency ``n`` gives ``K(n^{-t0})^p ~ n^{-t0 p} (H_n^{1/p} + z_n^{1/p})^p``
    with ``H_n`` the harmonic number (Sobolev part) and
    ``z_n = n^{t0 p} zeta(1 + t0 p, n)`` (the high-frequency ``L^p`` part).
    The dyadic sum ``sum_l 2^{l s p} K(2^{-l t0})^p`` is cut where the terms
    drop below ``1e-18`` of the total; beyond ``l = 60`` the two factors use
    their asymptotic forms ``l log 2 + gamma`` and ``1/(t0 p)``.
    """
    if not 0.0 < s < t0:
        raise ValueError("need 0 < s < t0")
    eps = (t0 - s) * p
    l_max = int(math.ceil((45.0 + 2.0 * math.log(1.0 / eps + 1.0)) / (eps * math.log(2.0)))) + 64
    l = np.arange(0, l_max, dtype=np.float64)
    small = l <= 60
    n = np.exp2(np.minimum(l, 60.0))
    harm = np.where(small, special.digamma(n + 1.0) + _EULER_GAMMA, l * math.log(2.0) + _EULER_GAMMA)
    zl = np.where(small, n ** (t0 * p) * special.zeta(1.0 + t0 * p, n), 1.0 / (t0 * p))
    terms = np.exp2(-l * eps) * (harm ** (1.0 / p) + zl ** (1.0 / p)) ** p
    return math.fsum(terms.tolist()) ** (1.0 / p)


@dataclass
class CounterexampleReport:
    """The two seminorm families plus the Sobolev-proxy growth rows."""

    gagliardo: SweepReport
    butzer: SweepReport
    sobolev: SweepReport

    def reports(self) -> list[SweepReport]:
        return [self.gagliardo, self.butzer, self.sobolev]

    def gagliardo_variation(self) -> float:
        v = np.array(self.gagliardo.column("normalized"))
        return float(v.max() / v.min())

    def butzer_slope(self, max_gap: float | None = None) -> float:
        s = np.array(self.butzer.column("param"))
        v = np.array(self.butzer.column("normalized"))
        gaps = self.butzer.t - s
        sel = gaps <= max_gap * (1 + 1e-12) if max_gap is not None else np.ones_like(gaps, dtype=bool)
        return fit_loglog_slope(gaps[sel], v[sel])

    def sobolev_fit(self) -> tuple[float, float]:
        """Slope and ``R^2`` of ``log(proxy)`` against ``log log N``."""
        n = np.array(self.sobolev.column("param"))
        v = np.array(self.sobolev.column("raw"))
        x, y = np.log(np.log(n)), np.log(v)
        slope, icpt = np.polyfit(x, y, 1)
        resid = y - (slope * x + icpt)
        r2 = 1.0 - np.sum(resid**2) / np.sum((y - y.mean()) ** 2)
        return float(slope), float(r2)


def counterexample_sweep(t0: float, p: float, N: int, s_grid, sobolev_sizes=None) -> CounterexampleReport:
    """Seminorm families and Sobolev-proxy growth for ``c_nu = nu^{-t0-1+1/p}``.

    ``N`` is the length of the explicitly summed head in the first-difference
    family and the largest truncation in the Sobolev-proxy rows; both families
    include the rest of the infinite series in closed form.
    """
    s_grid = np.asarray(s_grid, dtype=np.float64)
    if np.any(s_grid <= 0) or np.any(s_grid >= t0):
        raise ValueError("s_grid must lie in (0, t0)")
    meta = {"code_version": __version__, "t0": t0, "N": N}
    lp_ref = hl_lp_proxy(FuncSpec("counterexample", t0=t0, p=p, N=N).coefficients(), p)
    g_rows, b_rows = [], []
    for s in s_grid.tolist():
        g = counterexample_gagliardo_value(t0, p, s, N)
        g_rows.append(Row.build(s, g, (t0 - s) ** (1.0 / p) * g, lp_ref))
        b = counterexample_butzer_value(t0, p, s)
        b_rows.append(Row.build(s, b, (t0 - s) ** (1.0 / p) * b, (t0 - s) ** (-1.0 / p)))
    if sobolev_sizes is None:
        sobolev_sizes = [2**k for k in range(4, int(math.log2(N)) + 1)]
    partial_sums = hl_sobolev_partial_sums(FuncSpec("counterexample", t0=t0, p=p, N=max(sobolev_sizes)).coefficients(), t0, p)
    h_rows = []
    for n in sobolev_sizes:
        v = float(partial_sums[n - 1])
        h_rows.append(Row.build(n, v, v, math.log(n) ** (1.0 / p)))
    return CounterexampleReport(
        SweepReport("counterexample-gagliardo", p, t0, g_rows, meta),
        SweepReport("counterexample-butzer", p, t0, b_rows, meta),
        SweepReport("counterexample-sobolev", p, t0, h_rows, meta),
    )


# --------------------------------------------------------------------------
# blow-up of the Butzer / Gagliardo ratio
# --------------------------------------------------------------------------


def fit_loglog_slope(x, y) -> float:
    """Least-squares slope of ``log y`` against ``log x``."""
    return float(np.polyfit(np.log(np.asarray(x, float)), np.log(np.asarray(y, float)), 1)[0])


def _blowup_row(s, f, t, p, spec):
    b = butzer_seminorm(f, (s, t, p), spec)
    g = gagliardo_seminorm(f, s, p, spec)
    return Row.build(s, b, b, g)


def blowup_sweep(f, t: float, p: float, s_grid, spec: QuadratureSpec | None = None, jobs: int = 1) -> SweepReport:
    """Rows ``(s, B_t, B_t, G, B_t / G)`` with ``B_t`` the order-``t`` and ``G`` the first-difference seminorm."""
    if not 0.0 < t < 1.0:
        raise ValueError("need 0 < t < 1")
    poly = _as_poly(f)
    s_grid = np.asarray(s_grid, dtype=np.float64)
    if np.any(s_grid <= 0) or np.any(s_grid >= t):
        raise ValueError("s_grid must lie in (0, t)")
    rows = _pmap(partial(_blowup_row, f=poly, t=t, p=p, spec=spec), s_grid.tolist(), jobs)
    return SweepReport("blowup", p, t, rows, _metadata(spec, func=_describe(f)))


# --------------------------------------------------------------------------
# inequality checks
# --------------------------------------------------------------------------


def _hdot(f: TrigPoly, r: float) -> float:
    """``||(-Delta)^{r/2} f||_2``; ``r = 0`` gives the full ``L^2`` norm."""
    return l2_norm_exact(f) if r == 0.0 else l2_norm_exact(frac_laplacian(f, r))


def _sobolev_ratio(case, alpha, p, spec):
    f, s, t = case
    norm = lp_norm(f, p, spec) if p != 2.0 else l2_norm_exact(f)

    def side(x):
        return norm + min(x, alpha - x) ** (1.0 / p) * _seminorm(f, x, alpha, p, spec, "spectral" if p == 2.0 else "grid")

    return side(s) / side(t)


def sobolev_ineq_check(f_set, alpha: float, p: float, st_grid, spec: QuadratureSpec | None = None, jobs: int = 1) -> SweepReport:
    """Ratios ``(||f||_p + m(s)^{1/p} B_s) / (||f||_p + m(t)^{1/p} B_t)`` with ``m(x) = min(x, alpha-x)``.

    ``B_x`` is the order-``alpha`` seminorm (spectral at ``p = 2``).  One row
    per ``(f, s, t)``; ``param`` is the case index.
    """
    polys = [_as_poly(f) for f in f_set]
    cases = []
    for f in polys:
        for s, t in st_grid:
            if not 0.0 < s < t < alpha:
                raise ValueError("need 0 < s < t < alpha")
            cases.append((f, float(s), float(t)))
    ratios = _pmap(partial(_sobolev_ratio, alpha=alpha, p=p, spec=spec), cases, jobs)
    rows = [Row(float(k), r, r, 1.0, r) for k, r in enumerate(ratios)]
    return SweepReport("sobolev", p, alpha, rows, _metadata(spec))


def _tl_terms(f: TrigPoly, r: float, s: float, t: float) -> tuple[float, float]:
    """First-difference seminorm at ``p = 2`` and the matching two-exponent bound.

    * ``0 < r < t < 1``: ``(t-s)^{1/2} ||f||_{H^r} + (s-r)^{1/2} ||f||_{H^t}``;
    * ``r = 0``: ``(t-s)^{1/2} s^{-1/2} ||f||_2 + ||f||_{H^t}``;
    * ``t = 1``: ``||f||_{H^r} + (s-r)^{1/2} (1-s)^{-1/2} ||f||_{H^1}``.

    At ``p = 2`` all prefactor exponents equal ``1/2``; the two end cases keep
    the singular weight that the first-difference seminorm carries as
    ``s -> 0`` or ``s -> 1``.
    """
    lhs = butzer_seminorm_spectral_p2(f, s, 1.0)
    if r == 0.0:
        rhs = math.sqrt((t - s) / s) * l2_norm_exact(f) + _hdot(f, t)
    elif t == 1.0:
        rhs = _hdot(f, r) + math.sqrt((s - r) / (1.0 - s)) * _hdot(f, 1.0)
    else:
        rhs = math.sqrt(t - s) * _hdot(f, r) + math.sqrt(s - r) * _hdot(f, t)
    return lhs, rhs


def sharp_tl_check_p2(f_set, r: float, t: float, s_grid, spec: QuadratureSpec | None = None) -> SweepReport:
    """Two-exponent bounds for the first-difference seminorm at ``p = 2``.

    One row per ``(f, s)`` with ``raw`` the seminorm, ``reference`` the bound
    of :func:`_tl_terms` and ``ratio = raw / reference``.  For ``0 < r < t < 1``
    ``metadata["sup_form"]`` also holds, per ``f``,
    ``max_s raw / (||f||_2 + ||f||_{H^t})`` (the weight in front of the
    supremum is 1 at ``p = 2``).
    """
    if not 0.0 <= r < t <= 1.0:
        raise ValueError("need 0 <= r < t <= 1")
    polys = [_as_poly(f) for f in f_set]
    s_grid = [float(s) for s in s_grid]
    if any(not r < s < t for s in s_grid):
        raise ValueError("need r < s < t on the grid")
    rows, sup_form = [], []
    for f in polys:
        best = 0.0
        for s in s_grid:
            lhs, rhs = _tl_terms(f, r, s, t)
            rows.append(Row.build(s, lhs, lhs, rhs))
            best = max(best, lhs)
        if 0.0 < r and t < 1.0:
            denom = l2_norm_exact(f) + _hdot(f, t)
            sup_form.append(best / denom if denom else 0.0)
    return SweepReport("tl", 2.0, t, rows, _metadata(spec, r=r, sup_form=sup_form))


def _t343_p2_ratios(f: TrigPoly, t: float, s: float, lam: float, shifts: str = "line") -> list[tuple[float, float]]:
    """``(r, ||f||_{H^r} / (||f||_2 + (t-s)^{1/2} B))`` for ``r in {0, rbar/2, rbar}``."""
    if t - s > t / (2.0 * lam):
        raise RegimeViolation(f"need t - s <= t/(2 lambda); got t={t}, s={s}, lambda={lam}")
    rbar = theorem343_rbar(t, s, lam)
    rhs = l2_norm_exact(f) + math.sqrt(t - s) * butzer_seminorm_spectral_p2(f, s, t, shifts)
    return [(r, _hdot(f, r) / rhs if rhs else 0.0) for r in (0.0, 0.5 * rbar, rbar)]


def theorem343_p2_check(f_set, t: float, s_grid, lam: float, spec: QuadratureSpec | None = None) -> SweepReport:
    """``||f||_{H^r} / (||f||_2 + (t-s)^{1/2} B_s)`` for ``r in {0, rbar/2, rbar}`` at ``p = 2``.

    ``param`` is ``s``; each ``(f, s)`` contributes three rows (ordered by ``r``).
    """
    polys = [_as_poly(f) for f in f_set]
    shifts = (spec or QuadratureSpec()).shifts
    rows = []
    for f in polys:
        for s in s_grid:
            for r, ratio in _t343_p2_ratios(f, t, float(s), lam, shifts):
                rows.append(Row(float(s), r, ratio, 1.0, ratio))
    return SweepReport("t343", 2.0, t, rows, _metadata(spec, lam=lam))


# --------------------------------------------------------------------------
# seeded random suites
# --------------------------------------------------------------------------


def random_trig_set(rng: np.random.Generator, n: int, max_degree: int = 8) -> list[TrigPoly]:
    """``n`` random real trigonometric polynomials of degree at most ``max_degree``."""
    out = []
    for _ in range(n):
        deg = int(rng.integers(1, max_degree + 1))
        c = np.zeros(2 * deg + 1, dtype=np.complex128)
        pos = rng.standard_normal(deg) + 1j * rng.standard_normal(deg)
        pos *= rng.random(deg) < 0.7
        pos[-1] = pos[-1] if pos[-1] != 0 else 1.0
        c[deg + 1:] = pos
        c[:deg] = np.conj(pos[::-1])
        c[deg] = rng.standard_normal() if rng.random() < 0.5 else 0.0
        out.append(TrigPoly(c))
    return out


def _random_seq(rng: np.random.Generator, nonneg: bool) -> Seq:
    size = int(rng.integers(1, 9))
    lo = int(rng.integers(0, 6)) if nonneg else int(rng.integers(-5, 4))
    vals = rng.standard_normal(size) * (rng.random(size) < 0.8)
    if not np.any(vals):
        vals[0] = 1.0
    return Seq(lo, vals)


def _case_sobolev(seed: int) -> dict:
    rng = np.random.default_rng(seed)
    (f,) = random_trig_set(rng, 1)
    alpha = float(rng.uniform(0.4, 2.5))
    s, t = sorted(alpha * rng.uniform(0.01, 0.99, 2))
    ratio = _sobolev_ratio((f, s, t), alpha, 2.0, None)
    return {"param": seed, "ratio": ratio, "s": s, "t": t, "alpha": alpha}


def _case_sobolev_unnormalized(seed: int) -> dict:
    """Negative control: drop the ``min(s, alpha - s)`` weights."""
    rng = np.random.default_rng(seed)
    (f,) = random_trig_set(rng, 1)
    alpha = float(rng.uniform(0.4, 2.5))
    s = alpha * 10.0 ** rng.uniform(-6, -3)
    t = alpha * rng.uniform(0.3, 0.7)
    norm = l2_norm_exact(f)
    lhs = norm + butzer_seminorm_spectral_p2(f, s, alpha)
    rhs = norm + butzer_seminorm_spectral_p2(f, t, alpha)
    return {"param": seed, "ratio": lhs / rhs}


def _case_tl(seed: int) -> dict:
    """One of the three forms of :func:`_tl_terms` on a fixed parameter box.

    The bound's constant depends on ``(r, t)``, so cases keep ``r >= 0.1`` in
    the two-sided form and ``t <= 0.9`` whenever ``t < 1``.
    """
    rng = np.random.default_rng(seed)
    (f,) = random_trig_set(rng, 1)
    form = int(rng.integers(0, 3))
    if form == 0:
        r = float(rng.uniform(0.1, 0.5))
        t = float(rng.uniform(r + 0.2, 0.9))
    elif form == 1:
        r, t = 0.0, float(rng.uniform(0.2, 0.9))
    else:
        r, t = float(rng.uniform(0.1, 0.8)), 1.0
    s = float(r + (t - r) * rng.uniform(0.01, 0.99))
    lhs, rhs = _tl_terms(f, r, s, t)
    return {"param": seed, "ratio": lhs / rhs}


def _case_t343_p2(seed: int) -> dict:
    rng = np.random.default_rng(seed)
    (f,) = random_trig_set(rng, 1)
    t = float(rng.uniform(0.3, 1.0))
    lam = float(rng.uniform(1.2, 3.0))
    s = t - (t / (2.0 * lam)) * float(rng.uniform(0.01, 1.0))
    ratios = _t343_p2_ratios(f, t, s, lam)
    return {"param": seed, "ratio": max(r for _, r in ratios)}


def _case_appendixB(seed: int) -> dict:
    rng = np.random.default_rng(seed)
    xi = _random_seq(rng, nonneg=False)
    t = float(rng.uniform(0.5, 2.5))
    s = t * float(rng.uniform(0.02, 0.98))
    p = float(rng.choice([1.5, 2.0, 3.0, 4.0]))
    cmp = appendixB_comparison_check(xi, t, s, p)
    return {"param": seed, "lower": cmp.lower_ratio, "upper": cmp.upper_ratio}


def _case_t343_seq(seed: int) -> dict:
    rng = np.random.default_rng(seed)
    xi = _random_seq(rng, nonneg=True)
    t = float(rng.uniform(0.3, 2.0))
    lam = float(rng.uniform(1.2, 3.0))
    p = float(rng.choice([1.5, 2.0, 3.0]))
    if rng.random() < 0.5 or 1.0 / (2.0 * lam) >= t:
        s = t - (t / (2.0 * lam)) * float(rng.uniform(0.01, 1.0))
    else:
        s = min(t, 1.0 / (2.0 * lam)) * float(rng.uniform(0.01, 0.99))
    lhs, rhs, _ = theorem343_seq_terms(xi, t, s, p, lam)
    return {"param": seed, "ratio": rhs / lhs}


SUITES = {
    "sobolev": _case_sobolev,
    "tl": _case_tl,
    "t343_p2": _case_t343_p2,
    "appendixB": _case_appendixB,
    "t343_seq": _case_t343_seq,
    "sobolev_unnormalized": _case_sobolev_unnormalized,
}


def run_suite(name: str, seeds, jobs: int = 1) -> list[dict]:
    """Evaluate one seeded case per seed, in seed order."""
    return _pmap(SUITES[name], list(seeds), jobs)


def suite_report(name: str, seeds, jobs: int = 1) -> SweepReport:
    """Suite results as report rows: ``param`` is the seed, ``ratio`` the checked quantity.

    For the two-sided ``appendixB`` suite ``normalized`` holds the lower and
    ``ratio`` the upper ratio.
    """
    results = run_suite(name, seeds, jobs)
    rows = []
    for res in results:
        if name == "appendixB":
            rows.append(Row(float(res["param"]), res["lower"], res["lower"], 1.0, res["upper"]))
        else:
            rows.append(Row(float(res["param"]), res["ratio"], res["ratio"], 1.0, res["ratio"]))
    return SweepReport(f"suite-{name}", 2.0, 0.0, rows, {"code_version": __version__, "suite": name})
