import cmath
import math

import numpy as np
import pytest

from fraclab.errors import TruncationFailure
from fraclab.fracdiff import (
    TrigPoly,
    TruncationSpec,
    abs_tail_bound,
    apply_frac_difference,
    frac_binomial,
    frac_binomials,
    frac_difference_pointwise,
    frac_multiplier,
    multiplier_grid,
    multiplier_series,
)


def random_poly(rng, N):
    modes = {0: rng.standard_normal()}
    for nu in range(1, N + 1):
        modes[nu] = complex(rng.standard_normal(), rng.standard_normal())
    return TrigPoly.from_modes(modes)


def classical_difference(f, k, h):
    """Literal k-th forward difference sum_j (-1)^j C(k,j) f(x + (k-j)h), per mode."""
    nus = f.modes
    out = np.zeros_like(f.coeffs)
    for j in range(k + 1):
        out += (-1) ** j * math.comb(k, j) * f.coeffs * np.exp(1j * nus * (k - j) * h)
    return TrigPoly(out)


# --- binomial coefficients -------------------------------------------------


@pytest.mark.parametrize("t,j,want", [(1, 2, 0.0), (0.5, 1, 0.5), (0.5, 2, -0.125), (3, 4, 0.0), (2.5, 0, 1.0)])
def test_binomial_values(t, j, want):
    assert frac_binomial(t, j) == want


def test_binomial_vector_matches_scalar():
    c = frac_binomials(0.7, 50)
    assert np.allclose(c, [frac_binomial(0.7, j) for j in range(50)], rtol=1e-14, atol=0)


@pytest.mark.parametrize("t", [0.1 * k for k in range(1, 10)])
def test_sign_pattern_below_one(t):
    c = frac_binomials(t, 10_001)[1:]
    j = np.arange(1, c.size + 1)
    assert np.all((-1.0) ** (j + 1) * c > 0)


@pytest.mark.parametrize("t", [0.2, 0.5, 1.3, 2.7, 3.0])
def test_abs_partial_sums_respect_tail_bound(t):
    c = np.abs(frac_binomials(t, 200_001))
    for J in (100, 1000, 10_000, 100_000):
        tail = math.fsum(c[J + 1 :])
        assert tail <= abs_tail_bound(t, J) * (1 + 1e-12) + 1e-300


# --- multiplier ------------------------------------------------------------


def test_multiplier_first_difference():
    for nu, h in [(1, 0.3), (5, 2.0), (-3, 0.7)]:
        assert abs(frac_multiplier(1, nu, h) - (cmath.exp(1j * nu * h) - 1)) < 1e-15


def test_multiplier_zero_mode_vanishes():
    assert frac_multiplier(2, 0, 0.3) == 0
    assert abs(frac_multiplier(0.5, 0, 0.3)) == 0


def test_multiplier_half_order_modulus():
    assert abs(abs(frac_multiplier(0.5, 1, math.pi / 2)) - 2**0.25) < 1e-10


def test_multiplier_matches_direct_partial_sums():
    # plain partial sums, no tail acceleration; the tail decays like n^{-1-t}
    t, nu, h = 0.5, 1, math.pi / 2
    c = frac_binomials(t, 2_000_001)
    j = np.arange(c.size)
    direct = np.sum((-1.0) ** j * c * np.exp(1j * nu * (t - j) * h))
    assert abs(direct - frac_multiplier(t, nu, h)) < 1e-8


def test_multiplier_modulus_random():
    rng = np.random.default_rng(1)
    spec = TruncationSpec()
    for _ in range(200):
        t = rng.uniform(0.05, 3.0)
        nu = int(rng.integers(-20, 21))
        h = rng.uniform(0.05, math.pi)
        want = abs(2 * math.sin(nu * h / 2)) ** t
        try:
            got = abs(frac_multiplier(t, nu, h, spec))
        except TruncationFailure:
            continue
        assert abs(got - want) <= spec.tail_tol * max(1.0, want) * 10


def test_multiplier_certificate_reported():
    sv = multiplier_series(0.7, 3, 0.4)
    assert sv.bound <= 1e-10 and sv.n_terms >= 1 and sv.route


def test_multiplier_grid_matches_series():
    rng = np.random.default_rng(2)
    for t in (0.3, 0.7, 1.5, 2.0):
        nus = np.arange(-6, 7)
        hs = rng.uniform(-3, 3, 5)
        grid = multiplier_grid(t, nus, hs)
        for a, h in enumerate(hs):
            for b, nu in enumerate(nus):
                assert abs(grid[a, b] - frac_multiplier(t, int(nu), float(h))) < 1e-9


def test_tiny_angle_raises_truncation():
    with pytest.raises(TruncationFailure):
        frac_multiplier(0.5, 1, 5e-9, TruncationSpec(j_max_cap=1000))


# --- the operator ----------------------------------------------------------


@pytest.mark.parametrize("t", [1.0, 2.0, 0.5])
def test_constant_is_annihilated(t):
    f = TrigPoly.constant(3.0, degree=2)
    assert apply_frac_difference(f, t, 0.4).is_zero()


def test_first_difference_of_cosine():
    h = 0.37
    g = apply_frac_difference(TrigPoly.from_cosines([(1, 1.0)]), 1, h)
    x = np.linspace(0, 2 * np.pi, 17)
    assert np.allclose(g(x), np.cos(x + h) - np.cos(x), atol=1e-14)


def test_half_difference_l2_norm():
    g = apply_frac_difference(TrigPoly.from_cosines([(1, 1.0)]), 0.5, math.pi / 2)
    l2 = math.sqrt(2 * math.pi * float(np.sum(np.abs(g.coeffs) ** 2)))
    assert abs(l2 - math.sqrt(math.pi) * 2**0.25) < 1e-10


def test_zero_shift_gives_zero():
    f = TrigPoly.from_cosines([(1, 1.0), (2, 0.5)])
    for t in (0.5, 1.0, 2.0):
        assert apply_frac_difference(f, t, 0.0).is_zero()


@pytest.mark.parametrize("k", [1, 2, 3])
def test_integer_orders_are_classical(k):
    rng = np.random.default_rng(k)
    for _ in range(10):
        f = random_poly(rng, int(rng.integers(1, 17)))
        h = rng.uniform(-2, 2)
        got = apply_frac_difference(f, k, h)
        want = classical_difference(f, k, h)
        scale = np.max(np.abs(want.coeffs))
        assert np.max(np.abs(got.coeffs - want.coeffs)) <= 1e-12 * scale


@pytest.mark.parametrize("t", [0.3, 0.7, 1.5])
def test_pointwise_series_matches_spectral(t):
    rng = np.random.default_rng(int(10 * t))
    spec = TruncationSpec()
    x = np.linspace(0, 2 * np.pi, 64, endpoint=False)
    for _ in range(3):
        f = random_poly(rng, 4)
        h = rng.uniform(0.2, 1.5)
        direct = frac_difference_pointwise(f, t, h, x, spec)
        spectral = apply_frac_difference(f, t, h, spec)(x)
        scale = float(np.sum(np.abs(f.coeffs)))
        assert np.max(np.abs(direct - spectral)) <= 10 * spec.tail_tol * scale


def test_linearity():
    rng = np.random.default_rng(5)
    f, g = random_poly(rng, 3), random_poly(rng, 5)
    lhs = apply_frac_difference(f + g * 2.0, 0.6, 0.9)
    rhs = apply_frac_difference(f, 0.6, 0.9) + apply_frac_difference(g, 0.6, 0.9) * 2.0
    assert lhs.allclose(rhs, rtol=1e-12, atol=1e-13)


def test_trigpoly_rejects_non_real():
    with pytest.raises(ValueError):
        TrigPoly(np.array([1.0, 0.0, 2.0]))


def test_truncation_spec_validation():
    with pytest.raises(ValueError):
        TruncationSpec(tail_tol=0)
    with pytest.raises(ValueError):
        TruncationSpec(j_max_cap=0)
