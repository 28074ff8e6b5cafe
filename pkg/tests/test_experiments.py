import numpy as np
import pytest

from fraclab.calibration import FRESH_SEEDS, FROZEN, _round_out, calibrate, violations
from fraclab.errors import RegimeViolation
from fraclab.experiments import (
    FuncSpec,
    bbm_sweep,
    blowup_sweep,
    counterexample_sweep,
    fit_loglog_slope,
    ms_sweep,
    parse_s_grid,
    run_suite,
    sharp_tl_check_p2,
    sobolev_ineq_check,
    theorem343_p2_check,
)
from fraclab.fracdiff import TrigPoly

MIX = "cos:1,1;cos:3,0.25"
GAPS = 0.3 * 2.0 ** -np.arange(0, 9)


# --- parsing -------------------------------------------------------------------


def test_funcspec_round_trip():
    for text in (MIX, "counterexample:0.5,2.0,128"):
        assert FuncSpec.parse(str(FuncSpec.parse(text))) == FuncSpec.parse(text)


@pytest.mark.parametrize("bad", ["cos:1", "sin:1,1", "counterexample:0.5,2", "counterexample:0.5,1.0,10"])
def test_funcspec_rejects(bad):
    with pytest.raises(ValueError):
        FuncSpec.parse(bad)


def test_counterexample_coefficients():
    c = FuncSpec.parse("counterexample:0.5,2,4").coefficients().c
    assert np.allclose(c, np.arange(1, 5) ** -1.0)


def test_s_grid():
    g = parse_s_grid("geometric:0.3:0.001171875:9")
    assert np.allclose(g, GAPS)
    with pytest.raises(ValueError):
        parse_s_grid("linear:0:1:3")


# --- limits ----------------------------------------------------------------------


def test_bbm_cosine_band_and_cauchy():
    rep = bbm_sweep("cos:1,1", 1.0, 2.0, 1.0 - GAPS)
    ratios = [r.ratio for r in rep.rows]  # s increasing: approaching t
    diffs = np.abs(np.diff(ratios))
    assert np.all(diffs[1:] <= diffs[:-1] * (1 + 1e-9))
    assert all(0.1 <= r <= 10 for r in ratios)


def test_bbm_constant_is_degenerate():
    rep = bbm_sweep(TrigPoly.constant(1.0, 1), 1.0, 2.0, [0.5, 0.9])
    assert rep.degenerate and all(r.normalized == 0 and r.ratio == 0 for r in rep.rows)


def test_ms_constant_is_degenerate():
    rep = ms_sweep(TrigPoly.constant(0.0, 1), 0.7, 2.0, [0.1, 0.01])
    assert rep.degenerate


def test_bbm_grid_and_spectral_agree():
    s = 0.6 - GAPS[GAPS < 0.6]
    grid = bbm_sweep(MIX, 0.6, 2.0, s)
    spec = bbm_sweep(MIX, 0.6, 2.0, s, method="spectral")
    for a, b in zip(grid.rows, spec.rows):
        assert a.ratio == pytest.approx(b.ratio, rel=1e-2)


def test_ms_cosine_and_mean():
    for f in ("cos:1,1", "cos:0,2;cos:1,1"):
        rep = ms_sweep(f, 0.7, 2.0, 0.3 * 2.0 ** -np.arange(0, 9))
        ratios = [r.ratio for r in rep.rows][::-1]  # s decreasing toward 0
        assert abs(ratios[-1] - ratios[-2]) < 0.05 * ratios[-1]
        assert all(0.1 <= r <= 10 for r in ratios)


def test_rows_carry_metadata():
    rep = bbm_sweep(MIX, 1.0, 2.0, [0.9])
    assert {"quadrature", "truncation", "code_version"} <= rep.metadata.keys()


def test_s_grid_domain():
    with pytest.raises(ValueError):
        bbm_sweep(MIX, 1.0, 2.0, [1.2])


# --- counterexample and blow-up ----------------------------------------------------


@pytest.fixture(scope="module")
def counterexample():
    return counterexample_sweep(0.5, 2.0, 2**14, 0.5 - GAPS[GAPS < 0.5])


def test_counterexample_first_difference_family_bounded(counterexample):
    assert counterexample.gagliardo_variation() <= 3


def test_counterexample_order_t_family_blows_up(counterexample):
    assert abs(counterexample.butzer_slope() + 0.5) <= 0.15


def test_counterexample_sobolev_proxy_growth(counterexample):
    slope, r2 = counterexample.sobolev_fit()
    assert r2 >= 0.99 and abs(slope - 0.5) < 0.1


def test_blowup_p2_and_homogeneity():
    s = 0.8 - 0.2 * 2.0 ** -np.arange(0, 7)
    rep = blowup_sweep(MIX, 0.8, 2.0, s)
    e = fit_loglog_slope(0.8 - np.array(rep.column("param")), rep.column("ratio"))
    assert abs(e + 0.5) <= 0.1
    scaled = blowup_sweep("cos:1,5;cos:3,1.25", 0.8, 2.0, s)
    for a, b in zip(rep.rows, scaled.rows):
        assert b.ratio == pytest.approx(a.ratio, rel=1e-10)


def test_blowup_needs_t_below_one():
    with pytest.raises(ValueError):
        blowup_sweep(MIX, 1.2, 2.0, [0.5])


# --- inequality checks ----------------------------------------------------------------


def test_sobolev_near_diagonal_ratio_is_one():
    rep = sobolev_ineq_check([MIX], 1.0, 2.0, [(0.4, 0.4 + 1e-9)])
    assert rep.rows[0].ratio == pytest.approx(1.0, abs=1e-6)


def test_sobolev_gagliardo_instance():
    pairs = [(0.1, 0.5), (0.2, 0.9), (0.05, 0.3)]
    rep = sobolev_ineq_check([MIX, "cos:2,1"], 1.0, 2.0, pairs)
    assert max(rep.column("ratio")) <= FROZEN["sobolev"]


def test_tl_end_forms_and_constant():
    rep = sharp_tl_check_p2([MIX], 0.0, 1.0, [0.1, 0.5, 0.9])
    assert max(rep.column("ratio")) <= FROZEN["tl"]
    rep = sharp_tl_check_p2([TrigPoly.constant(1.0, 1)], 0.2, 0.8, [0.5])
    assert rep.degenerate
    rep = sharp_tl_check_p2([MIX], 0.2, 0.8, [0.3, 0.5, 0.7])
    assert len(rep.metadata["sup_form"]) == 1


def test_t343_rows_and_regime():
    rep = theorem343_p2_check([MIX], 1.0, [0.8, 0.9], 2.0)
    assert len(rep.rows) == 6 and max(rep.column("ratio")) <= FROZEN["t343_p2"]
    with pytest.raises(RegimeViolation):
        theorem343_p2_check([MIX], 1.0, [0.5], 2.0)


def test_t343_counterexample_truncations_bounded():
    vals = []
    for N in (64, 256, 1024):
        rep = theorem343_p2_check([f"counterexample:0.5,2,{N}"], 0.5, [0.45], 2.0)
        vals.append(max(rep.column("ratio")))
    assert max(vals) <= FROZEN["t343_p2"]


# --- frozen constants ---------------------------------------------------------------


def test_calibration_reproduces_frozen_table():
    assert calibrate() == FROZEN


def test_round_outward():
    assert _round_out(1.1986, "upper") == 1.2
    assert _round_out(0.25433, "lower") == 0.254


@pytest.mark.parametrize("suite", ["sobolev", "tl", "t343_p2", "t343_seq", "appendixB"])
def test_fresh_seeds_respect_frozen_constants(suite):
    assert violations(suite, run_suite(suite, FRESH_SEEDS)) == []


def test_negative_control_breaks_sobolev_constant():
    res = run_suite("sobolev_unnormalized", FRESH_SEEDS[:20])
    assert min(r["ratio"] for r in res) > FROZEN["sobolev"]


def test_parallel_suite_is_identical():
    assert run_suite("tl", FRESH_SEEDS[:8], jobs=1) == run_suite("tl", FRESH_SEEDS[:8], jobs=2)
