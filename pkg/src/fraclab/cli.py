"""Command-line front end: ``fraclab <subcommand> [flags]``.

Exit codes: 0 success, 1 a ``--check`` failed, 2 usage error or parameters
outside a theorem's regime, 3 numerical failure (truncation or quadrature).
"""

from __future__ import annotations

import argparse
import itertools
import math
import sys

import numpy as np

from . import __version__
from .calibration import FRESH_SEEDS, violations
from .errors import NumericalFailure, RegimeViolation
from .experiments import (
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
    suite_report,
    theorem343_p2_check,
)
from .interp import (
    PairParams,
    Seq,
    coarse_bound_check,
    InterpParams,
    lemma4_envelope_check,
    limit_recovery_check,
    normalized_monotonicity_check,
    reiteration_check,
)
from .norms import QuadratureSpec
from .report import Row, SweepReport, render

DEFAULT_FUNC = "cos:1,1;cos:3,0.25"
LIMIT_GRID = "geometric:0.3:0.001171875:9"  # 0.3 * 2^-m, m = 0..8


class CheckFailed(Exception):
    """A ``--check`` assertion failed; the message names the check and row."""


# --------------------------------------------------------------------------
# argument parsing
# --------------------------------------------------------------------------


def parse_quad(text: str | None) -> QuadratureSpec | None:
    """``M=<int>,L=<int>,G=<int>[,tol=<float>][,shifts=line|torus]``."""
    if not text:
        return None
    kw = {}
    for item in text.split(","):
        key, _, val = item.partition("=")
        key = key.strip()
        if key in ("M", "L", "G", "grade"):
            kw[key] = int(val)
        elif key == "tol":
            kw["shell_tail_tol"] = float(val)
        elif key == "shifts":
            kw["shifts"] = val.strip()
        else:
            raise ValueError(f"unknown quadrature key {key!r}")
    return QuadratureSpec(**kw)


def _common(parser: argparse.ArgumentParser, *, t=None, func=DEFAULT_FUNC, s_grid=None):
    parser.add_argument("--p", type=float, default=2.0, help="integrability exponent")
    parser.add_argument("--t", type=float, default=t, help="order of differences / target smoothness")
    parser.add_argument("--alpha", type=float, default=1.0, help="difference order in sobolev-check")
    parser.add_argument("--func", default=func, help="cos:<nu>,<amp>[;...] or counterexample:<t0>,<p>,<N>")
    parser.add_argument("--s-grid", dest="s_grid", default=s_grid, help="geometric:<a>:<b>:<n>")
    parser.add_argument("--quad", default=None, help="M=<int>,L=<int>,G=<int>")
    parser.add_argument("--seed", type=int, default=FRESH_SEEDS.start, help="first seed of random suites")
    parser.add_argument("--cases", type=int, default=len(FRESH_SEEDS), help="number of random cases")
    parser.add_argument("--out", default=None, help="output path (default: stdout)")
    parser.add_argument("--format", choices=("csv", "json", "gnuplot"), default="csv")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes")
    parser.add_argument("--check", action="store_true", help="assert the experiment's contract")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fraclab", description="Fractional smoothness experiments on the torus.")
    parser.add_argument("--version", action="version", version=f"fraclab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bbm-sweep", help="(t-s)^{1/p} scaling as s -> t")
    _common(p, t=1.0, s_grid=LIMIT_GRID)
    p.add_argument("--method", choices=("grid", "spectral"), default="grid")
    p.epilog = "--s-grid lists the gaps t - s."

    p = sub.add_parser("ms-sweep", help="s^{1/p} scaling as s -> 0")
    _common(p, t=1.0, s_grid=LIMIT_GRID)
    p.add_argument("--method", choices=("grid", "spectral"), default="grid")

    p = sub.add_parser("counterexample", help="power-law cosine series, both seminorm families")
    _common(p, t=None, func="counterexample:0.5,2,16384", s_grid=LIMIT_GRID)

    p = sub.add_parser("blowup", help="order-t over first-difference seminorm as s -> t")
    _common(p, t=0.8, s_grid="geometric:0.2:0.003125:7")

    p = sub.add_parser("sobolev-check", help="two-smoothness Sobolev-type inequality")
    _common(p, t=None, func=None)

    p = sub.add_parser("tl-check", help="two-exponent bound for the first-difference seminorm, p = 2")
    _common(p, t=0.9, func=None)
    p.add_argument("--r", type=float, default=0.2)

    p = sub.add_parser("t343-check", help="improved embedding from the normalised seminorm, p = 2")
    _common(p, t=1.0, func=None, s_grid="geometric:0.25:0.01:6")
    p.add_argument("--lambda", dest="lam", type=float, default=2.0)

    p = sub.add_parser("seq-check", help="sequence-space interpolation checks")
    _common(p, t=1.0, func=None)
    p.add_argument("--kind", default="appendixB",
                   choices=("appendixB", "t343", "envelope", "recovery", "monotone", "coarse", "reiteration"))
    p.add_argument("--q", type=float, default=2.0, help="inner exponent of the couple")
    p.add_argument("--lambda", dest="lam", type=float, default=2.0)

    p = sub.add_parser("report", help="run every experiment with its defaults")
    _common(p)
    return parser


# --------------------------------------------------------------------------
# contract checks
# --------------------------------------------------------------------------


def _check_limit(rep: SweepReport, closer_first: bool):
    rows = rep.rows if not closer_first else rep.rows[::-1]
    # rows ordered from far to near the limit
    vals = [r.ratio for r in rows]
    for k, r in enumerate(rows):
        if not 0.1 <= r.ratio <= 10.0:
            raise CheckFailed(f"{rep.experiment}: ratio band [0.1, 10] violated at row {k} (param={r.param!r}, ratio={r.ratio!r})")
    if len(vals) >= 2 and abs(vals[-1] - vals[-2]) >= 0.05 * abs(vals[-1]):
        raise CheckFailed(f"{rep.experiment}: Cauchy check failed at row {len(vals) - 1} (difference {abs(vals[-1] - vals[-2])!r})")


def _check_counterexample(cx, p: float):
    var = cx.gagliardo_variation()
    if var > 3.0:
        raise CheckFailed(f"counterexample-gagliardo: variation factor {var!r} exceeds 3")
    slope = cx.butzer_slope()
    if abs(slope + 1.0 / p) > 0.15:
        raise CheckFailed(f"counterexample-butzer: log-log slope {slope!r} outside -1/p +- 0.15")
    _, r2 = cx.sobolev_fit()
    if r2 < 0.99:
        raise CheckFailed(f"counterexample-sobolev: R^2 {r2!r} below 0.99")


def blowup_exponent(rep: SweepReport) -> float:
    s = np.array(rep.column("param"))
    return fit_loglog_slope(rep.t - s, rep.column("ratio"))


def _check_blowup(rep: SweepReport):
    e = blowup_exponent(rep)
    lo, hi = -1.0 / min(rep.p, 2.0) - 0.1, -1.0 / max(rep.p, 2.0) + 0.1
    if not lo <= e <= hi:
        raise CheckFailed(f"blowup: fitted exponent {e!r} outside [{lo!r}, {hi!r}]")


def _check_suite(rep: SweepReport, suite: str):
    if suite == "appendixB":
        results = [{"lower": r.normalized, "upper": r.ratio} for r in rep.rows]
    else:
        results = [{"ratio": r.ratio} for r in rep.rows]
    bad = violations(suite, results)
    if bad:
        k, name, value = bad[0]
        raise CheckFailed(f"{rep.experiment}: frozen constant {name} violated at row {k} (seed={rep.rows[k].param:.0f}, value={value!r})")


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------


def _gaps_to_s(t: float, gaps) -> np.ndarray:
    return t - np.asarray(gaps)


def _seeds(args):
    return range(args.seed, args.seed + args.cases)


def run_bbm(args, spec):
    s = _gaps_to_s(args.t, parse_s_grid(args.s_grid))
    rep = bbm_sweep(FuncSpec.parse(args.func), args.t, args.p, s, spec, args.method, args.jobs)
    if args.check:
        _check_limit(rep, closer_first=False)
    return [rep]


def run_ms(args, spec):
    s = parse_s_grid(args.s_grid)
    rep = ms_sweep(FuncSpec.parse(args.func), args.t, args.p, s, spec, args.method, args.jobs)
    if args.check:
        _check_limit(rep, closer_first=True)
    return [rep]


def run_counterexample(args, spec):
    fs = FuncSpec.parse(args.func)
    if fs.kind != "counterexample":
        raise ValueError("counterexample needs --func counterexample:<t0>,<p>,<N>")
    t0 = args.t if args.t is not None else fs.t0
    cx = counterexample_sweep(t0, fs.p, fs.N, _gaps_to_s(t0, parse_s_grid(args.s_grid)))
    if args.check:
        _check_counterexample(cx, fs.p)
    return cx.reports()


def run_blowup(args, spec):
    s = _gaps_to_s(args.t, parse_s_grid(args.s_grid))
    rep = blowup_sweep(FuncSpec.parse(args.func), args.t, args.p, s, spec, args.jobs)
    if args.check:
        _check_blowup(rep)
    return [rep]


def run_sobolev(args, spec):
    if args.func:
        grid = parse_s_grid(args.s_grid or f"geometric:{0.05 * args.alpha!r}:{0.95 * args.alpha!r}:5")
        pairs = [(a, b) for a, b in itertools.combinations(sorted(grid.tolist()), 2)]
        return [sobolev_ineq_check([FuncSpec.parse(args.func)], args.alpha, args.p, pairs, spec, args.jobs)]
    rep = suite_report("sobolev", _seeds(args), args.jobs)
    if args.check:
        _check_suite(rep, "sobolev")
    return [rep]


def run_tl(args, spec):
    if args.func:
        r, t = args.r, args.t
        lo = r + 0.01 * (t - r)
        grid = parse_s_grid(args.s_grid or f"geometric:{lo!r}:{r + 0.99 * (t - r)!r}:8")
        return [sharp_tl_check_p2([FuncSpec.parse(args.func)], r, t, grid, spec)]
    rep = suite_report("tl", _seeds(args), args.jobs)
    if args.check:
        _check_suite(rep, "tl")
    return [rep]


def run_t343(args, spec):
    if args.func:
        s = _gaps_to_s(args.t, parse_s_grid(args.s_grid))
        return [theorem343_p2_check([FuncSpec.parse(args.func)], args.t, s, args.lam, spec)]
    rep = suite_report("t343_p2", _seeds(args), args.jobs)
    if args.check:
        _check_suite(rep, "t343_p2")
    return [rep]


def _demo_seq(seed: int) -> Seq:
    rng = np.random.default_rng(seed)
    return Seq(-3, rng.standard_normal(7))


def run_seq(args, spec):
    kind = args.kind
    if kind in ("appendixB", "t343"):
        suite = "appendixB" if kind == "appendixB" else "t343_seq"
        rep = suite_report(suite, _seeds(args), args.jobs)
        if args.check:
            _check_suite(rep, suite)
        return [rep]
    xi = _demo_seq(args.seed)
    pair = PairParams(0.0, 1.0, args.q)
    if kind == "recovery":
        thetas = [1.0 - 2.0**-m for m in range(3, 13)]
        rows = limit_recovery_check(xi, pair, args.p, thetas)
        rep = SweepReport("seq-recovery", args.p, 1.0, rows, {"q": args.q, "seed": args.seed})
        if args.check:
            _check_recovery(rep)
        return [rep]
    if kind == "envelope":
        thetas = np.concatenate([2.0 ** -np.arange(3, 11), 1.0 - 2.0 ** -np.arange(3, 11)])
        env = lemma4_envelope_check(xi, pair, args.p, thetas)
        meta = {"q": args.q, "seed": args.seed, "exponent_zero": env.blowup_exponent("zero"),
                "exponent_one": env.blowup_exponent("one"), "lower_constant": env.lower_constant,
                "upper_constant": env.upper_constant}
        rep = SweepReport("seq-envelope", args.p, 1.0, env.rows(), meta)
        if args.check:
            lo, hi = env.exponent_low - 0.1, env.exponent_high + 0.1
            for end in ("zero", "one"):
                e = env.blowup_exponent(end)
                if not lo <= e <= hi:
                    raise CheckFailed(f"seq-envelope: exponent at theta -> {end} is {e!r}, outside [{lo!r}, {hi!r}]")
        return [rep]
    if kind == "reiteration":
        rows = [reiteration_check(Seq(0, xi.values[:4]), 0.3, 0.7, th, args.p, args.q).row() for th in (0.1, 0.3, 0.5, 0.7, 0.9)]
        return [SweepReport("seq-reiteration", args.p, 1.0, rows, {"q": args.q, "seed": args.seed})]
    # monotone / coarse: seeded random cases, one row per case with 1 = pass
    rows = []
    for k, seed in enumerate(_seeds(args)):
        rng = np.random.default_rng(seed)
        xi_k = Seq(int(rng.integers(-4, 4)), rng.standard_normal(int(rng.integers(1, 8))))
        pp = PairParams(float(rng.uniform(-1, 0.5)), float(rng.uniform(0.6, 2)), float(rng.uniform(0.5, 4)))
        theta = float(rng.uniform(0.02, 0.98))
        if kind == "monotone":
            q = float(rng.uniform(0.5, 4))
            ok = normalized_monotonicity_check(xi_k, pp, theta, q, q + float(rng.uniform(0, 4)))
        else:
            ok = coarse_bound_check(xi_k, pp, InterpParams(theta, float(rng.uniform(0.5, 4))))
        rows.append(Row(float(seed), float(ok), float(ok), 1.0, float(ok)))
        if args.check and not ok:
            raise CheckFailed(f"seq-{kind}: inequality violated at row {k} (seed={seed})")
    return [SweepReport(f"seq-{kind}", args.p, 1.0, rows, {"q": args.q})]


def _check_recovery(rep: SweepReport):
    # rows ordered toward the limit
    vals = np.array(rep.column("normalized"))
    diffs = np.diff(vals)
    if not (np.all(diffs >= 0) or np.all(diffs <= 0)):
        k = int(np.argmax(np.sign(diffs) != np.sign(diffs[0]))) + 1
        raise CheckFailed(f"seq-recovery: values stop being monotone at row {k}")
    if len(vals) >= 2 and abs(diffs[-1]) >= 0.05 * abs(vals[-1]):
        raise CheckFailed(f"seq-recovery: Cauchy check failed at row {len(vals) - 1}")
    last = rep.rows[-1]
    if abs(last.ratio - 1.0) > 0.02:
        raise CheckFailed(f"seq-recovery: final row {len(vals) - 1} is {last.ratio!r} of the limit")


def run_report(args, spec):
    out = []
    for name, argv in (
        ("bbm-sweep", []),
        ("ms-sweep", []),
        ("counterexample", []),
        ("blowup", []),
        ("sobolev-check", []),
        ("tl-check", []),
        ("t343-check", []),
        ("seq-check", ["--kind", "appendixB"]),
        ("seq-check", ["--kind", "t343"]),
    ):
        extra = ["--jobs", str(args.jobs), "--seed", str(args.seed), "--cases", str(args.cases)]
        if args.check:
            extra.append("--check")
        sub_args = build_parser().parse_args([name] + argv + extra)
        out.extend(COMMANDS[name](sub_args, parse_quad(sub_args.quad)))
    return out


COMMANDS = {
    "bbm-sweep": run_bbm,
    "ms-sweep": run_ms,
    "counterexample": run_counterexample,
    "blowup": run_blowup,
    "sobolev-check": run_sobolev,
    "tl-check": run_tl,
    "t343-check": run_t343,
    "seq-check": run_seq,
    "report": run_report,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        spec = parse_quad(args.quad)
        reports = COMMANDS[args.command](args, spec)
        text = render(reports, args.format)
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except CheckFailed as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    except RegimeViolation as exc:
        print(f"regime violation: {exc}", file=sys.stderr)
        return 2
    except NumericalFailure as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
