"""Frozen constants for the inequality suites.

Protocol: each suite is evaluated on the calibration seeds, the extreme ratio
is widened by ``MARGIN`` (multiplied for upper bounds, divided for lower
bounds) and rounded outward to three significant digits.  The result is
pasted into :data:`FROZEN` and never refitted; checks then run on the
disjoint :data:`FRESH_SEEDS`.  :func:`calibrate` reproduces the numbers so a
test can confirm the table was not edited by hand.
"""

from __future__ import annotations

import math

CALIBRATION_SEEDS = range(10_000, 10_200)
FRESH_SEEDS = range(20_000, 20_100)
MARGIN = 1.5

# suite -> (bound kind, frozen value)
FROZEN_BOUNDS = {
    "sobolev": ("upper", 2.42),
    "tl": ("upper", 9.78),
    "t343_p2": ("upper", 1.2),
    "t343_seq": ("upper", 1.85),
    "appendixB_lower": ("lower", 0.254),
    "appendixB_upper": ("upper", 1.7),
}

FROZEN = {name: value for name, (_, value) in FROZEN_BOUNDS.items()}


def _round_out(x: float, kind: str) -> float:
    e = math.floor(math.log10(x)) - 2
    scaled = x / 10.0**e
    scaled = math.ceil(scaled - 1e-9) if kind == "upper" else math.floor(scaled + 1e-9)
    return float(f"{scaled * 10.0**e:.3g}")


def calibrate(jobs: int = 1) -> dict:
    """Recompute every frozen constant from the calibration seeds."""
    from .experiments import run_suite

    out = {}
    for name in ("sobolev", "tl", "t343_p2", "t343_seq"):
        worst = max(r["ratio"] for r in run_suite(name, CALIBRATION_SEEDS, jobs))
        out[name] = _round_out(MARGIN * worst, "upper")
    res = run_suite("appendixB", CALIBRATION_SEEDS, jobs)
    out["appendixB_lower"] = _round_out(min(r["lower"] for r in res) / MARGIN, "lower")
    out["appendixB_upper"] = _round_out(MARGIN * max(r["upper"] for r in res), "upper")
    return out


def violations(suite: str, results: list[dict]) -> list[tuple[int, str, float]]:
    """``(row index, constant name, value)`` for every case breaking a frozen bound."""
    bad = []
    for k, res in enumerate(results):
        if suite == "appendixB":
            if res["lower"] < FROZEN["appendixB_lower"]:
                bad.append((k, "appendixB_lower", res["lower"]))
            if res["upper"] > FROZEN["appendixB_upper"]:
                bad.append((k, "appendixB_upper", res["upper"]))
        elif res["ratio"] > FROZEN[suite if suite != "sobolev_unnormalized" else "sobolev"]:
            bad.append((k, suite, res["ratio"]))
    return bad
