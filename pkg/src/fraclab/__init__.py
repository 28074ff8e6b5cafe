"""Fractional differences, Butzer seminorms and real interpolation on the torus."""

from .errors import (
    GridTooCoarse,
    NumericalFailure,
    RegimeViolation,
    ShellTailNotConverged,
    SupportTooLarge,
    TailNotGeometric,
    TruncationFailure,
)
from .fracdiff import (
    TrigPoly,
    TruncationSpec,
    apply_frac_difference,
    frac_binomial,
    frac_multiplier,
)

__version__ = "0.1.0"

__all__ = [
    "GridTooCoarse",
    "NumericalFailure",
    "RegimeViolation",
    "ShellTailNotConverged",
    "SupportTooLarge",
    "TailNotGeometric",
    "TruncationFailure",
    "TrigPoly",
    "TruncationSpec",
    "apply_frac_difference",
    "frac_binomial",
    "frac_multiplier",
    "__version__",
]
