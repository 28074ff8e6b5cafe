"""Exception hierarchy.

Every numerical failure derives from :class:`NumericalFailure` so the CLI can
map it to exit code 3 in one place.
"""


class NumericalFailure(RuntimeError):
    """A computation could not certify its own error bound."""


class TruncationFailure(NumericalFailure):
    """The binomial series needs more terms than the configured cap."""


class GridTooCoarse(NumericalFailure, ValueError):
    """The torus grid cannot resolve the polynomial degree."""


class ShellTailNotConverged(NumericalFailure):
    """The small-shift remainder of a seminorm exceeds its tolerance."""


class TailNotGeometric(NumericalFailure):
    """An interpolation integral tail is not of closed geometric form."""


class RegimeViolation(ValueError):
    """Parameters fall outside the regime where an estimate is claimed."""


class SupportTooLarge(ValueError):
    """A decomposition search was asked for a sequence with too many entries."""
