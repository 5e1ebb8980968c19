"""Domain errors raised by the width machinery.

Every error carries a distinct exit code so the command line can map a
failed gate to a diagnostic without string matching.  Messages name the
hypothesis tag (a, b, c) or the boundary that rejected the input.
"""


class WidthError(Exception):
    """Base class for all domain errors of this library."""

    exit_code = 1


class NotCompact(WidthError):
    """Compactness gate failed: min(alpha, delta) <= d * max(1/p2 - 1/p1, 0)."""

    exit_code = 2


class LimitingCase(WidthError):
    """delta == alpha, excluded by hypothesis (b) (non-limiting case required)."""

    exit_code = 3


class HypothesisFailure(WidthError):
    """Hypothesis (a) or (c) of the exponent tables is violated."""

    exit_code = 4


class BoundaryCase(WidthError):
    """mu sits exactly on a case boundary where the tables are silent."""

    exit_code = 5


class RegimeMismatch(WidthError):
    """The requested allocation strategy does not apply in this parameter regime."""

    exit_code = 6


class UnsupportedRegion(WidthError):
    """No width-model clause covers the requested exponent pair."""

    exit_code = 7


class OracleTooLarge(WidthError):
    """Brute-force subspace enumeration refused: N exceeds the oracle cap."""

    exit_code = 8


class EnumerationTooLarge(WidthError):
    """Exact lattice enumeration refused: cell exceeds the configured point cap."""

    exit_code = 9


class InsufficientPoints(WidthError):
    """Slope fit needs at least five points inside the window."""

    exit_code = 10


class NonPositiveValue(WidthError):
    """Slope fit requires strictly positive values inside the window."""

    exit_code = 11


class InfeasibleConstraints(WidthError):
    """No (epsilon, z1, z2) satisfies the allocation constraint system."""

    exit_code = 12
