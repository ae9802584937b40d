"""Exception types shared across the package.

Each class corresponds to one failure mode of the computation pipeline.
``LateGreenError`` and ``AmbiguousGreenError`` are bug traps: they are
never expected to fire on valid inputs, and any occurrence indicates an
implementation defect rather than a user error.
"""

from __future__ import annotations


class Rank2ClusterError(Exception):
    """Base class for all package-specific errors."""


class NonExactDivisionError(Rank2ClusterError):
    """Laurent-polynomial division left a nonzero remainder.

    In the recursion pipeline this would falsify the Laurent phenomenon,
    so it always indicates an upstream bug.
    """


class PoleError(Rank2ClusterError):
    """Evaluation raised a zero base to a negative exponent."""


class ExponentOverflowError(Rank2ClusterError):
    """A dimension value or exponent exceeded the configured cap."""


class AmbiguousGreenError(Rank2ClusterError):
    """Two distinct (m, w) parameter pairs matched one green subpath."""


class LateGreenError(Rank2ClusterError):
    """A green classification would require a level m >= n-1."""


class BruteForceCapError(Rank2ClusterError):
    """The path has more edges than the brute-force enumeration cap."""


class ConfigBudgetError(Rank2ClusterError):
    """The configuration count exceeds the aggregation budget."""
