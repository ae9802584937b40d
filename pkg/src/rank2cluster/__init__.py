"""Exact rank-2 cluster variables via maximal Dyck path combinatorics.

Computes the cluster variables of the rank-2 cluster algebra with exchange
exponent r as manifestly positive Laurent polynomials, together with
F-polynomials, g-vectors, and Euler-characteristic tables, all cross-checked
against an independent recursion oracle.
"""

from .caps import (
    DEFAULT_BRUTEFORCE_EDGE_CAP,
    DEFAULT_CONFIG_BUDGET,
    DEFAULT_MAX_EXPONENT,
)
from .cluster import (
    ClusterVariable,
    EulerTable,
    GVector,
    cluster_variable,
    euler_table,
    f_polynomial,
    g_vector,
    oracle,
    verify_range,
)
from .combinat import (
    Family,
    PiecePool,
    bruteforce_poly,
    build_pool,
    enumerate_bruteforce,
    generating_poly,
    histogram_csv,
    is_member,
    stats_histogram,
)
from .dyck import (
    Color,
    ColoredSubpath,
    DimSequence,
    DyckPath,
    assert_no_late_greens,
    build_path,
    classify,
    dim_sequence,
    slope_exceeds,
)
from .errors import (
    AmbiguousGreenError,
    BruteForceCapError,
    ConfigBudgetError,
    ExponentOverflowError,
    LateGreenError,
    NonExactDivisionError,
    PoleError,
    Rank2ClusterError,
)
from .laurent import LaurentPoly2, poly_sum

__version__ = "0.1.0"

__all__ = [
    "AmbiguousGreenError",
    "BruteForceCapError",
    "ClusterVariable",
    "Color",
    "ColoredSubpath",
    "ConfigBudgetError",
    "DEFAULT_BRUTEFORCE_EDGE_CAP",
    "DEFAULT_CONFIG_BUDGET",
    "DEFAULT_MAX_EXPONENT",
    "DimSequence",
    "DyckPath",
    "EulerTable",
    "ExponentOverflowError",
    "Family",
    "GVector",
    "LaurentPoly2",
    "LateGreenError",
    "NonExactDivisionError",
    "PiecePool",
    "PoleError",
    "Rank2ClusterError",
    "assert_no_late_greens",
    "bruteforce_poly",
    "build_path",
    "build_pool",
    "classify",
    "cluster_variable",
    "dim_sequence",
    "enumerate_bruteforce",
    "euler_table",
    "f_polynomial",
    "g_vector",
    "generating_poly",
    "histogram_csv",
    "is_member",
    "oracle",
    "poly_sum",
    "slope_exceeds",
    "stats_histogram",
    "verify_range",
]
