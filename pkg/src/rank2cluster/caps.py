"""Resource caps with safe defaults.

All heavy operations take these as keyword arguments so CI and scripts can
never hang by accident; the CLI exposes them as flags.
"""

from __future__ import annotations

import os

# Largest dimension value / exponent magnitude allowed before OVERFLOW.
DEFAULT_MAX_EXPONENT = 10**6

# Largest edge count for which the brute-force family stream is allowed.
DEFAULT_BRUTEFORCE_EDGE_CAP = 22

# Largest number of colored-subpath configurations the aggregator may visit.
DEFAULT_CONFIG_BUDGET = 10**8

ENV_CONFIG_BUDGET = "CLUSTER_COMB_BUDGET"


def config_budget_from_env(default: int = DEFAULT_CONFIG_BUDGET) -> int:
    """Return the configuration budget, honoring the override env var."""
    raw = os.environ.get(ENV_CONFIG_BUDGET)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_CONFIG_BUDGET} must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise ValueError(f"{ENV_CONFIG_BUDGET} must be positive, got {value}")
    return value
