"""Cluster variables, F-polynomials, g-vectors, and Euler tables.

The sequence of cluster variables is defined for every integer index by

    x_{m+1} = (x_m^r + 1) / x_{m-1},      x_1, x_2 the initial variables.

Two independent routes compute the same expansions:

* ``oracle`` iterates the recursion with exact Laurent division (forward for
  indices above 2, backward below 1).  Exact division doubles as a built-in
  Laurentness assertion.
* ``cluster_variable`` assembles the expansion from the Dyck-path generating
  polynomial (indices >= 4), mirrors it through ``swap_vars`` for indices
  <= -1, and uses the one-step closed forms for indices 3 and 0.  Indices
  1 and 2 return the generators.

``verify_range`` sweeps both routes against each other and is the package's
own correctness gate.  The combinatorial route requires r >= 2; r = 1 (the
five-periodic case) is supported by the oracle only.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache

from .caps import DEFAULT_CONFIG_BUDGET, DEFAULT_MAX_EXPONENT
from .combinat import generating_poly
from .dyck import build_path, dim_sequence
from .errors import ConfigBudgetError, ExponentOverflowError
from .laurent import LaurentPoly2


@dataclass(frozen=True, slots=True)
class ClusterVariable:
    r: int
    index: int
    value: LaurentPoly2


@dataclass(frozen=True, slots=True)
class GVector:
    g1: int
    g2: int

    def __str__(self) -> str:
        return f"({self.g1}, {self.g2})"


@dataclass(frozen=True, slots=True)
class EulerTable:
    """Euler characteristics of subrepresentation varieties, dense with zeros.

    ``sign`` selects which of the two indecomposables the table describes:
    "positive" for the one with dimension vector (d(n-1), d(n-2)), "negative"
    for its transpose-dimension partner at the mirrored index.
    """

    r: int
    n: int
    sign: str
    max_e1: int
    max_e2: int
    entries: dict[tuple[int, int], int]

    def total(self) -> int:
        return sum(self.entries.values())

    def to_csv(self) -> str:
        lines = ["e1,e2,chi"]
        for e1 in range(self.max_e1 + 1):
            for e2 in range(self.max_e2 + 1):
                lines.append(f"{e1},{e2},{self.entries[(e1, e2)]}")
        return "\n".join(lines) + "\n"


def _check_exponents(poly: LaurentPoly2, max_exponent: int) -> None:
    if poly.is_zero():
        return
    lo1, lo2 = poly.min_exponents()
    hi1, hi2 = poly.max_exponents()
    worst = max(abs(lo1), abs(lo2), abs(hi1), abs(hi2))
    if worst > max_exponent:
        raise ExponentOverflowError(f"exponent magnitude {worst} exceeds the cap {max_exponent}")


def oracle(r: int, index: int, max_exponent: int = DEFAULT_MAX_EXPONENT) -> LaurentPoly2:
    """Exact Laurent expansion of x_index by iterating the recursion.

    Works for any r >= 1 and any integer index, in both directions.  A
    non-exact division cannot happen (it would falsify the Laurent
    phenomenon) and would surface as ``NonExactDivisionError``.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    x1 = LaurentPoly2.var1()
    x2 = LaurentPoly2.var2()
    if index == 1:
        return x1
    if index == 2:
        return x2
    if index > 2:
        prev, cur = x1, x2
        for _ in range(index - 2):
            prev, cur = cur, (cur**r + 1).div_exact(prev)
            _check_exponents(cur, max_exponent)
        return cur
    # Downward: x_{m-1} = (x_m^r + 1) / x_{m+1}.
    above, cur = x2, x1
    for _ in range(1 - index):
        above, cur = cur, (cur**r + 1).div_exact(above)
        _check_exponents(cur, max_exponent)
    return cur


@lru_cache(maxsize=128)
def _generating_poly_cached(r: int, n: int, config_budget: int, max_exponent: int) -> LaurentPoly2:
    path = build_path(r, n, max_exponent=max_exponent)
    return generating_poly(path, config_budget=config_budget)


def _positive_expansion(
    r: int, n: int, config_budget: int, max_exponent: int
) -> LaurentPoly2:
    """Formula route for x_n, n >= 4."""
    dims = dim_sequence(r, n - 1, max_exponent=max_exponent)
    e_total = dims.value(n - 1)
    h_total = dims.value(n - 2)
    gen = _generating_poly_cached(r, n, config_budget, max_exponent)
    terms: dict[tuple[int, int], int] = {}
    for (a, b), count in gen.terms.items():
        # a = weight2 (edges), b = weight1; exponents shift by the monomial
        # x1^{-d(n-1)} x2^{-d(n-2)} in front of the sum.
        terms[(r * b - e_total, r * (e_total - a) - h_total)] = count
    return LaurentPoly2(terms)


def cluster_variable(
    r: int,
    index: int,
    config_budget: int = DEFAULT_CONFIG_BUDGET,
    max_exponent: int = DEFAULT_MAX_EXPONENT,
) -> ClusterVariable:
    """Cluster variable at any integer index via the combinatorial formula.

    Requires r >= 2.  Indices 1 and 2 are the generators; 3 and 0 are the
    one-step closed forms (x_2^r + 1)/x_1 and (x_1^r + 1)/x_2; indices >= 4
    come from the Dyck-path expansion and indices <= -1 from its variable
    swap.
    """
    if r < 2:
        raise ValueError(f"the combinatorial formula requires r >= 2, got {r}")
    if index == 1:
        value = LaurentPoly2.var1()
    elif index == 2:
        value = LaurentPoly2.var2()
    elif index == 3:
        value = LaurentPoly2({(-1, r): 1, (-1, 0): 1})
    elif index == 0:
        value = LaurentPoly2({(r, -1): 1, (0, -1): 1})
    elif index >= 4:
        value = _positive_expansion(r, index, config_budget, max_exponent)
    else:
        value = _positive_expansion(r, 3 - index, config_budget, max_exponent).swap_vars()
    return ClusterVariable(r=r, index=index, value=value)


def g_vector(r: int, index: int, max_exponent: int = DEFAULT_MAX_EXPONENT) -> GVector:
    """g-vector of x_index.

    Indices >= 4 give (-d(n-1), d(n)); index 3 gives (-1, r); index 0 gives
    (0, -1); indices <= -1 give (-d(n-2), d(n-3)) with n = 3 - index.
    Indices 1 and 2 return the standard convention (1, 0) and (0, 1) for the
    initial cluster (a convention, not part of the expansion formulas).
    """
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    if index == 1:
        return GVector(1, 0)
    if index == 2:
        return GVector(0, 1)
    if index == 3:
        return GVector(-1, r)
    if index == 0:
        return GVector(0, -1)
    if index >= 4:
        dims = dim_sequence(r, index, max_exponent=max_exponent)
        return GVector(-dims.value(index - 1), dims.value(index))
    n = 3 - index
    dims = dim_sequence(r, n, max_exponent=max_exponent)
    return GVector(-dims.value(n - 2), dims.value(n - 3))


def f_polynomial(
    r: int,
    index: int,
    config_budget: int = DEFAULT_CONFIG_BUDGET,
    max_exponent: int = DEFAULT_MAX_EXPONENT,
) -> LaurentPoly2:
    """F-polynomial of x_index in the variables (y1, y2); constant term 1.

    Defined for index >= 3 or index <= 0 (the initial cluster has no
    F-polynomial here).  For n >= 4 the positive-index polynomial is
    sum(y1^weight2 * y2^weight1) over families, which is exactly the
    generating polynomial; the mirrored index reflects the statistics within
    the bounding rectangle.
    """
    if r < 2:
        raise ValueError(f"the combinatorial formula requires r >= 2, got {r}")
    if index in (1, 2):
        raise ValueError("F-polynomials are defined for index >= 3 or index <= 0")
    if index == 3:
        return LaurentPoly2({(1, 0): 1, (0, 0): 1})
    if index == 0:
        return LaurentPoly2({(0, 1): 1, (0, 0): 1})
    if index >= 4:
        return _generating_poly_cached(r, index, config_budget, max_exponent)
    n = 3 - index
    dims = dim_sequence(r, n - 1, max_exponent=max_exponent)
    e_total = dims.value(n - 1)
    h_total = dims.value(n - 2)
    gen = _generating_poly_cached(r, n, config_budget, max_exponent)
    return LaurentPoly2(
        {(h_total - b, e_total - a): count for (a, b), count in gen.terms.items()}
    )


def euler_table(
    r: int,
    n: int,
    sign: str = "positive",
    config_budget: int = DEFAULT_CONFIG_BUDGET,
    max_exponent: int = DEFAULT_MAX_EXPONENT,
) -> EulerTable:
    """Euler-characteristic table of the subrepresentation varieties, n >= 4.

    Positive sign: entry (e1, e2) counts families with weight1 = d(n-2) - e2
    and weight2 = d(n-1) - e1, over the full rectangle
    [0, d(n-1)] x [0, d(n-2)].  Negative sign: entry (e1, e2) counts families
    with weight1 = e1 and weight2 = e2, over the transposed rectangle.
    """
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    if sign not in ("positive", "negative"):
        raise ValueError(f"sign must be 'positive' or 'negative', got {sign!r}")
    dims = dim_sequence(r, n - 1, max_exponent=max_exponent)
    e_total = dims.value(n - 1)
    h_total = dims.value(n - 2)
    gen = _generating_poly_cached(r, n, config_budget, max_exponent)
    histogram = {(w1, w2): count for (w2, w1), count in gen.terms.items()}
    entries: dict[tuple[int, int], int] = {}
    if sign == "positive":
        max_e1, max_e2 = e_total, h_total
        for e1 in range(max_e1 + 1):
            for e2 in range(max_e2 + 1):
                entries[(e1, e2)] = histogram.get((h_total - e2, e_total - e1), 0)
    else:
        max_e1, max_e2 = h_total, e_total
        for e1 in range(max_e1 + 1):
            for e2 in range(max_e2 + 1):
                entries[(e1, e2)] = histogram.get((e1, e2), 0)
    return EulerTable(r=r, n=n, sign=sign, max_e1=max_e1, max_e2=max_e2, entries=entries)


def verify_range(
    r_max: int,
    sum_cap: int,
    config_budget: int = DEFAULT_CONFIG_BUDGET,
    max_exponent: int = DEFAULT_MAX_EXPONENT,
) -> list[dict]:
    """Sweep formula vs. oracle for all 2 <= r <= r_max, 4 <= n, r + n <= sum_cap.

    Each cell checks exact equality of the formula expansion against the
    recursion oracle at index n AND at the mirrored index 3 - n (whose
    formula is the variable swap of the first).  Cells whose configuration
    count 2^height exceeds the budget are reported as skipped, never silently
    dropped.  Rows come back sorted by (r, n) with status pass/fail/skipped.
    """
    rows: list[dict] = []
    for r in range(2, r_max + 1):
        for n in range(4, sum_cap - r + 1):
            start = time.perf_counter()
            try:
                value = _positive_expansion(r, n, config_budget, max_exponent)
                forward_ok = value == oracle(r, n, max_exponent=max_exponent)
                mirror_ok = value.swap_vars() == oracle(r, 3 - n, max_exponent=max_exponent)
                status = "pass" if (forward_ok and mirror_ok) else "fail"
            except (ConfigBudgetError, ExponentOverflowError):
                status = "skipped"
            millis = int((time.perf_counter() - start) * 1000)
            rows.append({"r": r, "n": n, "status": status, "millis": millis})
    return rows
