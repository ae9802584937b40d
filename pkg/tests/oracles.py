"""Independent test oracles and frozen reference data.

Everything here is computed by a route that does NOT share code with the
implementation it checks: the Christoffel word comes from the arithmetic
(mod-total) definition, and reference F-polynomials are recovered from the
recursion oracle's Laurent expansion by inverting the exponent bookkeeping.
"""

from __future__ import annotations

from rank2cluster.cluster import oracle
from rank2cluster.dyck import dim_sequence
from rank2cluster.laurent import LaurentPoly2


def lower_christoffel_word(p: int, q: int) -> str:
    """Lower Christoffel word of slope p/q over {E, N}.

    Arithmetic (cutting-sequence) definition: letter i is E exactly when
    i*p mod (p+q) increases over (i-1)*p mod (p+q).  Requires gcd(p, q) = 1.
    """
    total = p + q
    letters = []
    prev = 0
    for i in range(1, total + 1):
        cur = (i * p) % total
        letters.append("E" if cur > prev else "N")
        prev = cur
    return "".join(letters)


def f_polynomial_from_oracle(r: int, n: int) -> LaurentPoly2:
    """Recover F_n (n >= 4) from the oracle expansion of x_n.

    Each Laurent term of x_n determines its statistics pair by inverting
    e1 = r*w1 - d(n-1) and e2 = r*(d(n-1) - w2) - d(n-2); the F-polynomial
    collects y1^w2 * y2^w1 with the same coefficients.
    """
    dims = dim_sequence(r, n - 1)
    edges = dims.value(n - 1)
    height = dims.value(n - 2)
    terms: dict[tuple[int, int], int] = {}
    for (e1, e2), coeff in oracle(r, n).terms.items():
        w1, rem1 = divmod(e1 + edges, r)
        drop, rem2 = divmod(e2 + height, r)
        assert rem1 == 0 and rem2 == 0, "oracle term outside the expected lattice"
        terms[(edges - drop, w1)] = coeff
    return LaurentPoly2(terms)


def family_count(r: int, n: int) -> int:
    """Number of families for (r, n): the coefficient sum of x_n, computed
    by iterating the recursion over plain integers (x1 = x2 = 1)."""
    prev, cur = 1, 1
    for _ in range(n - 2):
        prev, cur = cur, (cur**r + 1) // prev
    return cur


# The 19-term numerator of the (r=3, n=5) expansion, frozen from the worked
# example; dividing by x1^8 * x2^3 gives x_5 itself.
EQ3_NUMERATOR_TERMS = {
    (0, 24): 1, (0, 21): 8, (3, 15): 3, (0, 18): 28, (3, 12): 15,
    (0, 15): 56, (6, 6): 3, (3, 9): 30, (0, 12): 70, (9, 0): 1,
    (6, 3): 6, (3, 6): 30, (0, 9): 56, (6, 0): 3, (3, 3): 15,
    (0, 6): 28, (3, 0): 3, (0, 3): 8, (0, 0): 1,
}

X5_R3_TERMS = {(e1 - 8, e2 - 3): c for (e1, e2), c in EQ3_NUMERATOR_TERMS.items()}
