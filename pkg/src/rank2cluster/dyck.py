"""Maximal Dyck paths and exact slope-based subpath classification.

Geometry conventions used throughout the package:

* The rectangle for parameters (r, n) has width ``d(n-1) - d(n-2)`` and
  height ``d(n-2)``, where ``d`` is the dimension sequence defined by
  ``d(1) = 0, d(2) = 1, d(k) = r*d(k-1) - d(k-2)``.
* Edges are numbered 1..len(word) along the path; vertex ``w_i`` is the
  lattice point reached after ``i`` edges (so ``w_0`` is the origin).
* ``v_j`` is the upper endpoint of the j-th north edge, with ``v_0`` the
  origin; ``v_index[j]`` is the edge position of that north edge (0 for j=0).
  The y-coordinate of ``v_j`` is exactly j.

All slope comparisons are exact integer cross-multiplications; no floating
point is used anywhere, since near-diagonal slopes would misclassify under
rounding for large rectangles.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .caps import DEFAULT_MAX_EXPONENT
from .errors import AmbiguousGreenError, ExponentOverflowError, LateGreenError


@dataclass(frozen=True, slots=True)
class DimSequence:
    """Dimension sequence d(1)=0, d(2)=1, d(k) = r*d(k-1) - d(k-2).

    Strictly increasing from d(2) onward when r >= 2; consecutive values are
    coprime.  Governs rectangle dimensions and denominator exponents.
    """

    r: int
    values: tuple[int, ...]

    def value(self, k: int) -> int:
        """d(k) for 1 <= k <= len(values)."""
        if not 1 <= k <= len(self.values):
            raise IndexError(f"index {k} outside computed range 1..{len(self.values)}")
        return self.values[k - 1]


def dim_sequence(r: int, upto: int, max_exponent: int = DEFAULT_MAX_EXPONENT) -> DimSequence:
    """Compute d(1)..d(upto) for the given r.

    Raises ``ExponentOverflowError`` as soon as a value exceeds
    ``max_exponent``; the sequence grows like ((r+sqrt(r^2-4))/2)^k for r > 2.
    """
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    if upto < 2:
        raise ValueError(f"upto must be >= 2, got {upto}")
    values = [0, 1]
    while len(values) < upto:
        nxt = r * values[-1] - values[-2]
        if nxt > max_exponent:
            raise ExponentOverflowError(
                f"d({len(values) + 1}) = {nxt} exceeds the cap {max_exponent} (r={r})"
            )
        values.append(nxt)
    return DimSequence(r=r, values=tuple(values))


class Color(enum.Enum):
    BLUE = "blue"
    GREEN = "green"
    RED = "red"


@dataclass(frozen=True, slots=True)
class ColoredSubpath:
    """A classified subpath between distinguished vertices v_i and v_k.

    ``edge_span`` is the inclusive 1-based interval of edge positions covered:
    blue and green subpaths run from v_i to v_k, a red subpath starts one edge
    earlier (at the immediate predecessor of v_i).  Green subpaths carry the
    parameters (green_m, green_w) and a ``window``: the inclusive interval of
    edges immediately preceding v_i whose coverage elsewhere legitimizes the
    green element inside a family.
    """

    i: int
    k: int
    color: Color
    edge_span: tuple[int, int]
    green_m: int | None = None
    green_w: int | None = None
    window: tuple[int, int] | None = None

    @property
    def weight1(self) -> int:
        return self.k - self.i

    @property
    def edge_count(self) -> int:
        return self.edge_span[1] - self.edge_span[0] + 1

    def edges(self) -> range:
        return range(self.edge_span[0], self.edge_span[1] + 1)

    def window_edges(self) -> range:
        if self.window is None:
            return range(0)
        return range(self.window[0], self.window[1] + 1)


@dataclass(frozen=True, slots=True)
class DyckPath:
    """The maximal Dyck path for parameters (r, n)."""

    r: int
    n: int
    width: int
    height: int
    word: str
    vertex_coords: tuple[tuple[int, int], ...]
    v_index: tuple[int, ...]
    dims: DimSequence

    @property
    def n_edges(self) -> int:
        return len(self.word)

    def vertex(self, j: int) -> tuple[int, int]:
        """Coordinates of v_j, 0 <= j <= height."""
        return self.vertex_coords[self.v_index[j]]

    def to_json_dict(self) -> dict:
        return {"r": self.r, "n": self.n, "word": self.word, "v_index": list(self.v_index)}


def build_path(r: int, n: int, max_exponent: int = DEFAULT_MAX_EXPONENT) -> DyckPath:
    """Construct the unique maximal Dyck path for (r, n), n >= 4.

    Greedy walk from the origin: take a north step whenever the resulting
    vertex stays on or below the diagonal (y*width <= x*height, exact integer
    comparison), otherwise an east step.  The resulting word equals the lower
    Christoffel word of slope height/width.
    """
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    dims = dim_sequence(r, n - 1, max_exponent=max_exponent)
    width = dims.value(n - 1) - dims.value(n - 2)
    height = dims.value(n - 2)

    word_chars: list[str] = []
    coords: list[tuple[int, int]] = [(0, 0)]
    v_index: list[int] = [0]
    x = y = 0
    for position in range(1, width + height + 1):
        if (y + 1) * width <= x * height:
            y += 1
            word_chars.append("N")
            v_index.append(position)
        else:
            x += 1
            word_chars.append("E")
        coords.append((x, y))

    path = DyckPath(
        r=r,
        n=n,
        width=width,
        height=height,
        word="".join(word_chars),
        vertex_coords=tuple(coords),
        v_index=tuple(v_index),
        dims=dims,
    )
    assert path.n_edges == dims.value(n - 1)
    assert len(path.v_index) == height + 1
    return path


def slope_exceeds(path: DyckPath, a: int, b: int) -> bool:
    """True iff the slope of the segment v_a -> v_b exceeds the diagonal slope.

    Decided by cross-multiplication (dy*width vs dx*height); vertical segments
    (dx == 0) compare as infinitely steep.
    """
    if not 0 <= a < b <= path.height:
        raise ValueError(f"need 0 <= a < b <= {path.height}, got a={a}, b={b}")
    xa, ya = path.vertex(a)
    xb, yb = path.vertex(b)
    return (yb - ya) * path.width > (xb - xa) * path.height


def _first_exceeding(path: DyckPath, i: int, upper: int) -> int | None:
    """Smallest t with i < t <= upper whose slope from v_i exceeds the diagonal."""
    for t in range(i + 1, upper + 1):
        if slope_exceeds(path, i, t):
            return t
    return None


def _green_params(path: DyckPath, distance: int) -> list[tuple[int, int]]:
    """All (m, w) with 3 <= m <= n-2, 1 <= w <= r-2 and d(m) - w*d(m-1) == distance."""
    dims = path.dims
    matches = []
    for m in range(3, path.n - 1):
        for w in range(1, path.r - 1):
            if dims.value(m) - w * dims.value(m - 1) == distance:
                matches.append((m, w))
    return matches


def _classify_with_first(path: DyckPath, i: int, k: int, t_star: int | None) -> ColoredSubpath:
    if t_star is None:
        return ColoredSubpath(
            i=i, k=k, color=Color.BLUE,
            edge_span=(path.v_index[i] + 1, path.v_index[k]),
        )
    # A slope from v_0 can never exceed the diagonal (every vertex lies on or
    # below it), so non-blue classifications always have i >= 1 and the
    # immediate predecessor of v_i exists.
    assert i >= 1, "non-blue classification at i=0 contradicts the on-or-below invariant"
    matches = _green_params(path, t_star - i)
    if len(matches) > 1:
        raise AmbiguousGreenError(
            f"distance {t_star - i} matches multiple (m, w) pairs {matches} "
            f"for (r={path.r}, n={path.n}, i={i}, k={k})"
        )
    if matches:
        m, w = matches[0]
        length = path.dims.value(m - 1) - w * path.dims.value(m - 2)
        window = (path.v_index[i] - length + 1, path.v_index[i])
        if window[0] < 1:
            raise AssertionError(
                f"green window underflows the path start: {window} at (i={i}, k={k})"
            )
        return ColoredSubpath(
            i=i, k=k, color=Color.GREEN,
            edge_span=(path.v_index[i] + 1, path.v_index[k]),
            green_m=m, green_w=w, window=window,
        )
    return ColoredSubpath(
        i=i, k=k, color=Color.RED,
        edge_span=(path.v_index[i], path.v_index[k]),
    )


def classify(path: DyckPath, i: int, k: int) -> ColoredSubpath:
    """Classify the subpath determined by (v_i, v_k) as blue, green, or red.

    Blue: every slope v_i -> v_t for i < t <= k stays at or below the
    diagonal.  Otherwise let t* be the first exceeding index; if t* - i
    equals d(m) - w*d(m-1) for (unique) parameters 3 <= m <= n-2,
    1 <= w <= r-2 the subpath is green with that parameter pair and a window
    of d(m-1) - w*d(m-2) edges ending at v_i; otherwise it is red and extends
    one edge backward.
    """
    if not 0 <= i < k <= path.height:
        raise ValueError(f"need 0 <= i < k <= {path.height}, got i={i}, k={k}")
    return _classify_with_first(path, i, k, _first_exceeding(path, i, k))


def first_exceeding_by_vertex(path: DyckPath) -> tuple[int | None, ...]:
    """For each i, the first t > i whose slope from v_i exceeds the diagonal."""
    return tuple(_first_exceeding(path, i, path.height) for i in range(path.height))


def assert_no_late_greens(path: DyckPath) -> None:
    """Check that no classification would require a green level m >= n-1.

    Scans every realized first-exceeding distance and searches levels
    m >= n-1 for a matching d(m) - w*d(m-1); a match raises
    ``LateGreenError`` (an implementation-bug trap: the minimum over w
    is 2*d(m-1) - d(m-2), which outgrows the rectangle height at m = n-1).
    """
    if path.height < 1:
        return
    distances = {
        t_star - i
        for i, t_star in enumerate(first_exceeding_by_vertex(path))
        if t_star is not None
    }
    if not distances:
        return
    max_distance = max(distances)

    # Extend the dimension sequence past n-1 until the smallest candidate
    # window start outgrows every realized distance.
    values = list(path.dims.values)
    r = path.r
    m = path.n - 1
    while True:
        while len(values) < m:
            values.append(r * values[-1] - values[-2])
        d_m, d_m1 = values[m - 1], values[m - 2]
        if d_m - (r - 2) * d_m1 > max_distance:
            return
        for w in range(1, r - 1):
            if d_m - w * d_m1 in distances:
                raise LateGreenError(
                    f"distance {d_m - w * d_m1} matches (m={m}, w={w}) with m >= n-1 "
                    f"for (r={path.r}, n={path.n})"
                )
        m += 1
