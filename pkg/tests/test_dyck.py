import pytest
from hypothesis import given, strategies as st

from rank2cluster.dyck import (
    Color,
    assert_no_late_greens,
    build_path,
    classify,
    dim_sequence,
    slope_exceeds,
)
from rank2cluster.errors import ExponentOverflowError

from oracles import lower_christoffel_word

# (r, n) pairs small enough for exhaustive scans in unit tests.
SMALL_CELLS = [(r, n) for r in range(2, 7) for n in range(4, 9) if r + n <= 10]

params = st.sampled_from(SMALL_CELLS)


def test_dim_sequence_r3():
    seq = dim_sequence(3, 8)
    assert seq.values == (0, 1, 3, 8, 21, 55, 144, 377)
    assert seq.values[:7] == (0, 1, 3, 8, 21, 55, 144)


def test_dim_sequence_r2_is_linear():
    assert dim_sequence(2, 6).values == (0, 1, 2, 3, 4, 5)


def test_dim_sequence_r4_prefix():
    seq = dim_sequence(4, 5)
    assert seq.values[:4] == (0, 1, 4, 15)
    assert len(seq.values) == 5


def test_dim_sequence_recurrence_and_growth():
    for r in range(2, 8):
        seq = dim_sequence(r, 12, max_exponent=10**12)
        for k in range(3, 13):
            assert seq.value(k) == r * seq.value(k - 1) - seq.value(k - 2)
        assert all(a < b for a, b in zip(seq.values[1:], seq.values[2:]))


def test_dim_sequence_matches_closed_form():
    # Independent route: d(k) = sum_i (-1)^i C(k-2-i, i) r^(k-2-2i) for k >= 2.
    import math

    def closed_form(r, k):
        return sum(
            (-1) ** i * math.comb(k - 2 - i, i) * r ** (k - 2 - 2 * i)
            for i in range((k - 2) // 2 + 1)
        )

    for r in (3, 4, 7):
        seq = dim_sequence(r, 9, max_exponent=10**9)
        for k in range(2, 10):
            assert seq.value(k) == closed_form(r, k)


def test_dim_sequence_overflow():
    with pytest.raises(ExponentOverflowError):
        dim_sequence(3, 40, max_exponent=10**4)


def test_dim_sequence_rejects_bad_args():
    with pytest.raises(ValueError):
        dim_sequence(1, 6)
    with pytest.raises(ValueError):
        dim_sequence(3, 1)


def test_build_path_worked_example():
    path = build_path(3, 5)
    assert path.word == "EENEENEN"
    assert (path.width, path.height) == (5, 3)
    assert path.v_index == (0, 3, 6, 8)
    assert [path.vertex(j) for j in range(4)] == [(0, 0), (2, 1), (4, 2), (5, 3)]


def test_build_path_smallest_rectangles():
    assert build_path(2, 4).word == "EN"
    assert build_path(3, 4).word == "EEN"


def test_build_path_rejects_small_n():
    with pytest.raises(ValueError):
        build_path(3, 3)


@given(params)
def test_step_counts(cell):
    r, n = cell
    path = build_path(r, n)
    assert path.word.count("E") == path.width
    assert path.word.count("N") == path.height
    assert path.n_edges == path.dims.value(n - 1)


@given(params)
def test_path_stays_on_or_below_diagonal(cell):
    path = build_path(*cell)
    for x, y in path.vertex_coords:
        assert y * path.width <= x * path.height


@given(params)
def test_maximality_at_every_east_step(cell):
    # Wherever the path goes east, the north neighbor is strictly above the diagonal.
    path = build_path(*cell)
    for position, letter in enumerate(path.word):
        if letter == "E":
            x, y = path.vertex_coords[position]
            assert (y + 1) * path.width > x * path.height


@given(params)
def test_word_is_lower_christoffel(cell):
    path = build_path(*cell)
    assert path.word == lower_christoffel_word(path.height, path.width)


def test_slope_exceeds_worked_example():
    path = build_path(3, 5)
    assert not slope_exceeds(path, 1, 2)  # slope 1/2 vs 3/5
    assert slope_exceeds(path, 1, 3)  # slope 2/3 vs 3/5
    for b in range(1, path.height + 1):
        assert not slope_exceeds(path, 0, b)


def test_slope_exceeds_validates_indices():
    path = build_path(3, 5)
    with pytest.raises(ValueError):
        slope_exceeds(path, 2, 2)
    with pytest.raises(ValueError):
        slope_exceeds(path, 0, 4)


def test_classify_blue_spans_vertices():
    sub = classify(build_path(3, 5), 0, 2)
    assert sub.color is Color.BLUE
    assert sub.edge_span == (1, 6)
    assert sub.window is None
    assert sub.weight1 == 2


def test_classify_green_with_window():
    sub = classify(build_path(3, 5), 1, 3)
    assert sub.color is Color.GREEN
    assert (sub.green_m, sub.green_w) == (3, 1)
    assert sub.edge_span == (4, 8)
    assert sub.window == (3, 3)


def test_classify_red_extends_backward():
    sub = classify(build_path(3, 5), 2, 3)
    assert sub.color is Color.RED
    assert sub.edge_span == (6, 8)


def test_classify_validates_indices():
    path = build_path(3, 5)
    with pytest.raises(ValueError):
        classify(path, 2, 2)
    with pytest.raises(ValueError):
        classify(path, -1, 2)


@given(params)
def test_classify_from_origin_is_blue(cell):
    path = build_path(*cell)
    for k in range(1, path.height + 1):
        assert classify(path, 0, k).color is Color.BLUE


@given(params)
def test_classify_is_total_and_deterministic(cell):
    path = build_path(*cell)
    for i in range(path.height):
        for k in range(i + 1, path.height + 1):
            first = classify(path, i, k)
            again = classify(path, i, k)
            assert first == again
            if first.color is Color.GREEN:
                assert 3 <= first.green_m <= path.n - 2
                assert 1 <= first.green_w <= path.r - 2
                length = path.dims.value(first.green_m - 1) - first.green_w * path.dims.value(
                    first.green_m - 2
                )
                assert first.window == (path.v_index[i] - length + 1, path.v_index[i])
            span_start = path.v_index[i] if first.color is Color.RED else path.v_index[i] + 1
            assert first.edge_span == (span_start, path.v_index[k])


def test_no_greens_for_r2():
    for n in range(4, 9):
        path = build_path(2, n)
        for i in range(path.height):
            for k in range(i + 1, path.height + 1):
                assert classify(path, i, k).color is not Color.GREEN


@pytest.mark.parametrize("cell", [(3, 5), (2, 6), (4, 6)])
def test_no_late_greens(cell):
    assert_no_late_greens(build_path(*cell))


def test_path_json_schema():
    payload = build_path(3, 5).to_json_dict()
    assert payload == {"r": 3, "n": 5, "word": "EENEENEN", "v_index": [0, 3, 6, 8]}
