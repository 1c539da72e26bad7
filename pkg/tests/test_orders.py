import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from reflectpush.errors import DomainError
from reflectpush.grid import GridShape, is_downset
from reflectpush.orders import (
    DominationOrder,
    all_orders,
    colex,
    compare,
    element_at,
    index_of,
    initial_segment,
    initial_segment_points,
    lex,
    segment_2d,
)
from reflectpush.symmetry import PackedBox, reflect_point


def test_compare_examples():
    assert compare(lex(2), (0, 2), (1, 0)) == -1
    assert compare(colex(2), (2, 0), (0, 1)) == -1
    for o in all_orders(3):
        assert compare(o, (1, 2, 0), (1, 2, 0)) == 0


def test_order_names_and_validation():
    assert lex(3).name == "lex" and colex(3).name == "colex"
    assert DominationOrder((2, 3, 1)).name == "D231"
    assert len(list(all_orders(3))) == 6
    with pytest.raises(DomainError):
        DominationOrder((1, 1))


def test_initial_segment_examples():
    s = GridShape((3, 3))
    assert initial_segment(s, lex(2), 4).points == {(0, 0), (0, 1), (0, 2), (1, 0)}
    assert initial_segment(s, colex(2), 4).points == {(0, 0), (1, 0), (2, 0), (0, 1)}
    assert initial_segment(s, lex(2), 0).points == frozenset()
    with pytest.raises(DomainError):
        initial_segment(s, lex(2), 10)


def test_index_examples():
    s = GridShape((3, 3))
    assert index_of(s, lex(2), (0, 0)) == 0
    assert index_of(s, lex(2), (1, 0)) == 3
    # brute count of strictly smaller points
    t = GridShape((4, 7))
    smaller = sum(1 for q in t.points() if compare(colex(2), q, (2, 3)) < 0)
    assert smaller == index_of(t, colex(2), (2, 3)) == 14


SHAPES = [(a, b) for a in range(1, 9) for b in range(1, 9)] + [(2, 3, 4), (3, 3, 3), (2, 2, 2, 3)]


@pytest.mark.parametrize("lengths", SHAPES)
def test_segments_are_downsets_and_index_matches_sort(lengths):
    s = GridShape(lengths)
    for o in all_orders(s.d):
        ranked = sorted(s.points(), key=o.key)
        for i, p in enumerate(ranked):
            assert index_of(s, o, p) == i
            assert element_at(s, o, i) == p
        for m in range(s.size + 1):
            seg = initial_segment_points(s, o, m)
            assert seg == frozenset(ranked[:m])
            assert is_downset(s, seg)
            if s.d == 2:
                assert segment_2d(s, o, m).points == seg


points3 = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))


@given(st.sampled_from(list(all_orders(3))), points3, points3, points3)
def test_compare_is_a_total_order(o, a, b, c):
    assert compare(o, a, b) == -compare(o, b, a)
    assert (compare(o, a, b) == 0) == (a == b)
    if compare(o, a, b) < 0 and compare(o, b, c) < 0:
        assert compare(o, a, c) < 0


@pytest.mark.parametrize("ell", range(1, 8))
def test_square_lex_and_colex_segments_are_mirror_images(ell):
    s = GridShape((ell, ell))
    full = PackedBox.full(s)
    for m in range(s.size + 1):
        lx = segment_2d(s, lex(2), m).points
        cx = segment_2d(s, colex(2), m).points
        assert {reflect_point(full, 1, 2, p) for p in lx} == cx


def test_index_segment_inverse():
    s = GridShape((3, 4, 2))
    for o in all_orders(3):
        for p in s.points():
            seg = initial_segment_points(s, o, index_of(s, o, p) + 1)
            assert max(seg, key=o.key) == p
