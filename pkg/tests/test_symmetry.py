import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from movegen import random_valid_move
from reflectpush.errors import DomainError, ReflectPushError
from reflectpush.grid import GridShape, RankWeight, weight_of
from reflectpush.orders import colex, lex, segment_2d
from reflectpush.symmetry import (
    PackedBox,
    ReflectPushMove,
    apply_reflect_push,
    is_packed,
    reflect_point,
    symmetrize_point,
    symmetrize_set,
)

M55 = GridShape((5, 5))


def test_reflect_examples():
    full = PackedBox.full(M55)
    assert reflect_point(full, 1, 2, (1, 3)) == (3, 1)
    assert reflect_point(full, 1, 2, (2, 2)) == (2, 2)
    box = PackedBox(M55, (1, 2), (3, 4))
    assert reflect_point(box, 1, 2, (1, 4)) == (3, 2)


def test_reflect_errors():
    box = PackedBox(M55, (1, 2), (3, 4))
    with pytest.raises(DomainError):
        reflect_point(box, 1, 2, (0, 0))
    with pytest.raises(DomainError):
        reflect_point(PackedBox(M55, (0, 0), (1, 2)), 1, 2, (0, 0))
    with pytest.raises(DomainError):
        PackedBox(M55, (0, 3), (1, 2))


def test_symmetrize_point_examples():
    full = PackedBox.full(M55)
    assert symmetrize_point(full, 1, 2, (1, 3)) == (3, 1)
    assert symmetrize_point(full, 1, 2, (3, 1)) == (3, 1)
    assert symmetrize_point(full, 1, 2, (4, 4)) == (4, 4)


def test_symmetrize_colex_to_lex():
    s = GridShape((3, 3))
    full = PackedBox.full(s)
    out = symmetrize_set(full, segment_2d(s, colex(2), 4).points, 2, 1)
    assert out == segment_2d(s, lex(2), 4).points


def test_symmetrize_below_diagonal_unchanged():
    full = PackedBox.full(M55)
    A = {(0, 0), (1, 0), (2, 0), (2, 1), (4, 3)}
    assert symmetrize_set(full, A, 1, 2) == A


def test_points_outside_box_pass_through():
    box = PackedBox(M55, (2, 2), (3, 3))
    A = {(0, 4), (2, 3), (0, 0)}
    assert symmetrize_set(box, A, 1, 2) == {(0, 4), (3, 2), (0, 0)}


def test_is_packed():
    assert is_packed(M55, PackedBox(M55, (1, 0), (2, 3)).points())
    assert not is_packed(M55, {(0, 0), (1, 1)})
    assert not is_packed(M55, set())


boxes = st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(1, 6)).filter(
    lambda t: max(t[0], t[1]) + t[2] <= 6
)
M66 = GridShape((6, 6))


@given(boxes, st.sets(st.tuples(st.integers(0, 5), st.integers(0, 5))), st.sampled_from([(1, 2), (2, 1)]))
def test_symmetrization_properties(b, A, c):
    a0, b0, side = b
    box = PackedBox(M66, (a0, b0), (a0 + side - 1, b0 + side - 1))
    out = symmetrize_set(box, A, *c)
    assert len(out) == len(A)
    assert symmetrize_set(box, out, *c) == out
    for w in (RankWeight.standard(10), RankWeight.squares(10), RankWeight.powers_of_two(10)):
        assert weight_of(w, out) == weight_of(w, A)
    for f in box.points():
        r = reflect_point(box, *c, f)
        assert reflect_point(box, *c, r) == f
        assert sum(r) == sum(f)


def _fig_move():
    # the 7x10 configuration: three cells leave the top of column 0 and land
    # at height 5 in columns 4..6
    shape = GridShape((7, 10))
    prof = (10, 6, 6, 6, 5, 5, 5)
    A = frozenset((x, y) for x, h in enumerate(prof) for y in range(h))
    box = PackedBox(shape, (0, 5), (4, 9))
    O = frozenset({(0, 7), (0, 8), (0, 9)})
    P = frozenset({(4, 5), (5, 5), (6, 5)})
    sigma = {(2, 5): (4, 5), (3, 5): (5, 5), (4, 5): (6, 5)}
    return ReflectPushMove(shape, A, box, 1, 2, O, P, sigma)


def test_figure_move_gains():
    move = _fig_move()
    assert move.reflections == {(2, 5), (3, 5), (4, 5)}
    new, delta = apply_reflect_push(move, RankWeight.standard(15))
    assert delta == 6
    assert len(new) == len(move.A)


def test_empty_move():
    shape = GridShape((3, 3))
    A = frozenset({(0, 0), (1, 0)})
    move = ReflectPushMove(shape, A, PackedBox.full(shape), 1, 2, frozenset(), frozenset())
    assert apply_reflect_push(move, RankWeight.standard(4)) == (A, 0)


def test_weight_preserving_sigma_gives_zero():
    shape = GridShape((3, 3))
    A = frozenset({(0, 0), (0, 1), (0, 2), (1, 0)})
    move = ReflectPushMove(
        shape, A, PackedBox.full(shape), 1, 2, frozenset({(0, 2)}), frozenset({(1, 1)}), {(2, 0): (1, 1)}
    )
    new, delta = apply_reflect_push(move, RankWeight.standard(4))
    assert delta == 0 and new == {(0, 0), (0, 1), (1, 0), (1, 1)}


def _variant(move, **kw):
    data = dict(
        shape=move.shape, A=move.A, box=move.box, c1=move.c1, c2=move.c2,
        removed=move.removed, inserted=move.inserted, sigma=move.sigma,
    )
    data.update(kw)
    return ReflectPushMove(**data)


def test_each_hypothesis_is_checked():
    move = _fig_move()
    w = RankWeight.standard(15)
    cases = {
        1: _variant(move, A=move.A | {(6, 9)}),
        2: _variant(move, box=PackedBox(GridShape((7, 11)), (0, 5), (4, 9))),
        3: _variant(move, removed=frozenset({(0, 5), (0, 8), (0, 9)})),
        4: _variant(move, box=PackedBox(move.shape, (0, 5), (3, 9))),
        5: _variant(move, inserted=frozenset({(4, 5), (5, 5), (5, 6)})),
        6: _variant(move, sigma={(2, 5): (6, 5), (3, 5): (5, 5), (4, 5): (6, 5)}),
    }
    for k, bad in cases.items():
        with pytest.raises(ReflectPushError) as info:
            apply_reflect_push(bad, w)
        assert info.value.hypothesis == k, (k, str(info.value))
        assert str(info.value).startswith(f"hypothesis {k}")


def test_sigma_to_lighter_point_rejected():
    shape = GridShape((3, 3))
    A = frozenset({(0, 0), (0, 1), (0, 2)})
    # (0,2) reflects to (2,0) of rank 2; pushing it to rank 1 is not allowed
    move = ReflectPushMove(
        shape, A, PackedBox.full(shape), 1, 2, frozenset({(0, 2)}), frozenset({(1, 0)}), {(2, 0): (1, 0)}
    )
    with pytest.raises(ReflectPushError) as info:
        apply_reflect_push(move, RankWeight.standard(4))
    assert info.value.hypothesis == 6


@pytest.mark.parametrize("kind", ["standard", "squares", "powers_of_two"])
def test_fuzz_moves(kind):
    rng = random.Random(kind)
    wf = lambda s: getattr(RankWeight, kind)(s.max_rank)
    for _ in range(500):
        move = random_valid_move(rng, wf)
        w = wf(move.shape)
        new, delta = apply_reflect_push(move, w)
        strict = any(w(move.sigma[r]) > w(r) for r in move.reflections)
        assert delta >= 0
        assert (delta > 0) == strict
        assert weight_of(w, new) - weight_of(w, move.A) == delta
