import itertools
import math
from fractions import Fraction

import pytest

from reflectpush import kernels, oracle
from reflectpush.errors import DomainError, ResourceError
from reflectpush.grid import GridShape, RankWeight, is_downset
from reflectpush.orders import colex, lex, segment_2d
from reflectpush.triangle import TriangleShape


def lattice_paths(a, b):
    # paths from (0,0) to (a,b) with unit steps, by dynamic programming
    row = [1] * (b + 1)
    for _ in range(a):
        for j in range(1, b + 1):
            row[j] += row[j - 1]
    return row[b]


def macmahon(a, b, c):
    out = Fraction(1)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                out *= Fraction(i + j + k - 1, i + j + k - 2)
    return int(out)


def stacked_profile_count(a, b, c):
    # layered count over column profiles, independent of the oracle code
    profs = [p for p in itertools.product(range(b + 1), repeat=a) if list(p) == sorted(p, reverse=True)]
    ways = {p: 1 for p in profs}
    for _ in range(c - 1):
        ways = {q: sum(v for p, v in ways.items() if all(x <= y for x, y in zip(q, p))) for q in profs}
    return sum(ways.values())


def triangle_count(ell):
    # column tops t_x in {0} or [x+1, ell], weakly decreasing
    ways = {t: 1 for t in range(ell + 1)}
    for x in range(1, ell):
        ways = {
            t: sum(v for s, v in ways.items() if s >= t)
            for t in [0] + list(range(x + 1, ell + 1))
        }
    return sum(ways.values())


def test_small_counts():
    assert len(list(oracle.enumerate_downsets_2d(1, 1))) == 2
    assert len(list(oracle.enumerate_downsets_2d(2, 2))) == 6 == lattice_paths(2, 2)


@pytest.mark.parametrize("l1,l2", [(a, b) for a in range(1, 8) for b in range(1, 8)])
def test_2d_counts(l1, l2):
    sets = list(oracle.enumerate_downsets_2d(l1, l2))
    assert len(sets) == math.comb(l1 + l2, l1) == lattice_paths(l1, l2)
    assert len({s.profile for s in sets}) == len(sets)


@pytest.mark.parametrize("ell", range(1, 9))
def test_triangle_counts(ell):
    sets = list(oracle.enumerate_downsets_poset(TriangleShape(ell)))
    assert len(sets) == len(set(sets)) == triangle_count(ell) == 2**ell
    t = TriangleShape(ell)
    assert oracle.check_downsets(t, sets)
    assert frozenset() in sets and frozenset(t.points()) in sets


def test_r2_is_a_three_chain():
    assert sorted(map(len, oracle.enumerate_downsets_poset(TriangleShape(2)))) == [0, 1, 2, 3]


@pytest.mark.parametrize("lengths", [(1, 1, 1), (2, 2, 2), (2, 3, 2), (3, 3, 3), (2, 3, 4)])
def test_3d_counts(lengths):
    shape = GridShape(lengths)
    sets = list(oracle.enumerate_downsets_poset(shape))
    assert len(sets) == len(set(sets)) == macmahon(*lengths) == stacked_profile_count(*lengths)
    assert all(is_downset(shape, s) for s in sets)


def test_generic_enumerator_on_a_grid():
    shape = GridShape((3, 2, 2))
    sets = set(oracle.enumerate_downsets_generic(list(shape.points()), oracle._grid_lower_covers))
    assert sets == set(oracle.enumerate_downsets_poset(shape))


def test_4x4x4_count_via_kernel():
    for backend in ("python", "cython"):
        _, count = kernels.box3_size_maxima((4, 4, 4), lambda p: 0, backend)
        assert sum(count) == macmahon(4, 4, 4) == 232848


def test_chain_poset():
    sets = list(oracle.enumerate_downsets_poset(GridShape((4,))))
    assert len(sets) == 5


def test_optimal_downsets_examples():
    s23 = GridShape((2, 3))
    assert oracle.optimal_downsets(s23, RankWeight.standard(3), 3) == (3, [frozenset({(0, 0), (0, 1), (0, 2)})])
    s33 = GridShape((3, 3))
    best, opt = oracle.optimal_downsets(s33, RankWeight.standard(4), 3)
    assert best == 3
    assert set(opt) == {segment_2d(s33, lex(2), 3).points, segment_2d(s33, colex(2), 3).points}
    assert oracle.optimal_downsets(TriangleShape(4), RankWeight.standard(6), 0) == (0, [frozenset()])
    with pytest.raises(DomainError):
        oracle.optimal_downsets(s33, RankWeight.standard(4), 10)


def test_canonical_order_is_deterministic():
    best, opt = oracle.optimal_downsets(GridShape((4, 4)), RankWeight.standard(6), 6)
    assert opt == sorted(opt, key=sorted)
    assert opt == oracle.optimal_downsets(GridShape((4, 4)), RankWeight.standard(6), 6)[1]


def test_nested_chain_examples():
    s35 = GridShape((3, 5))
    ok, chains = oracle.nested_chain_exists(s35, RankWeight.standard(6))
    assert ok and chains == [[segment_2d(s35, lex(2), m).points for m in range(16)]]
    s44 = GridShape((4, 4))
    ok, chains = oracle.nested_chain_exists(s44, RankWeight.standard(6))
    lexc = [segment_2d(s44, lex(2), m).points for m in range(17)]
    colc = [segment_2d(s44, colex(2), m).points for m in range(17)]
    assert ok and len(chains) == 2 and lexc in chains and colc in chains
    ok, chains = oracle.nested_chain_exists(GridShape((1, 5)), RankWeight.standard(4))
    assert ok and len(chains) == 1


def test_nested_chain_obstruction():
    # a non-rank weight whose size-2 and size-3 optima are incomparable
    table = {(1, 0): 5, (0, 1): 3, (0, 2): 10}
    ok, m = oracle.nested_chain_exists(GridShape((2, 3)), lambda p: table.get(p, 0))
    assert (ok, m) == (False, 3)
    levels = [[frozenset({1})], [frozenset({2, 3})]]
    assert oracle.count_full_chains(levels) == 0
    assert oracle.full_chains(levels) == []


def test_guards():
    for poset in (TriangleShape(9), GridShape((5, 5, 5)), GridShape((2, 2, 2, 2)), GridShape((13, 2))):
        with pytest.raises(ResourceError):
            next(iter(oracle.enumerate_downsets_poset(poset)))
    with pytest.raises(ResourceError):
        oracle.box3_maxima(GridShape((5, 4, 4)), RankWeight.standard(10))
    with pytest.raises(DomainError):
        next(iter(oracle.enumerate_downsets_poset("M(2,2)")))


@pytest.mark.parametrize("poset", [GridShape((3, 5)), GridShape((4, 4)), TriangleShape(6), GridShape((3, 3, 3))])
def test_maximum_grows_with_size(poset):
    table = oracle.optimal_by_size(poset, RankWeight.standard(poset.max_rank))
    best = [table[m][0] for m in range(poset.size + 1)]
    assert best[0] == best[1] == 0
    assert all(b > a for a, b in zip(best[1:], best[2:]))


def test_box3_maxima_match_full_enumeration():
    for lengths in [(2, 2, 2), (2, 3, 3), (3, 3, 3)]:
        shape = GridShape(lengths)
        for w in (RankWeight.standard(shape.max_rank), RankWeight.powers_of_two(shape.max_rank)):
            table = oracle.optimal_by_size(shape, w)
            for backend in ("python", "cython"):
                best, count = oracle.box3_maxima(shape, w, backend)
                assert best == [table[m][0] for m in range(shape.size + 1)]
                assert count == [len(table[m][1]) for m in range(shape.size + 1)]


def test_symmetrization_witnesses_requires_2d():
    with pytest.raises(DomainError):
        oracle.symmetrization_witnesses(GridShape((2, 2, 2)), set(), set())


def test_triangle_catalogue_covers_every_non_segment_optimum():
    rows = oracle.triangle_box_catalogue(8)
    assert rows and all(r["box"] is not None for r in rows)
    for r in rows:
        assert r["box"].side(1) == r["box"].side(2)
