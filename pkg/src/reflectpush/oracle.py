"""Exhaustive enumeration of downsets and brute-force optimality.

Nothing here samples: a shape beyond the guards raises ``ResourceError``.
Optimal sets are always returned in full, sorted canonically (each set as
its sorted tuple of points, then the sets lexicographically).
"""
from __future__ import annotations

from typing import Callable, Iterable, Iterator, Optional, Sequence, Union

from . import kernels
from .errors import DomainError, ResourceError
from .grid import DownSet2D, GridShape, Point, RankWeight, is_downset, weights_equal
from .orders import colex, lex
from .symmetry import PackedBox, symmetrize_set
from .triangle import TriangleShape, square_boxes_in_triangle, triangle_segment

__all__ = [
    "TRIANGLE_GUARD",
    "BOX3_GUARD",
    "GRID2_GUARD",
    "enumerate_profiles",
    "enumerate_downsets_2d",
    "enumerate_downsets_generic",
    "enumerate_downsets_poset",
    "poset_size",
    "optimal_downsets",
    "optimal_by_size",
    "nested_chain_exists",
    "count_full_chains",
    "full_chains",
    "symmetrization_witnesses",
    "box3_maxima",
    "canonical",
    "triangle_box_catalogue",
]

TRIANGLE_GUARD = 40
BOX3_GUARD = 4
GRID2_GUARD = 12

Poset = Union[GridShape, TriangleShape]


def canonical(sets: Iterable[Iterable[Point]]) -> list[frozenset]:
    return sorted((frozenset(s) for s in sets), key=lambda s: sorted(s))


def enumerate_profiles(l1: int, l2: int) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing column heights, ``l1`` columns of height at most ``l2``."""
    if l1 < 1 or l2 < 1:
        raise DomainError("side lengths must be positive")
    yield from kernels.profiles(l1, l2)


def enumerate_downsets_2d(l1: int, l2: int) -> Iterator[DownSet2D]:
    shape = GridShape((l1, l2))
    for prof in enumerate_profiles(l1, l2):
        yield DownSet2D(shape, prof)


def enumerate_downsets_generic(
    elements: Sequence[Point], lower_covers: Callable[[Point], Iterable[Point]]
) -> Iterator[frozenset]:
    """Include/exclude along ``elements``, which must be a linear extension.

    An element may be included only when all its lower covers are; that
    keeps every partial choice extendable, so no branch is dead.
    """
    elements = list(elements)
    covers = [tuple(lower_covers(p)) for p in elements]
    chosen: set = set()

    def rec(i: int) -> Iterator[frozenset]:
        if i == len(elements):
            yield frozenset(chosen)
            return
        yield from rec(i + 1)
        if all(q in chosen for q in covers[i]):
            chosen.add(elements[i])
            yield from rec(i + 1)
            chosen.discard(elements[i])

    yield from rec(0)


def _grid_lower_covers(p: Point) -> list[Point]:
    out = []
    for i, c in enumerate(p):
        if c > 0:
            out.append(p[:i] + (c - 1,) + p[i + 1 :])
    return out


def _stacks_3d(l1: int, l2: int, l3: int) -> Iterator[frozenset]:
    profs = kernels.profiles(l1, l2)
    inside = {
        p: [q for q in profs if all(a <= b for a, b in zip(q, p))] for p in profs
    }

    def rec(z: int, parent: Optional[tuple], acc: list) -> Iterator[frozenset]:
        if z == l3:
            yield frozenset(acc)
            return
        for q in (profs if parent is None else inside[parent]):
            layer = [(x, y, z) for x, h in enumerate(q) for y in range(h)]
            acc.extend(layer)
            yield from rec(z + 1, q, acc)
            del acc[len(acc) - len(layer) :]

    yield from rec(0, None, [])


def poset_size(poset: Poset) -> int:
    return poset.size


def _check_guard(poset: Poset) -> None:
    if isinstance(poset, TriangleShape):
        if poset.size > TRIANGLE_GUARD:
            raise ResourceError(
                f"{poset} has {poset.size} points, above the oracle guard of {TRIANGLE_GUARD}"
            )
    elif isinstance(poset, GridShape):
        if poset.d > 3:
            raise ResourceError("the oracle handles at most 3 dimensions")
        guard = BOX3_GUARD if poset.d == 3 else GRID2_GUARD
        if poset.d > 1 and max(poset.lengths) > guard:
            raise ResourceError(f"{poset} exceeds the oracle side guard of {guard}")
    else:
        raise DomainError(f"unsupported poset {poset!r}")


def enumerate_downsets_poset(poset: Poset) -> Iterator[frozenset]:
    """Every downset of ``poset`` exactly once, as a frozenset of points."""
    _check_guard(poset)
    if isinstance(poset, TriangleShape):
        yield from enumerate_downsets_generic(list(poset.points()), poset.lower_covers)
    elif poset.d == 1:
        for k in range(poset.lengths[0] + 1):
            yield frozenset((x,) for x in range(k))
    elif poset.d == 2:
        for ds in enumerate_downsets_2d(*poset.lengths):
            yield ds.points
    else:
        yield from _stacks_3d(*poset.lengths)


def _max_with_ties(items):
    best, winners = None, []
    for value, s in items:
        if best is None or (value > best and not weights_equal(value, best)):
            best, winners = value, [s]
        elif weights_equal(value, best):
            winners.append(s)
    return best, winners


def optimal_by_size(poset: Poset, weight) -> dict[int, tuple[object, list[frozenset]]]:
    """For every size ``m``: the maximum weight and all downsets attaining it."""
    groups: dict[int, list] = {}
    cache: dict = {}

    def w(p):
        if p not in cache:
            cache[p] = weight(p)
        return cache[p]

    for s in enumerate_downsets_poset(poset):
        groups.setdefault(len(s), []).append((sum((w(p) for p in s), 0), s))
    out = {}
    for m in sorted(groups):
        best, winners = _max_with_ties(groups[m])
        out[m] = (best, canonical(winners))
    return out


def optimal_downsets(poset: Poset, weight, m: int) -> tuple[object, list[frozenset]]:
    _check_guard(poset)
    if not 0 <= m <= poset.size:
        raise DomainError(f"size {m} out of range 0..{poset.size}")
    cache: dict = {}

    def w(p):
        if p not in cache:
            cache[p] = weight(p)
        return cache[p]

    items = (
        (sum((w(p) for p in s), 0), s) for s in enumerate_downsets_poset(poset) if len(s) == m
    )
    best, winners = _max_with_ties(items)
    return best, canonical(winners)


def _levels(poset: Poset, weight) -> list[list[frozenset]]:
    table = optimal_by_size(poset, weight)
    return [table[m][1] for m in range(poset.size + 1)]


def count_full_chains(levels: Sequence[Sequence[frozenset]]) -> int:
    """Number of chains ``A_0 < A_1 < ... < A_N`` with ``A_m`` taken from ``levels[m]``."""
    ways = [1] * len(levels[0])
    for m in range(1, len(levels)):
        prev = levels[m - 1]
        ways = [sum(wp for wp, a in zip(ways, prev) if a <= b) for b in levels[m]]
    return sum(ways)


def full_chains(levels: Sequence[Sequence[frozenset]], limit: int = 1000) -> list[list[frozenset]]:
    """Up to ``limit`` full chains, depth first from the top level down."""
    reach = [set(range(len(levels[0])))]
    for m in range(1, len(levels)):
        prev = levels[m - 1]
        reach.append(
            {j for j, b in enumerate(levels[m]) if any(prev[i] <= b for i in reach[m - 1])}
        )
    out: list[list[frozenset]] = []

    def rec(m: int, j: int, tail: list) -> None:
        if len(out) >= limit:
            return
        chain = [levels[m][j]] + tail
        if m == 0:
            out.append(chain)
            return
        for i in sorted(reach[m - 1]):
            if levels[m - 1][i] <= levels[m][j]:
                rec(m - 1, i, chain)

    top = len(levels) - 1
    for j in sorted(reach[top]):
        rec(top, j, [])
    return out


def nested_chain_exists(poset: Poset, weight):
    """``(True, chains)`` with every witness chain, or ``(False, m)`` where ``m``
    is the first size no chain of optimal sets reaches."""
    levels = _levels(poset, weight)
    reach = set(range(len(levels[0])))
    for m in range(1, len(levels)):
        reach = {
            j for j, b in enumerate(levels[m]) if any(levels[m - 1][i] <= b for i in reach)
        }
        if not reach:
            return False, m
    return True, full_chains(levels)


def square_boxes(shape: GridShape) -> Iterator[PackedBox]:
    l1, l2 = shape.lengths
    for side in range(2, min(l1, l2) + 1):
        for a in range(l1 - side + 1):
            for b in range(l2 - side + 1):
                yield PackedBox(shape, (a, b), (a + side - 1, b + side - 1))


def symmetrization_witnesses(shape: GridShape, source, target) -> list[tuple[PackedBox, tuple[int, int]]]:
    """Every square box and coordinate pair whose symmetrization maps ``source`` to ``target``."""
    if shape.d != 2:
        raise DomainError("witness search needs a 2-dimensional shape")
    source, target = frozenset(source), frozenset(target)
    diff = source ^ target
    out = []
    for box in square_boxes(shape):
        if not all(p in box for p in diff):
            continue
        for c in ((1, 2), (2, 1)):
            if symmetrize_set(box, source, *c) == target:
                out.append((box, c))
    return out


def box3_maxima(shape: GridShape, weight, backend: Optional[str] = None):
    """``(best, count)`` per size for a 3D box, via the compiled kernel when available."""
    if shape.d != 3:
        raise DomainError("box3_maxima needs a 3-dimensional shape")
    _check_guard(shape)
    return kernels.box3_size_maxima(shape.lengths, weight, backend)


def check_downsets(poset: Poset, sets: Iterable[frozenset]) -> bool:
    if isinstance(poset, TriangleShape):
        return all(all(q in s for p in s for q in poset.lower_covers(p)) for s in sets)
    return all(is_downset(poset, s) for s in sets)


def triangle_box_catalogue(lmax: int, weight_factory=None) -> list[dict]:
    """Packed boxes that turn triangle segments into the other optimal sets.

    For each ``ell <= lmax`` and size ``m``, every optimal downset that is not
    a segment is matched against all square boxes inside the triangle; the
    witnesses of smallest side are recorded.
    """
    weight_factory = weight_factory or RankWeight.standard
    rows = []
    for ell in range(1, lmax + 1):
        shape = TriangleShape(ell)
        table = optimal_by_size(shape, weight_factory(shape.max_rank))
        boxes = list(square_boxes_in_triangle(shape))
        for m, (_, opt) in table.items():
            segs = {o.name: triangle_segment(shape, o, m).points for o in (lex(2), colex(2))}
            for A in opt:
                if A in segs.values():
                    continue
                found = []
                for name, seg in segs.items():
                    diff = seg ^ A
                    for box in boxes:
                        if not all(p in box for p in diff):
                            continue
                        for c in ((1, 2), (2, 1)):
                            if symmetrize_set(box, seg, *c) == A:
                                found.append((box.side(1), name, box, c))
                if not found:
                    rows.append({"ell": ell, "m": m, "set": sorted(A), "order": None, "box": None, "coords": None})
                    continue
                side = min(f[0] for f in found)
                for _, name, box, c in found:
                    if box.side(1) == side:
                        rows.append({"ell": ell, "m": m, "set": sorted(A), "order": name, "box": box, "coords": c})
    return rows
