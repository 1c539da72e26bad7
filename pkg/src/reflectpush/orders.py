"""Domination orders on grids: lex, colex and the other coordinate priorities."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError
from .grid import DownSet2D, DownSetGeneric, GridShape, Point

__all__ = [
    "DominationOrder",
    "lex",
    "colex",
    "all_orders",
    "compare",
    "index_of",
    "element_at",
    "initial_segment",
    "initial_segment_points",
    "segment_2d",
]


@dataclass(frozen=True)
class DominationOrder:
    """Compare points by their coordinates read in the priority ``pi``.

    ``pi`` lists coordinate labels (1-based), most significant first, so
    ``(1, 2, ..., d)`` is lex and ``(d, ..., 1)`` is colex.
    """

    pi: tuple[int, ...]

    def __init__(self, pi: Iterable[int]):
        pi = tuple(pi)
        if sorted(pi) != list(range(1, len(pi) + 1)):
            raise DomainError(f"{pi} is not a permutation of 1..{len(pi)}")
        object.__setattr__(self, "pi", pi)

    @property
    def d(self) -> int:
        return len(self.pi)

    def key(self, p: Point) -> tuple[int, ...]:
        return tuple(p[i - 1] for i in self.pi)

    @property
    def name(self) -> str:
        if self.pi == tuple(range(1, self.d + 1)):
            return "lex"
        if self.pi == tuple(range(self.d, 0, -1)):
            return "colex"
        return "D" + "".join(map(str, self.pi))

    def __str__(self) -> str:
        return self.name


def lex(d: int = 2) -> DominationOrder:
    return DominationOrder(range(1, d + 1))


def colex(d: int = 2) -> DominationOrder:
    return DominationOrder(range(d, 0, -1))


def all_orders(d: int) -> Iterator[DominationOrder]:
    for pi in itertools.permutations(range(1, d + 1)):
        yield DominationOrder(pi)


def compare(order: DominationOrder, a: Point, b: Point) -> int:
    """-1, 0 or 1 as ``a`` is below, equal to or above ``b``."""
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


def _radices(shape: GridShape, order: DominationOrder) -> list[int]:
    if order.d != shape.d:
        raise DomainError("order and shape dimensions differ")
    return [shape.lengths[i - 1] for i in order.pi]


def index_of(shape: GridShape, order: DominationOrder, p: Point) -> int:
    """0-based position of ``p``: a mixed-radix number in the permuted coordinates."""
    p = shape.check(p)
    idx = 0
    for digit, radix in zip(order.key(p), _radices(shape, order)):
        idx = idx * radix + digit
    return idx


def element_at(shape: GridShape, order: DominationOrder, index: int) -> Point:
    if not 0 <= index < shape.size:
        raise DomainError(f"index {index} out of range for {shape}")
    radices = _radices(shape, order)
    digits = []
    for radix in reversed(radices):
        index, digit = divmod(index, radix)
        digits.append(digit)
    digits.reverse()
    p = [0] * shape.d
    for label, digit in zip(order.pi, digits):
        p[label - 1] = digit
    return tuple(p)


def initial_segment_points(shape: GridShape, order: DominationOrder, m: int) -> frozenset[Point]:
    if not 0 <= m <= shape.size:
        raise DomainError(f"segment size {m} out of range 0..{shape.size}")
    return frozenset(element_at(shape, order, i) for i in range(m))


def initial_segment(shape: GridShape, order: DominationOrder, m: int) -> DownSetGeneric:
    return DownSetGeneric(shape, initial_segment_points(shape, order, m))


def segment_2d(shape: GridShape, order: DominationOrder, m: int) -> DownSet2D:
    """The initial segment of size ``m`` as a column-height profile (d = 2 only)."""
    if shape.d != 2 or order.d != 2:
        raise DomainError("segment_2d needs a 2-dimensional shape and order")
    if not 0 <= m <= shape.size:
        raise DomainError(f"segment size {m} out of range 0..{shape.size}")
    l1, l2 = shape.lengths
    if order.pi == (1, 2):
        full, rest = divmod(m, l2)
        prof = [l2] * full + ([rest] if rest else [])
    else:
        full, rest = divmod(m, l1)
        prof = [full + (1 if x < rest else 0) for x in range(l1)]
    prof += [0] * (l1 - len(prof))
    return DownSet2D(shape, tuple(prof))
