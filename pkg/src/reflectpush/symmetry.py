"""Packed boxes, reflections, symmetrization and the reflect-push move.

All reflection arithmetic is done in offsets from the box's lower corner, so
the same code serves the full lattice and any packed sub-box.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import DomainError, ReflectPushError
from .grid import GridShape, Point, RankWeight, is_downset, weight_of, weights_equal

__all__ = [
    "PackedBox",
    "is_packed",
    "reflect_point",
    "symmetrize_point",
    "symmetrize_set",
    "ReflectPushMove",
    "apply_reflect_push",
]


@dataclass(frozen=True)
class PackedBox:
    """The product of intervals ``[lo[i], hi[i]]`` inside ``shape``."""

    shape: GridShape
    lo: tuple[int, ...]
    hi: tuple[int, ...]

    def __post_init__(self):
        lo, hi = tuple(self.lo), tuple(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if len(lo) != self.shape.d or len(hi) != self.shape.d:
            raise DomainError("box bounds must match the shape dimension")
        for a, b, ell in zip(lo, hi, self.shape.lengths):
            if not 0 <= a <= b < ell:
                raise DomainError(f"invalid box interval [{a}, {b}] on a chain of length {ell}")

    @classmethod
    def full(cls, shape: GridShape) -> "PackedBox":
        return cls(shape, (0,) * shape.d, tuple(ell - 1 for ell in shape.lengths))

    def side(self, label: int) -> int:
        return self.hi[label - 1] - self.lo[label - 1] + 1

    @property
    def sides(self) -> tuple[int, ...]:
        return tuple(b - a + 1 for a, b in zip(self.lo, self.hi))

    def __contains__(self, p) -> bool:
        return all(a <= c <= b for c, a, b in zip(p, self.lo, self.hi))

    def points(self) -> set[Point]:
        return set(itertools.product(*(range(a, b + 1) for a, b in zip(self.lo, self.hi))))

    def offset(self, p: Point) -> tuple[int, ...]:
        return tuple(c - a for c, a in zip(p, self.lo))

    def as_json(self) -> dict:
        return {"lo": list(self.lo), "hi": list(self.hi)}


def is_packed(shape: GridShape, points: Iterable[Point]) -> bool:
    """True iff the nonempty point set is exactly an axis-aligned box."""
    pts = set(points)
    if not pts:
        return False
    lo = tuple(min(p[i] for p in pts) for i in range(shape.d))
    hi = tuple(max(p[i] for p in pts) for i in range(shape.d))
    return PackedBox(shape, lo, hi).points() == pts


def _check_pair(box: PackedBox, c1: int, c2: int) -> None:
    d = box.shape.d
    if not (1 <= c1 <= d and 1 <= c2 <= d):
        raise DomainError(f"coordinate labels must lie in 1..{d}")
    if box.side(c1) != box.side(c2):
        raise DomainError(
            f"box sides differ on coordinates {c1} and {c2}: {box.side(c1)} != {box.side(c2)}"
        )


def _reflect(box: PackedBox, c1: int, c2: int, f: Point) -> Point:
    i, j = c1 - 1, c2 - 1
    g = list(f)
    g[i] = box.lo[i] + f[j] - box.lo[j]
    g[j] = box.lo[j] + f[i] - box.lo[i]
    return tuple(g)


def reflect_point(box: PackedBox, c1: int, c2: int, f: Point) -> Point:
    """Swap the offsets of ``f`` along ``c1`` and ``c2``."""
    _check_pair(box, c1, c2)
    f = tuple(f)
    if f not in box:
        raise DomainError(f"{f} is not in the box")
    return _reflect(box, c1, c2, f)


def symmetrize_point(box: PackedBox, c1: int, c2: int, f: Point) -> Point:
    """Reflect ``f`` iff its ``c1`` offset is smaller than its ``c2`` offset."""
    _check_pair(box, c1, c2)
    f = tuple(f)
    if f not in box:
        raise DomainError(f"{f} is not in the box")
    if f[c1 - 1] - box.lo[c1 - 1] < f[c2 - 1] - box.lo[c2 - 1]:
        return _reflect(box, c1, c2, f)
    return f


def symmetrize_set(box: PackedBox, points: Iterable[Point], c1: int, c2: int) -> frozenset[Point]:
    """Symmetrize the part of ``points`` inside ``box``; points outside pass through."""
    _check_pair(box, c1, c2)
    pts = frozenset(tuple(p) for p in points)
    inside = {p for p in pts if p in box}
    out = set(pts - inside)
    for f in inside:
        r = _reflect(box, c1, c2, f)
        if r in inside:
            out.add(f)
        out.add(symmetrize_point(box, c1, c2, f))
    return frozenset(out)


@dataclass(frozen=True)
class ReflectPushMove:
    """Data of one reflect-push step.

    ``sigma`` maps each reflection ``r`` of a point of ``removed`` to the
    point of ``inserted`` that replaces it.
    """

    shape: GridShape
    A: frozenset
    box: PackedBox
    c1: int
    c2: int
    removed: frozenset
    inserted: frozenset
    sigma: Mapping[Point, Point] = field(default_factory=dict)

    @property
    def reflections(self) -> frozenset:
        return frozenset(_reflect(self.box, self.c1, self.c2, f) for f in self.removed)


def apply_reflect_push(move: ReflectPushMove, weight: RankWeight):
    """Check every hypothesis of the move, then return ``(new_set, weight_delta)``.

    ``weight_delta = wt(new) - wt(A)``; it is nonnegative, and positive iff
    some reflection is sent to a strictly heavier point.
    """
    shape = move.shape
    A = frozenset(move.A)
    if not weight.covers(shape.max_rank):
        raise DomainError("rank weight does not cover every rank of the shape")
    if not all(p in shape for p in A) or not is_downset(shape, A):
        raise ReflectPushError(1, "A is not a downset of the lattice")
    if move.box.shape != shape:
        raise ReflectPushError(2, "box is not packed in the same lattice")
    O = frozenset(move.removed)
    if not O <= A or any(p not in move.box for p in O):
        raise ReflectPushError(3, "removal set is not inside A and the box")
    kept = A - O
    if not is_downset(shape, kept):
        raise ReflectPushError(3, "A minus the removal set is not a downset")
    if not (1 <= move.c1 <= shape.d and 1 <= move.c2 <= shape.d) or move.box.side(
        move.c1
    ) != move.box.side(move.c2):
        raise ReflectPushError(4, "reflection coordinates have unequal box sides")
    R = move.reflections
    P = frozenset(move.inserted)
    if any(p not in shape for p in P) or P & A:
        raise ReflectPushError(5, "insertion set meets A or leaves the lattice")
    new = kept | P
    if not is_downset(shape, new):
        raise ReflectPushError(5, "the rebuilt set is not a downset")
    sigma = dict(move.sigma)
    if set(sigma) != set(R) or set(sigma.values()) != set(P) or len(set(sigma.values())) != len(
        sigma
    ):
        raise ReflectPushError(6, "sigma is not a bijection from the reflections onto P")
    if len(R) != len(O):
        raise ReflectPushError(6, "reflection is not injective on the removal set")
    for r in R:
        lo, hi = weight(r), weight(sigma[r])
        if hi < lo and not weights_equal(lo, hi):
            raise ReflectPushError(6, f"sigma sends {r} to the lighter point {sigma[r]}")
    delta = weight_of(weight, P) - weight_of(weight, O)
    return new, delta
