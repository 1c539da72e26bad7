"""Products of chains: grid shapes, points, downsets and rank weights.

Points are plain tuples of 0-based coordinates. Axes are labelled ``1..d``
wherever a coordinate *label* is needed (subproducts, reflections,
domination orders), so that ``{2}`` means "the second coordinate".
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Iterator, Sequence

from .errors import DomainError

Point = tuple[int, ...]
Weight = Callable[[Point], float]

__all__ = [
    "Point",
    "GridShape",
    "DownSet2D",
    "DownSetGeneric",
    "RankWeight",
    "rank",
    "is_downset",
    "lower_shadow",
    "upper_shadow",
    "subproduct_at",
    "weight_of",
    "weights_equal",
    "REL_TOL",
]

REL_TOL = 1e-9


@dataclass(frozen=True)
class GridShape:
    """The multiset lattice with side lengths ``lengths``."""

    lengths: tuple[int, ...]

    def __init__(self, lengths: Iterable[int]):
        lengths = tuple(lengths)
        if not lengths:
            raise DomainError("a grid needs at least one coordinate")
        for ell in lengths:
            if isinstance(ell, float) and math.isinf(ell):
                raise DomainError("infinite chains are not supported")
            if not isinstance(ell, int) or isinstance(ell, bool) or ell < 1:
                raise DomainError(f"side lengths must be positive integers, got {ell!r}")
        object.__setattr__(self, "lengths", lengths)

    @property
    def d(self) -> int:
        return len(self.lengths)

    @property
    def size(self) -> int:
        return math.prod(self.lengths)

    @property
    def max_rank(self) -> int:
        return sum(ell - 1 for ell in self.lengths)

    def points(self) -> Iterator[Point]:
        """All points in lexicographic order."""
        return itertools.product(*(range(ell) for ell in self.lengths))

    def __contains__(self, p) -> bool:
        return len(p) == self.d and all(0 <= c < ell for c, ell in zip(p, self.lengths))

    def check(self, p: Point) -> Point:
        p = tuple(p)
        if p not in self:
            raise DomainError(f"{p} is not a point of {self}")
        return p

    def __str__(self) -> str:
        return "M(" + ",".join(map(str, self.lengths)) + ")"


def rank(p: Point) -> int:
    return sum(p)


def lower_shadow(shape: GridShape, p: Point) -> set[Point]:
    """Points covered by ``p``: decrement exactly one nonzero coordinate."""
    p = shape.check(p)
    return {p[:i] + (c - 1,) + p[i + 1:] for i, c in enumerate(p) if c > 0}


def upper_shadow(shape: GridShape, p: Point) -> set[Point]:
    p = shape.check(p)
    return {
        p[:i] + (c + 1,) + p[i + 1:]
        for i, (c, ell) in enumerate(zip(p, shape.lengths))
        if c + 1 < ell
    }


def is_downset(shape: GridShape, points: Iterable[Point]) -> bool:
    s = {shape.check(p) for p in points}
    return all(lower_shadow(shape, p) <= s for p in s)


def subproduct_at(shape: GridShape, coords: Iterable[int], anchor: Sequence[int]) -> set[Point]:
    """Points that agree with ``anchor`` outside the coordinate labels ``coords``.

    ``anchor`` lists the fixed values of the complementary coordinates in
    increasing label order.
    """
    coords = set(coords)
    if not coords <= set(range(1, shape.d + 1)):
        raise DomainError(f"coordinate labels must lie in 1..{shape.d}")
    fixed = [i for i in range(1, shape.d + 1) if i not in coords]
    anchor = tuple(anchor)
    if len(anchor) != len(fixed):
        raise DomainError(f"anchor needs {len(fixed)} entries, got {len(anchor)}")
    for label, value in zip(fixed, anchor):
        if not 0 <= value < shape.lengths[label - 1]:
            raise DomainError(f"anchor value {value} out of range on coordinate {label}")
    ranges = []
    pinned = dict(zip(fixed, anchor))
    for label in range(1, shape.d + 1):
        if label in pinned:
            ranges.append((pinned[label],))
        else:
            ranges.append(range(shape.lengths[label - 1]))
    return set(itertools.product(*ranges))


def _is_exact(x) -> bool:
    return isinstance(x, (int, Rational))


def weights_equal(a, b) -> bool:
    """Exact comparison for integer/rational weights, relative tolerance otherwise."""
    if _is_exact(a) and _is_exact(b):
        return a == b
    return math.isclose(a, b, rel_tol=REL_TOL, abs_tol=REL_TOL)


def weight_of(w: Weight, points: Iterable[Point]):
    return sum((w(p) for p in points), 0)


@dataclass(frozen=True)
class RankWeight:
    """A weight that depends only on rank and strictly increases with it.

    ``values[r]`` is the weight of every point of rank ``r``.
    """

    values: tuple

    def __init__(self, values: Iterable):
        values = tuple(values)
        if not values:
            raise DomainError("a rank weight needs at least one value")
        for a, b in zip(values, values[1:]):
            if not a < b:
                raise DomainError("rank weights must be strictly increasing")
        object.__setattr__(self, "values", values)

    def __call__(self, p: Point):
        return self.values[sum(p)]

    @property
    def max_rank(self) -> int:
        return len(self.values) - 1

    def covers(self, max_rank: int) -> bool:
        return self.max_rank >= max_rank

    @classmethod
    def standard(cls, max_rank: int) -> "RankWeight":
        return cls(range(max_rank + 1))

    @classmethod
    def squares(cls, max_rank: int) -> "RankWeight":
        return cls(r * r for r in range(max_rank + 1))

    @classmethod
    def powers_of_two(cls, max_rank: int) -> "RankWeight":
        return cls(2**r for r in range(max_rank + 1))

    @classmethod
    def from_text(cls, text: str) -> "RankWeight":
        """Parse one number per line (blank lines and ``#`` comments ignored).

        Integers stay integers and decimals become exact fractions.
        """
        values = []
        for line in text.splitlines():
            token = line.split("#", 1)[0].strip()
            if not token:
                continue
            try:
                values.append(int(token))
            except ValueError:
                try:
                    values.append(Fraction(token))
                except ValueError:
                    raise DomainError(f"not a number: {token!r}") from None
        return cls(values)


@dataclass(frozen=True)
class DownSet2D:
    """A downset of a 2D grid stored as its column heights.

    Column ``x`` holds the points ``(x, y)`` with ``y < profile[x]``; the
    profile is weakly decreasing (a Young diagram in a box).
    """

    shape: GridShape
    profile: tuple[int, ...]

    def __post_init__(self):
        if self.shape.d != 2:
            raise DomainError("DownSet2D needs a 2-dimensional shape")
        l1, l2 = self.shape.lengths
        prof = tuple(self.profile)
        object.__setattr__(self, "profile", prof)
        if len(prof) != l1:
            raise DomainError(f"profile must have {l1} entries")
        if any(not 0 <= h <= l2 for h in prof):
            raise DomainError(f"column heights must lie in 0..{l2}")
        if any(a < b for a, b in zip(prof, prof[1:])):
            raise DomainError("profile must be weakly decreasing")

    @classmethod
    def from_points(cls, shape: GridShape, points: Iterable[Point]) -> "DownSet2D":
        pts = set(points)
        if not is_downset(shape, pts):
            raise DomainError("point set is not a downset")
        prof = [0] * shape.lengths[0]
        for x, _ in pts:
            prof[x] += 1
        return cls(shape, tuple(prof))

    @property
    def size(self) -> int:
        return sum(self.profile)

    @property
    def points(self) -> frozenset[Point]:
        return frozenset((x, y) for x, h in enumerate(self.profile) for y in range(h))

    def __len__(self) -> int:
        return self.size


@dataclass(frozen=True)
class DownSetGeneric:
    shape: GridShape
    points: frozenset

    def __post_init__(self):
        pts = frozenset(tuple(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if not is_downset(self.shape, pts):
            raise DomainError("point set is not a downset")

    @property
    def size(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)
