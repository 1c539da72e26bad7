"""Structure of optimal downsets in a product of two chains.

Every optimal downset is a domination-order segment or a symmetrization of
one in a specific packed box. This module predicts those boxes and decides,
in closed form, when the lex and colex segments themselves are optimal.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import DomainError
from .grid import DownSet2D, GridShape, Point
from .orders import DominationOrder, colex, lex, segment_2d
from .symmetry import PackedBox, symmetrize_set

__all__ = [
    "Kind",
    "Classification",
    "RectClassification",
    "segment_box_bounds",
    "predicted_packed_box",
    "classify_rect",
    "classify_rect_all",
    "lex_segment_is_optimal",
    "colex_segment_is_optimal",
    "nested_solution_orders",
    "READINGS",
]


class Kind(str, enum.Enum):
    LEX_SEGMENT = "LexSegment"
    COLEX_SEGMENT = "ColexSegment"
    SYM_OF_LEX = "SymOfLex"
    SYM_OF_COLEX = "SymOfColex"
    UNSTRUCTURED = "Unstructured"

    def __str__(self) -> str:
        return self.value


_SYM_KIND = {"lex": Kind.SYM_OF_LEX, "colex": Kind.SYM_OF_COLEX}
_SEG_KIND = {"lex": Kind.LEX_SEGMENT, "colex": Kind.COLEX_SEGMENT}


@dataclass(frozen=True)
class Classification:
    kind: Kind
    box: Optional[PackedBox] = None
    coords: Optional[tuple[int, int]] = None
    variant: Optional[str] = None

    def __post_init__(self):
        is_sym = self.kind in (Kind.SYM_OF_LEX, Kind.SYM_OF_COLEX)
        has_witness = self.box is not None and self.coords is not None
        if is_sym != has_witness:
            raise DomainError("symmetrization kinds need a box and coordinates, others none")

    @property
    def structured(self) -> bool:
        return self.kind is not Kind.UNSTRUCTURED

    def as_json(self) -> dict:
        out = {"kind": self.kind.value}
        if self.box is not None:
            out["box"] = self.box.as_json()
            out["coords"] = list(self.coords)
        if self.variant is not None:
            out["variant"] = self.variant
        return out


RectClassification = Classification

READINGS = ("literal", "corrected")


def segment_box_bounds(
    shape: GridShape, order: DominationOrder, m: int, variant: str, reading: str = "corrected"
) -> Optional[dict]:
    """Raw data of the T.2.1 / T.2.2 box for the segment of size ``m``.

    Returns ``None`` when the segment has no last element (T21, ``m = 0``) or
    no first missing element (T22, full set). Otherwise a dict with the pivot
    ``f``, the counts ``p`` and ``q``, whether ``0 < p - 1 <= q`` holds, and the
    box bounds ``lo``/``hi`` as unchecked integer tuples.

    ``reading="literal"`` keeps the unreconciled T.2.2 bounds for comparison
    (major axis from ``f - p - 1``, minor axis from ``f + 1``);
    ``"corrected"`` uses ``f - p + 1`` and ``f``, the only square box that
    lays the missing run flat. T.2.1 is the same under both readings.
    """
    if variant not in ("T21", "T22"):
        raise DomainError(f"unknown variant {variant!r}")
    if reading not in READINGS:
        raise DomainError(f"unknown reading {reading!r}")
    if shape.d != 2:
        raise DomainError("box prediction needs a 2-dimensional shape")
    if not 0 <= m <= shape.size:
        raise DomainError(f"segment size {m} out of range 0..{shape.size}")
    a, b = order.pi
    la, lb = shape.lengths[a - 1], shape.lengths[b - 1]
    full, rest = divmod(m, lb)

    if variant == "T21":
        if m == 0:
            return None
        if rest:
            fa, fb, p = full, rest - 1, rest
        else:
            fa, fb, p = full - 1, lb - 1, lb
        q = la - 1 - fa
        a_range = (fa, fa + p - 1)
        b_range = (0, fb)
    else:
        if m == shape.size:
            return None
        fa, fb = full, rest
        p = lb - rest
        q = full
        if reading == "literal":
            a_range = (fa - p - 1, fa)
            b_range = (fb + 1, lb - 1)
        else:
            a_range = (fa - p + 1, fa)
            b_range = (fb, lb - 1)

    lo, hi = [0, 0], [0, 0]
    lo[a - 1], hi[a - 1] = a_range
    lo[b - 1], hi[b - 1] = b_range
    f = [0, 0]
    f[a - 1], f[b - 1] = fa, fb
    return {
        "f": tuple(f),
        "p": p,
        "q": q,
        "condition": 0 < p - 1 <= q,
        "lo": tuple(lo),
        "hi": tuple(hi),
        "coords": (a, b),
    }


def predicted_packed_box(
    shape: GridShape, order: DominationOrder, m: int, variant: str
) -> Optional[PackedBox]:
    """The packed box used to symmetrize the segment, or ``None`` when the
    fit condition ``0 < p - 1 <= q`` fails. Symmetrize with ``coords = order.pi``."""
    raw = segment_box_bounds(shape, order, m, variant, "corrected")
    if raw is None or not raw["condition"]:
        return None
    return PackedBox(shape, raw["lo"], raw["hi"])


def _as_points(shape: GridShape, A) -> frozenset[Point]:
    if isinstance(A, DownSet2D):
        return A.points
    return frozenset(tuple(p) for p in A)


def classify_rect_all(shape: GridShape, A) -> list[Classification]:
    """Every description of ``A`` found among segments and predicted boxes,
    in priority order LexSegment, ColexSegment, SymOfLex, SymOfColex."""
    if shape.d != 2:
        raise DomainError("classify_rect needs a 2-dimensional shape")
    pts = _as_points(shape, A)
    m = len(pts)
    orders = (lex(2), colex(2))
    segments = {o.name: segment_2d(shape, o, m).points for o in orders}
    found = [
        Classification(_SEG_KIND[o.name]) for o in orders if segments[o.name] == pts
    ]
    for o in orders:
        for variant in ("T21", "T22"):
            box = predicted_packed_box(shape, o, m, variant)
            if box is None:
                continue
            c1, c2 = o.pi
            if symmetrize_set(box, segments[o.name], c1, c2) == pts:
                found.append(Classification(_SYM_KIND[o.name], box, (c1, c2), variant))
    return found or [Classification(Kind.UNSTRUCTURED)]


def classify_rect(shape: GridShape, A) -> Classification:
    return classify_rect_all(shape, A)[0]


def _check_sizes(l1: int, l2: int, m: int) -> None:
    if l1 < 1 or l2 < 1:
        raise DomainError("side lengths must be positive")
    if not 0 <= m <= l1 * l2:
        raise DomainError(f"size {m} out of range 0..{l1 * l2}")


def _short_line_segment_optimal(short: int, long: int, m: int) -> bool:
    # segment that fills lines of the short side, with 1 < short < long
    if m <= short or m >= short * (long - 1):
        return True
    return short == long - 1 and m % short == 0


def colex_segment_is_optimal(l1: int, l2: int, m: int) -> bool:
    _check_sizes(l1, l2, m)
    if l1 == 1 or l2 == 1 or l1 >= l2:
        return True
    return _short_line_segment_optimal(l1, l2, m)


def lex_segment_is_optimal(l1: int, l2: int, m: int) -> bool:
    _check_sizes(l1, l2, m)
    if l1 == 1 or l2 == 1 or l1 <= l2:
        return True
    return _short_line_segment_optimal(l2, l1, m)


def nested_solution_orders(l1: int, l2: int) -> frozenset[str]:
    """Domination orders whose segments form the nested optimal chains."""
    if l1 < 1 or l2 < 1:
        raise DomainError("side lengths must be positive")
    if l1 == l2 or min(l1, l2) == 1:
        return frozenset({"lex", "colex"})
    return frozenset({"lex"}) if l1 < l2 else frozenset({"colex"})


def segments_by_order(shape: GridShape, m: int) -> dict[str, DownSet2D]:
    return {o.name: segment_2d(shape, o, m) for o in (lex(2), colex(2))}


def iter_predicted(shape: GridShape, m: int) -> Iterable[tuple[str, str, PackedBox]]:
    for o in (lex(2), colex(2)):
        for variant in ("T21", "T22"):
            box = predicted_packed_box(shape, o, m, variant)
            if box is not None:
                yield o.name, variant, box
