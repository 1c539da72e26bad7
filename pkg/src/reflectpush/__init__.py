"""Maximum-weight downsets in products of chains and right triangles."""
from .errors import DomainError, ReflectPushError, ResourceError
from .grid import DownSet2D, DownSetGeneric, GridShape, RankWeight, is_downset, rank, weight_of
from .orders import DominationOrder, colex, initial_segment, lex, segment_2d
from .symmetry import PackedBox, ReflectPushMove, apply_reflect_push, symmetrize_set
from .classify import Classification, Kind, classify_rect, predicted_packed_box
from .triangle import TriangleDownSet, TriangleShape, classify_triangle
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Classification",
    "DomainError",
    "DominationOrder",
    "DownSet2D",
    "DownSetGeneric",
    "GridShape",
    "Kind",
    "PackedBox",
    "RankWeight",
    "ReflectPushError",
    "ReflectPushMove",
    "ResourceError",
    "TriangleDownSet",
    "TriangleShape",
    "apply_reflect_push",
    "classify_rect",
    "classify_triangle",
    "colex",
    "initial_segment",
    "is_downset",
    "lex",
    "predicted_packed_box",
    "rank",
    "segment_2d",
    "symmetrize_set",
    "weight_of",
]
