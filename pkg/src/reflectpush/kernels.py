"""Backend selection for the exhaustive loops.

The compiled extension is used when it imports; otherwise the pure-Python
module with the same contract. ``BACKEND`` names the one in use. Setting
``REFLECTPUSH_PURE_PYTHON`` forces the fallback.
"""
from __future__ import annotations

import os
from typing import Callable, Optional

from . import _kernels_py
from .grid import Point

_impl = _kernels_py
if not os.environ.get("REFLECTPUSH_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        pass

BACKEND: str = _impl.BACKEND

_INT64_LIMIT = 2**62


def backend_module(name: Optional[str] = None):
    """Return the kernel module for ``name`` ("cython" or "python"), or the active one."""
    if name is None:
        return _impl
    if name == "python":
        return _kernels_py
    if name == "cython":
        from . import _ckernels

        return _ckernels
    raise ValueError(f"unknown backend {name!r}")


def profiles(l1: int, l2: int) -> list[tuple[int, ...]]:
    """Weakly decreasing height tuples of length ``l1`` with entries in ``0..l2``,
    in lexicographic order."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], cap: int) -> None:
        if len(prefix) == l1:
            out.append(tuple(prefix))
            return
        for h in range(cap + 1):
            prefix.append(h)
            rec(prefix, h)
            prefix.pop()

    rec([], l2)
    return out


def _containment_csr(profs: list[tuple[int, ...]]) -> tuple[list[int], list[int]]:
    ptr = [0]
    idx: list[int] = []
    for p in profs:
        for j, q in enumerate(profs):
            if all(a <= b for a, b in zip(q, p)):
                idx.append(j)
        ptr.append(len(idx))
    return ptr, idx


def box3_size_maxima(
    lengths: tuple[int, int, int], weight: Callable[[Point], object], backend: Optional[str] = None
):
    """Maximum weight and number of maximizers for every size of downset in a 3D box.

    A downset is a stack of 2D profiles over the third axis, each contained in
    the one below. Returns ``(best, count)`` indexed by size.
    """
    l1, l2, l3 = lengths
    profs = profiles(l1, l2)
    sizes = [sum(p) for p in profs]
    layer_weights = []
    for z in range(l3):
        for p in profs:
            layer_weights.append(sum(weight((x, y, z)) for x, h in enumerate(p) for y in range(h)))
    ptr, idx = _containment_csr(profs)
    impl = backend_module(backend)
    exact_ints = all(isinstance(v, int) and abs(v) < _INT64_LIMIT // max(1, l1 * l2 * l3) for v in layer_weights)
    if impl is not _kernels_py and not exact_ints:
        impl = _kernels_py
    return impl.nested_stack_maxima(sizes, layer_weights, ptr, idx, l3, l1 * l2 * l3)


def edge_subset_pair_maxima(n: int, backend: Optional[str] = None):
    """``(best, count)`` of adjacent edge pairs over all labeled graphs on ``n``
    vertices, indexed by edge count."""
    return backend_module(backend).edge_subset_pair_maxima(n)
