"""Kernel selection: compiled extension when available, pure Python otherwise.

Set BRAIDFORGE_PURE=1 to force the pure kernel (the benchmark and the
kernel-equivalence tests use this).  Both kernels expose identical
functions with identical results; see _kernel_py for the contracts.
"""

from __future__ import annotations

import os

from . import _kernel_py

if os.environ.get("BRAIDFORGE_PURE"):
    _impl = _kernel_py
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernel_py

IMPLEMENTATION: str = _impl.IMPLEMENTATION

free_reduce_bytes = _impl.free_reduce_bytes
is_reduced = _impl.is_reduced
reduce_with_events = _impl.reduce_with_events
splice = _impl.splice
find_matches = _impl.find_matches
neighbors = _impl.neighbors

__all__ = [
    "IMPLEMENTATION",
    "free_reduce_bytes",
    "is_reduced",
    "reduce_with_events",
    "splice",
    "find_matches",
    "neighbors",
]
