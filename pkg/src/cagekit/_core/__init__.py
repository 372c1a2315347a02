"""Kernel backend selection.

The compiled extension handles graphs on at most 64 vertices with single-word
bitsets; anything larger (or CAGEKIT_PURE=1) falls back to the pure-Python
twin.  Both implement the same algorithms and produce identical bytes.
"""

import os

from . import pure
from .pure import DedupCapacityError

try:
    from . import _fast  # type: ignore[attr-defined]
except ImportError:
    _fast = None

HAVE_FAST = _fast is not None


def _force_pure() -> bool:
    return os.environ.get("CAGEKIT_PURE") == "1"


def backend_for(n: int):
    """Kernel module to use for an n-vertex graph."""
    if HAVE_FAST and n <= 64 and not _force_pure():
        return _fast
    return pure


def backend_name(n: int) -> str:
    return "fast" if backend_for(n) is not pure else "pure"
