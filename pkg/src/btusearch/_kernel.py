"""Selects the girth kernel at import: compiled if available, else pure.

Set BTUSEARCH_PURE=1 to force the pure-Python kernel (used by the
benchmark and by kernel-parity tests).
"""

from __future__ import annotations

import os
from array import array

from . import _girth_py

if os.environ.get("BTUSEARCH_PURE"):
    _impl = _girth_py
    BACKEND = "python"
else:
    try:
        from . import _girth_c as _impl  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        _impl = _girth_py
        BACKEND = "python"


def flatten_images(images) -> array:
    """Pack r one-line image tuples into the kernel's flat int layout."""
    flat = array("i")
    for img in images:
        flat.extend(img)
    return flat


def girth_of_images(images, m: int) -> int | None:
    """Girth of the bipartite graph of the given permutation images.

    Returns None when the graph has no cycle (only possible for r < 2).
    """
    r = len(images)
    g = _impl.girth_from_images(flatten_images(images), m, r)
    return g if g else None
