"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the numpy
fallback. Setting ``WIENER_COLORINGS_PURE=1`` forces the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("WIENER_COLORINGS_PURE", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "numpy"
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "numpy"

all_colorings = _impl.all_colorings
wiener_many = _impl.wiener_many
local_max_many = _impl.local_max_many
encode = _impl.encode
canonical_codes = _impl.canonical_codes

__all__ = [
    "BACKEND",
    "all_colorings",
    "canonical_codes",
    "encode",
    "local_max_many",
    "wiener_many",
]
