"""Vectorized numpy implementations of the enumeration kernels.

Used when the compiled ``_kernels`` extension is unavailable, or when
``WIENER_COLORINGS_PURE=1`` is set. Signatures match the extension exactly.
Color arrays are ``int8`` with colors ``1..k``; distance matrices are ``int64``.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np


def all_colorings(n: int, k: int, prefix: Sequence[int] = ()) -> np.ndarray:
    """Every color array with the given prefix, in lexicographic order."""
    p = len(prefix)
    free = n - p
    rows = k**free
    out = np.empty((rows, n), dtype=np.int8)
    out[:, :p] = np.asarray(prefix, dtype=np.int8)
    idx = np.arange(rows, dtype=np.int64)
    for i in range(free):
        out[:, n - 1 - i] = idx % k + 1
        idx //= k
    return out


def wiener_many(colors: np.ndarray, dist: np.ndarray) -> np.ndarray:
    n = colors.shape[1]
    out = np.zeros(colors.shape[0], dtype=np.int64)
    for u in range(n):
        cu = colors[:, u]
        for v in range(u + 1, n):
            d = dist[u, v]
            if d:
                out += (cu == colors[:, v]) * d
    return out


def local_max_many(colors: np.ndarray, dist: np.ndarray, edges: np.ndarray) -> np.ndarray:
    """True where no single edge swap strictly increases the Wiener index."""
    ok = np.ones(colors.shape[0], dtype=bool)
    for u, v in edges:
        cu = colors[:, u:u + 1]
        cv = colors[:, v:v + 1]
        duv = dist[u, v]
        gain_u = (colors == cu).astype(np.int64) @ (dist[v] - dist[u]) - duv
        gain_v = (colors == cv).astype(np.int64) @ (dist[u] - dist[v]) - duv
        delta = np.where(cu[:, 0] != cv[:, 0], gain_u + gain_v, 0)
        ok &= delta <= 0
    return ok


def _relabel(colors: np.ndarray, k: int) -> np.ndarray:
    rows, n = colors.shape
    mapping = np.zeros((rows, k + 1), dtype=np.int8)
    nxt = np.ones(rows, dtype=np.int8)
    out = np.empty_like(colors)
    r = np.arange(rows)
    for i in range(n):
        c = colors[:, i]
        m = mapping[r, c]
        fresh = m == 0
        m = np.where(fresh, nxt, m)
        mapping[r, c] = m
        nxt = nxt + fresh
        out[:, i] = m
    return out


def encode(colors: np.ndarray, k: int) -> np.ndarray:
    """Base-``k`` integer code; lexicographic order of arrays equals numeric order."""
    code = np.zeros(colors.shape[0], dtype=np.int64)
    for i in range(colors.shape[1]):
        code = code * k + (colors[:, i].astype(np.int64) - 1)
    return code


def canonical_codes(colors: np.ndarray, perms: np.ndarray, k: int, relabel: bool) -> np.ndarray:
    """Least code over the permutation group, optionally after first-occurrence relabeling."""
    best = None
    for p in perms:
        img = colors[:, p]
        if relabel:
            img = _relabel(img, k)
        code = encode(img, k)
        best = code if best is None else np.minimum(best, code)
    return best
