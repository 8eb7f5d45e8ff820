# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; same contract as ``_kernels_py``."""

import numpy as np
cimport numpy as cnp

ctypedef cnp.int8_t i8
ctypedef cnp.int64_t i64

cnp.import_array()


def all_colorings(int n, int k, prefix=()):
    cdef Py_ssize_t p = len(prefix)
    cdef Py_ssize_t rows = k ** (n - p)
    out = np.empty((rows, n), dtype=np.int8)
    cdef i8[:, ::1] o = out
    cdef i8[::1] cur = np.ones(n, dtype=np.int8)
    cdef Py_ssize_t r, i
    for i in range(p):
        cur[i] = prefix[i]
    for r in range(rows):
        for i in range(n):
            o[r, i] = cur[i]
        i = n - 1
        while i >= p:
            if cur[i] < k:
                cur[i] += 1
                break
            cur[i] = 1
            i -= 1
    return out


def wiener_many(const i8[:, ::1] colors, const i64[:, ::1] dist):
    cdef Py_ssize_t rows = colors.shape[0], n = colors.shape[1]
    out = np.zeros(rows, dtype=np.int64)
    cdef i64[::1] o = out
    cdef Py_ssize_t r, u, v
    cdef i64 s
    cdef i8 cu
    with nogil:
        for r in range(rows):
            s = 0
            for u in range(n):
                cu = colors[r, u]
                for v in range(u + 1, n):
                    s += dist[u, v] * (colors[r, v] == cu)
            o[r] = s
    return out


def local_max_many(const i8[:, ::1] colors, const i64[:, ::1] dist, const i64[:, ::1] edges):
    cdef Py_ssize_t rows = colors.shape[0], n = colors.shape[1], ne = edges.shape[0]
    out = np.ones(rows, dtype=bool)
    cdef cnp.uint8_t[::1] o = out.view(np.uint8)
    cdef Py_ssize_t r, e, x, u, v
    cdef i8 cu, cv, cx
    cdef i64 delta
    with nogil:
        for r in range(rows):
            for e in range(ne):
                u = edges[e, 0]
                v = edges[e, 1]
                cu = colors[r, u]
                cv = colors[r, v]
                if cu == cv:
                    continue
                delta = 0
                for x in range(n):
                    cx = colors[r, x]
                    if cx == cu and x != u:
                        delta += dist[v, x] - dist[u, x]
                    elif cx == cv and x != v:
                        delta += dist[u, x] - dist[v, x]
                if delta > 0:
                    o[r] = 0
                    break
    return out


def encode(const i8[:, ::1] colors, int k):
    cdef Py_ssize_t rows = colors.shape[0], n = colors.shape[1]
    out = np.zeros(rows, dtype=np.int64)
    cdef i64[::1] o = out
    cdef Py_ssize_t r, i
    cdef i64 code
    with nogil:
        for r in range(rows):
            code = 0
            for i in range(n):
                code = code * k + (colors[r, i] - 1)
            o[r] = code
    return out


def canonical_codes(const i8[:, ::1] colors, perms, int k, bint relabel):
    cdef const i64[:, ::1] pm = np.ascontiguousarray(perms, dtype=np.int64)
    cdef Py_ssize_t rows = colors.shape[0], n = colors.shape[1], ng = pm.shape[0]
    out = np.empty(rows, dtype=np.int64)
    cdef i64[::1] o = out
    cdef i64[::1] mapping = np.zeros(k + 1, dtype=np.int64)
    cdef Py_ssize_t r, g, i, c
    cdef i64 code, best, nxt, lab
    with nogil:
        for r in range(rows):
            best = -1
            for g in range(ng):
                if relabel:
                    for c in range(k + 1):
                        mapping[c] = 0
                    nxt = 1
                code = 0
                for i in range(n):
                    c = colors[r, pm[g, i]]
                    if relabel:
                        lab = mapping[c]
                        if lab == 0:
                            lab = nxt
                            mapping[c] = lab
                            nxt += 1
                    else:
                        lab = c
                    code = code * k + (lab - 1)
                if best < 0 or code < best:
                    best = code
            o[r] = best
    return out
