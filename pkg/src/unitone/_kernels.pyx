# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: per-column linear convolution and sliding min/max.

Same contracts as _kernels_np; selected automatically in kernels.py.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def conv_columns(cnp.complex128_t[:, ::1] f, cnp.complex128_t[:, ::1] g):
    """Row-wise full linear convolution of two complex matrices.

    f: (nx, nf), g: (nx, ng) -> (nx, nf + ng - 1).
    """
    cdef Py_ssize_t nx = f.shape[0]
    cdef Py_ssize_t nf = f.shape[1]
    cdef Py_ssize_t ng = g.shape[1]
    out_arr = np.zeros((nx, nf + ng - 1), dtype=np.complex128)
    cdef cnp.complex128_t[:, ::1] out = out_arr
    cdef Py_ssize_t i, a, b
    for i in range(nx):
        for a in range(nf):
            for b in range(ng):
                out[i, a + b] = out[i, a + b] + f[i, a] * g[i, b]
    return out_arr


def sliding_min(double[::1] p, Py_ssize_t radius):
    """out[i] = min of p over indices within `radius` of i (window clipped
    at the array ends).  +inf entries participate as ordinary IEEE values."""
    cdef Py_ssize_t n = p.shape[0]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i, j, lo, hi
    cdef double m
    for i in range(n):
        lo = i - radius if i - radius > 0 else 0
        hi = i + radius + 1 if i + radius + 1 < n else n
        m = p[lo]
        for j in range(lo + 1, hi):
            if p[j] < m:
                m = p[j]
        out[i] = m
    return out_arr


def sliding_max(double[::1] p, Py_ssize_t radius):
    """out[i] = max of p over indices within `radius` of i (window clipped
    at the array ends)."""
    cdef Py_ssize_t n = p.shape[0]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i, j, lo, hi
    cdef double m
    for i in range(n):
        lo = i - radius if i - radius > 0 else 0
        hi = i + radius + 1 if i + radius + 1 < n else n
        m = p[lo]
        for j in range(lo + 1, hi):
            if p[j] > m:
                m = p[j]
        out[i] = m
    return out_arr
