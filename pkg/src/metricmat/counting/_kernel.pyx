# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled eliminative counting kernel; same contract as ``_pykernel``."""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t

import numpy as np


cdef inline int _zero_set(int64_t c0, int64_t c1, int64_t p, const int64_t* inv,
                          bint torus, int64_t* y) noexcept nogil:
    if c1 != 0:
        y[0] = (p - c0) * inv[c1] % p
        if torus and y[0] == 0:
            return 0
        return 1
    if c0 == 0:
        return 2
    return 0


cdef inline int64_t _leaf2(int64_t b1, int64_t a1, int64_t b0, int64_t a0, int64_t p,
                           const int64_t* inv, bint torus) noexcept nogil:
    cdef int64_t dom = p - 1 if torus else p
    cdef int64_t y1 = -1, y0 = -1
    cdef int k1 = _zero_set(b1, a1, p, inv, torus, &y1)
    cdef int k0 = _zero_set(b0, a0, p, inv, torus, &y0)
    cdef int64_t n1 = 0 if k1 == 0 else (1 if k1 == 1 else dom)
    cdef int64_t n0 = 0 if k0 == 0 else (1 if k0 == 1 else dom)
    cdef int64_t both
    if k1 == 0 or k0 == 0:
        both = 0
    elif k1 == 2:
        both = n0
    elif k0 == 2:
        both = n1
    else:
        both = 1 if y1 == y0 else 0
    if torus:
        return (dom - (n1 + n0 - both)) + dom * both
    return (p - n1) + p * both


cdef int64_t _rec(const int64_t* t1, const int64_t* t0, Py_ssize_t size,
                  int64_t* s1, int64_t* s0, int64_t p, const int64_t* inv,
                  bint torus) noexcept nogil:
    cdef Py_ssize_t h, m
    cdef int64_t v, total = 0, x
    cdef int64_t start = 1 if torus else 0
    if size == 2:
        return _leaf2(t1[0], t1[1], t0[0], t0[1], p, inv, torus)
    h = size >> 1
    if start == 0:
        # v = 0 leaves the low halves unchanged
        total += _rec(t1, t0, h, s1, s0, p, inv, torus)
        for m in range(h):
            s1[m] = t1[m]
            s0[m] = t0[m]
    else:
        for m in range(h):
            s1[m] = t1[m]
            s0[m] = t0[m]
    for v in range(1, p):
        for m in range(h):
            x = s1[m] + t1[m + h]
            s1[m] = x - p if x >= p else x
            x = s0[m] + t0[m + h]
            s0[m] = x - p if x >= p else x
        total += _rec(s1, s0, h, s1 + h, s0 + h, p, inv, torus)
    return total


def count_tables(g1, g0, int k, int64_t p, bint torus=False):
    """Zeros of x*G1 + G0 with G1, G0 given as dense tables over k variables."""
    cdef int64_t[::1] a1 = np.ascontiguousarray(np.asarray(g1, dtype=np.int64) % p)
    cdef int64_t[::1] a0 = np.ascontiguousarray(np.asarray(g0, dtype=np.int64) % p)
    cdef Py_ssize_t size = (<Py_ssize_t>1) << k
    if a1.shape[0] != size or a0.shape[0] != size:
        raise ValueError("table size must be 2**k")
    if k == 0:
        if torus:
            if a1[0]:
                return 1 if a0[0] else 0
            return p - 1 if a0[0] == 0 else 0
        if a1[0]:
            return 1
        return p if a0[0] == 0 else 0
    cdef int64_t[::1] inv = np.zeros(p, dtype=np.int64)
    cdef int64_t a
    for a in range(1, p):
        inv[a] = pow(a, -1, p)
    cdef int64_t* s1 = <int64_t*> malloc(size * sizeof(int64_t))
    cdef int64_t* s0 = <int64_t*> malloc(size * sizeof(int64_t))
    if s1 == NULL or s0 == NULL:
        free(s1)
        free(s0)
        raise MemoryError()
    cdef int64_t total
    try:
        with nogil:
            total = _rec(&a1[0], &a0[0], size, s1, s0, p, &inv[0], torus)
    finally:
        free(s1)
        free(s0)
    return int(total)
