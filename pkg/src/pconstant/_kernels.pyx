# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels mirroring ``_pykernels`` (same results, same element order)."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint8_t, uint64_t, int64_t
from libc.stdlib cimport malloc, realloc, free, calloc
from libc.string cimport memcmp, memcpy

from ._pykernels import ClosureOverflow

cnp.import_array()


cdef inline uint64_t _hash(const uint8_t* row, Py_ssize_t n) noexcept nogil:
    cdef uint64_t h = 1469598103934665603ULL
    cdef Py_ssize_t i
    for i in range(n):
        h ^= row[i]
        h *= 1099511628211ULL
    return h ^ (h >> 29)


cdef int64_t* _new_table(Py_ssize_t size):
    cdef int64_t* t = <int64_t*> malloc(size * sizeof(int64_t))
    cdef Py_ssize_t i
    if t == NULL:
        raise MemoryError()
    for i in range(size):
        t[i] = -1
    return t


def closure(gens, Py_ssize_t bound):
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] g = np.ascontiguousarray(gens, dtype=np.uint8)
    cdef Py_ssize_t ng = g.shape[0], n = g.shape[1]
    cdef Py_ssize_t cap = 1024, count = 1, i, j, a, slot
    cdef Py_ssize_t tsize = 4096, mask = tsize - 1
    cdef uint8_t* buf = <uint8_t*> malloc(cap * n)
    cdef uint8_t* tmp
    cdef uint8_t* x
    cdef uint8_t* y
    cdef int64_t* table = _new_table(tsize)
    cdef int64_t* newt
    cdef const uint8_t* gp = &g[0, 0]
    if buf == NULL:
        free(table)
        raise MemoryError()
    try:
        for a in range(n):
            buf[a] = <uint8_t> a
        table[_hash(buf, n) & mask] = 0
        i = 0
        while i < count:
            for j in range(ng):
                if count == cap:
                    cap *= 2
                    tmp = <uint8_t*> realloc(buf, cap * n)
                    if tmp == NULL:
                        raise MemoryError()
                    buf = tmp
                x = buf + i * n
                y = buf + count * n
                for a in range(n):
                    y[a] = gp[j * n + x[a]]
                slot = _hash(y, n) & mask
                while table[slot] != -1 and memcmp(buf + table[slot] * n, y, n) != 0:
                    slot = (slot + 1) & mask
                if table[slot] != -1:
                    continue
                table[slot] = count
                count += 1
                if count > bound:
                    raise ClosureOverflow(count)
                if 2 * count > tsize:
                    tsize *= 2
                    mask = tsize - 1
                    newt = _new_table(tsize)
                    for a in range(count):
                        slot = _hash(buf + a * n, n) & mask
                        while newt[slot] != -1:
                            slot = (slot + 1) & mask
                        newt[slot] = a
                    free(table)
                    table = newt
            i += 1
        out = np.empty((count, n), dtype=np.uint8)
        if count:
            memcpy(<void*> cnp.PyArray_DATA(out), buf, count * n)
        return out
    finally:
        free(buf)
        free(table)


def pair_counts(first, second, Py_ssize_t k):
    cdef cnp.ndarray[cnp.int64_t, ndim=1] f = np.ascontiguousarray(first, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] s = np.ascontiguousarray(second, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=2] out = np.zeros((k, k), dtype=np.int64)
    cdef Py_ssize_t w, m = f.shape[0]
    for w in range(m):
        out[f[w], s[w]] += 1
    return out
