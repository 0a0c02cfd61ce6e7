# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; contracts identical to ``_pykernels``."""

import numpy as np

cimport numpy as cnp
from libc.math cimport ceil, floor, sqrt
from libc.stdint cimport int64_t, uint8_t, uint64_t

cnp.import_array()


cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil


def intersection_numbers(classes, int d):
    cdef cnp.ndarray[uint8_t, ndim=2, mode="c"] c = np.ascontiguousarray(classes, dtype=np.uint8)
    cdef Py_ssize_t n = c.shape[0]
    cdef Py_ssize_t words = (n + 63) // 64
    cdef cnp.ndarray[uint64_t, ndim=3, mode="c"] bits = np.zeros((d + 1, n, words), dtype=np.uint64)
    cdef Py_ssize_t x, y, z, w
    cdef int i, j, k
    cdef int64_t cnt
    for x in range(n):
        for z in range(n):
            bits[c[x, z], x, z >> 6] |= (<uint64_t>1) << (z & 63)

    cdef cnp.ndarray[int64_t, ndim=3, mode="c"] p = np.full((d + 1, d + 1, d + 1), -1, dtype=np.int64)
    for j in range(d + 1):
        for k in range(d + 1):
            p[0, j, k] = 1 if j == k else 0
            p[j, 0, k] = 1 if j == k else 0
    cdef uint64_t* bx
    cdef uint64_t* by
    cdef bint bad = False
    cdef Py_ssize_t wx = 0, wy = 0
    cdef int wi = 0, wj = 0, wk = 0
    cdef int64_t wexp = 0, wgot = 0
    with nogil:
        for x in range(n):
            for y in range(x, n):
                k = c[x, y]
                for i in range(1, d + 1):
                    bx = &bits[i, x, 0]
                    for j in range(1, d + 1):
                        by = &bits[j, y, 0]
                        cnt = 0
                        for w in range(words):
                            cnt += popcount64(bx[w] & by[w])
                        if p[i, j, k] < 0:
                            p[i, j, k] = cnt
                        elif p[i, j, k] != cnt:
                            bad = True
                            wx = x; wy = y; wi = i; wj = j; wk = k
                            wexp = p[i, j, k]; wgot = cnt
                            break
                    if bad:
                        break
                if bad:
                    break
            if bad:
                break
    if bad:
        return _finish(p, (int(wx), int(wy), wi, wj, wk, int(wexp), int(wgot)))
    return _finish(p, None)


cdef _finish(cnp.ndarray p, witness):
    p[p < 0] = 0
    return p, witness


def short_vectors(gram, int bound, bint collect=False):
    cdef cnp.ndarray[int64_t, ndim=2, mode="c"] g = np.ascontiguousarray(gram, dtype=np.int64)
    cdef int n = g.shape[0]
    cdef cnp.ndarray[double, ndim=2, mode="c"] q = g.astype(np.float64)
    cdef int i, j, k, l, a, b
    for i in range(n):
        if q[i, i] <= 0:
            raise ValueError("Gram matrix is not positive definite")
        for j in range(i + 1, n):
            q[j, i] = q[i, j]
            q[i, j] = q[i, j] / q[i, i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k, l] -= q[k, i] * q[i, l]

    cdef cnp.ndarray[int64_t, ndim=1] counts = np.zeros(bound + 1, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] x = np.zeros(n, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] ub = np.zeros(n, dtype=np.int64)
    cdef cnp.ndarray[double, ndim=1] t = np.zeros(n, dtype=np.float64)
    cdef cnp.ndarray[double, ndim=1] u = np.zeros(n, dtype=np.float64)
    cdef double eps = 1e-7 * max(1.0, <double>bound)
    cdef double zz, s
    cdef int64_t norm, acc
    cdef bint descend = True
    found = []
    i = n - 1
    t[i] = bound + eps
    u[i] = 0.0
    while True:
        if descend:
            zz = sqrt(max(t[i], 0.0) / q[i, i])
            ub[i] = <int64_t>floor(zz - u[i])
            x[i] = <int64_t>ceil(-zz - u[i]) - 1
        x[i] += 1
        if x[i] > ub[i]:
            i += 1
            if i == n:
                break
            descend = False
            continue
        if i > 0:
            s = x[i] + u[i]
            t[i - 1] = t[i] - q[i, i] * s * s
            i -= 1
            s = 0.0
            for j in range(i + 1, n):
                s += q[i, j] * x[j]
            u[i] = s
            descend = True
            continue
        norm = 0
        for a in range(n):
            if x[a] != 0:
                acc = 0
                for b in range(n):
                    acc += g[a, b] * x[b]
                norm += x[a] * acc
        if norm <= bound:
            counts[norm] += 1
            if collect and norm != 0:
                found.append(x.copy())
        descend = False
    vecs = (np.array(found, dtype=np.int64).reshape(-1, n) if collect else None)
    return counts, vecs
