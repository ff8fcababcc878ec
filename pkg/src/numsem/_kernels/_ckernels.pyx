# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels mirroring numsem._kernels.pure, in int64 arithmetic.

The dispatch layer guarantees every value fits in int64 before calling in
(path weights are bounded by m * max(gens), intermediate numerator
coefficients by 2**len(gens)), so no overflow checks are needed here.
"""

from libc.stdlib cimport free, malloc, realloc
from libc.stdint cimport int64_t

ctypedef int64_t i64


cdef struct MinHeap:
    i64* w
    i64* r
    Py_ssize_t size
    Py_ssize_t cap


cdef inline int heap_push(MinHeap* h, i64 w, i64 r) except -1:
    cdef Py_ssize_t i, parent
    if h.size == h.cap:
        h.cap *= 2
        h.w = <i64*> realloc(h.w, h.cap * sizeof(i64))
        h.r = <i64*> realloc(h.r, h.cap * sizeof(i64))
        if h.w == NULL or h.r == NULL:
            raise MemoryError()
    i = h.size
    h.size += 1
    while i > 0:
        parent = (i - 1) >> 1
        if h.w[parent] <= w:
            break
        h.w[i] = h.w[parent]
        h.r[i] = h.r[parent]
        i = parent
    h.w[i] = w
    h.r[i] = r
    return 0


cdef inline void heap_pop(MinHeap* h, i64* w_out, i64* r_out):
    cdef Py_ssize_t i = 0, child
    cdef i64 w, r
    w_out[0] = h.w[0]
    r_out[0] = h.r[0]
    h.size -= 1
    w = h.w[h.size]
    r = h.r[h.size]
    while True:
        child = 2 * i + 1
        if child >= h.size:
            break
        if child + 1 < h.size and h.w[child + 1] < h.w[child]:
            child += 1
        if h.w[child] >= w:
            break
        h.w[i] = h.w[child]
        h.r[i] = h.r[child]
        i = child
    h.w[i] = w
    h.r[i] = r


def apery_levels(gens):
    """Shortest-path levels on the residue graph; same contract as pure.apery_levels."""
    cdef i64 m = gens[0]
    cdef Py_ssize_t k = len(gens)
    cdef Py_ssize_t n_steps = 0
    cdef Py_ssize_t i, j
    cdef i64 d, s, w, r, r2, w2

    cdef i64* step_s = <i64*> malloc(k * sizeof(i64))
    cdef i64* step_d = <i64*> malloc(k * sizeof(i64))
    cdef i64* dist = <i64*> malloc(m * sizeof(i64))
    cdef MinHeap h
    h.cap = 1024
    h.size = 0
    h.w = <i64*> malloc(h.cap * sizeof(i64))
    h.r = <i64*> malloc(h.cap * sizeof(i64))
    if step_s == NULL or step_d == NULL or dist == NULL or h.w == NULL or h.r == NULL:
        free(step_s); free(step_d); free(dist); free(h.w); free(h.r)
        raise MemoryError()

    try:
        for i in range(1, k):
            d = gens[i]
            if d % m:
                step_s[n_steps] = d % m
                step_d[n_steps] = d
                n_steps += 1
        for i in range(m):
            dist[i] = -1
        dist[0] = 0
        heap_push(&h, 0, 0)
        while h.size:
            heap_pop(&h, &w, &r)
            if w != dist[r]:
                continue
            for j in range(n_steps):
                r2 = r + step_s[j]
                if r2 >= m:
                    r2 -= m
                w2 = w + step_d[j]
                if dist[r2] < 0 or w2 < dist[r2]:
                    dist[r2] = w2
                    heap_push(&h, w2, r2)
        return [dist[i] if dist[i] >= 0 else None for i in range(m)]
    finally:
        free(step_s); free(step_d); free(dist); free(h.w); free(h.r)


def representable_mask(gens, limit):
    """Coin-problem DP mask; same contract as pure.representable_mask."""
    out = bytearray(limit + 1)
    cdef unsigned char[::1] mask = out
    cdef Py_ssize_t n, top = limit
    cdef i64 d
    mask[0] = 1
    for d_py in gens:
        d = d_py
        for n in range(d, top + 1):
            if mask[n - d]:
                mask[n] = 1
    return out


def numerator_terms(levels, gens, length):
    """Indicator array + subtract-shift passes; same contract as pure.numerator_terms."""
    cdef Py_ssize_t m = len(levels)
    cdef Py_ssize_t top = length
    cdef Py_ssize_t n
    cdef i64 d
    cdef i64* lev = <i64*> malloc(m * sizeof(i64))
    cdef i64* a = <i64*> malloc((top + 1) * sizeof(i64))
    if lev == NULL or a == NULL:
        free(lev); free(a)
        raise MemoryError()
    try:
        for n in range(m):
            lev[n] = levels[n]
        for n in range(top + 1):
            a[n] = 1 if n >= lev[n % m] else 0
        for d_py in gens:
            d = d_py
            for n in range(top, d - 1, -1):
                a[n] -= a[n - d]
        return [(n, a[n]) for n in range(top + 1) if a[n]]
    finally:
        free(lev); free(a)
