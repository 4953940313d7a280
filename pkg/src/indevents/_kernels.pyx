# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sampling kernels.  Must agree bit-for-bit with ``_pykernels``."""

from libc.stdint cimport uint64_t, int64_t
import numpy as np

cdef uint64_t GAMMA = 0x9E3779B97F4A7C15ULL
cdef uint64_t STREAM_GAMMA = 0xD1B54A32D192ED03ULL
cdef double TWO_M53 = 1.0 / 9007199254740992.0


cdef inline uint64_t mix64(uint64_t z) noexcept nogil:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


cdef inline uint64_t _key(uint64_t seed, uint64_t stream) noexcept nogil:
    return mix64(mix64(seed) ^ (stream * STREAM_GAMMA + GAMMA))


cdef inline double _uniform(uint64_t key, uint64_t ctr) noexcept nogil:
    return <double>(mix64(key + GAMMA * (ctr + 1)) >> 11) * TWO_M53


def stream_key(uint64_t seed, uint64_t stream):
    return _key(seed, stream)


def uniforms(uint64_t seed, uint64_t stream, uint64_t start, Py_ssize_t count):
    cdef uint64_t key = _key(seed, stream)
    out = np.empty(count, dtype=np.float64)
    cdef double[::1] o = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(count):
            o[i] = _uniform(key, start + i)
    return out


def first_hits(uint64_t seed, uint64_t stream, uint64_t start, Py_ssize_t count, double[::1] probs):
    """Histogram of the first event that occurs in each trial; the last bin counts misses."""
    cdef Py_ssize_t n = probs.shape[0]
    out = np.zeros(n + 1, dtype=np.int64)
    cdef int64_t[::1] o = out
    cdef uint64_t key = _key(seed, stream)
    cdef Py_ssize_t i, j
    cdef uint64_t base
    with nogil:
        for i in range(count):
            base = (start + i) * n
            for j in range(n):
                if _uniform(key, base + j) < probs[j]:
                    o[j] += 1
                    break
            else:
                o[n] += 1
    return out


def strip_hits(uint64_t seed, uint64_t stream, uint64_t start, Py_ssize_t count,
               double[::1] lo, double[::1] hi):
    """Points ``(u, v)`` whose ``u`` falls in one of the sorted disjoint ``[lo, hi)`` strips."""
    cdef Py_ssize_t m = lo.shape[0]
    cdef uint64_t key = _key(seed, stream)
    cdef Py_ssize_t i, a, b, mid
    cdef double u
    cdef int64_t hits = 0
    with nogil:
        for i in range(count):
            u = _uniform(key, 2 * (start + i))
            # rightmost strip with lo <= u
            a = 0
            b = m
            while a < b:
                mid = (a + b) >> 1
                if lo[mid] <= u:
                    a = mid + 1
                else:
                    b = mid
            if a > 0 and u < hi[a - 1]:
                hits += 1
    return hits


def rect_hits(uint64_t seed, uint64_t stream, uint64_t start, Py_ssize_t count,
              double[::1] x_lo, double[::1] x_hi, double[::1] y_lo, double[::1] y_hi):
    """Points inside any of the given half-open rectangles (linear scan)."""
    cdef Py_ssize_t m = x_lo.shape[0]
    cdef uint64_t key = _key(seed, stream)
    cdef Py_ssize_t i, r
    cdef double u, v
    cdef int64_t hits = 0
    with nogil:
        for i in range(count):
            u = _uniform(key, 2 * (start + i))
            v = _uniform(key, 2 * (start + i) + 1)
            for r in range(m):
                if x_lo[r] <= u < x_hi[r] and y_lo[r] <= v < y_hi[r]:
                    hits += 1
                    break
    return hits
