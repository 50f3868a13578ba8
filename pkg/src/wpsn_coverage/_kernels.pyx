# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled sampling kernels.

Must stay bit-identical to _kernels_py: same counter-based generator
(splitmix64 finalizer over seed + counter), same double arithmetic order
in the point-in-disc test.
"""

import numpy as np

cimport numpy as cnp
from libc.stdint cimport uint64_t

cnp.import_array()

IMPL = "compiled"

cdef double INV_2_53 = 1.0 / 9007199254740992.0
cdef uint64_t GOLDEN = 0x9E3779B97F4A7C15UL
cdef uint64_t MIX1 = 0xBF58476D1CE4E5B9UL
cdef uint64_t MIX2 = 0x94D049BB133111EBUL


cdef inline double _uniform(uint64_t seed, uint64_t ctr) nogil:
    cdef uint64_t z = seed + (ctr + 1UL) * GOLDEN
    z = (z ^ (z >> 30)) * MIX1
    z = (z ^ (z >> 27)) * MIX2
    z = z ^ (z >> 31)
    return <double> (z >> 11) * INV_2_53


def uniform_block(seed, start, count):
    """Uniform [0,1) doubles for counters start .. start+count-1."""
    cdef uint64_t s = <uint64_t> (seed & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t c0 = <uint64_t> start
    cdef Py_ssize_t n = count
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n, dtype=np.float64)
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = _uniform(s, c0 + <uint64_t> i)
    return out


def points_block(seed, start, count, double width, double height):
    """Uniform points over the rectangle for sample indices start .. start+count-1."""
    cdef uint64_t s = <uint64_t> (seed & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t i0 = <uint64_t> start
    cdef Py_ssize_t n = count
    cdef cnp.ndarray[cnp.float64_t, ndim=1] xs = np.empty(n, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ys = np.empty(n, dtype=np.float64)
    cdef Py_ssize_t i
    cdef uint64_t idx
    for i in range(n):
        idx = i0 + <uint64_t> i
        xs[i] = _uniform(s, 2UL * idx) * width
        ys[i] = _uniform(s, 2UL * idx + 1UL) * height
    return xs, ys


def covered_count(seed, start, count, double width, double height,
                  sources_x, sources_y, double radius, chunk=65536):
    """Number of samples in [start, start+count) that fall inside >=1 disc."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] sx = np.ascontiguousarray(
        sources_x, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] sy = np.ascontiguousarray(
        sources_y, dtype=np.float64)
    cdef Py_ssize_t n_src = sx.shape[0]
    if n_src == 0:
        return 0
    cdef uint64_t s = <uint64_t> (seed & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t i0 = <uint64_t> start
    cdef Py_ssize_t n = count
    cdef double r_sq = radius * radius
    cdef Py_ssize_t i, j
    cdef uint64_t idx
    cdef double x, y, dx, dy
    cdef long total = 0
    with nogil:
        for i in range(n):
            idx = i0 + <uint64_t> i
            x = _uniform(s, 2UL * idx) * width
            y = _uniform(s, 2UL * idx + 1UL) * height
            for j in range(n_src):
                dx = x - sx[j]
                dy = y - sy[j]
                if dx * dx + dy * dy <= r_sq:
                    total += 1
                    break
    return total
