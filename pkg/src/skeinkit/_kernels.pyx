# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled state-sum enumeration; see ``_kernels_py`` for the reference version."""

import numpy as np

from libc.stdlib cimport malloc, free


cdef inline int _find(int* parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef inline int _union(int* parent, int x, int y) noexcept nogil:
    x = _find(parent, x)
    y = _find(parent, y)
    if x == y:
        return 0
    parent[x] = y
    return 1


def state_histogram(const int[:, ::1] ends, const int[::1] signs, int n_arcs):
    cdef Py_ssize_t n = signs.shape[0]
    if n > 62:
        raise ValueError("too many crossings for the state enumeration")
    hist = np.zeros((2 * n + 1, 2 * n + 1, n_arcs + 1), dtype=np.int64)
    cdef long long[:, :, ::1] h = hist
    cdef int* parent = <int*> malloc(max(n_arcs, 1) * sizeof(int))
    if parent == NULL:
        raise MemoryError()
    cdef unsigned long long state, n_states = 1ULL << n
    cdef Py_ssize_t c
    cdef int k, loops, ea, eb
    try:
        with nogil:
            state = 0
            while state < n_states:
                for k in range(n_arcs):
                    parent[k] = k
                loops = n_arcs
                ea = 0
                eb = 0
                for c in range(n):
                    if (state >> c) & 1:
                        loops -= _union(parent, ends[c, 0], ends[c, 1])
                        loops -= _union(parent, ends[c, 2], ends[c, 3])
                        eb += signs[c]
                    else:
                        loops -= _union(parent, ends[c, 0], ends[c, 2])
                        loops -= _union(parent, ends[c, 1], ends[c, 3])
                        ea += signs[c]
                h[ea + n, eb + n, loops] += 1
                state += 1
    finally:
        free(parent)
    return hist
