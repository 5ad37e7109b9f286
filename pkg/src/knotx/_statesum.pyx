# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled state-sum kernel: binary-counter splice enumeration with
union-find loop counting.  Mirrors _statesum_py.state_histogram exactly."""

from libc.stdlib cimport free, malloc


def state_histogram(list crossings, int arc_count):
    cdef Py_ssize_t n = len(crossings)
    if n == 0:
        return {(0, 0): 1}
    if n > 30:
        raise ValueError("state space too large for the compiled kernel")

    cdef int *apairs = <int *> malloc(4 * n * sizeof(int))
    cdef int *bpairs = <int *> malloc(4 * n * sizeof(int))
    cdef int *parent = <int *> malloc(arc_count * sizeof(int))
    # one histogram cell per (b_count, loops) pair
    cdef long long *hist = <long long *> malloc((n + 1) * (arc_count + 1) * sizeof(long long))
    if apairs == NULL or bpairs == NULL or parent == NULL or hist == NULL:
        free(apairs); free(bpairs); free(parent); free(hist)
        raise MemoryError()

    cdef Py_ssize_t i
    cdef int a, b, c, d
    for i in range(n):
        a, b, c, d = crossings[i]
        apairs[4 * i + 0] = a - 1
        apairs[4 * i + 1] = b - 1
        apairs[4 * i + 2] = c - 1
        apairs[4 * i + 3] = d - 1
        bpairs[4 * i + 0] = a - 1
        bpairs[4 * i + 1] = d - 1
        bpairs[4 * i + 2] = b - 1
        bpairs[4 * i + 3] = c - 1
    for i in range((n + 1) * (arc_count + 1)):
        hist[i] = 0

    cdef unsigned long long state, total = (<unsigned long long> 1) << n
    cdef int j, k, x, y, b_count, loops
    cdef int *pairs
    try:
        for state in range(total):
            for j in range(arc_count):
                parent[j] = j
            b_count = 0
            for j in range(n):
                if (state >> j) & 1:
                    b_count += 1
                    pairs = bpairs + 4 * j
                else:
                    pairs = apairs + 4 * j
                for k in range(2):
                    x = pairs[2 * k]
                    y = pairs[2 * k + 1]
                    while parent[x] != x:
                        parent[x] = parent[parent[x]]
                        x = parent[x]
                    while parent[y] != y:
                        parent[y] = parent[parent[y]]
                        y = parent[y]
                    if x != y:
                        parent[x] = y
            loops = 0
            for j in range(arc_count):
                if parent[j] == j:
                    loops += 1
            hist[b_count * (arc_count + 1) + loops] += 1

        out = {}
        for j in range(n + 1):
            for k in range(arc_count + 1):
                if hist[j * (arc_count + 1) + k]:
                    out[(j, k)] = hist[j * (arc_count + 1) + k]
        return out
    finally:
        free(apairs)
        free(bpairs)
        free(parent)
        free(hist)
