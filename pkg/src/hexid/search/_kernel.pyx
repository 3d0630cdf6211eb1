# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled branch and bound for minimum hitting sets over <= 64 elements.

Same algorithm and branching order as ``_pykernel.solve``; results are
identical, only faster.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free

MAX_N = 64


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _pop(uint64_t m) nogil:
    return __builtin_popcountll(m)


cdef struct State:
    uint64_t *masks
    int nmasks
    uint64_t *scratch   # nmasks entries per depth level
    int best
    uint64_t best_mask
    int found
    int64_t nodes
    int64_t budget
    int aborted


cdef void rec(State *st, uint64_t chosen, uint64_t excluded, int size) nogil:
    cdef int i, c, pick_cnt = 65, nopen = 0, lb = 0
    cdef uint64_t m, avail, pick = 0, used = 0, rest, low
    cdef uint64_t *open_sets = st.scratch + <int64_t>size * st.nmasks
    st.nodes += 1
    if st.nodes > st.budget:
        st.aborted = 1
        return
    for i in range(st.nmasks):
        m = st.masks[i]
        if m & chosen:
            continue
        avail = m & ~excluded
        if avail == 0:
            return
        c = _pop(avail)
        if c < pick_cnt:
            pick = avail
            pick_cnt = c
        open_sets[nopen] = avail
        nopen += 1
    if nopen == 0:
        if size < st.best:
            st.best = size
            st.best_mask = chosen
            st.found = 1
        return
    for i in range(nopen):
        if open_sets[i] & used == 0:
            used |= open_sets[i]
            lb += 1
    if size + lb >= st.best:
        return
    rest = pick
    while rest:
        low = rest & (~rest + 1)
        rest ^= low
        rec(st, chosen | low, excluded, size + 1)
        if st.aborted:
            return
        excluded |= low
        if size + 1 >= st.best:
            return


def solve(masks, int n, int upper, long long budget):
    """See ``_pykernel.solve``."""
    if n > MAX_N:
        raise ValueError("compiled kernel handles at most 64 elements")
    cdef State st
    cdef int k = len(masks)
    cdef int i
    st.masks = <uint64_t *> malloc(max(k, 1) * sizeof(uint64_t))
    st.scratch = <uint64_t *> malloc(max(k, 1) * (n + 2) * sizeof(uint64_t))
    if st.masks == NULL or st.scratch == NULL:
        free(st.masks)
        free(st.scratch)
        raise MemoryError()
    try:
        for i in range(k):
            st.masks[i] = <uint64_t> masks[i]
        st.nmasks = k
        st.best = upper
        st.best_mask = 0
        st.found = 0
        st.nodes = 0
        st.budget = budget
        st.aborted = 0
        with nogil:
            rec(&st, 0, 0, 0)
        sol = int(st.best_mask) if st.found else None
        return sol, min(st.nodes, budget), not st.aborted
    finally:
        free(st.masks)
        free(st.scratch)
