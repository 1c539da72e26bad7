# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the exhaustive oracle loops.

Same contracts as ``_kernels_py``; see that module for the meaning of the
arguments.
"""
from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t, INT64_MIN

BACKEND = "cython"


cdef int64_t* _int64_array(values) except NULL:
    cdef Py_ssize_t n = len(values)
    cdef int64_t* out = <int64_t*> malloc((n if n > 0 else 1) * sizeof(int64_t))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = values[i]
    return out


def nested_stack_maxima(sizes, layer_weights, child_ptr, child_idx, int layers, int max_size):
    cdef Py_ssize_t n_prof = len(sizes)
    cdef int64_t* sz = _int64_array(sizes)
    cdef int64_t* lw = NULL
    cdef int64_t* cptr = NULL
    cdef int64_t* cidx = NULL
    cdef int64_t* best = NULL
    cdef int64_t* cnt = NULL
    cdef int64_t* choice = NULL
    cdef int64_t* pos = NULL
    cdef int64_t* acc_w = NULL
    cdef int64_t* acc_s = NULL
    cdef int depth, parent
    cdef int64_t j, s, w
    try:
        lw = _int64_array(layer_weights)
        cptr = _int64_array(child_ptr)
        cidx = _int64_array(child_idx)
        best = <int64_t*> malloc((max_size + 1) * sizeof(int64_t))
        cnt = <int64_t*> malloc((max_size + 1) * sizeof(int64_t))
        choice = <int64_t*> malloc((layers + 1) * sizeof(int64_t))
        pos = <int64_t*> malloc((layers + 1) * sizeof(int64_t))
        acc_w = <int64_t*> malloc((layers + 1) * sizeof(int64_t))
        acc_s = <int64_t*> malloc((layers + 1) * sizeof(int64_t))
        if best == NULL or cnt == NULL or choice == NULL or pos == NULL or acc_w == NULL or acc_s == NULL:
            raise MemoryError()
        for s in range(max_size + 1):
            best[s] = INT64_MIN
            cnt[s] = 0
        with nogil:
            # depth-first walk over chains p_0 >= p_1 >= ... of profiles;
            # pos[k] is the next candidate index for layer k
            acc_w[0] = 0
            acc_s[0] = 0
            pos[0] = 0
            depth = 0
            while depth >= 0:
                if depth == 0:
                    if pos[0] >= n_prof:
                        depth -= 1
                        continue
                    j = pos[0]
                    pos[0] += 1
                else:
                    parent = choice[depth - 1]
                    if pos[depth] >= cptr[parent + 1]:
                        depth -= 1
                        continue
                    j = cidx[pos[depth]]
                    pos[depth] += 1
                choice[depth] = j
                w = acc_w[depth] + lw[depth * n_prof + j]
                s = acc_s[depth] + sz[j]
                if depth == layers - 1:
                    if w > best[s]:
                        best[s] = w
                        cnt[s] = 1
                    elif w == best[s]:
                        cnt[s] += 1
                else:
                    acc_w[depth + 1] = w
                    acc_s[depth + 1] = s
                    pos[depth + 1] = cptr[j]
                    depth += 1
        return (
            [best[s] if cnt[s] else None for s in range(max_size + 1)],
            [cnt[s] for s in range(max_size + 1)],
        )
    finally:
        free(sz)
        free(lw)
        free(cptr)
        free(cidx)
        free(best)
        free(cnt)
        free(choice)
        free(pos)
        free(acc_w)
        free(acc_s)


def edge_subset_pair_maxima(int n):
    cdef int n_edges = n * (n - 1) // 2
    cdef int* eu = <int*> malloc((n_edges if n_edges > 0 else 1) * sizeof(int))
    cdef int* ev = <int*> malloc((n_edges if n_edges > 0 else 1) * sizeof(int))
    cdef int64_t* deg = <int64_t*> malloc((n if n > 0 else 1) * sizeof(int64_t))
    cdef int64_t* best = <int64_t*> malloc((n_edges + 1) * sizeof(int64_t))
    cdef int64_t* cnt = <int64_t*> malloc((n_edges + 1) * sizeof(int64_t))
    cdef unsigned long long mask = 0, i, total
    cdef int k = 0, u, v, bit, m = 0
    cdef int64_t pairs = 0
    try:
        if eu == NULL or ev == NULL or deg == NULL or best == NULL or cnt == NULL:
            raise MemoryError()
        for u in range(n):
            deg[u] = 0
            for v in range(u + 1, n):
                eu[k] = u
                ev[k] = v
                k += 1
        for m in range(n_edges + 1):
            best[m] = -1
            cnt[m] = 0
        m = 0
        best[0] = 0
        cnt[0] = 1
        total = 1ULL << n_edges
        with nogil:
            # Gray-code walk: each step toggles one edge
            for i in range(1, total):
                bit = 0
                while not ((i >> bit) & 1):
                    bit += 1
                u = eu[bit]
                v = ev[bit]
                if (mask >> bit) & 1:
                    deg[u] -= 1
                    deg[v] -= 1
                    pairs -= deg[u] + deg[v]
                    m -= 1
                else:
                    pairs += deg[u] + deg[v]
                    deg[u] += 1
                    deg[v] += 1
                    m += 1
                mask ^= 1ULL << bit
                if pairs > best[m]:
                    best[m] = pairs
                    cnt[m] = 1
                elif pairs == best[m]:
                    cnt[m] += 1
        return [best[j] for j in range(n_edges + 1)], [cnt[j] for j in range(n_edges + 1)]
    finally:
        free(eu)
        free(ev)
        free(deg)
        free(best)
        free(cnt)
