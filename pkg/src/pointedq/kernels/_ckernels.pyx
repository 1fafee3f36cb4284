# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled word kernels; same contract as ``_pykernels``."""

from libc.stdlib cimport malloc, free


cdef void _walk(int a, int n, int theta, unsigned long mask,
                const int* u, const int* w, int* tab, dict out):
    cdef int p, r, label
    cdef object key
    if a == n:
        key = tuple([tab[i] for i in range(theta * theta)])
        out[key] = out.get(key, 0) + 1
        return
    label = u[a]
    for p in range(n):
        if (mask >> p) & 1 or w[p] != label:
            continue
        for r in range(p + 1, n):
            if (mask >> r) & 1:
                tab[label * theta + w[r]] += 1
        _walk(a + 1, n, theta, mask | (1UL << p), u, w, tab, out)
        for r in range(p + 1, n):
            if (mask >> r) & 1:
                tab[label * theta + w[r]] -= 1


def pairing_table(u, w, int theta):
    cdef int n = len(u)
    cdef int i
    cdef dict out = {}
    if n != len(w) or sorted(u) != sorted(w):
        return out
    if n > 63:
        raise ValueError("word too long for the compiled kernel")
    cdef int* cu = <int*> malloc(n * sizeof(int) + 1)
    cdef int* cw = <int*> malloc(n * sizeof(int) + 1)
    cdef int* tab = <int*> malloc(theta * theta * sizeof(int) + 1)
    try:
        for i in range(n):
            cu[i] = u[i]
            cw[i] = w[i]
        for i in range(theta * theta):
            tab[i] = 0
        _walk(0, n, theta, 0, cu, cw, tab, out)
    finally:
        free(cu)
        free(cw)
        free(tab)
    return out


def shuffle_splits(w, int m, int theta):
    cdef int n = len(w)
    cdef int k, j, x, i
    cdef list out = []
    if m < 0 or m > n:
        return out
    cdef int* cw = <int*> malloc(n * sizeof(int) + 1)
    cdef int* idx = <int*> malloc(m * sizeof(int) + 1)
    cdef int* inside = <int*> malloc(n * sizeof(int) + 1)
    cdef int* tab = <int*> malloc(theta * theta * sizeof(int) + 1)
    cdef int* cnt = <int*> malloc(theta * sizeof(int) + 1)
    try:
        for i in range(n):
            cw[i] = w[i]
        for i in range(m):
            idx[i] = i
        while True:
            for i in range(n):
                inside[i] = 0
            for i in range(m):
                inside[idx[i]] = 1
            for i in range(theta * theta):
                tab[i] = 0
            for i in range(theta):
                cnt[i] = 0
            for k in range(n):
                if inside[k]:
                    for x in range(theta):
                        tab[x * theta + cw[k]] += cnt[x]
                else:
                    cnt[cw[k]] += 1
            out.append((
                tuple([cw[idx[i]] for i in range(m)]),
                tuple([cw[k] for k in range(n) if not inside[k]]),
                tuple([tab[i] for i in range(theta * theta)]),
            ))
            # next combination in lexicographic order
            j = m - 1
            while j >= 0 and idx[j] == n - m + j:
                j -= 1
            if j < 0:
                break
            idx[j] += 1
            for i in range(j + 1, m):
                idx[i] = idx[i - 1] + 1
    finally:
        free(cw)
        free(idx)
        free(inside)
        free(tab)
        free(cnt)
    return out
