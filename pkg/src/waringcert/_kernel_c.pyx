# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled elimination kernels; same contract as ``_kernel_py``."""

from libc.stdlib cimport malloc, free


def gauss_jordan(rows, Py_ssize_t ncols):
    cdef list a = [list(src) for src in rows]
    cdef Py_ssize_t m = len(a)
    cdef Py_ssize_t r = 0, c, p, i, j
    cdef list prow, row
    cdef object prev = 1, piv, f, x
    cdef list pivots = []
    for c in range(ncols):
        if r == m:
            break
        p = r
        while p < m and (<list>a[p])[c] == 0:
            p += 1
        if p == m:
            continue
        if p != r:
            a[p], a[r] = a[r], a[p]
        prow = <list>a[r]
        piv = prow[c]
        for i in range(m):
            if i == r:
                continue
            row = <list>a[i]
            f = row[c]
            if f == 0:
                if piv != prev:
                    for j in range(ncols):
                        x = row[j]
                        if x:
                            row[j] = x * piv // prev
                continue
            for j in range(ncols):
                row[j] = (piv * row[j] - f * prow[j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
    return r, pivots, a[:r], prev


def rank_mod_p(rows, Py_ssize_t ncols, long long p):
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef long long inv, f, t
    cdef long long *a
    if m == 0 or ncols == 0:
        return 0
    a = <long long *> malloc(m * ncols * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    try:
        for i in range(m):
            row = rows[i]
            for j in range(ncols):
                a[i * ncols + j] = row[j] % p
        for c in range(ncols):
            if r == m:
                break
            piv = r
            while piv < m and a[piv * ncols + c] == 0:
                piv += 1
            if piv == m:
                continue
            if piv != r:
                for j in range(ncols):
                    t = a[piv * ncols + j]
                    a[piv * ncols + j] = a[r * ncols + j]
                    a[r * ncols + j] = t
            inv = pow(<object>a[r * ncols + c], <object>(p - 2), <object>p)
            for j in range(c, ncols):
                a[r * ncols + j] = (a[r * ncols + j] * inv) % p
            for i in range(r + 1, m):
                f = a[i * ncols + c]
                if f:
                    for j in range(c, ncols):
                        a[i * ncols + j] = (a[i * ncols + j] - f * a[r * ncols + j]) % p
                        if a[i * ncols + j] < 0:
                            a[i * ncols + j] += p
            r += 1
        return r
    finally:
        free(a)
