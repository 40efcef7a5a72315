"""Pure-Python elimination kernels.

These are the reference implementations; ``_kernel_c`` (Cython) exposes the
same functions with the same results and is preferred when it was built.
"""


def gauss_jordan(rows, ncols):
    """Fraction-free Gauss-Jordan elimination of an integer matrix.

    Returns ``(rank, pivots, echelon, denom)`` where ``echelon`` holds the
    first ``rank`` rows of the reduced form scaled by ``denom``: dividing every
    entry by ``denom`` gives the reduced row-echelon form.  Pivot columns are
    chosen as the first column with a nonzero entry, and the pivot row as the
    first remaining row with a nonzero entry in it.
    """
    a = [list(r) for r in rows]
    m = len(a)
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == m:
            break
        p = r
        while p < m and a[p][c] == 0:
            p += 1
        if p == m:
            continue
        if p != r:
            a[p], a[r] = a[r], a[p]
        prow = a[r]
        piv = prow[c]
        for i in range(m):
            if i == r:
                continue
            row = a[i]
            f = row[c]
            if f == 0:
                if piv != prev:
                    for j in range(ncols):
                        if row[j]:
                            row[j] = row[j] * piv // prev
                continue
            for j in range(ncols):
                row[j] = (piv * row[j] - f * prow[j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
    return r, pivots, a[:r], prev


def rank_mod_p(rows, ncols, p):
    """Rank of an integer matrix over GF(p)."""
    a = [[x % p for x in r] for r in rows]
    m = len(a)
    r = 0
    for c in range(ncols):
        if r == m:
            break
        piv = r
        while piv < m and a[piv][c] == 0:
            piv += 1
        if piv == m:
            continue
        a[piv], a[r] = a[r], a[piv]
        prow = a[r]
        inv = pow(prow[c], p - 2, p)
        for j in range(c, ncols):
            prow[j] = prow[j] * inv % p
        for i in range(r + 1, m):
            row = a[i]
            f = row[c]
            if f:
                for j in range(c, ncols):
                    row[j] = (row[j] - f * prow[j]) % p
        r += 1
    return r
