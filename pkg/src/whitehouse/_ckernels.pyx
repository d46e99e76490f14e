# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in ``_kernels_py``.

Each kernel first tries machine integers with overflow-checked arithmetic and
restarts on Python integers the moment any intermediate would not fit, so the
output is exact either way and identical to the pure-Python kernel.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    """
    static inline int wh_mul(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int wh_sub(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    static inline int wh_add(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    bint wh_mul(long long a, long long b, long long *r) nogil
    bint wh_sub(long long a, long long b, long long *r) nogil
    bint wh_add(long long a, long long b, long long *r) nogil

from math import gcd as _pygcd

# inputs above this magnitude go straight to the object path
cdef long long SMALL = 1LL << 62


cdef inline long long _gcd(long long a, long long b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef inline long long _abs(long long a) nogil:
    return -a if a < 0 else a


def convolve(a, b, table):
    """Product of two dense group-algebra vectors (see ``_kernels_py``)."""
    cdef Py_ssize_t n = len(a)
    cdef const int[:, ::1] t = table
    cdef long long *av
    cdef long long *bv
    cdef long long *out
    cdef Py_ssize_t *bidx
    cdef Py_ssize_t i, j, k, nb = 0
    cdef long long x, prod, acc
    cdef bint ok = True
    for x_obj in a:
        if not (-SMALL < x_obj < SMALL):
            ok = False
            break
    if ok:
        for x_obj in b:
            if not (-SMALL < x_obj < SMALL):
                ok = False
                break
    if ok:
        av = <long long *> malloc(n * sizeof(long long))
        bv = <long long *> malloc(n * sizeof(long long))
        out = <long long *> malloc(n * sizeof(long long))
        bidx = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
        try:
            for i in range(n):
                av[i] = a[i]
                bv[i] = b[i]
                out[i] = 0
                if bv[i] != 0:
                    bidx[nb] = i
                    nb += 1
            with nogil:
                for i in range(n):
                    x = av[i]
                    if x == 0:
                        continue
                    for k in range(nb):
                        j = bidx[k]
                        if wh_mul(x, bv[j], &prod) or wh_add(out[t[i, j]], prod, &acc):
                            ok = False
                            break
                        out[t[i, j]] = acc
                    if not ok:
                        break
            if ok:
                return [out[i] for i in range(n)]
        finally:
            free(av)
            free(bv)
            free(out)
            free(bidx)
    return _convolve_obj(a, b, t)


cdef list _convolve_obj(a, b, const int[:, ::1] t):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i, j, k, nb
    cdef list out = [0] * n
    cdef list bj = []
    cdef list by = []
    for j in range(n):
        if b[j]:
            bj.append(j)
            by.append(b[j])
    nb = len(bj)
    for i in range(n):
        x = a[i]
        if not x:
            continue
        for k in range(nb):
            j = bj[k]
            out[t[i, j]] = out[t[i, j]] + x * by[k]
    return out


def rref_int(rows, Py_ssize_t ncols):
    """Fraction-free Gauss-Jordan elimination (see ``_kernels_py.rref_int``)."""
    rows = [list(r) for r in rows if any(r)]
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return [], []
    for r in rows:
        for x in r:
            if not (-SMALL < x < SMALL):
                return _rref_obj(rows, ncols)
    res = _rref_fast(rows, nrows, ncols)
    if res is None:
        return _rref_obj(rows, ncols)
    return res


cdef object _rref_fast(list rows, Py_ssize_t nrows, Py_ssize_t ncols):
    cdef long long *m = <long long *> malloc(nrows * ncols * sizeof(long long))
    cdef Py_ssize_t *order = <Py_ssize_t *> malloc(nrows * sizeof(Py_ssize_t))
    cdef Py_ssize_t r, c, k, best, rank = 0, start, live
    cdef long long v, bestval, p, a, g, fa, fb, x, y, cont
    cdef long long *prow
    cdef long long *row
    cdef bint overflow = False
    cdef bint nonzero
    pivots = []
    try:
        for r in range(nrows):
            order[r] = r
            for c in range(ncols):
                m[r * ncols + c] = rows[r][c]
        live = nrows
        with nogil:
            for c in range(ncols):
                if rank == live:
                    break
                best = -1
                bestval = 0
                for r in range(rank, live):
                    v = m[order[r] * ncols + c]
                    if v != 0 and (best < 0 or _abs(v) < bestval):
                        best = r
                        bestval = _abs(v)
                        if bestval == 1:
                            break
                if best < 0:
                    continue
                order[rank], order[best] = order[best], order[rank]
                prow = m + order[rank] * ncols
                p = prow[c]
                for r in range(live):
                    if r == rank:
                        continue
                    row = m + order[r] * ncols
                    a = row[c]
                    if a == 0:
                        continue
                    g = _gcd(a, p)
                    fa = p // g
                    fb = a // g
                    start = 0 if r < rank else c
                    for k in range(start, ncols):
                        if wh_mul(fa, row[k], &x):
                            overflow = True
                            break
                        if prow[k] != 0:
                            if wh_mul(fb, prow[k], &y) or wh_sub(x, y, &x):
                                overflow = True
                                break
                        if x == (-0x7fffffffffffffffLL - 1):
                            overflow = True
                            break
                        row[k] = x
                    if overflow:
                        break
                    cont = 0
                    for k in range(ncols):
                        if row[k] != 0:
                            cont = _gcd(cont, row[k])
                            if cont == 1:
                                break
                    if cont > 1:
                        for k in range(ncols):
                            row[k] = row[k] // cont
                if overflow:
                    break
                rank += 1
                # compact: move zero rows below the live region
                r = rank
                while r < live:
                    row = m + order[r] * ncols
                    nonzero = False
                    for k in range(ncols):
                        if row[k] != 0:
                            nonzero = True
                            break
                    if nonzero:
                        r += 1
                    else:
                        live -= 1
                        order[r], order[live] = order[live], order[r]
        if overflow:
            return None
        # pivots recovered from the echelon shape
        out = []
        for r in range(rank):
            row = m + order[r] * ncols
            out.append([row[k] for k in range(ncols)])
            for k in range(ncols):
                if row[k] != 0:
                    pivots.append(k)
                    break
        return _normalize(out, pivots), pivots
    finally:
        free(m)
        free(order)


cdef tuple _rref_obj(list rows, Py_ssize_t ncols):
    cdef list m = [list(rw) for rw in rows if any(rw)]
    cdef list pivots = []
    cdef Py_ssize_t rank = 0, nrows = len(m), r, k, best, start
    cdef list prow, row
    for c in range(ncols):
        if rank == nrows:
            break
        best = -1
        bestval = 0
        for r in range(rank, nrows):
            v = m[r][c]
            if v and (best < 0 or abs(v) < bestval):
                best = r
                bestval = abs(v)
                if bestval == 1:
                    break
        if best < 0:
            continue
        m[rank], m[best] = m[best], m[rank]
        prow = m[rank]
        p = prow[c]
        for r in range(nrows):
            if r == rank:
                continue
            row = m[r]
            a = row[c]
            if not a:
                continue
            g = _pygcd(a, p)
            fa = p // g
            fb = a // g
            start = 0 if r < rank else c
            for k in range(start, ncols):
                pk = prow[k]
                if pk:
                    row[k] = fa * row[k] - fb * pk
                elif fa != 1:
                    row[k] = fa * row[k]
            g = 0
            for x in row:
                if x:
                    g = _pygcd(g, x)
                    if g == 1:
                        break
            if g > 1:
                m[r] = [x // g for x in row]
        pivots.append(c)
        rank += 1
        if rank < nrows:
            m = m[:rank] + [rr for rr in m[rank:] if any(rr)]
            nrows = len(m)
    return _normalize(m[:rank], pivots), pivots


cdef list _normalize(list rows, list pivots):
    cdef list out = []
    cdef Py_ssize_t i
    for i in range(len(rows)):
        row = rows[i]
        g = 0
        for x in row:
            if x:
                g = _pygcd(g, x)
        if row[pivots[i]] < 0:
            g = -g
        if g != 1:
            row = [x // g for x in row]
        out.append(row)
    return out
