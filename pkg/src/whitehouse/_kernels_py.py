"""Pure-Python versions of the hot loops.

These are the reference implementations; ``_ckernels`` must agree with them
bit for bit.  Both operate on plain Python ``int`` so every result is exact.
"""

from math import gcd


def convolve(a, b, table):
    """Product of two dense group-algebra vectors.

    ``a`` and ``b`` are integer lists of length N, ``table[i][j]`` is the index
    of the product of basis elements i and j.  Returns the integer list of
    the product.
    """
    size = len(a)
    out = [0] * size
    bnz = [(j, y) for j, y in enumerate(b) if y]
    for i, x in enumerate(a):
        if not x:
            continue
        row = table[i]
        for j, y in bnz:
            out[row[j]] += x * y
    return out


def _content(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return 1
    return g


def rref_int(rows, ncols):
    """Fraction-free Gauss-Jordan elimination on integer rows.

    Returns ``(rows, pivots)``: the nonzero rows of an integer echelon form
    in which each pivot column is zero outside its own row, and the pivot
    column list.  Every returned row has content 1 and a positive pivot, so
    the output is canonical; dividing row r by its pivot gives the RREF.
    """
    m = [list(r) for r in rows if any(r)]
    pivots = []
    rank = 0
    nrows = len(m)
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
            g = gcd(a, p)
            fa = p // g
            fb = a // g
            # earlier pivot rows carry entries left of c
            start = 0 if r < rank else c
            for k in range(start, ncols):
                pk = prow[k]
                if pk:
                    row[k] = fa * row[k] - fb * pk
                elif fa != 1:
                    row[k] = fa * row[k]
            g = _content(row)
            if g > 1:
                m[r] = [x // g for x in row]
        pivots.append(c)
        rank += 1
        # drop rows that vanished so later pivot searches stay short
        if rank < nrows:
            tail = [r for r in m[rank:] if any(r)]
            m = m[:rank] + tail
            nrows = len(m)
    return _normalize(m[:rank], pivots), pivots


def _normalize(rows, pivots):
    # content 1 and positive pivot make the output canonical
    out = []
    for row, c in zip(rows, pivots):
        g = _content(row)
        if row[c] < 0:
            g = -g
        out.append(row if g == 1 else [x // g for x in row])
    return out
