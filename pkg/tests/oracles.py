"""Independent reference computations used only by the tests."""

from fractions import Fraction
from math import factorial

import sympy

from whitehouse.perms import Permutation, class_size, partitions, symmetric_group


def class_sum_character(e):
    """For an idempotent e: chi(g) = (n!/|class|) * sum of the coefficients of e on the class."""
    n = e.n
    coeffs = e.coeffs
    out = {}
    for p in partitions(n):
        s = sum((c for w, c in coeffs.items() if w.cycle_type() == p), Fraction(0))
        out[p] = s * factorial(n) / class_size(p)
    return out


def brute_induce(values_prev, n):
    """Ind from S_{n-1} (fixing n) to S_n by summing over conjugates."""
    G = symmetric_group(n)
    out = {}
    for p in partitions(n):
        g = next(w for w in G.elements if w.cycle_type() == p)
        total = Fraction(0)
        for x in G.elements:
            y = x.inverse() * g * x
            if y[n - 1] == n:
                total += values_prev[Permutation(y[:n - 1]).cycle_type()]
        out[p] = total / factorial(n - 1)
    return out


def sympy_rank(rows):
    return sympy.Matrix(rows).rank() if rows else 0


def sympy_rref(rows):
    m, piv = sympy.Matrix(rows).rref()
    return [[Fraction(int(x.p), int(x.q)) for x in m.row(i)] for i in range(len(piv))], list(piv)


def _pair(i, j):
    return ((i, j), 1) if i < j else ((j, i), -1)


def rewrite_normal_form(terms):
    """Reduce square-free monomials in U^n by rewriting two generators in one column.

    u_ik u_jk -> u_ij u_jk - u_ij u_ik for i < j < k; repeated generators vanish.
    Each step strictly lowers the multiset of column indices, so this terminates,
    and it stops exactly at the nbc monomials.
    """
    todo = dict(terms)
    done = {}
    while todo:
        m, c = todo.popitem()
        if not c:
            continue
        if len(set(m)) != len(m):
            continue
        by_col = {}
        hit = None
        for p in m:
            if p[1] in by_col:
                hit = (by_col[p[1]], p)
                break
            by_col[p[1]] = p
        if hit is None:
            done[m] = done.get(m, 0) + c
            continue
        (a, k), (b, _) = hit
        i, j = min(a, b), max(a, b)
        rest = [p for p in m if p not in hit]
        for new, s in ((((i, j), (j, k)), 1), (((i, j), (i, k)), -1)):
            key = tuple(sorted(rest + list(new)))
            todo[key] = todo.get(key, 0) + c * s
    return {m: c for m, c in done.items() if c}


def count_cycles(n, j):
    return sum(1 for w in symmetric_group(n).elements if len(w.cycles()) == j)
