"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`.  Dense elimination is delegated to
the integer kernel in :mod:`whitehouse.kernels` after clearing denominators
row by row; the sparse echelon form below serves the Macaulay matrices of the
quotient algebras, which have a handful of nonzeros per row.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from . import kernels

Rational = Fraction


class RationalMatrix:
    """Immutable dense matrix of rationals, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(Fraction(x) for x in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, (x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, (1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows,
                              (self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ot = other.transpose()
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                out.append(sum((a * b for a, b in zip(r, ot.row(j)) if a and b), Fraction(0)))
        return RationalMatrix(self.rows, other.cols, out)

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"RationalMatrix({self.rows}x{self.cols})"


def integer_row(row: Iterable) -> list[int]:
    """Scale a rational row to a primitive integer row with the same span."""
    row = [Fraction(x) for x in row]
    den = 1
    for x in row:
        den = lcm(den, x.denominator)
    ints = [x.numerator * (den // x.denominator) for x in row]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def echelon_int(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Canonical integer echelon form of the row span (kernel call)."""
    return kernels.rref_int([integer_row(r) for r in rows], ncols)


def rref(m: RationalMatrix) -> tuple[RationalMatrix, list[int]]:
    """Reduced row echelon form and pivot columns.

    The returned matrix has the shape of ``m``; zero rows come last.
    """
    rows, pivots = echelon_int(m.to_rows(), m.cols)
    out = []
    for row, c in zip(rows, pivots):
        p = row[c]
        out.append([Fraction(x, p) if x else Fraction(0) for x in row])
    out.extend([[Fraction(0)] * m.cols for _ in range(m.rows - len(out))])
    return RationalMatrix(m.rows, m.cols, (x for r in out for x in r)), pivots


def rank(m: RationalMatrix) -> int:
    return len(echelon_int(m.to_rows(), m.cols)[1])


def trace(m: RationalMatrix) -> Fraction:
    if m.rows != m.cols:
        raise ValueError("trace of a non-square matrix")
    return sum((m[i, i] for i in range(m.rows)), Fraction(0))


def solve(m: RationalMatrix, b: Sequence) -> list[Fraction] | None:
    """One solution x of ``m x = b``, or None when the system is inconsistent."""
    aug = [list(m.row(i)) + [Fraction(b[i])] for i in range(m.rows)]
    r, pivots = rref(RationalMatrix.from_rows(aug, m.cols + 1))
    if pivots and pivots[-1] == m.cols:
        return None
    x = [Fraction(0)] * m.cols
    for i, c in enumerate(pivots):
        x[c] = r[i, m.cols]
    return x


def is_invertible(m: RationalMatrix) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


class RowSpace:
    """A subspace of Q^N given by a spanning set, kept in RREF.

    ``coordinates(v)`` expresses a vector of the subspace in the RREF basis,
    reading it off the pivot columns; ``contains(v)`` checks membership.
    """

    def __init__(self, vectors: Sequence[Sequence], ncols: int):
        self.ncols = ncols
        rows, pivots = echelon_int(vectors, ncols) if vectors else ([], [])
        self.pivots = pivots
        self.basis = [[Fraction(x, row[c]) if x else Fraction(0) for x in row]
                      for row, c in zip(rows, pivots)]

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def coordinates(self, v: Sequence) -> list[Fraction]:
        return [Fraction(v[c]) for c in self.pivots]

    def residual(self, v: Sequence) -> list[Fraction]:
        r = [Fraction(x) for x in v]
        for coef, b in zip(self.coordinates(v), self.basis):
            if coef:
                for k, x in enumerate(b):
                    if x:
                        r[k] -= coef * x
        return r

    def contains(self, v: Sequence) -> bool:
        return not any(self.residual(v))


def _div(a, b):
    if b == 1:
        return a
    if b == -1:
        return -a
    return Fraction(a) / b


class SparseEchelon:
    """Incremental sparse row reduction with a fixed column priority.

    Columns are integers; a larger column index is eliminated first.  Rows are
    dicts ``column -> coefficient`` (int or Fraction).  After :meth:`finish`,
    ``pivot_rows[c]`` is a row with leading column c, coefficient 1 at c, and
    no other pivot columns, i.e. the sparse RREF.
    """

    def __init__(self):
        self.pivot_rows: dict[int, dict] = {}
        self._done = False

    def reduce(self, row: dict) -> dict:
        row = {k: v for k, v in row.items() if v}
        piv = self.pivot_rows
        heap = [-k for k in row if k in piv]
        heapq.heapify(heap)
        while heap:
            c = -heapq.heappop(heap)
            a = row.get(c)
            if not a:
                continue
            for k, v in piv[c].items():
                nv = row.get(k, 0) - a * v
                if nv:
                    if k not in row and k in piv:
                        heapq.heappush(heap, -k)
                    row[k] = nv
                else:
                    row.pop(k, None)
        return row

    def add(self, row: dict) -> bool:
        """Reduce and insert; returns True when the rank grew."""
        row = self.reduce(row)
        if not row:
            return False
        lead = max(row)
        a = row[lead]
        self.pivot_rows[lead] = {k: _div(v, a) for k, v in row.items()}
        self._done = False
        return True

    def finish(self) -> dict[int, dict]:
        """Back-substitute so every pivot row is free of other pivots."""
        if self._done:
            return self.pivot_rows
        done: dict[int, dict] = {}
        for c in sorted(self.pivot_rows):
            row = dict(self.pivot_rows[c])
            lead = row.pop(c)
            tmp = SparseEchelon()
            tmp.pivot_rows = done
            tail = tmp.reduce(row)
            tail[c] = lead
            done[c] = tail
        self.pivot_rows = done
        self._done = True
        return done

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)
