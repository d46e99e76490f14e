"""The group algebra Q S_n and the idempotents living in it.

Elements are dense: an integer numerator per permutation (lexicographic
index) over one positive common denominator, kept in lowest terms.  The
public view ``coeffs`` is the sparse map Permutation -> Fraction.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Iterable, Mapping

from . import kernels
from .characters import CharacterVector
from .linalg import echelon_int
from .perms import Permutation, conjugacy_classes, sign, symmetric_group


class NotIdempotentError(ValueError):
    pass


class GroupAlgebraElement:
    __slots__ = ("n", "_num", "_den")

    def __init__(self, n: int, num: list[int], den: int = 1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num = [-x for x in num]
            den = -den
        g = den
        for x in num:
            if x:
                g = gcd(g, x)
                if g == 1:
                    break
        if g > 1:
            num = [x // g for x in num]
            den //= g
        self.n = n
        self._num = num
        self._den = den

    # construction

    @classmethod
    def zero(cls, n: int) -> "GroupAlgebraElement":
        return cls(n, [0] * len(symmetric_group(n)))

    @classmethod
    def unit(cls, n: int) -> "GroupAlgebraElement":
        return cls.basis(Permutation.identity(n))

    @classmethod
    def basis(cls, w: Permutation, coeff=1) -> "GroupAlgebraElement":
        return cls.from_terms(len(w), {w: coeff})

    @classmethod
    def from_terms(cls, n: int, terms: Mapping | Iterable) -> "GroupAlgebraElement":
        G = symmetric_group(n)
        items = terms.items() if isinstance(terms, Mapping) else terms
        fr = {}
        for w, c in items:
            w = w if isinstance(w, Permutation) else Permutation(w)
            if len(w) != n:
                raise ValueError(f"permutation {w} is not in S_{n}")
            i = G.index[w]
            fr[i] = fr.get(i, 0) + Fraction(c)
        den = 1
        for c in fr.values():
            den = den * c.denominator // gcd(den, c.denominator)
        num = [0] * len(G)
        for i, c in fr.items():
            num[i] = c.numerator * (den // c.denominator)
        return cls(n, num, den)

    # views

    @property
    def coeffs(self) -> dict[Permutation, Fraction]:
        els = symmetric_group(self.n).elements
        return {els[i]: Fraction(x, self._den) for i, x in enumerate(self._num) if x}

    def coefficient(self, w) -> Fraction:
        i = symmetric_group(self.n).index[Permutation(w)]
        return Fraction(self._num[i], self._den)

    def support(self) -> list[Permutation]:
        els = symmetric_group(self.n).elements
        return [els[i] for i, x in enumerate(self._num) if x]

    def dense(self) -> list[Fraction]:
        return [Fraction(x, self._den) for x in self._num]

    def __bool__(self):
        return any(self._num)

    # arithmetic

    def _check(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"size mismatch: S_{self.n} vs S_{other.n}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        a, b = self._den, other._den
        return GroupAlgebraElement(self.n, [x * b + y * a for x, y in zip(self._num, other._num)], a * b)

    def __neg__(self):
        return GroupAlgebraElement(self.n, [-x for x in self._num], self._den)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "GroupAlgebraElement":
        c = Fraction(c)
        return GroupAlgebraElement(self.n, [x * c.numerator for x in self._num], self._den * c.denominator)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._check(other)
        if other is NotImplemented:
            return other
        G = symmetric_group(self.n)
        table = G.table if kernels.BACKEND == "cython" else G.table_rows
        num = kernels.convolve(self._num, other._num, table)
        return GroupAlgebraElement(self.n, num, self._den * other._den)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.n == other.n and self._den == other._den and self._num == other._num

    def __hash__(self):
        return hash((self.n, self._den, tuple(self._num)))

    def __repr__(self):
        terms = sorted(self.coeffs.items())
        shown = " + ".join(f"{c}*{list(w)}" for w, c in terms[:4])
        more = f" + ... ({len(terms)} terms)" if len(terms) > 4 else ""
        return f"<QS_{self.n}: {shown or '0'}{more}>"

    def embed(self, m: int) -> "GroupAlgebraElement":
        """Image under S_n -> S_m fixing n+1..m."""
        return GroupAlgebraElement.from_terms(m, {w.embed(m): c for w, c in self.coeffs.items()})

    def is_idempotent(self) -> bool:
        return self * self == self

    def identity_coefficient(self) -> Fraction:
        G = symmetric_group(self.n)
        return Fraction(self._num[G.identity_index], self._den)

    # serialization

    def to_json(self) -> dict:
        els = symmetric_group(self.n).elements
        terms = []
        for i, x in enumerate(self._num):
            if x:
                c = Fraction(x, self._den)
                terms.append({"word": list(els[i]), "num": c.numerator, "den": c.denominator})
        return {"n": self.n, "terms": terms}

    @classmethod
    def from_json(cls, data) -> "GroupAlgebraElement":
        if isinstance(data, str):
            data = json.loads(data)
        n = data["n"]
        return cls.from_terms(n, [(t["word"], Fraction(t["num"], t["den"])) for t in data["terms"]])


def ga_multiply(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    return a * b


def shuffle_element(n: int, i: int) -> GroupAlgebraElement:
    """Signed sum of the w with w_1 < ... < w_i and w_{i+1} < ... < w_n."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"i={i} out of range 1..{n - 1}")
    G = symmetric_group(n)
    num = [0] * len(G)
    for k, w in enumerate(G.elements):
        if all(w[a] < w[a + 1] for a in range(i - 1)) and \
                all(w[a] < w[a + 1] for a in range(i, n - 1)):
            num[k] = G.signs[k]
    assert sum(1 for x in num if x) == comb(n, i)
    return GroupAlgebraElement(n, num)


@lru_cache(maxsize=None)
def s_total(n: int) -> GroupAlgebraElement:
    """s_n = sum of the shuffle elements for i = 1..n-1."""
    if n < 2:
        raise ValueError("s_n needs n >= 2")
    out = GroupAlgebraElement.zero(n)
    for i in range(1, n):
        out = out + shuffle_element(n, i)
    return out


def eigenvalue(j: int) -> int:
    return 2 ** j - 2


@lru_cache(maxsize=None)
def eulerian_idempotents(n: int) -> tuple[GroupAlgebraElement, ...]:
    """e^(1) .. e^(n): Lagrange interpolation of s_n at the eigenvalues 2^j - 2."""
    if n < 1:
        raise ValueError("n >= 1")
    if n == 1:
        return (GroupAlgebraElement.unit(1),)
    s = s_total(n)
    one = GroupAlgebraElement.unit(n)
    lam = [eigenvalue(j) for j in range(1, n + 1)]
    out = []
    for j in range(n):
        e = one
        denom = 1
        for i in range(n):
            if i != j:
                e = e * (s - one.scale(lam[i]))
                denom *= lam[j] - lam[i]
        out.append(e.scale(Fraction(1, denom)))
    return tuple(out)


def long_cycle(n: int) -> Permutation:
    """c = (1, 2, ..., n)."""
    return Permutation.from_cycles(n, [tuple(range(1, n + 1))])


@lru_cache(maxsize=None)
def lambda_idempotent(n: int) -> GroupAlgebraElement:
    """(1/n) * sum_i sgn(c)^i c^i, normalised so that it is idempotent."""
    c = long_cycle(n)
    sc = sign(c)
    terms = {}
    p = Permutation.identity(n)
    for i in range(n):
        terms[p] = terms.get(p, 0) + Fraction(sc ** i, n)
        p = c * p
    return GroupAlgebraElement.from_terms(n, terms)


@lru_cache(maxsize=None)
def whitehouse_idempotents(n: int) -> tuple[GroupAlgebraElement, ...]:
    """Lambda_n * e^(j)_{n-1} for j = 1..n-1 (embedded S_{n-1} fixes n)."""
    if n < 2:
        raise ValueError("n >= 2")
    lam = lambda_idempotent(n)
    return tuple(lam * e.embed(n) for e in eulerian_idempotents(n - 1))


def right_ideal_basis(e: GroupAlgebraElement) -> tuple[list[list[int]], list[int]]:
    """Integer echelon basis of e * Q S_n from the spanning set {e x}.

    (e x)[g] = e[g x^{-1}], so each spanning row is a permuted copy of e.
    """
    G = symmetric_group(e.n)
    num = e._num
    support = [k for k, v in enumerate(num) if v]
    size = len(G)
    rows = []
    table = G.table
    for x in range(size):
        row = [0] * size
        col = table[:, x]
        for k in support:
            row[col[k]] = num[k]
        rows.append(row)
    return echelon_int(rows, size)


def module_character(e: GroupAlgebraElement, check: bool = True) -> CharacterVector:
    """Character of the right module e * Q S_n.

    Basis: pivot rows of the reduced span of {e x}.  The value at a class
    representative g is the trace of right multiplication by g on that basis,
    where coordinates are read off the pivot columns.
    """
    if check and not e.is_idempotent():
        raise NotIdempotentError("module_character needs an idempotent")
    G = symmetric_group(e.n)
    rows, pivots = right_ideal_basis(e)
    values = {}
    for lam, _, rep in conjugacy_classes(e.n):
        ginv = G.inverse[G.index[rep]]
        tr = Fraction(0)
        for row, p in zip(rows, pivots):
            # (b g)[p] = b[p g^-1]; only the diagonal coordinate matters
            tr += Fraction(row[G.table[p, ginv]], row[p])
        values[lam] = tr
    return CharacterVector(e.n, values)
