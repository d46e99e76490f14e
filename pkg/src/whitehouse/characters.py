"""Class functions on S_n, the irreducible character table, and R(S_n)[[t]].

Representations are compared through their characters throughout: two
modules are isomorphic exactly when their characters agree.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Mapping, Sequence

from .perms import (Partition, class_size, partition_label, partitions)


class CharacterVector:
    """A class function: one rational value per partition of n (the cycle type)."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values: Mapping[Partition, object] | None = None):
        values = dict(values or {})
        parts = partitions(n)
        extra = set(values) - set(parts)
        if extra:
            raise ValueError(f"not partitions of {n}: {sorted(extra)}")
        self.n = n
        self.values = {p: Fraction(values.get(p, 0)) for p in parts}

    def __getitem__(self, p: Partition) -> Fraction:
        return self.values[tuple(p)]

    def degree(self) -> Fraction:
        return self.values[(1,) * self.n]

    def _check(self, other):
        if not isinstance(other, CharacterVector):
            raise TypeError(f"expected CharacterVector, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"size mismatch: S_{self.n} vs S_{other.n}")

    def __add__(self, other):
        self._check(other)
        return CharacterVector(self.n, {p: v + other.values[p] for p, v in self.values.items()})

    def __sub__(self, other):
        self._check(other)
        return CharacterVector(self.n, {p: v - other.values[p] for p, v in self.values.items()})

    def __neg__(self):
        return CharacterVector(self.n, {p: -v for p, v in self.values.items()})

    def scale(self, c) -> "CharacterVector":
        return CharacterVector(self.n, {p: v * c for p, v in self.values.items()})

    def __mul__(self, other):
        if isinstance(other, CharacterVector):
            return tensor(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CharacterVector):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def __hash__(self):
        return hash((self.n, tuple(self.values.items())))

    def is_zero(self) -> bool:
        return not any(self.values.values())

    def as_list(self) -> list[Fraction]:
        return [self.values[p] for p in partitions(self.n)]

    def __repr__(self):
        body = ", ".join(f"{partition_label(p)}:{v}" for p, v in self.values.items())
        return f"Char[S_{self.n}]({body})"


class GradedCharacter:
    """Finite power series in t with class-function coefficients."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Sequence[CharacterVector]):
        coeffs = list(coeffs)
        for c in coeffs:
            if c.n != n:
                raise ValueError("all coefficients must live on the same S_n")
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.n = n
        self.coeffs = coeffs

    def __getitem__(self, d: int) -> CharacterVector:
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return CharacterVector(self.n)

    def __len__(self):
        return len(self.coeffs)

    def __add__(self, other):
        m = max(len(self), len(other))
        return GradedCharacter(self.n, [self[d] + other[d] for d in range(m)])

    def __sub__(self, other):
        m = max(len(self), len(other))
        return GradedCharacter(self.n, [self[d] - other[d] for d in range(m)])

    def __mul__(self, other):
        return graded_multiply(self, other)

    def __eq__(self, other):
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def hilbert_series(self) -> list[Fraction]:
        return [c.degree() for c in self.coeffs]

    def __repr__(self):
        return f"Graded[S_{self.n}]({self.coeffs})"


# Murnaghan-Nakayama on beta-sets: removing a rim hook of length k moves one
# bead from b to b-k; the sign counts the beads jumped over.

@lru_cache(maxsize=None)
def _mn(beta: frozenset, mu: tuple) -> int:
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    total = 0
    for b in beta:
        t = b - k
        if t < 0 or t in beta:
            continue
        between = sum(1 for x in beta if t < x < b)
        total += (-1) ** between * _mn((beta - {b}) | {t}, rest)
    return total


def mn_value(lam: Partition, mu: Partition) -> int:
    """chi^lam at the class of cycle type mu."""
    if sum(lam) != sum(mu):
        raise ValueError("partitions of different sizes")
    ell = len(lam)
    beta = frozenset(lam[i] + ell - 1 - i for i in range(ell))
    return _mn(beta, tuple(mu))


@lru_cache(maxsize=None)
def _table(n: int) -> dict:
    return {lam: CharacterVector(n, {mu: mn_value(lam, mu) for mu in partitions(n)})
            for lam in partitions(n)}


def character_table(n: int) -> dict[Partition, CharacterVector]:
    """Irreducible characters chi^lam keyed by lam."""
    return dict(_table(n))


def irreducible(lam: Partition) -> CharacterVector:
    return _table(sum(lam))[tuple(lam)]


def trivial_character(n: int) -> CharacterVector:
    return CharacterVector(n, {p: 1 for p in partitions(n)})


def sign_character(n: int) -> CharacterVector:
    return CharacterVector(n, {p: (-1) ** (n - len(p)) for p in partitions(n)})


def regular_character(n: int) -> CharacterVector:
    return CharacterVector(n, {(1,) * n: factorial(n)})


def reflection_character(n: int) -> CharacterVector:
    """V^(n-1,1): fixed points minus one."""
    if n < 2:
        raise ValueError("n >= 2")
    return CharacterVector(n, {p: p.count(1) - 1 for p in partitions(n)})


def lie_character(n: int) -> CharacterVector:
    """Character of the multilinear part of the free Lie algebra on n letters.

    Nonzero only on classes d^(n/d): mu(d) (n/d - 1)! d^(n/d - 1).
    """
    vals = {}
    for p in partitions(n):
        d = p[0]
        if all(k == d for k in p):
            m = n // d
            vals[p] = _mobius(d) * factorial(m - 1) * d ** (m - 1)
    return CharacterVector(n, vals)


def _mobius(d: int) -> int:
    out, k = 1, 2
    while k * k <= d:
        if d % k == 0:
            d //= k
            if d % k == 0:
                return 0
            out = -out
        k += 1
    return -out if d > 1 else out


def inner_product(a: CharacterVector, b: CharacterVector) -> Fraction:
    a._check(b)
    total = sum((class_size(p) * a.values[p] * b.values[p] for p in a.values), Fraction(0))
    return total / factorial(a.n)


class NotVirtualCharacter(ValueError):
    pass


def decompose(a: CharacterVector) -> dict[Partition, int]:
    """Multiplicities of the irreducibles (nonzero ones only)."""
    out = {}
    for lam, chi in _table(a.n).items():
        m = inner_product(a, chi)
        if m.denominator != 1:
            raise NotVirtualCharacter(f"<a, chi^{lam}> = {m} is not an integer")
        if m:
            out[lam] = int(m)
    return out


def compose_irreducibles(n: int, mult: Mapping[Partition, int]) -> CharacterVector:
    out = CharacterVector(n)
    for lam, m in mult.items():
        out = out + irreducible(lam).scale(m)
    return out


def restrict(a: CharacterVector) -> CharacterVector:
    """Restriction from S_n to S_{n-1} (the copy fixing n)."""
    if a.n < 2:
        raise ValueError("n >= 2")
    return CharacterVector(a.n - 1, {p: a.values[tuple(sorted(p + (1,), reverse=True))]
                                     for p in partitions(a.n - 1)})


def induce(a: CharacterVector) -> CharacterVector:
    """Induction from S_{n-1} to S_n via Frobenius reciprocity against the table."""
    n = a.n + 1
    out = CharacterVector(n)
    for lam, chi in _table(n).items():
        m = inner_product(a, restrict(chi))
        if m:
            out = out + chi.scale(m)
    return out


def tensor(a: CharacterVector, b: CharacterVector) -> CharacterVector:
    a._check(b)
    return CharacterVector(a.n, {p: a.values[p] * b.values[p] for p in a.values})


def sgn_twist(a: CharacterVector) -> CharacterVector:
    return tensor(a, sign_character(a.n))


def graded_multiply(A: GradedCharacter, B: GradedCharacter) -> GradedCharacter:
    if A.n != B.n:
        raise ValueError(f"size mismatch: S_{A.n} vs S_{B.n}")
    if not len(A) or not len(B):
        return GradedCharacter(A.n, [])
    out = []
    for d in range(len(A) + len(B) - 1):
        acc = CharacterVector(A.n)
        for i in range(max(0, d - len(B) + 1), min(d, len(A) - 1) + 1):
            acc = acc + tensor(A[i], B[d - i])
        out.append(acc)
    return GradedCharacter(A.n, out)


def symmetric_square(a: CharacterVector, square_class) -> CharacterVector:
    """Character of Sym^2: (chi(g)^2 + chi(g^2)) / 2.

    ``square_class(p)`` must return the cycle type of g^2 for g of type p.
    """
    return CharacterVector(a.n, {p: (v * v + a.values[square_class(p)]) / 2
                                 for p, v in a.values.items()})


def square_cycle_type(p: Partition) -> Partition:
    out = []
    for k in p:
        out.extend([k // 2, k // 2] if k % 2 == 0 else [k])
    return tuple(sorted(out, reverse=True))


# export

def _fmt(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def table_csv(n: int) -> str:
    """Rows = irreducibles, columns = classes; partitions written as dot-separated parts."""
    parts = partitions(n)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["irrep"] + [partition_label(p) for p in parts])
    for lam in parts:
        w.writerow([partition_label(lam)] + [_fmt(irreducible(lam)[p]) for p in parts])
    return buf.getvalue()


def decomposition_json(a: CharacterVector) -> str:
    mult = decompose(a)
    return json.dumps({"n": a.n,
                       "multiplicities": {partition_label(p): m for p, m in mult.items()}},
                      sort_keys=False)


def character_json(a: CharacterVector) -> dict:
    return {partition_label(p): _fmt(v) for p, v in a.values.items()}
