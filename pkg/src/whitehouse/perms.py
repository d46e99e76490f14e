"""Permutations of {1..n}, partitions, and conjugacy classes of S_n.

Permutations are stored in one-line form; cycle notation is derived.  The
product is composition of functions: ``(a * b)(i) == a(b(i))``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import factorial

import numpy as np

Partition = tuple  # weakly decreasing tuple of positive ints


class Permutation(tuple):
    """A permutation in one-line notation ``(w(1), ..., w(n))``."""

    __slots__ = ()

    def __new__(cls, word):
        word = tuple(int(x) for x in word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation of 1..{len(word)}: {word}")
        return super().__new__(cls, word)

    @classmethod
    def _trusted(cls, word):
        return tuple.__new__(cls, word)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._trusted(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Permutation":
        """Build from cycles like ``[(1, 3, 2)]``; unlisted points are fixed."""
        w = list(range(1, n + 1))
        seen = set()
        for cyc in cycles:
            for k, a in enumerate(cyc):
                if a in seen or not 1 <= a <= n:
                    raise ValueError(f"bad cycle {cyc}")
                seen.add(a)
                w[a - 1] = cyc[(k + 1) % len(cyc)]
        return cls._trusted(w)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def word(self) -> tuple:
        return tuple(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other):
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, x in enumerate(self):
            inv[x - 1] = i + 1
        return Permutation._trusted(inv)

    def cycles(self) -> list[tuple]:
        return canonical_cycles(self)

    def cycle_type(self) -> Partition:
        return tuple(sorted((len(c) for c in canonical_cycles(self)), reverse=True))

    def sign(self) -> int:
        return sign(self)

    def fixed_points(self) -> int:
        return sum(1 for i, x in enumerate(self, 1) if i == x)

    def embed(self, m: int) -> "Permutation":
        """The same permutation inside S_m, fixing n+1..m."""
        return Permutation._trusted(tuple(self) + tuple(range(len(self) + 1, m + 1)))

    def __repr__(self):
        cyc = [c for c in canonical_cycles(self) if len(c) > 1]
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"
        return f"Permutation{body}[n={len(self)}]"


def compose(a: Permutation, b: Permutation) -> Permutation:
    """``a ∘ b``, i.e. apply b first."""
    if len(a) != len(b):
        raise ValueError(f"size mismatch: {len(a)} vs {len(b)}")
    return Permutation._trusted(a[x - 1] for x in b)


def canonical_cycles(w) -> list[tuple]:
    """Cycles with the minimum first, ordered by that minimum (fixed points included)."""
    n = len(w)
    seen = [False] * (n + 1)
    out = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = w[i - 1]
        out.append(tuple(cyc))
    return out


def sign(w) -> int:
    return -1 if (len(w) - len(canonical_cycles(w))) % 2 else 1


def partitions(n: int) -> list[Partition]:
    """Partitions of n in reverse lexicographic order, ``(n)`` first."""
    return list(_partitions(n, n))


@lru_cache(maxsize=None)
def _partitions(n, largest):
    if n == 0:
        return ((),)
    out = []
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            out.append((k,) + rest)
    return tuple(out)


def partition_label(p: Partition) -> str:
    return ".".join(map(str, p))


def parse_partition(s: str) -> Partition:
    return tuple(int(x) for x in s.split(".")) if s else ()


def centralizer_order(p: Partition) -> int:
    """z_lambda = prod_i i^{m_i} m_i!."""
    out = 1
    for k in set(p):
        m = p.count(k)
        out *= k ** m * factorial(m)
    return out


def class_size(p: Partition) -> int:
    return factorial(sum(p)) // centralizer_order(p)


def class_representative(p: Partition) -> Permutation:
    """Cycles (1..p1)(p1+1..p1+p2)... ."""
    n = sum(p)
    cycles = []
    start = 1
    for k in p:
        cycles.append(tuple(range(start, start + k)))
        start += k
    return Permutation.from_cycles(n, cycles)


def conjugacy_classes(n: int) -> list[tuple[Partition, int, Permutation]]:
    return [(p, class_size(p), class_representative(p)) for p in partitions(n)]


@lru_cache(maxsize=None)
def stirling_cycle_count(n: int, j: int) -> int:
    """Unsigned Stirling number of the first kind c(n, j)."""
    if n < 0 or j < 0:
        raise ValueError("negative argument")
    if n == 0:
        return 1 if j == 0 else 0
    if j == 0 or j > n:
        return 0
    return stirling_cycle_count(n - 1, j - 1) + (n - 1) * stirling_cycle_count(n - 1, j)


def stirling(n: int, j: int) -> int:
    """c(n, j) with the stated range check 1 <= j <= n."""
    if not 1 <= j <= n:
        raise ValueError(f"j={j} out of range for n={n}")
    return stirling_cycle_count(n, j)


class SymmetricGroup:
    """Lexicographically indexed S_n with a multiplication table.

    ``table[i, j]`` is the index of ``elements[i] * elements[j]``.
    """

    def __init__(self, n: int):
        self.n = n
        self.elements = [Permutation._trusted(w)
                         for w in itertools.permutations(range(1, n + 1))]
        self.index = {w: i for i, w in enumerate(self.elements)}
        size = len(self.elements)
        # (a∘b)[k] = a[b[k]] on 0-based words, ranked by Lehmer code
        words = np.array([list(w) for w in self.elements], dtype=np.int64).reshape(size, n) - 1
        weights = np.array([factorial(n - 1 - k) for k in range(n)], dtype=np.int64)
        self.table = np.empty((size, size), dtype=np.int32)
        for i, a in enumerate(words):
            self.table[i] = _lex_rank(a[words], weights)
        self.inverse = [self.index[w.inverse()] for w in self.elements]
        self.signs = [sign(w) for w in self.elements]
        self.cycle_types = [w.cycle_type() for w in self.elements]
        self.identity_index = self.index[Permutation.identity(n)]
        self._table_rows = None

    def __len__(self):
        return len(self.elements)

    @property
    def table_rows(self) -> list[list[int]]:
        if self._table_rows is None:
            self._table_rows = self.table.tolist()
        return self._table_rows


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> SymmetricGroup:
    return SymmetricGroup(n)


def _lex_rank(words: np.ndarray, weights: np.ndarray) -> np.ndarray:
    n = words.shape[1]
    lehmer = np.zeros_like(words)
    for k in range(n - 1):
        lehmer[:, k] = (words[:, k + 1:] < words[:, k:k + 1]).sum(axis=1)
    return lehmer @ weights
