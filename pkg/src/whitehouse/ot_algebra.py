"""The Artinian Orlik-Terao algebra U^n and the quotient M_n.

Generators u_ij are stored as ordered pairs (i, j) with i < j; u_ji is
replaced by -u_ij on construction.  A monomial is a sorted tuple of pairs
(square-free for U, with repetition allowed for M).  Normal forms come from
per-degree exact elimination of the relation spaces; nothing is rewritten
heuristically.
"""

from __future__ import annotations

import itertools
import json
import threading
from fractions import Fraction
from typing import Iterable, Mapping

from .characters import CharacterVector, GradedCharacter
from .linalg import RationalMatrix, SparseEchelon
from .perms import Permutation, canonical_cycles, conjugacy_classes

U = "U"
M = "M"


class BasisVerificationError(RuntimeError):
    """The expected basis failed to be a complement of the relation space."""


def pair(i: int, j: int) -> tuple[tuple[int, int], int]:
    """Canonical generator and sign for u_ij."""
    if i == j:
        raise ValueError(f"u_{i}{j} is not a generator")
    return ((i, j), 1) if i < j else ((j, i), -1)


def generators(n: int) -> list[tuple[int, int]]:
    """Pairs ordered by (j, i): u12, u13, u23, u14, ..."""
    return sorted(((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)),
                  key=lambda p: (p[1], p[0]))


def monomial_label(m: tuple) -> str:
    return "*".join(f"u{i}_{j}" for i, j in m) or "1"


class OTElement:
    """Sparse rational combination of monomials in U^n or M_n."""

    __slots__ = ("n", "tag", "terms")

    def __init__(self, n: int, tag: str, terms: Mapping | None = None):
        if tag not in (U, M):
            raise ValueError(f"unknown algebra tag {tag!r}")
        self.n = n
        self.tag = tag
        self.terms = {m: Fraction(c) for m, c in (terms or {}).items() if c}

    @classmethod
    def one(cls, n: int, tag: str = U) -> "OTElement":
        return cls(n, tag, {(): 1})

    def _check(self, other):
        if not isinstance(other, OTElement):
            raise TypeError(f"expected OTElement, got {type(other).__name__}")
        if (self.n, self.tag) != (other.n, other.tag):
            raise ValueError(f"mismatch: {self.tag}^{self.n} vs {other.tag}^{other.n}")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, 0) + c
        return OTElement(self.n, self.tag, t)

    def __neg__(self):
        return OTElement(self.n, self.tag, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "OTElement":
        return OTElement(self.n, self.tag, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return ot_multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, OTElement):
            return NotImplemented
        return (self.n, self.tag) == (other.n, other.tag) and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.tag, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set[int]:
        return {len(m) for m in self.terms}

    def __repr__(self):
        if not self.terms:
            return f"0 in {self.tag}^{self.n}"
        body = " + ".join(f"{c}*{monomial_label(m)}" for m, c in sorted(self.terms.items()))
        return f"{body} in {self.tag}^{self.n}"


def u(i: int, j: int, n: int, tag: str = U) -> OTElement:
    """The generator u_ij (no reduction is needed in degree one for U)."""
    p, s = pair(i, j)
    if j > n or i > n:
        raise ValueError(f"index out of range for n={n}")
    x = OTElement(n, tag, {(p,): s})
    return normal_form(x) if tag == M else x


def _mono_mul(a: tuple, b: tuple, squarefree: bool):
    if squarefree and set(a) & set(b):
        return None
    return tuple(sorted(a + b))


def raw_multiply(a: OTElement, b: OTElement) -> OTElement:
    """Product in the polynomial ring (U: squares dropped), without reduction."""
    a._check(b)
    sq = a.tag == U
    out: dict = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            m = _mono_mul(ma, mb, sq)
            if m is not None:
                out[m] = out.get(m, 0) + ca * cb
    return OTElement(a.n, a.tag, out)


def arnold_relations(n: int) -> list[dict]:
    """u_ij u_jk + u_jk u_ki + u_ki u_ij for each 3-subset, sign-normalised.

    Returned as dicts monomial -> coefficient (one per unordered triple; the
    other orderings give the same relation up to sign).
    """
    out = []
    for i, j, k in itertools.combinations(range(1, n + 1), 3):
        rel: dict = {}
        for (a, b), (c, d) in (((i, j), (j, k)), ((j, k), (k, i)), ((k, i), (i, j))):
            p, s = pair(a, b)
            q, t = pair(c, d)
            m = tuple(sorted((p, q)))
            rel[m] = rel.get(m, 0) + s * t
        out.append({m: c for m, c in rel.items() if c})
    return out


def nbc_monomials(n: int, d: int) -> list[tuple]:
    """At most one u_{i,k} (i < k) per column k, d factors in total."""
    if d < 0:
        raise ValueError("negative degree")
    out = []
    for cols in itertools.combinations(range(2, n + 1), d):
        for rows in itertools.product(*[range(1, k) for k in cols]):
            out.append(tuple(sorted(zip(rows, cols))))
    return sorted(out, key=_column_key)


def _column_key(m: tuple):
    # larger column multiset (compared from the top) sorts later
    return (sorted((j for _, j in m), reverse=True), sorted(m, key=lambda p: (p[1], p[0]), reverse=True))


def is_nbc(m: tuple) -> bool:
    cols = [j for _, j in m]
    return len(cols) == len(set(cols))


class _DegreeData:
    __slots__ = ("basis", "index", "reduce")

    def __init__(self, basis, reduce):
        self.basis = basis
        self.index = {m: k for k, m in enumerate(basis)}
        # non-basis monomial -> {basis index: coefficient}
        self.reduce = reduce


class NormalFormTable:
    """Per-degree basis and projection for U^n or M_n, built lazily by degree."""

    def __init__(self, n: int, tag: str = U, relations=None):
        self.n = n
        self.tag = tag
        self._relations = relations if relations is not None else arnold_relations(n)
        self._degrees: dict[int, _DegreeData] = {}
        self._lock = threading.RLock()
        self.gens = generators(n)
        self.top: int | None = None  # first degree with dimension zero
        if tag == M:
            self._init_linear()

    # U

    def _build_U(self, d: int) -> _DegreeData:
        gens = self.gens
        nbc = nbc_monomials(self.n, d)
        nbc_set = set(nbc)
        others = sorted((m for m in (tuple(sorted(c)) for c in itertools.combinations(gens, d))
                         if m not in nbc_set), key=_column_key)
        cols = nbc + others  # later columns are eliminated first
        col = {m: k for k, m in enumerate(cols)}
        ech = SparseEchelon()
        if d >= 2:
            for mult in itertools.combinations(gens, d - 2):
                mult = set(mult)
                for rel in self._relations:
                    row = {}
                    for m, c in rel.items():
                        if mult.isdisjoint(m):
                            key = col[tuple(sorted(mult.union(m)))]
                            row[key] = row.get(key, 0) + c
                    if any(row.values()):
                        ech.add(row)
        piv = ech.finish()
        nb = len(nbc)
        bad = [cols[c] for c in piv if c < nb]
        missing = [m for m in others if col[m] not in piv]
        if bad or missing:
            raise BasisVerificationError(
                f"U^{self.n} degree {d}: nbc monomials do not complement the relations "
                f"(nbc in ideal: {bad[:3]}, unreduced non-nbc: {missing[:3]})")
        # nbc columns come first, so tail columns are already basis positions
        reduce = {cols[c]: {k: -v for k, v in row.items() if k != c} for c, row in piv.items()}
        return _DegreeData(nbc, reduce)

    # M

    def _init_linear(self):
        gens = self.gens
        gi = {g: k for k, g in enumerate(gens)}
        ech = SparseEchelon()
        for i in range(1, self.n + 1):
            row = {}
            for j in range(1, self.n + 1):
                if j != i:
                    p, s = pair(i, j)
                    row[gi[p]] = row.get(gi[p], 0) + s
            ech.add(row)
        piv = ech.finish()
        self.eliminated = {gens[c]: {gens[k]: -v for k, v in row.items() if k != c}
                           for c, row in piv.items()}
        self.free_gens = [g for g in gens if g not in self.eliminated]
        self._var_rank = {g: k for k, g in enumerate(self.free_gens)}

    def _degrevlex_key(self, m: tuple):
        e = [0] * len(self.free_gens)
        for g in m:
            e[self._var_rank[g]] += 1
        # variables later in free_gens are larger; compare smallest variable first
        return tuple(-x for x in e)

    def substitute(self, terms: Mapping) -> dict:
        """Replace eliminated generators by their linear expressions (M only)."""
        out: dict = {}
        for m, c in terms.items():
            factors = [self.eliminated.get(g, {g: 1}) for g in m]
            for choice in itertools.product(*[list(f.items()) for f in factors]):
                coef = c
                mono = []
                for g, v in choice:
                    coef = coef * v
                    mono.append(g)
                key = tuple(sorted(mono))
                out[key] = out.get(key, 0) + coef
        return {m: c for m, c in out.items() if c}

    def _build_M(self, d: int) -> _DegreeData:
        free = self.free_gens
        monos = [tuple(sorted(m)) for m in itertools.combinations_with_replacement(free, d)]
        monos.sort(key=self._degrevlex_key)
        col = {m: k for k, m in enumerate(monos)}
        ech = SparseEchelon()
        if d >= 2:
            rels = [self.substitute(r) for r in self._relations]
            for mult in itertools.combinations_with_replacement(free, d - 2):
                for rel in rels:
                    row = {}
                    for m, c in rel.items():
                        key = col[tuple(sorted(m + mult))]
                        row[key] = row.get(key, 0) + c
                    if any(row.values()):
                        ech.add(row)
        piv = ech.finish()
        basis = [m for k, m in enumerate(monos) if k not in piv]
        bidx = {m: k for k, m in enumerate(basis)}
        reduce = {}
        for c, row in piv.items():
            reduce[monos[c]] = {bidx[monos[k]]: -v for k, v in row.items() if k != c}
        return _DegreeData(basis, reduce)

    # common

    def degree(self, d: int) -> _DegreeData:
        with self._lock:
            data = self._degrees.get(d)
            if data is not None:
                return data
            if self.top is not None and d > self.top:
                return _DegreeData([], {})
            if d > 0 and self.degree(d - 1).basis == [] and d - 1 > 0:
                return _DegreeData([], {})
            data = self._build_U(d) if self.tag == U else self._build_M(d)
            self._degrees[d] = data
            if not data.basis and self.top is None:
                self.top = d
            return data

    def basis(self, d: int) -> list[tuple]:
        return list(self.degree(d).basis)

    def dim(self, d: int) -> int:
        return len(self.degree(d).basis)

    def hilbert_function(self, max_degree: int | None = None) -> list[int]:
        """Dimensions by degree up to the first vanishing degree (exclusive)."""
        out = []
        d = 0
        limit = max_degree if max_degree is not None else 10 ** 6
        while d <= limit:
            k = self.dim(d)
            if k == 0:
                break
            out.append(k)
            d += 1
        return out

    def coordinates(self, x: OTElement, d: int) -> list[Fraction]:
        """Basis coordinates of the degree-d part of the normal form of x."""
        data = self.degree(d)
        vec = [Fraction(0)] * len(data.basis)
        for m, c in normal_form(x).terms.items():
            if len(m) == d:
                vec[data.index[m]] += c
        return vec

    def element(self, d: int, coords) -> OTElement:
        basis = self.degree(d).basis
        return OTElement(self.n, self.tag, {m: c for m, c in zip(basis, coords) if c})

    def reduce_terms(self, terms: Mapping) -> dict:
        out: dict = {}
        if self.tag == M:
            terms = self.substitute(terms)
        for m, c in terms.items():
            if not c:
                continue
            if self.tag == U and len(set(m)) != len(m):
                continue
            data = self.degree(len(m))
            k = data.index.get(m)
            if k is not None:
                out[m] = out.get(m, 0) + c
                continue
            r = data.reduce.get(m)
            if r is None:
                continue  # degree beyond the top: everything vanishes
            for k, v in r.items():
                b = data.basis[k]
                out[b] = out.get(b, 0) + c * v
        return {m: c for m, c in out.items() if c}

    def to_json(self, d: int, character: CharacterVector | None = None) -> dict:
        from .characters import character_json
        out = {"n": self.n, "algebra": self.tag, "degree": d,
               "basis": [[list(p) for p in m] for m in self.degree(d).basis]}
        if character is not None:
            out["character"] = character_json(character)
        return out


_tables: dict = {}
_tables_lock = threading.Lock()


def build_normal_form(n: int, tag: str = U) -> NormalFormTable:
    """Shared table for (n, tag); degrees are built on first use."""
    with _tables_lock:
        t = _tables.get((n, tag))
        if t is None:
            t = NormalFormTable(n, tag)
            _tables[(n, tag)] = t
        return t


def clear_tables():
    with _tables_lock:
        _tables.clear()


def table_for(x: OTElement) -> NormalFormTable:
    return build_normal_form(x.n, x.tag)


def normal_form(x: OTElement) -> OTElement:
    t = table_for(x)
    return OTElement(x.n, x.tag, t.reduce_terms(x.terms))


def ot_multiply(a: OTElement, b: OTElement) -> OTElement:
    return normal_form(raw_multiply(a, b))


def monomial_element(n: int, m: Iterable[tuple[int, int]], tag: str = U) -> OTElement:
    """Product of the listed generators (pairs in any order), reduced."""
    coef = 1
    mono = []
    for i, j in m:
        p, s = pair(i, j)
        coef *= s
        mono.append(p)
    mono = tuple(sorted(mono))
    if tag == U and len(set(mono)) != len(mono):
        return OTElement(n, tag)
    return normal_form(OTElement(n, tag, {mono: coef}))


def u_of_w(w: Permutation) -> OTElement:
    """prod over cycles (c1 c2 ... cl), c1 minimal, of u_{c1 c2} u_{c2 c3} ... u_{c_{l-1} c_l}."""
    return monomial_element(len(w), u_factors(w))


def u_factors(w) -> list[tuple[int, int]]:
    out = []
    for cyc in canonical_cycles(w):
        out.extend(zip(cyc, cyc[1:]))
    return out


def permutations_with_cycles(n: int, k: int) -> list[Permutation]:
    return [Permutation(w) for w in itertools.permutations(range(1, n + 1))
            if len(canonical_cycles(w)) == k]


def u_basis_matrix(n: int, d: int) -> RationalMatrix:
    """Rows: u(w) for w with n-d cycles (lex order), in nbc coordinates."""
    t = build_normal_form(n, U)
    ws = permutations_with_cycles(n, n - d)
    return RationalMatrix.from_rows([t.coordinates(u_of_w(w), d) for w in ws], t.dim(d))


def act(g: Permutation, x: OTElement) -> OTElement:
    """g(u_ij) = u_{g(i), g(j)}, extended multiplicatively, then reduced."""
    if len(g) != x.n:
        raise ValueError("permutation and element live on different n")
    out: dict = {}
    for m, c in x.terms.items():
        coef = c
        mono = []
        for i, j in m:
            p, s = pair(g[i - 1], g[j - 1])
            coef *= s
            mono.append(p)
        key = tuple(sorted(mono))
        out[key] = out.get(key, 0) + coef
    return normal_form(OTElement(x.n, x.tag, out))


def degree_character(n: int, tag: str, d: int) -> CharacterVector:
    t = build_normal_form(n, tag)
    basis = t.basis(d)
    values = {}
    for lam, _, g in conjugacy_classes(n):
        tr = Fraction(0)
        for k, m in enumerate(basis):
            img = act(g, OTElement(n, tag, {m: 1}))
            tr += img.terms.get(m, 0)
        values[lam] = tr
    return CharacterVector(n, values)


def graded_character(n: int, tag: str = U) -> GradedCharacter:
    t = build_normal_form(n, tag)
    top = len(t.hilbert_function())
    return GradedCharacter(n, [degree_character(n, tag, d) for d in range(top)])


def straighten(w_prime: Permutation, i: int) -> dict[Permutation, int]:
    """u(w') * u_{i,n} as a combination of u(w), w in S_n, by the cycle-insertion recursion.

    ``w_prime`` lies in S_{n-1}.  If i is fixed, n joins it as (i n); if i = c_k
    in the cycle (c_1 ... c_l), each insertion of n right after c_m, m >= k,
    contributes once.
    """
    n = len(w_prime) + 1
    cycles = canonical_cycles(w_prime)
    out: dict[Permutation, int] = {}
    for idx, cyc in enumerate(cycles):
        if i in cyc:
            k = cyc.index(i)
            for m in range(k, len(cyc)):
                new = cyc[:m + 1] + (n,) + cyc[m + 1:]
                w = Permutation.from_cycles(n, cycles[:idx] + [new] + cycles[idx + 1:])
                out[w] = out.get(w, 0) + 1
            return out
    raise ValueError(f"{i} is not moved by or fixed in w'")


def insert_after(w_prime: Permutation, i: int) -> Permutation:
    """w' with n inserted right after i in its cycle."""
    n = len(w_prime) + 1
    cycles = canonical_cycles(w_prime)
    for idx, cyc in enumerate(cycles):
        if i in cyc:
            k = cyc.index(i)
            new = cyc[:k + 1] + (n,) + cyc[k + 1:]
            return Permutation.from_cycles(n, cycles[:idx] + [new] + cycles[idx + 1:])
    raise ValueError(i)


def ot_hilbert_function(n: int, max_degree: int = 3) -> list[int]:
    """Low-degree Hilbert function of the full Orlik-Terao algebra OT_n (no u^2 = 0, no z)."""
    gens = generators(n)
    rels = arnold_relations(n)
    out = []
    for d in range(max_degree + 1):
        monos = [tuple(sorted(m)) for m in itertools.combinations_with_replacement(gens, d)]
        col = {m: k for k, m in enumerate(monos)}
        ech = SparseEchelon()
        if d >= 2:
            for mult in itertools.combinations_with_replacement(gens, d - 2):
                for rel in rels:
                    row = {}
                    for m, c in rel.items():
                        key = col[tuple(sorted(m + mult))]
                        row[key] = row.get(key, 0) + c
                    ech.add(row)
        out.append(len(monos) - ech.rank)
    return out


def dump_json(n: int, tag: str = U) -> list[dict]:
    """One record per degree: basis monomials and the degree character."""
    t = build_normal_form(n, tag)
    out = []
    for d in range(len(t.hilbert_function())):
        out.append(t.to_json(d, degree_character(n, tag, d)))
    return out


def dumps(n: int, tag: str = U) -> str:
    return "\n".join(json.dumps(r) for r in dump_json(n, tag))
