"""The elements v_ijk, the maps phi: U^{n-1} -> U^n and psi: U^n -> U^{n-1},
and the subalgebra V^n they generate.

V^n is held as the phi-image of the nbc basis of U^{n-1}, written in nbc
coordinates of U^n.  Coordinates with respect to that image basis come from a
row reduction that also tracks the combination used, so membership and
coordinates are a single exact computation.
"""

from __future__ import annotations

import itertools
import json
import threading
from fractions import Fraction

from .characters import CharacterVector, GradedCharacter, character_json
from .linalg import RationalMatrix, RowSpace
from .ot_algebra import (U, OTElement, build_normal_form, act, normal_form, pair,
                         permutations_with_cycles, u_of_w)
from .perms import Permutation, conjugacy_classes, sign


class SubspaceError(RuntimeError):
    """An element expected in V^n (or a basis expected independent) is not."""


def v_elem(i: int, j: int, k: int, n: int) -> OTElement:
    """u_ij + u_jk + u_ki in U^n."""
    if len({i, j, k}) != 3:
        raise ValueError(f"v needs distinct indices, got {(i, j, k)}")
    if max(i, j, k) > n or min(i, j, k) < 1:
        raise ValueError(f"indices {(i, j, k)} out of range for n={n}")
    terms: dict = {}
    for a, b in ((i, j), (j, k), (k, i)):
        p, s = pair(a, b)
        terms[(p,)] = terms.get((p,), 0) + s
    return OTElement(n, U, terms)


def _expand_linear(factors, n: int) -> OTElement:
    """Product of degree-one elements in U^n, reduced at the end."""
    terms = {(): Fraction(1)}
    for f in factors:
        nxt: dict = {}
        for m, c in terms.items():
            for (g,), d in f.terms.items():
                if g in m:
                    continue
                key = tuple(sorted(m + (g,)))
                nxt[key] = nxt.get(key, 0) + c * d
        terms = {m: c for m, c in nxt.items() if c}
    return normal_form(OTElement(n, U, terms))


def phi(x: OTElement) -> OTElement:
    """Algebra map U^{n-1} -> U^n, u_ij -> v_ijn."""
    if x.tag != U:
        raise ValueError("phi is defined on U")
    n = x.n + 1
    out = OTElement(n, U)
    for m, c in x.terms.items():
        out = out + _expand_linear([v_elem(i, j, n, n) for i, j in m], n).scale(c)
    return out


def psi(x: OTElement) -> OTElement:
    """Algebra map U^n -> U^{n-1} killing every u_in."""
    if x.tag != U:
        raise ValueError("psi is defined on U")
    n = x.n
    x = normal_form(x)
    kept = {m: c for m, c in x.terms.items() if all(j != n for _, j in m)}
    return normal_form(OTElement(n - 1, U, kept))


def v_of_w(w: Permutation) -> OTElement:
    """phi(u(w)) for w in S_{n-1}; lands in U^n with n = len(w) + 1."""
    return phi(u_of_w(w))


class VSpace:
    """Degree-d part of V^n with basis phi(nbc monomials of U^{n-1})."""

    def __init__(self, n: int, d: int):
        self.n = n
        self.d = d
        low = build_normal_form(n - 1, U)
        self.table = build_normal_form(n, U)
        self.sources = low.basis(d)
        self.elements = [phi(OTElement(n - 1, U, {m: 1})) for m in self.sources]
        N = self.table.dim(d)
        k = len(self.elements)
        self.vectors = [self.table.coordinates(e, d) for e in self.elements]
        # reduce [B | I] so each RREF row remembers its combination of images
        aug = [v + [Fraction(int(a == b)) for b in range(k)] for a, v in enumerate(self.vectors)]
        self._aug = RowSpace(aug, N + k)
        if any(p >= N for p in self._aug.pivots):
            raise SubspaceError(f"phi-images of degree {d} are dependent in U^{n}")
        self._N = N

    @property
    def dim(self) -> int:
        return len(self.elements)

    def coordinates(self, x: OTElement) -> list[Fraction]:
        """Coefficients c with x = sum c_s phi(b_s); raises if x is outside V^n."""
        vec = self.table.coordinates(x, self.d)
        N = self._N
        coef = [Fraction(0)] * self.dim
        resid = list(vec)
        for row, p in zip(self._aug.basis, self._aug.pivots):
            a = resid[p]
            if not a:
                continue
            for col, val in enumerate(row):
                if val:
                    if col < N:
                        resid[col] -= a * val
                    else:
                        coef[col - N] += a * val
        if any(resid):
            raise SubspaceError(f"element leaves (V^{self.n})_{self.d}: {x}")
        return coef

    def contains(self, x: OTElement) -> bool:
        try:
            self.coordinates(x)
        except SubspaceError:
            return False
        return True

    def action_matrix(self, g: Permutation) -> RationalMatrix:
        """Columns: coordinates of g acting on each basis element."""
        cols = [self.coordinates(act(g, e)) for e in self.elements]
        return RationalMatrix.from_rows(cols, self.dim).transpose()

    def character(self) -> CharacterVector:
        values = {}
        for lam, _, g in conjugacy_classes(self.n):
            values[lam] = sum((self.coordinates(act(g, e))[s] for s, e in enumerate(self.elements)),
                              Fraction(0))
        return CharacterVector(self.n, values)

    def to_json(self, character: CharacterVector | None = None) -> dict:
        out = {"n": self.n, "algebra": "V", "degree": self.d,
               "basis": [[list(p) for p in m] for m in self.sources]}
        if character is not None:
            out["character"] = character_json(character)
        return out


_spaces: dict = {}
_lock = threading.Lock()


def v_space(n: int, d: int) -> VSpace:
    with _lock:
        sp = _spaces.get((n, d))
    if sp is None:
        sp = VSpace(n, d)
        with _lock:
            _spaces[(n, d)] = sp
    return sp


def clear_spaces():
    with _lock:
        _spaces.clear()


def v_subalgebra_basis(n: int, d: int) -> list[OTElement]:
    return list(v_space(n, d).elements)


def v_degrees(n: int) -> int:
    """Number of nonzero graded pieces of V^n (= n - 1)."""
    return len(build_normal_form(n - 1, U).hilbert_function())


def v_graded_character(n: int) -> GradedCharacter:
    return GradedCharacter(n, [v_space(n, d).character() for d in range(v_degrees(n))])


def v_basis_matrix(n: int, d: int) -> RationalMatrix:
    """Rows: v(w) for w in S_{n-1} with n-1-d cycles, in V-basis coordinates."""
    sp = v_space(n, d)
    ws = permutations_with_cycles(n - 1, n - 1 - d)
    return RationalMatrix.from_rows([sp.coordinates(v_of_w(w)) for w in ws], sp.dim)


# identities (a)-(d)

def _triples(n):
    return itertools.permutations(range(1, n + 1), 3)


def v_identity_check(n: int) -> dict[str, list]:
    """Exhaustive check of the four v-identities; maps identity -> offending tuples.

    (a) v_ijk^2 = 0
    (b) v_{s(i,j,k)} = sgn(s) v_ijk for s in S_3
    (c) v_ijl v_jkl + v_jkl v_kil + v_kil v_ijl = 0
    (d) v_ijk - v_ijl + v_ikl - v_jkl = 0
    An empty list means the identity held for every tuple.
    """
    fails: dict[str, list] = {"a": [], "b": [], "c": [], "d": []}
    mul = _mul(n)
    if n >= 3:
        for t in _triples(n):
            v = v_elem(*t, n)
            if mul(v, v):
                fails["a"].append(t)
            for s in itertools.permutations(range(3)):
                perm = tuple(t[k] for k in s)
                sg = sign(Permutation([k + 1 for k in s]))
                if v_elem(*perm, n) != v.scale(sg):
                    fails["b"].append(perm)
    if n >= 4:
        for i, j, k, l in itertools.permutations(range(1, n + 1), 4):
            a, b, c = v_elem(i, j, l, n), v_elem(j, k, l, n), v_elem(k, i, l, n)
            if mul(a, b) + mul(b, c) + mul(c, a):
                fails["c"].append((i, j, k, l))
            if normal_form(v_elem(i, j, k, n) - v_elem(i, j, l, n) + v_elem(i, k, l, n)
                           - v_elem(j, k, l, n)):
                fails["d"].append((i, j, k, l))
    return fails


def _mul(n):
    def mul(a, b):
        return _expand_linear([a, b], n)
    return mul


def dump_json(n: int) -> list[dict]:
    return [v_space(n, d).to_json(v_space(n, d).character()) for d in range(v_degrees(n))]


def dumps(n: int) -> str:
    return "\n".join(json.dumps(r) for r in dump_json(n))


def _left_kernel(images: list[list[Fraction]], width: int) -> list[list[Fraction]]:
    """Basis of {c : sum c_r images[r] = 0}, via RREF of [images | I]."""
    k = len(images)
    aug = [list(v) + [Fraction(int(a == b)) for b in range(k)] for a, v in enumerate(images)]
    sp = RowSpace(aug, width + k)
    return [row[width:] for row, p in zip(sp.basis, sp.pivots) if p >= width]


def quadratic_relations(n: int) -> dict:
    """Compare the quadratic relations among the v_ijn in V^n and in M_n.

    Both rings are generated by the images of v_ijn (1 <= i < j < n); the
    kernels of Sym^2(degree one) -> degree two are compared inside one common
    Sym^2 via the quotient map Q[u] -> M_n.  Returns dimensions, the
    intersection dimension, and the two relation characters.
    """
    from .characters import square_cycle_type, symmetric_square
    from .ot_algebra import M, ot_multiply
    sp1 = v_space(n, 1)
    k = sp1.dim
    mt = build_normal_form(n, M)
    m_elems = [normal_form(OTElement(n, M, e.terms)) for e in sp1.elements]
    iso = RowSpace([mt.coordinates(e, 1) for e in m_elems], mt.dim(1)).dim == k == mt.dim(1)
    pairs = [(a, b) for a in range(k) for b in range(a, k)]
    ut = build_normal_form(n, U)
    v_img = [ut.coordinates(_expand_linear([sp1.elements[a], sp1.elements[b]], n), 2)
             for a, b in pairs]
    m_img = [mt.coordinates(ot_multiply(m_elems[a], m_elems[b]), 2) for a, b in pairs]
    rv = _left_kernel(v_img, ut.dim(2))
    rm = _left_kernel(m_img, mt.dim(2))
    both = RowSpace(rv + rm, len(pairs)).dim if rv or rm else 0
    sym2 = symmetric_square(sp1.character(), square_cycle_type)
    v2 = v_space(n, 2).character() if v_degrees(n) > 2 else CharacterVector(n)
    m2 = degree_character_M(n, 2)
    return {
        "n": n,
        "sym2_dim": len(pairs),
        "degree_one_iso": iso,
        "dim_R_V": len(rv),
        "dim_R_M": len(rm),
        "dim_intersection": len(rv) + len(rm) - both,
        "char_R_V": sym2 - v2,
        "char_R_M": sym2 - m2,
    }


def degree_character_M(n: int, d: int) -> CharacterVector:
    from .ot_algebra import M, degree_character
    t = build_normal_form(n, M)
    if d >= len(t.hilbert_function()):
        return CharacterVector(n)
    return degree_character(n, M, d)
