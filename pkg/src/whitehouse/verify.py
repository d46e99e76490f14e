"""The verification suite: one check function per claim, each returning a report.

Every check compares exact rationals; a check passes iff it records no
witness of failure.  Characters that need the n!-dimensional group-algebra
eliminations are shared per n through :class:`Context` (and optionally an
on-disk :class:`~whitehouse.cache.Cache`).
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from . import ot_algebra as ot
from . import whitehouse_map as wm
from .cache import Cache
from .characters import (CharacterVector, GradedCharacter, decompose, induce, irreducible,
                         lie_character, partition_label, reflection_character, restrict,
                         sgn_twist, sign_character, trivial_character)
from .group_algebra import (GroupAlgebraElement, eulerian_idempotents, lambda_idempotent,
                            module_character, s_total, eigenvalue, whitehouse_idempotents)
from .linalg import is_invertible
from .perms import Permutation, canonical_cycles, stirling, symmetric_group

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"

# the order is the dependency order used by run_all
CHECKS = [
    "eulerian",
    "lift-idempotents",
    "graded-factorization",
    "restriction-induction",
    "reflection-tensor",
    "u-algebra",
    "u-characters",
    "subalgebra",
    "v-identities",
    "cycle-bases",
    "quotient-comparison",
]

INFORMATIONAL = {"quotient-comparison"}
DEFAULT_RANGE = range(2, 6)
LONG_N = 6


@dataclass
class CheckReport:
    check: str
    n: int
    status: str = PASS
    witnesses: list = field(default_factory=list)
    info: dict = field(default_factory=dict)
    elapsed: float = 0.0
    informational: bool = False

    def fail(self, msg: str):
        self.witnesses.append(msg)
        self.status = FAIL

    def to_json(self) -> str:
        return json.dumps({"check": self.check, "n": self.n, "status": self.status,
                           "informational": self.informational,
                           "witnesses": self.witnesses, "info": self.info,
                           "elapsed": round(self.elapsed, 3)}, default=_jsonable)


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, CharacterVector):
        return {partition_label(p): str(v) for p, v in x.values.items()}
    if isinstance(x, tuple):
        return list(x)
    raise TypeError(type(x).__name__)


def _mult_label(c: CharacterVector) -> dict:
    return {partition_label(p): m for p, m in decompose(c).items()}


# shared per-n data

def _enc(chars):
    return [[str(v) for v in c.as_list()] for c in chars]


def _dec(n):
    from .perms import partitions

    def dec(data):
        return [CharacterVector(n, dict(zip(partitions(n), (Fraction(v) for v in row))))
                for row in data]
    return dec


class Context:
    """Lazily computed characters for one n, optionally cached on disk."""

    def __init__(self, n: int, cache: Cache | None = None):
        self.n = n
        self.cache = cache or Cache(None)
        self._memo: dict = {}

    def _get(self, key, compute):
        if key not in self._memo:
            n = self.n if not key.endswith("-prev") else self.n - 1
            self._memo[key] = self.cache.fetch(f"{key}-{self.n}", compute, _enc, _dec(n))
        return self._memo[key]

    def E(self, j: int) -> CharacterVector:
        """char E^(j)_n."""
        return self._get("eulerian", lambda: [module_character(e) for e in eulerian_idempotents(self.n)])[j - 1]

    def E_prev(self, j: int) -> CharacterVector:
        """char E^(j)_{n-1}."""
        return self._get("eulerian-prev",
                         lambda: [module_character(e) for e in eulerian_idempotents(self.n - 1)])[j - 1]

    def F(self, j: int) -> CharacterVector:
        """char F^(j)_n; zero outside 1..n-1."""
        if not 1 <= j <= self.n - 1:
            return CharacterVector(self.n)
        return self._get("lift", lambda: [module_character(f) for f in whitehouse_idempotents(self.n)])[j - 1]

    def U_char(self) -> GradedCharacter:
        return GradedCharacter(self.n, self._get("u-graded", lambda: ot.graded_character(self.n).coeffs))

    def V_char(self) -> GradedCharacter:
        return GradedCharacter(self.n, self._get("v-graded", lambda: wm.v_graded_character(self.n).coeffs))

    def M_char(self) -> GradedCharacter:
        return GradedCharacter(self.n, self._get("m-graded", lambda: ot.graded_character(self.n, ot.M).coeffs))


def _count_cycles(n: int, j: int) -> int:
    return sum(1 for w in symmetric_group(n).elements if len(canonical_cycles(w)) == j)


# checks

def verify_eulerian(n: int, ctx: Context, rep: CheckReport):
    es = eulerian_idempotents(n)
    zero = GroupAlgebraElement.zero(n)
    for i, a in enumerate(es, 1):
        for j, b in enumerate(es, 1):
            if a * b != (a if i == j else zero):
                rep.fail(f"e({i}) e({j}) != {'e(%d)' % i if i == j else '0'}")
    total = zero
    for e in es:
        total = total + e
    if total != GroupAlgebraElement.unit(n):
        rep.fail("sum of idempotents != 1")
    if n >= 2:
        s = s_total(n)
        for j, e in enumerate(es, 1):
            if s * e != e.scale(eigenvalue(j)):
                rep.fail(f"s e({j}) != {eigenvalue(j)} e({j})")
    dims = []
    for j in range(1, n + 1):
        d = ctx.E(j).degree()
        dims.append(int(d))
        brute = _count_cycles(n, j)
        if d != brute or brute != stirling(n, j):
            rep.fail(f"dim E({j}) = {d}, permutations with {j} cycles = {brute}")
    rep.info["dims"] = dims


def verify_lift_idempotents(n: int, ctx: Context, rep: CheckReport):
    if n < 2:
        rep.status = SKIPPED
        return
    lam = lambda_idempotent(n)
    if lam * lam != lam:
        rep.fail("Lambda is not idempotent")
    dims = []
    for j, (e, f) in enumerate(zip(eulerian_idempotents(n - 1), whitehouse_idempotents(n)), 1):
        ee = e.embed(n)
        if f * f != f:
            rep.fail(f"Lambda e({j}) is not idempotent")
        if lam * ee != ee * lam:
            rep.fail(f"Lambda does not commute with e({j}) of S_{n - 1}")
        d = ctx.F(j).degree()
        dims.append(int(d))
        if d != stirling(n - 1, j):
            rep.fail(f"dim F({j}) = {d} != c({n - 1},{j}) = {stirling(n - 1, j)}")
    rep.info["dims"] = dims


def _bookkeeping(c: CharacterVector, rep: CheckReport, what: str):
    """Multiplicities by inner products must add up to the dimension."""
    mult = decompose(c)
    total = sum(m * irreducible(lam).degree() for lam, m in mult.items())
    if total != c.degree():
        rep.fail(f"{what}: multiplicities give dimension {total}, character says {c.degree()}")


def verify_graded_factorization(n: int, ctx: Context, rep: CheckReport):
    """sum_j E(j) t^(n-j) == (1 + t V_refl) sum_j F(j) t^(n-1-j), and coefficientwise."""
    if n < 2:
        rep.status = SKIPPED
        return
    lhs = GradedCharacter(n, [ctx.E(n - d) for d in range(n)])
    fs = GradedCharacter(n, [ctx.F(n - 1 - d) for d in range(n - 1)])
    one_plus = GradedCharacter(n, [trivial_character(n), reflection_character(n)])
    rhs = one_plus * fs
    for d in range(n):
        if lhs[d] != rhs[d]:
            rep.fail(f"t^{d}: {lhs[d]} != {rhs[d]}")
    V = reflection_character(n)
    for j in range(1, n + 1):
        if ctx.E(j) != ctx.F(j - 1) + V * ctx.F(j):
            rep.fail(f"E({j}) != F({j - 1}) + V_refl x F({j})")
        _bookkeeping(ctx.E(j), rep, f"E({j})")
    for j in range(1, n):
        _bookkeeping(ctx.F(j), rep, f"F({j})")
    rep.info["E"] = {j: _mult_label(ctx.E(j)) for j in range(1, n + 1)}
    rep.info["F"] = {j: _mult_label(ctx.F(j)) for j in range(1, n)}


def verify_restriction_induction(n: int, ctx: Context, rep: CheckReport):
    if n < 2:
        rep.status = SKIPPED
        return
    for j in range(1, n):
        if restrict(ctx.F(j)) != ctx.E_prev(j):
            rep.fail(f"F({j}) restricted to S_{n - 1} != E({j}) of S_{n - 1}")
        virt = CharacterVector(n)
        for i in range(1, j + 1):
            virt = virt + induce(ctx.E_prev(i)) - ctx.E(i)
        if virt != ctx.F(j):
            rep.fail(f"F({j}) != sum_(i<={j}) (Ind E({i}) of S_{n - 1} - E({i}))")
        dim = sum(n * stirling(n - 1, i) - stirling(n, i) for i in range(1, j + 1))
        if dim != stirling(n - 1, j):
            rep.fail(f"dimension count for F({j}): {dim} != {stirling(n - 1, j)}")
    if ctx.F(n - 1) != sign_character(n):
        rep.fail(f"F({n - 1}) is not the sign character")


def verify_reflection_tensor(n: int, ctx: Context, rep: CheckReport):
    """E(1) == V_refl x F(1), and E(1) == sgn x Lie_n."""
    if n < 2:
        rep.status = SKIPPED
        return
    if ctx.E(1) != reflection_character(n) * ctx.F(1):
        rep.fail("E(1) != V_refl x F(1)")
    if ctx.E(1) != sgn_twist(lie_character(n)):
        rep.fail("E(1) != sgn x Lie")


def verify_u_algebra(n: int, ctx: Context, rep: CheckReport, samples: int = 1000, seed: int = 0):
    t = ot.build_normal_form(n, ot.U)
    hf = t.hilbert_function()
    want = [stirling(n, n - d) for d in range(n)]
    rep.info["hilbert"] = hf
    if hf != want:
        rep.fail(f"Hilbert function {hf} != {want}")
    if sum(hf) != factorial(n):
        rep.fail(f"total dimension {sum(hf)} != {factorial(n)}")
    for d in range(len(hf)):
        for m in t.basis(d):
            x = ot.OTElement(n, ot.U, {m: 1})
            if ot.normal_form(x) != x:
                rep.fail(f"nbc monomial {ot.monomial_label(m)} is not fixed")
    rels = ot.arnold_relations(n)
    if not rels:
        return
    rng = random.Random(seed)
    gens = ot.generators(n)
    killed = 0
    for k in range(samples):
        d = rng.randint(2, n)
        terms: dict = {}
        for _ in range(rng.randint(1, 4)):
            rel = rng.choice(rels)
            mult = tuple(sorted(rng.sample(gens, d - 2)))
            c = Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 5))
            for m, v in rel.items():
                key = tuple(sorted(m + mult))
                terms[key] = terms.get(key, 0) + c * v
        # u_ij^2 multiples also belong to the ideal
        g = rng.choice(gens)
        terms[tuple(sorted((g, g) + tuple(rng.sample(gens, d - 2))))] = Fraction(rng.randint(1, 9))
        x = ot.OTElement(n, ot.U, terms)
        if ot.normal_form(x):
            rep.fail(f"ideal element #{k} not killed: {x}")
        else:
            killed += 1
        # projection property on a random raw element
        y = ot.OTElement(n, ot.U, {tuple(sorted(rng.sample(gens, d))): rng.randint(-5, 5) or 1})
        ny = ot.normal_form(y)
        if ot.normal_form(ny) != ny:
            rep.fail(f"normal form is not idempotent on {y}")
    rep.info["ideal_samples_killed"] = killed


def verify_u_characters(n: int, ctx: Context, rep: CheckReport):
    """sgn x char(U^n in degree n-j) == char E(j) for every j."""
    uc = ctx.U_char()
    for j in range(1, n + 1):
        if sgn_twist(uc[n - j]) != ctx.E(j):
            rep.fail(f"sgn x U degree {n - j} != E({j})")
    if uc[0] != trivial_character(n):
        rep.fail("degree 0 is not trivial")


def verify_subalgebra(n: int, ctx: Context, rep: CheckReport, full: bool = True):
    """phi injective and multiplicative, V^n spanned as claimed, characters of V^n."""
    if n < 2:
        rep.status = SKIPPED
        return
    low = ot.build_normal_form(n - 1, ot.U)
    top = len(low.hilbert_function())
    gens_low = low.basis(1)
    for d in range(top):
        for m in low.basis(d):
            x = ot.OTElement(n - 1, ot.U, {m: 1})
            if wm.psi(wm.phi(x)) != x:
                rep.fail(f"psi(phi({ot.monomial_label(m)})) != itself")
    # multiplicativity: all basis pairs for n <= 5, generator times basis beyond
    for d in range(top):
        for m in low.basis(d):
            x = ot.OTElement(n - 1, ot.U, {m: 1})
            others = gens_low if n > 5 else [b for e in range(top - d) for b in low.basis(e)]
            for b in others:
                y = ot.OTElement(n - 1, ot.U, {b: 1})
                if wm.phi(ot.ot_multiply(x, y)) != ot.ot_multiply(wm.phi(x), wm.phi(y)):
                    rep.fail(f"phi not multiplicative on {ot.monomial_label(m)}, {ot.monomial_label(b)}")
    dims = [wm.v_space(n, d).dim for d in range(top)]
    rep.info["v_dims"] = dims
    if sum(dims) != factorial(n - 1):
        rep.fail(f"dim V = {sum(dims)} != {factorial(n - 1)}")
    if n >= 3:
        sp = wm.v_space(n, 1)
        index = {m: k for k, m in enumerate(sp.sources)}
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                for k in range(j + 1, n + 1):
                    coords = sp.coordinates(wm.v_elem(i, j, k, n))
                    if k < n:
                        want = [Fraction(0)] * sp.dim
                        want[index[((i, j),)]] = 1
                        want[index[((i, k),)]] = -1
                        want[index[((j, k),)]] = 1
                        if coords != want:
                            rep.fail(f"v_{i}{j}{k} coordinates {coords} != v_{i}{j}{n} - v_{i}{k}{n} + v_{j}{k}{n}")
    if not full:
        return
    vc = ctx.V_char()
    low_char = ot.graded_character(n - 1)
    for d in range(top):
        if sgn_twist(vc[d]) != ctx.F(n - 1 - d):
            rep.fail(f"sgn x V degree {d} != F({n - 1 - d})")
        if restrict(vc[d]) != low_char[d]:
            rep.fail(f"V degree {d} restricted to S_{n - 1} != U^{n - 1} degree {d}")


def verify_v_identities(n: int, ctx: Context, rep: CheckReport):
    if n < 3:
        rep.status = SKIPPED
        return
    fails = wm.v_identity_check(n)
    rep.info["failures"] = {k: len(v) for k, v in fails.items()}
    for ident, tuples in fails.items():
        for t in tuples[:10]:
            rep.fail(f"identity ({ident}) fails at {t}")


def verify_cycle_bases(n: int, ctx: Context, rep: CheckReport):
    """u(w) and v(w) bases, and the straightening recursion against normal forms."""
    t = ot.build_normal_form(n, ot.U)
    for d in range(len(t.hilbert_function())):
        if not is_invertible(ot.u_basis_matrix(n, d)):
            rep.fail(f"u(w) matrix singular in degree {d}")
    if n < 2:
        return
    for d in range(wm.v_degrees(n)):
        if not is_invertible(wm.v_basis_matrix(n, d)):
            rep.fail(f"v(w) matrix singular in degree {d}")
    checked = 0
    for wp in symmetric_group(n - 1).elements:
        uw = ot.u_of_w(Permutation(tuple(wp) + (n,)))
        for i in range(1, n):
            prod = ot.ot_multiply(uw, ot.u(i, n, n))
            rhs = ot.OTElement(n, ot.U)
            for w, c in ot.straighten(wp, i).items():
                rhs = rhs + ot.u_of_w(w).scale(c)
            if prod != rhs:
                rep.fail(f"straightening u({list(wp)}) u_{i},{n} disagrees with normal form")
            for cyc in canonical_cycles(wp):
                if i in cyc and cyc.index(i) < len(cyc) - 1:
                    nxt = cyc[cyc.index(i) + 1]
                    w = ot.insert_after(wp, i)
                    lhs = ot.u_of_w(w)
                    right = ot.ot_multiply(uw, ot.u(i, n, n) - ot.u(nxt, n, n))
                    if lhs != right:
                        rep.fail(f"u({list(w)}) != u({list(wp)}) (u_{i},{n} - u_{nxt},{n})")
                    checked += 1
    rep.info["straightening_instances"] = checked


def verify_quotient_comparison(n: int, ctx: Context, rep: CheckReport):
    """Informational: the quotient M_n against sgn x F under both index readings."""
    if n < 2:
        rep.status = SKIPPED
        return
    mc = ctx.M_char()
    readings = {"n-j": lambda j: n - j, "n-1-j": lambda j: n - 1 - j}
    # degrees 0..n-1 cover every nonzero piece on either side; F is zero off 1..n-1
    matches = {name: [sgn_twist(mc[j]) == ctx.F(idx(j)) for j in range(n)]
               for name, idx in readings.items()}
    rep.info["hilbert"] = [int(x) for x in mc.hilbert_series()]
    rep.info["matches"] = matches
    rep.info["matching_readings"] = [k for k, v in matches.items() if all(v)]
    rep.info["degrees"] = {j: _mult_label(sgn_twist(mc[j])) for j in range(len(mc))}
    if n >= 3:
        q = wm.quadratic_relations(n)
        rep.info["quadratic"] = {
            "sym2_dim": q["sym2_dim"], "degree_one_iso": q["degree_one_iso"],
            "dim_R_V": q["dim_R_V"], "dim_R_M": q["dim_R_M"],
            "dim_intersection": q["dim_intersection"],
            "R_V": _mult_label(q["char_R_V"]), "R_M": _mult_label(q["char_R_M"]),
            "same_subspace": q["dim_intersection"] == q["dim_R_V"] == q["dim_R_M"],
        }
    if not rep.info["matching_readings"]:
        rep.fail("no index reading matches in every degree")


FUNCS = {
    "eulerian": verify_eulerian,
    "lift-idempotents": verify_lift_idempotents,
    "graded-factorization": verify_graded_factorization,
    "restriction-induction": verify_restriction_induction,
    "reflection-tensor": verify_reflection_tensor,
    "u-algebra": verify_u_algebra,
    "u-characters": verify_u_characters,
    "subalgebra": verify_subalgebra,
    "v-identities": verify_v_identities,
    "cycle-bases": verify_cycle_bases,
    "quotient-comparison": verify_quotient_comparison,
}


def run_check(check: str, n: int, ctx: Context) -> CheckReport:
    rep = CheckReport(check, n, informational=check in INFORMATIONAL)
    start = time.perf_counter()
    try:
        FUNCS[check](n, ctx, rep)
    except Exception as exc:  # a crash is a failed check, named in the report
        rep.fail(f"{type(exc).__name__}: {exc}")
    rep.elapsed = time.perf_counter() - start
    return rep


def run_n(n: int, checks, long: bool = False, cache_dir=None) -> list[CheckReport]:
    """All requested checks for one n, in dependency order."""
    ctx = Context(n, Cache(cache_dir))
    out = []
    for check in CHECKS:
        if check not in checks:
            continue
        if n >= LONG_N and not long:
            rep = CheckReport(check, n, SKIPPED, informational=check in INFORMATIONAL)
            rep.info["reason"] = f"n={n} needs the long-run flag"
            out.append(rep)
            continue
        out.append(run_check(check, n, ctx))
    return out


def run_all(ns, checks=None, long: bool = False, cache_dir=None, jobs: int = 1):
    """Run the suite; returns (exit code, reports).  Informational checks never fail the run."""
    checks = list(CHECKS) if checks is None else list(checks)
    unknown = [c for c in checks if c not in FUNCS]
    if unknown:
        raise ValueError(f"unknown checks: {unknown}")
    ns = list(ns)
    if jobs > 1 and len(ns) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(run_n, ns, [checks] * len(ns), [long] * len(ns),
                                  [cache_dir] * len(ns)))
    else:
        parts = [run_n(n, checks, long, cache_dir) for n in ns]
    reports = [r for part in parts for r in part]
    code = int(any(r.status == FAIL and not r.informational for r in reports))
    return code, reports


# report formats

def format_jsonl(reports) -> str:
    return "".join(r.to_json() + "\n" for r in reports)


def format_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["check", "n", "status", "informational", "witnesses", "elapsed"])
    for r in reports:
        w.writerow([r.check, r.n, r.status, int(r.informational), " | ".join(r.witnesses),
                    f"{r.elapsed:.3f}"])
    return buf.getvalue()


def format_summary(reports) -> str:
    width = max([len(c) for c in CHECKS] + [5])
    lines = [f"{'check':<{width}}  {'n':>2}  {'status':<14}  time"]
    for r in reports:
        status = r.status + (" (info)" if r.informational else "")
        lines.append(f"{r.check:<{width}}  {r.n:>2}  {status:<14}  {r.elapsed:6.2f}s")
        if r.informational and "matching_readings" in r.info:
            lines.append(f"{'':<{width}}      matching readings: {', '.join(r.info['matching_readings']) or 'none'}")
        for w in r.witnesses[:3]:
            lines.append(f"{'':<{width}}      {w}")
    failed = sum(1 for r in reports if r.status == FAIL and not r.informational)
    lines.append(f"{len(reports)} reports, {failed} failing")
    return "\n".join(lines) + "\n"
