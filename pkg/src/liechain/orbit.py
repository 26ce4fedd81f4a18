"""Orbit-method pipeline for solvable algebras.

Stabilizers, ideal flags, Vergne polarizations, the Dixmier ideals
I(f) = ker of the twisted induced module, and executable versions of the
kernel inclusions used for nilpotent and solvable algebras.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import sympy

from .enveloping import TruncatedIdeal, UElement, enveloping, wedge_truncated
from .lie import (Functional, LieAlgebra, LieError, Subspace, nilradical, subalgebra)
from .linalg import Echelon, Vec, add_into, nullspace
from .representations import (InducedModule, Module, MatrixRep, TensorModule, certification_bound,
                              central_character, kernel_truncated, twist_element, weakly_contains)


class NoIdealFlag(LieError):
    pass


class CheckFailed(LieError):
    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.report = report


class NoWitness(CheckFailed):
    pass


def functional(g: LieAlgebra, values) -> Functional:
    """Functional from a label map or a coordinate sequence."""
    if isinstance(values, Functional):
        return values
    if isinstance(values, dict):
        return Functional(g, tuple(Fraction(values.get(l, 0)) for l in g.labels))
    return Functional(g, tuple(Fraction(v) for v in values))


def stabilizer(g: LieAlgebra, f: Functional, within: Subspace | None = None) -> Subspace:
    """Radical of B_f(x, y) = f([x, y]) on ``within`` (default: all of g)."""
    s = within if within is not None else g.whole()
    basis = list(s.basis)
    cols = []
    for x in basis:
        col = {}
        for j, y in enumerate(basis):
            val = f(g.bracket(x, y))
            if val:
                col[j] = val
        cols.append(col)
    out = []
    for combo in nullspace(cols):
        v: Vec = {}
        for k, c in combo.items():
            add_into(v, basis[k], c)
        out.append(v)
    return Subspace(g, out)


def _quotient_matrices(g: LieAlgebra, I: Subspace):
    comp = I.complement()
    pos = {c: k for k, c in enumerate(comp)}
    mats = []
    for i in range(g.dim):
        m = [[Fraction(0)] * len(comp) for _ in comp]
        for k, c in enumerate(comp):
            image = I.reduce(g.bracket({i: Fraction(1)}, {c: Fraction(1)}))
            for r, x in image.items():
                m[pos[r]][k] = x
        mats.append(m)
    return comp, mats


def _rational_eigenvalues(m) -> list[Fraction]:
    if not m:
        return []
    M = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in m])
    lam = sympy.Symbol("lam")
    roots = sympy.roots(M.charpoly(lam).as_expr(), lam, filter="Q")
    return sorted(Fraction(int(r.p), int(r.q)) for r in roots)


def _kernel(m, shift: Fraction, within: list[Vec]) -> list[Vec]:
    n = len(m)
    cols = []
    for v in within:
        col = {}
        for r in range(n):
            x = sum((m[r][k] * c for k, c in v.items()), Fraction(0)) - shift * v.get(r, 0)
            if x:
                col[r] = x
        cols.append(col)
    out = []
    for combo in nullspace(cols):
        w: Vec = {}
        for j, c in combo.items():
            add_into(w, within[j], c)
        out.append(w)
    return out


def _joint_eigenspace(mats, choice: str):
    n = len(mats[0])
    start = [{k: Fraction(1)} for k in range(n)]

    def rec(i, space):
        if i == len(mats):
            return space
        for lam in _rational_eigenvalues(mats[i]):
            sub = _kernel(mats[i], lam, space)
            if sub:
                found = rec(i + 1, sub)
                if found:
                    return found
        return None

    space = rec(0, start)
    if not space:
        return None
    e = Echelon()
    for v in space:
        e.add(v)
    rows = e.rows()
    return rows[0] if choice == "first" else rows[-1]


def ideal_flag(g: LieAlgebra, choice: str = "last") -> list[Subspace]:
    """Full flag 0 = g_0 ⊂ g_1 ⊂ … ⊂ g_n = g of ideals of g.

    Each step adjoins a common eigenvector of ad(g) on g/g_k; ``choice``
    picks the first or last echelon vector of the joint eigenspace, which
    gives two (usually different) deterministic flags.
    """
    if choice not in ("first", "last"):
        raise LieError("flag choice must be 'first' or 'last'")
    if not g.is_solvable:
        raise NoIdealFlag(f"{g.name} is not solvable: no flag of ideals")
    flag = [Subspace(g, [])]
    current = flag[0]
    while current.dim < g.dim:
        comp, mats = _quotient_matrices(g, current)
        v = _joint_eigenspace(mats, choice)
        if v is None:
            raise NoIdealFlag(f"no rational common eigenvector on {g.name}/{current!r}")
        lifted = {comp[k]: c for k, c in v.items()}
        current = current + Subspace(g, [lifted])
        if not current.is_ideal():
            raise NoIdealFlag("flag step is not an ideal")
        flag.append(current)
    return flag


@dataclass(frozen=True)
class Polarization:
    g: LieAlgebra
    f: Functional
    h: Subspace
    flag: tuple

    def verify(self) -> None:
        """Re-check subalgebra, subordinate and dimension conditions from scratch."""
        g, f, h = self.g, self.f, self.h
        if not h.is_subalgebra():
            raise LieError("polarization is not a subalgebra")
        for x in h.basis:
            for y in h.basis:
                if f(g.bracket(x, y)):
                    raise LieError("polarization is not subordinate")
        gf = stabilizer(g, f)
        if 2 * h.dim != g.dim + gf.dim:
            raise LieError("polarization has the wrong dimension")


def vergne_polarization(g: LieAlgebra, f, choice: str = "last") -> Polarization:
    f = functional(g, f)
    flag = ideal_flag(g, choice)
    h = Subspace(g, [])
    for gi in flag[1:]:
        h = h + stabilizer(g, f, within=gi)
    p = Polarization(g, f, h, tuple(flag))
    p.verify()
    return p


@dataclass
class DixmierIdeal:
    f: Functional
    polarization: Polarization
    ideal: TruncatedIdeal
    module: InducedModule


def twisted_module(g: LieAlgebra, f, L: int | None = None, d: int = 2, choice: str = "last") -> InducedModule:
    f = functional(g, f)
    pol = vergne_polarization(g, f, choice)
    L = certification_bound(g, d) if L is None else L
    return InducedModule(g, pol.h, f.restrict(pol.h), twist=True, level=L,
                         name=f"I({f.format()})")


def dixmier_ideal(g: LieAlgebra, f, d: int, L: int | None = None, strict: bool = True,
                  choice: str = "last") -> DixmierIdeal:
    f = functional(g, f)
    pol = vergne_polarization(g, f, choice)
    L = certification_bound(g, d) if L is None else L
    M = InducedModule(g, pol.h, f.restrict(pol.h), twist=True, level=L, name=f"I({f.format()})")
    K = kernel_truncated(M, d, strict=strict)
    K.label = f"I({f.format()})"
    return DixmierIdeal(f, pol, K, M)


# -- relation checks --------------------------------------------------------------

@dataclass
class RelationReport:
    kind: str
    instance: dict
    holds: bool
    certified: bool
    d: int
    L: object
    witness: str | None = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "instance": self.instance, "holds": self.holds,
               "certified": self.certified, "truncation": {"d": self.d, "L": self.L}}
        if self.witness is not None:
            out["witness"] = self.witness
        out.update(self.extra)
        return out


def _fmt(f: Functional) -> dict:
    g = f.domain
    return {l: str(c) for l, c in zip(g.labels, f.coords) if c}


def _embed_subalgebra(U, vectors: Sequence[Vec], sub, d: int):
    """Images in U(g) of the PBW basis of U(sub)_{<=d}, sub spanned by ``vectors``."""
    Us = enveloping(sub)
    gens = [U.from_vec(v) for v in vectors]
    images = []
    for m in Us.filtration_basis(d):
        u = U.one()
        for k, e in enumerate(m):
            for _ in range(e):
                u = u * gens[k]
        images.append(u)
    return Us, images


def _finish(report: RelationReport, raise_on_failure: bool):
    if raise_on_failure and not report.holds:
        raise CheckFailed(f"{report.kind} fails: witness {report.witness}", report)
    return report


def check_resnil(g, f, sub: Subspace, d=2, L=None, raise_on_failure=True) -> RelationReport:
    """I(f) ∩ U(g') ⊆ I(f|g') for a subalgebra g' of a nilpotent g."""
    f = functional(g, f)
    I = dixmier_ideal(g, f, d, L, strict=False)
    gs = subalgebra(g, sub)
    fs = Functional(gs, f.restrict(sub).coords)
    Is = dixmier_ideal(gs, fs, d, L, strict=False)
    Us, images = _embed_subalgebra(I.ideal.U, sub.basis, gs, d)
    U = I.ideal.U
    rema = [I.ideal.reduce(U.coords(u, d)) for u in images]
    witness, ok = None, True
    for combo in nullspace(rema):
        # combo is an element of I(f) ∩ U(g'), in U(g') coordinates
        if not Is.ideal.contains(Us.from_coords(combo, d)):
            ok, witness = False, Us.from_coords(combo, d).text()
            break
    rep = RelationReport("resnil", {"algebra": g.name, "f": _fmt(f), "subalgebra": sub.labels()},
                         ok, I.ideal.certified and Is.ideal.certified, d, I.module.level, witness)
    return _finish(rep, raise_on_failure)


def check_tensnil(g, f, f2, d=2, L=None, raise_on_failure=True) -> RelationReport:
    """ker(ρ_f ⊗ ρ_f') = I(f) ∧ I(f') ⊆ I(f + f'), plus central-character additivity."""
    f, f2 = functional(g, f), functional(g, f2)
    A, B = dixmier_ideal(g, f, d, L, strict=False), dixmier_ideal(g, f2, d, L, strict=False)
    C = dixmier_ideal(g, f + f2, d, L, strict=False)
    W = wedge_truncated(A.ideal, B.ideal, d)
    ok = W <= C.ideal
    witness = None if ok else W.first_missing(C.ideal)
    extra = {}
    z = g.center()
    if z.dim:
        T = TensorModule(A.module, B.module, probe_cap=6)
        chi = central_character(T)
        want = tuple(f(v) + f2(v) for v in z.basis)
        extra["central_character"] = [str(c) for c in chi.coords]
        if chi.coords != want:
            ok = False
            witness = witness or f"central character {chi.coords} != {want}"
    rep = RelationReport("tensnil", {"algebra": g.name, "f": _fmt(f), "f2": _fmt(f2)}, ok,
                         A.ideal.certified and B.ideal.certified and C.ideal.certified, d,
                         A.module.level, _text(witness), extra)
    return _finish(rep, raise_on_failure)


def check_shift(g, f, lam, d=2, L=None, raise_on_failure=True) -> RelationReport:
    """ρ_{f+λ} ⪯ ρ_f ⊗ λ for λ killing [g, g]."""
    f, lam = functional(g, f), functional(g, lam)
    Mf = twisted_module(g, f, L, d)
    Mfl = twisted_module(g, f + lam, L, d)
    rho = TensorModule(Mf, MatrixRep.from_functional(g, lam))
    rep_c = weakly_contains(Mfl, rho, d)
    rep = RelationReport("shift", {"algebra": g.name, "f": _fmt(f), "lambda": _fmt(lam)},
                         rep_c.holds, rep_c.certified, d, Mf.level,
                         None if rep_c.witness is None else rep_c.witness.text())
    return _finish(rep, raise_on_failure)


def check_antipode(g, f, d=2, L=None, raise_on_failure=True) -> RelationReport:
    """I(-f) = S(I(f))."""
    f = functional(g, f)
    A = dixmier_ideal(g, f, d, L, strict=False)
    B = dixmier_ideal(g, -f, d, L, strict=False)
    S = A.ideal.antipode()
    ok = S == B.ideal
    witness = None
    if not ok:
        witness = S.first_missing(B.ideal) or B.ideal.first_missing(S)
    rep = RelationReport("antipode", {"algebra": g.name, "f": _fmt(f)}, ok,
                         A.ideal.certified and B.ideal.certified, d, A.module.level, _text(witness),
                         {"ideal": A.ideal.texts(), "antipode_image": S.texts()})
    return _finish(rep, raise_on_failure)


def nilradical_annihilator(g: LieAlgebra) -> list[Functional]:
    """Basis of n^⊥ ⊆ g*."""
    n = nilradical(g)
    cols = [{k: v.get(i, Fraction(0)) for k, v in enumerate(n.basis) if v.get(i)} for i in range(g.dim)]
    return [Functional(g, tuple(c.get(i, Fraction(0)) for i in range(g.dim))) for c in nullspace(cols)]


def search_twist(W: TruncatedIdeal, target: TruncatedIdeal, lam_basis: list[Functional]):
    """Find λ in span(lam_basis) with τ_λ(W) ⊆ target; returns a Functional or None.

    τ_λ(x) = x + λ(x) is the automorphism through which u acts on M ⊗ λ,
    so u ∈ ker(M ⊗ λ) iff τ_λ(u) ∈ ker M.
    """
    g = W.g
    U = W.U
    if not lam_basis:
        ok = W <= target
        return Functional(g, (Fraction(0),) * g.dim) if ok else None
    ts = sympy.symbols(f"t0:{len(lam_basis)}")
    lam_sym = [sum((ts[k] * sympy.Rational(b.coords[i].numerator, b.coords[i].denominator)
                    for k, b in enumerate(lam_basis)), sympy.Integer(0)) for i in range(g.dim)]
    eqs = []
    for u in W.basis:
        expr = _symbolic_twist(u, lam_sym)
        # reduce modulo target: membership is linear in the coefficients
        rem = _symbolic_reduce(target, expr, W.degree)
        eqs += [sympy.expand(e) for e in rem.values() if sympy.expand(e) != 0]
    if not eqs:
        sol = {}
    else:
        sols = sympy.solve(eqs, ts, dict=True)
        rational = [s for s in sols if all(v.free_symbols or v.is_rational for v in s.values())]
        if not rational:
            return None
        sol = rational[0]
    vals = []
    for t in ts:
        v = sympy.sympify(sol.get(t, 0)).subs({s: 0 for s in ts})
        if not v.is_rational:
            return None
        vals.append(Fraction(int(v.p), int(v.q)))
    coords = [sum((c * b.coords[i] for c, b in zip(vals, lam_basis)), Fraction(0)) for i in range(g.dim)]
    lam = Functional(g, tuple(coords))
    twisted = TruncatedIdeal.from_elements(U, W.degree, [twist_element(u, coords) for u in W.basis])
    return lam if twisted <= target else None


def _symbolic_twist(u: UElement, lam_sym):
    """τ_λ(u) with symbolic λ, as {mono: sympy expr}."""
    from math import comb
    from .enveloping import _bump
    out: dict = {}
    for m, c in u.terms.items():
        acc = {u.U.unit_mono: sympy.Rational(c.numerator, c.denominator)}
        for i, e in enumerate(m):
            if not e:
                continue
            nxt: dict = {}
            for mono, cm in acc.items():
                for k in range(e + 1):
                    key = _bump(mono, i, k)
                    nxt[key] = nxt.get(key, 0) + cm * comb(e, k) * lam_sym[i] ** (e - k)
            acc = nxt
        for mono, cm in acc.items():
            out[mono] = out.get(mono, 0) + cm
    return out


def _symbolic_reduce(target: TruncatedIdeal, expr: dict, d: int) -> dict:
    """Remainder of a symbolic element modulo the echelon basis of ``target``."""
    idx = target.U.index_of(d)
    r = {idx[m]: c for m, c in expr.items() if c != 0}
    # rows are fully reduced, so pivots can be cleared in any order
    for piv, row in target._ech.pivots.items():
        c = r.get(piv)
        if c is None or c == 0:
            continue
        for col, x in row.items():
            r[col] = r.get(col, 0) - c * sympy.Rational(x.numerator, x.denominator)
    return {k: v for k, v in r.items() if sympy.expand(v) != 0}


def check_indrestw(g, f, f2, d=2, L=None, raise_on_failure=True) -> RelationReport:
    """ker(ρ_f ⊗ ρ_f') ⊆ ker(ρ_{f+f'} ⊗ λ) for some λ annihilating the nilradical."""
    f, f2 = functional(g, f), functional(g, f2)
    A, B = dixmier_ideal(g, f, d, L, strict=False), dixmier_ideal(g, f2, d, L, strict=False)
    C = dixmier_ideal(g, f + f2, d, L, strict=False)
    W = wedge_truncated(A.ideal, B.ideal, d)
    lam = search_twist(W, C.ideal, nilradical_annihilator(g))
    inst = {"algebra": g.name, "f": _fmt(f), "f2": _fmt(f2)}
    cert = A.ideal.certified and B.ideal.certified and C.ideal.certified
    if lam is None:
        rep = RelationReport("indrestw", inst, False, cert, d, A.module.level,
                             "no twist λ vanishing on the nilradical realizes the inclusion")
        if raise_on_failure:
            raise NoWitness("indrestw: no admissible λ", rep)
        return rep
    rep = RelationReport("indrestw", inst, True, cert, d, A.module.level, None,
                         {"lambda": _fmt(lam)})
    return rep


def _text(w):
    if w is None:
        return None
    return w.text() if isinstance(w, UElement) else str(w)


KINDS = ("resnil", "tensnil", "shift", "indrestw", "antipode")


def random_functional(g: LieAlgebra, rng: random.Random, nonzero_on=None, span: int = 3) -> Functional:
    def q():
        return Fraction(rng.randint(-span, span), rng.randint(1, 2))
    coords = [q() for _ in range(g.dim)]
    f = Functional(g, tuple(coords))
    if nonzero_on is not None:
        while any(not f(v) for v in nonzero_on.basis):
            f = Functional(g, tuple(q() for _ in range(g.dim)))
    return f


def character_functional(g: LieAlgebra, rng: random.Random, span: int = 3) -> Functional:
    """Random λ vanishing on [g, g]."""
    dg = g.derived_series()[1] if len(g.derived_series()) > 1 else Subspace(g, [])
    basis = []
    cols = [{k: v.get(i) for k, v in enumerate(dg.basis) if v.get(i)} for i in range(g.dim)]
    for c in nullspace(cols):
        basis.append(c)
    coords = [Fraction(0)] * g.dim
    for c in basis:
        t = Fraction(rng.randint(-span, span), rng.randint(1, 2))
        for i, x in c.items():
            coords[i] += t * x
    return Functional(g, tuple(coords))


def check_relation(kind: str, g: LieAlgebra, *, samples: int = 1, d: int = 2, L: int | None = None,
                   seed: int = 0, raise_on_failure: bool = True, sub: Subspace | None = None) -> list[RelationReport]:
    """Run ``samples`` random instances of one relation kind on g."""
    if kind not in KINDS:
        raise LieError(f"unknown relation kind {kind!r}; expected one of {', '.join(KINDS)}")
    rng = random.Random(seed)
    z = g.center()
    out = []
    for _ in range(samples):
        f = random_functional(g, rng, nonzero_on=z if z.dim else None)
        if kind == "resnil":
            s = sub if sub is not None else _default_subalgebra(g)
            out.append(check_resnil(g, f, s, d, L, raise_on_failure))
        elif kind == "tensnil":
            out.append(check_tensnil(g, f, random_functional(g, rng), d, L, raise_on_failure))
        elif kind == "indrestw":
            out.append(check_indrestw(g, f, random_functional(g, rng), d, L, raise_on_failure))
        elif kind == "shift":
            out.append(check_shift(g, f, character_functional(g, rng), d, L, raise_on_failure))
        else:
            out.append(check_antipode(g, f, d, L, raise_on_failure))
    return out


def _default_subalgebra(g: LieAlgebra) -> Subspace:
    """Largest proper member of the chosen ideal flag (an ideal, hence a subalgebra)."""
    return ideal_flag(g)[-2] if g.dim > 1 else g.whole()


def can_surjectivity_witness(g: LieAlgebra, f0, level: int = 6) -> Module:
    """A module whose central character is the given functional on the center."""
    z = g.center()
    coords = tuple(Fraction(c) for c in (f0.coords if isinstance(f0, Functional) else f0))
    if len(coords) != z.dim:
        raise LieError(f"need {z.dim} values on the center, got {len(coords)}")
    if z.dim == 0:
        return MatrixRep.trivial(g)
    if z.dim == g.dim:
        # the echelon basis of the whole space is the standard one
        return MatrixRep.from_functional(g, coords)
    return InducedModule(g, z, Functional(z, coords), level=level, name="Ind from the center")
