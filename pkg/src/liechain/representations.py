"""Concrete U(g)-modules and their kernels in U(g), truncated by degree.

Every module exposes the action of the basis of g on its own basis vectors;
elements of U(g) act through their PBW monomials.  Infinite modules
(induced, shift) are truncated at a level, and only vectors far enough below
the truncation are used as probes.

Kernels are computed from probes, so they always contain the true slice
``ker ∩ U_{<=d}``.  A probe kernel K is *certified* equal to the true slice
when either the module is finite-dimensional (all vectors probed), or K is
stable under ad(g) and kills a generating set of the module: then for every
u in K and y in U(g), ``u y v = y u v - [y, u] v`` vanishes by induction on
the degree of y.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .enveloping import Enveloping, TruncatedIdeal, UElement, _first, _bump, enveloping
from .lie import (Functional, LieAlgebra, LieError, NotASubalgebra, Subspace, change_basis,
                  subalgebra, theta)
from .linalg import (Echelon, Vec, add_into, identity, kron, mat_add, mat_mul, mat_scale,
                     nullspace, parse_rational, transpose)


class LevelExceeded(LieError):
    pass


class InsufficientLevel(LieError):
    pass


class NotSubordinate(LieError):
    pass


class NotScalarAction(LieError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class Module:
    """Base class: a left U(g)-module with a distinguished basis."""

    finite = False
    level = None

    def __init__(self, g: LieAlgebra):
        self.g = g
        self.U: Enveloping = enveloping(g)
        self._gen_cache: dict = {}
        self._mono_cache: dict = {}

    # subclasses implement _act_gen(i, key) -> Vec, probes(d), generators()

    def act_gen(self, i: int, key) -> Vec:
        ck = (i, key)
        hit = self._gen_cache.get(ck)
        if hit is None:
            hit = self._gen_cache[ck] = self._act_gen(i, key)
        return hit

    def act_gen_vec(self, i: int, v: Vec) -> Vec:
        out: Vec = {}
        for k, c in v.items():
            add_into(out, self.act_gen(i, k), c)
        return out

    def act_mono(self, m, key) -> Vec:
        ck = (m, key)
        hit = self._mono_cache.get(ck)
        if hit is None:
            j = _first(m)
            if j == len(m):
                hit = {key: Fraction(1)}
            else:
                hit = self.act_gen_vec(j, self.act_mono(_bump(m, j, -1), key))
            self._mono_cache[ck] = hit
        return hit

    def act(self, u: UElement, v: Vec) -> Vec:
        if u.U is not self.U:
            raise LieError("element and module live over different algebras")
        out: Vec = {}
        for key, c in v.items():
            for m, cm in u.terms.items():
                add_into(out, self.act_mono(m, key), c * cm)
        return out

    def basis_vector(self, key) -> Vec:
        return {key: Fraction(1)}

    def generators(self):
        return None

    def probes(self, d: int) -> list:
        raise NotImplementedError

    def describe(self) -> str:
        return type(self).__name__


# -- finite-dimensional modules -----------------------------------------------

class MatrixRep(Module):
    """Representation by n×n rational matrices, one per basis element of g."""

    finite = True

    def __init__(self, g: LieAlgebra, images, check: bool = True, name: str = ""):
        super().__init__(g)
        self.images = [[[Fraction(x) for x in row] for row in m] for m in images]
        if len(self.images) != g.dim:
            raise LieError(f"need {g.dim} matrices, got {len(self.images)}")
        self.n = len(self.images[0]) if self.images else 0
        if self.n == 0:
            raise LieError("zero representation is not unital; refused")
        for m in self.images:
            if len(m) != self.n or any(len(r) != self.n for r in m):
                raise LieError("representation matrices must be square of equal size")
        self.name = name
        if check:
            self.check()

    def check(self):
        for i in range(self.g.dim):
            for j in range(i + 1, self.g.dim):
                lhs = self.image_of(self.g.c(i, j))
                a, b = self.images[i], self.images[j]
                rhs = [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(mat_mul(a, b), mat_mul(b, a))]
                if lhs != rhs:
                    raise LieError(f"bracket relation fails for ({self.g.labels[i]}, {self.g.labels[j]})")

    def image_of(self, v: Vec):
        out = [[Fraction(0)] * self.n for _ in range(self.n)]
        for i, c in v.items():
            out = mat_add(out, mat_scale(self.images[i], c))
        return out

    def _act_gen(self, i, k) -> Vec:
        m = self.images[i]
        return {r: m[r][k] for r in range(self.n) if m[r][k]}

    def matrix_of(self, u: UElement):
        cols = [self.act(u, {k: Fraction(1)}) for k in range(self.n)]
        return [[cols[k].get(r, Fraction(0)) for k in range(self.n)] for r in range(self.n)]

    def probes(self, d):
        return list(range(self.n))

    def generators(self):
        return [{k: Fraction(1)} for k in range(self.n)]

    def describe(self):
        return self.name or f"matrix rep of dim {self.n}"

    @classmethod
    def from_functional(cls, g: LieAlgebra, values, name: str = "") -> "MatrixRep":
        """The 1-dimensional representation x ↦ λ(x); λ must kill [g, g]."""
        vals = [Fraction(v) for v in (values.coords if isinstance(values, Functional) else values)]
        for i in range(g.dim):
            for j in range(i + 1, g.dim):
                if sum((vals[k] * c for k, c in g.c(i, j).items()), Fraction(0)):
                    raise NotSubordinate(f"functional does not vanish on [{g.labels[i]}, {g.labels[j]}]")
        return cls(g, [[[v]] for v in vals], check=False, name=name or f"λ={[str(v) for v in vals]}")

    @classmethod
    def trivial(cls, g: LieAlgebra) -> "MatrixRep":
        return cls.from_functional(g, [0] * g.dim, name="trivial")

    @classmethod
    def adjoint(cls, g: LieAlgebra) -> "MatrixRep":
        return cls(g, [g.ad_matrix({i: Fraction(1)}) for i in range(g.dim)], name="adjoint")

    @classmethod
    def standard(cls, g: LieAlgebra) -> "MatrixRep":
        mats = g._cache.get("matrices")
        if mats is None:
            raise LieError(f"{g.name} has no defining matrix realization")
        return cls(g, mats, name="standard")


def dual(rho: MatrixRep) -> MatrixRep:
    """Contragredient: x ↦ -ρ(x)^T."""
    return MatrixRep(rho.g, [mat_scale(transpose(m), -1) for m in rho.images], check=False,
                     name=f"dual({rho.describe()})")


def tensor(r1: MatrixRep, r2: MatrixRep) -> MatrixRep:
    """Tensor product through the coproduct: x ↦ ρ1(x)⊗I + I⊗ρ2(x)."""
    if r1.g is not r2.g:
        raise LieError("tensor of representations of different algebras")
    i1, i2 = identity(r1.n), identity(r2.n)
    mats = [mat_add(kron(a, i2), kron(i1, b)) for a, b in zip(r1.images, r2.images)]
    return MatrixRep(r1.g, mats, check=False, name=f"({r1.describe()})⊗({r2.describe()})")


def restrict(rho: MatrixRep, h: Subspace, hs: LieAlgebra | None = None):
    """Restriction to a subalgebra h; returns (subalgebra, representation).

    Pass ``hs`` (from a previous call) to restrict several representations
    onto the same subalgebra object.
    """
    if h.parent is not rho.g:
        raise LieError("subspace of a different algebra")
    if not h.is_subalgebra():
        raise NotASubalgebra(f"{h!r} is not a subalgebra")
    hs = subalgebra(rho.g, h) if hs is None else hs
    return hs, MatrixRep(hs, [rho.image_of(v) for v in h.basis], check=False,
                         name=f"{rho.describe()}|{hs.name}")


def direct_sum_matrix(reps: Sequence[MatrixRep]) -> MatrixRep:
    if not reps:
        raise LieError("empty direct sum refused: there is no zero module")
    g = reps[0].g
    n = sum(r.n for r in reps)
    mats = []
    for i in range(g.dim):
        m = [[Fraction(0)] * n for _ in range(n)]
        off = 0
        for r in reps:
            for a in range(r.n):
                for b in range(r.n):
                    m[off + a][off + b] = r.images[i][a][b]
            off += r.n
        mats.append(m)
    return MatrixRep(g, mats, check=False, name=" ⊕ ".join(r.describe() for r in reps))


# -- infinite modules ---------------------------------------------------------

class ShiftModule(Module):
    """Polynomials in t up to degree N for the algebra [a, b] = b.

    ``a`` multiplies by t and ``b`` shifts p(t) ↦ p(t - 1).  This is the
    module U/U(b - 1), generated by the constant polynomial 1.
    """

    def __init__(self, g: LieAlgebra, N: int, mult: str = "a", shift: str = "b"):
        super().__init__(g)
        self.ia, self.ib = g.index(mult), g.index(shift)
        if g.c(self.ia, self.ib) != {self.ib: 1}:
            raise LieError("shift module needs [a, b] = b")
        self.N = N
        self.level = N

    def _act_gen(self, i, k) -> Vec:
        if i == self.ia:
            if k + 1 > self.N:
                raise LevelExceeded(f"t^{k + 1} beyond truncation N={self.N}")
            return {k + 1: Fraction(1)}
        # (t - 1)^k
        return {j: Fraction(comb(k, j) * (-1) ** (k - j)) for j in range(k + 1)}

    def probes(self, d):
        return list(range(max(self.N - d, -1) + 1))

    def generators(self):
        return [{0: Fraction(1)}]

    def check_bracket(self) -> bool:
        """(a∘b - b∘a) p = b p on t^k for k <= N - 1."""
        for k in range(self.N):
            ab = self.act_gen_vec(self.ia, self.act_gen(self.ib, k))
            ba = self.act_gen_vec(self.ib, self.act_gen(self.ia, k))
            if add_into(dict(ab), ba, -1) != self.act_gen(self.ib, k):
                return False
        return True

    def describe(self):
        return f"shift module (N={self.N})"


class InducedModule(Module):
    """U(g) ⊗_{U(h)} W, truncated at complement degree ``level``.

    The basis is (c^a ⊗ w) with c a complement basis of h (listed first in an
    adapted PBW order) and w a basis of W.  ``W`` is a functional on h (a
    1-dimensional representation) or a :class:`MatrixRep` of the subalgebra h
    in its echelon basis.  With ``twist`` the inducing representation is
    shifted by x ↦ ½ tr_{g/h} ad x first.
    """

    def __init__(self, g: LieAlgebra, h: Subspace, W, twist: bool = False, level: int = 6,
                 complement: Sequence[Vec] | None = None, name: str = ""):
        super().__init__(g)
        if h.parent is not g:
            raise LieError("inducing subalgebra belongs to a different algebra")
        if not h.is_subalgebra():
            raise NotASubalgebra(f"{h!r} is not a subalgebra")
        self.h = h
        self.twist = twist
        self.level = level
        self.name = name
        if complement is None:
            complement = [{i: Fraction(1)} for i in h.complement()]
        complement = [dict(v) for v in complement]
        if Subspace(g, list(h.basis) + complement).dim != g.dim or len(complement) + h.dim != g.dim:
            raise LieError("complement does not complete h to a basis")
        self.complement = complement
        self.m = len(complement)
        self.k = h.dim
        labels = [f"c{i}" for i in range(self.m)] + [f"h{i}" for i in range(self.k)]
        self.adapted = change_basis(g, complement + list(h.basis), labels=labels,
                                    name=f"{g.name}[adapted]")
        self.Ua = enveloping(self.adapted)
        from .lie import _coords_solver
        solve = _coords_solver(complement + list(h.basis))
        self._gen_coords = [solve({i: Fraction(1)}) for i in range(g.dim)]
        th = theta(g, h).coords if twist else (Fraction(0),) * self.k
        self.theta = th
        if isinstance(W, MatrixRep):
            if W.g.dim != self.k:
                raise LieError("inducing representation has the wrong dimension")
            self.w_dim = W.n
            self._h_images = [mat_add(img, mat_scale(identity(W.n), t)) for img, t in zip(W.images, th)]
            self.functional = None
        else:
            if not isinstance(W, Functional):
                W = Functional(h, tuple(W))
            if W.domain is not h and not (isinstance(W.domain, Subspace) and W.domain == h):
                W = Functional(h, W.coords)
            hh = h.bracket_with(h)
            for v in hh.basis:
                if W(v):
                    raise NotSubordinate(f"functional does not vanish on [h, h] (at {g.format_vec(v)})")
            self.functional = W
            self.w_dim = 1
            self._h_images = [[[c + t]] for c, t in zip(W.coords, th)]
        self._hpow: dict = {}

    def _h_power(self, beta):
        hit = self._hpow.get(beta)
        if hit is None:
            hit = identity(self.w_dim)
            for j, e in enumerate(beta):
                for _ in range(e):
                    hit = mat_mul(hit, self._h_images[j])
            self._hpow[beta] = hit
        return hit

    def _act_gen(self, i, key) -> Vec:
        a, w = key
        mono = a + (0,) * self.k
        out: Vec = {}
        for kk, c in self._gen_coords[i].items():
            for mm, cc in self.Ua.gen_times_mono(kk, mono).items():
                a2, beta = mm[:self.m], mm[self.m:]
                if sum(a2) > self.level:
                    raise LevelExceeded(f"action leaves level {self.level}")
                if any(beta):
                    hp = self._h_power(beta)
                    for w2 in range(self.w_dim):
                        x = hp[w2][w]
                        if x:
                            add_into(out, {(a2, w2): x}, c * cc)
                else:
                    add_into(out, {(a2, w): Fraction(1)}, c * cc)
        return out

    def probes(self, d):
        top = self.level - d
        if top < 0:
            return []
        from .enveloping import _monos_of_degree
        keys = []
        for lev in range(top + 1):
            for a in reversed(_monos_of_degree(self.m, lev)):
                for w in range(self.w_dim):
                    keys.append((a, w))
        return keys

    def generators(self):
        zero = (0,) * self.m
        return [{(zero, w): Fraction(1)} for w in range(self.w_dim)]

    def describe(self):
        if self.name:
            return self.name
        kind = "twisted-induced" if self.twist else "induced"
        return f"{kind} from {self.h!r} (level {self.level})"


def induce(g: LieAlgebra, h: Subspace, W, twist: bool = False, L: int = 6, **kw) -> InducedModule:
    return InducedModule(g, h, W, twist=twist, level=L, **kw)


class DirectSumModule(Module):
    def __init__(self, modules: Sequence[Module]):
        if not modules:
            raise LieError("empty direct sum refused: there is no zero module")
        g = modules[0].g
        if any(m.g is not g for m in modules):
            raise LieError("direct sum of modules over different algebras")
        super().__init__(g)
        self.parts = list(modules)
        self.finite = all(m.finite for m in modules)

    def _act_gen(self, i, key):
        s, k = key
        return {(s, k2): c for k2, c in self.parts[s].act_gen(i, k).items()}

    def probes(self, d):
        return [(s, k) for s, m in enumerate(self.parts) for k in m.probes(d)]

    def generators(self):
        out = []
        for s, m in enumerate(self.parts):
            gens = m.generators()
            if gens is None:
                return None
            out += [{(s, k): c for k, c in v.items()} for v in gens]
        return out

    def describe(self):
        return " ⊕ ".join(m.describe() for m in self.parts)


def direct_sum(modules: Sequence[Module]) -> Module:
    return DirectSumModule(modules)


class TensorModule(Module):
    """A ⊗ B with g acting by x ⊗ 1 + 1 ⊗ x.

    ``probe_cap`` limits the probes of each factor; the kernel stays a
    superset of the true slice, which is all a containment check needs on
    this side.
    """

    def __init__(self, A: Module, B: Module, probe_cap: int | None = None):
        if A.g is not B.g:
            raise LieError("tensor of modules over different algebras")
        super().__init__(A.g)
        self.A, self.B = A, B
        self.finite = A.finite and B.finite
        self.probe_cap = probe_cap

    def _act_gen(self, i, key):
        k1, k2 = key
        out = {(x, k2): c for x, c in self.A.act_gen(i, k1).items()}
        for y, c in self.B.act_gen(i, k2).items():
            add_into(out, {(k1, y): c})
        return out

    def probes(self, d):
        pa, pb = self.A.probes(d), self.B.probes(d)
        if self.probe_cap is not None and not self.finite:
            pa, pb = pa[:self.probe_cap], pb[:self.probe_cap]
        return [(a, b) for a in pa for b in pb]

    def generators(self):
        if self.finite:
            return [{(a, b): Fraction(1)} for a in self.A.probes(0) for b in self.B.probes(0)]
        return None

    def describe(self):
        return f"({self.A.describe()}) ⊗ ({self.B.describe()})"


# -- kernels ----------------------------------------------------------------------

def probe_kernel(M: Module, d: int, probes=None) -> TruncatedIdeal:
    U = M.U
    monos = U.filtration_basis(d)
    probes = M.probes(d) if probes is None else probes
    cols = []
    for m in monos:
        col: Vec = {}
        for p in probes:
            for k, c in M.act_mono(m, p).items():
                col[(p, k)] = c
        cols.append(col)
    return TruncatedIdeal(U, d, nullspace(cols), certified=False, probe_level=M.level)


def certify(M: Module, K: TruncatedIdeal) -> bool:
    if M.finite:
        return True
    gens = M.generators()
    if gens is None:
        return False
    for u in K.basis:
        for v in gens:
            if M.act(u, v):
                return False
    return K.is_ad_stable()


def kernel_truncated(M: Module, d: int, L: int | None = None, strict: bool = False) -> TruncatedIdeal:
    """Slice ker(M) ∩ U_{<=d}, with a certification flag.

    ``L`` caps the probe level (defaults to the module's own truncation).
    In strict mode an uncertifiable kernel raises :class:`InsufficientLevel`.
    """
    probes = None
    if L is not None and not M.finite:
        if M.level is not None and L > M.level:
            raise LevelExceeded(f"probe level {L} above module truncation {M.level}")
        probes = [p for p in M.probes(d) if _key_level(M, p) <= L - d]
    K = probe_kernel(M, d, probes)
    K.certified = certify(M, K)
    K.probe_level = L if L is not None else M.level
    if strict and not K.certified:
        raise InsufficientLevel(f"kernel of {M.describe()} at degree {d} could not be certified")
    return K


def _key_level(M: Module, key) -> int:
    if isinstance(M, InducedModule):
        return sum(key[0])
    if isinstance(M, ShiftModule):
        return key
    if isinstance(M, DirectSumModule):
        return _key_level(M.parts[key[0]], key[1])
    if isinstance(M, TensorModule):
        return max(_key_level(M.A, key[0]), _key_level(M.B, key[1]))
    return 0


def certification_bound(g: LieAlgebra, d: int) -> int:
    """Default truncation level d·dim g + d for infinite modules."""
    return d * g.dim + d


@dataclass
class ContainmentReport:
    holds: bool
    certified: bool
    degree: int
    level: object
    witness: UElement | None = None
    witness_vector: object = None
    note: str = ""

    def __bool__(self):
        return self.holds

    def to_dict(self) -> dict:
        out = {"holds": self.holds, "certified": self.certified,
               "truncation": {"d": self.degree, "L": self.level}}
        if self.witness is not None:
            out["witness"] = self.witness.text()
        if self.note:
            out["note"] = self.note
        return out


def annihilates(u: UElement, M: Module, d: int | None = None):
    """First probe vector of M not killed by u, or None."""
    d = u.degree() if d is None else d
    for p in M.probes(max(d, 0)):
        out = M.act(u, {p: Fraction(1)})
        if out:
            return p
    return None


def ideal_kills(K: TruncatedIdeal, M: Module):
    """Check K ⊆ ker M; returns (ok, certified, witness, vector)."""
    for u in K.basis:
        p = annihilates(u, M, K.degree)
        if p is not None:
            return False, K.certified, u, p
    if M.finite:
        return True, True, None, None
    gens = M.generators()
    ok_cert = gens is not None and K.is_ad_stable() and all(not M.act(u, v) for u in K.basis for v in gens)
    return True, ok_cert, None, None


def weakly_contains(pi: Module, rho: Module, d: int, L: int | None = None) -> ContainmentReport:
    """Is π ⪯ ρ, i.e. ker ρ ⊆ ker π, at degree d?

    TRUE is exact when the probe kernel of ρ is ad-stable and kills π's
    generators (or π is finite); FALSE carries a witness that is exact when
    ρ's kernel is certified.
    """
    if pi.g is not rho.g:
        raise LieError("weak containment between modules over different algebras")
    K = kernel_truncated(rho, d, L)
    ok, cert, w, vec = ideal_kills(K, pi)
    return ContainmentReport(ok, cert, d, K.probe_level, w, vec)


def central_character(M: Module, probe_degree: int = 1) -> Functional:
    """Scalars by which a basis of the center of g acts on M."""
    g = M.g
    z = g.center()
    vals = []
    for v in z.basis:
        u = M.U.from_vec(v)
        scalar = None
        for p in M.probes(probe_degree):
            out = M.act(u, {p: Fraction(1)})
            s = out.get(p, Fraction(0))
            if any(k != p for k in out):
                raise NotScalarAction(f"{g.format_vec(v)} does not act by a scalar", witness=p)
            if scalar is None:
                scalar = s
            elif s != scalar:
                raise NotScalarAction(f"{g.format_vec(v)} acts by {scalar} and {s}", witness=p)
        vals.append(scalar if scalar is not None else Fraction(0))
    return Functional(z, tuple(vals))


def matrix_coefficients_perp(rho: MatrixRep, d: int, seed: int = 0) -> TruncatedIdeal:
    """MC(ρ)^⊥ ∩ U_{<=d}, computed from coefficient functionals.

    MC(ρ) is spanned by u ↦ f(ρ(u) v) with f, v running over bases of V*
    and V; here the bases are the rows/columns of seeded random invertible
    matrices, so the computation does not reuse the probe route.
    """
    rng = random.Random(seed)
    n = rho.n
    P, Q = _random_invertible(n, rng), _random_invertible(n, rng)
    U = rho.U
    monos = U.filtration_basis(d)
    mats = [_mono_matrix(rho, m) for m in monos]
    mc = Echelon()
    for f in P:
        for j in range(n):
            v = [Q[i][j] for i in range(n)]
            fun: Vec = {}
            for idx, M in enumerate(mats):
                x = sum((f[r] * sum((M[r][c] * v[c] for c in range(n)), Fraction(0)) for r in range(n)),
                        Fraction(0))
                if x:
                    fun[idx] = x
            mc.add(fun)
    rows = mc.rows()
    cols = [{r: row[idx] for r, row in enumerate(rows) if idx in row} for idx in range(len(monos))]
    return TruncatedIdeal(U, d, nullspace(cols), certified=True)


def _mono_matrix(rho: MatrixRep, m):
    out = identity(rho.n)
    for i, e in enumerate(m):
        for _ in range(e):
            out = mat_mul(out, rho.images[i])
    return out


def _random_invertible(n, rng):
    from .linalg import rank
    while True:
        M = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        if rank([{j: x for j, x in enumerate(r) if x} for r in M]) == n:
            return M


def twist_element(u: UElement, lam: Sequence) -> UElement:
    """Image of u under the automorphism b_i ↦ b_i + λ(b_i) (λ kills [g, g])."""
    U = u.U
    out: dict = {}
    for m, c in u.terms.items():
        acc = {U.unit_mono: Fraction(1)}
        for i, e in enumerate(m):
            if not e:
                continue
            l = Fraction(lam[i])
            nxt: dict = {}
            for mono, cm in acc.items():
                for k in range(e + 1):
                    coeff = comb(e, k) * l ** (e - k)
                    if coeff:
                        add_into(nxt, {_bump(mono, i, k): cm * coeff})
            acc = nxt
        add_into(out, acc, c)
    return UElement(U, out)


# -- JSON module specs ----------------------------------------------------------

def module_from_dict(g: LieAlgebra, data: dict) -> Module:
    kind = data.get("kind")
    if kind == "matrix":
        mats = data["matrices"]
        images = [[[parse_rational(x) for x in row] for row in mats[l]] for l in g.labels]
        return MatrixRep(g, images, name=data.get("name", ""))
    if kind == "functional":
        vals = data["values"]
        return MatrixRep.from_functional(g, [parse_rational(vals.get(l, "0")) for l in g.labels])
    if kind == "shift":
        return ShiftModule(g, int(data.get("N", 8)))
    if kind == "induced":
        h = g.span_labels(*data["subalgebra"])
        vals = data["functional"]
        f = Functional(g, tuple(parse_rational(vals.get(l, "0")) for l in g.labels))
        return InducedModule(g, h, f.restrict(h), twist=bool(data.get("twist", False)),
                             level=int(data.get("level", certification_bound(g, 1))))
    raise LieError(f"unknown module kind {kind!r}")


def module_from_json(g: LieAlgebra, text: str) -> Module:
    return module_from_dict(g, json.loads(text))


def shift_simplicity_probe(S: ShiftModule, p: Vec) -> int:
    """Steps of p ↦ (b - 1)p needed to reach a nonzero constant.

    Each step lowers the degree by one, so a polynomial of degree k reaches
    a multiple of 1 in k steps; from 1 the powers of ``a`` recover every t^j.
    """
    v = {k: Fraction(c) for k, c in p.items() if c}
    if not v:
        raise LieError("the zero polynomial generates the zero submodule")
    steps = 0
    while max(v) > 0:
        v = add_into(S.act_gen_vec(S.ib, v), v, -1)
        steps += 1
    one = {0: Fraction(1)}
    for j in range(S.N + 1):
        if one != {j: Fraction(1)}:
            raise LieError("powers of a fail to recover the monomial basis")
        if j < S.N:
            one = S.act_gen_vec(S.ia, one)
    return steps


def push_pull_check(g: LieAlgebra, h: Subspace, W, V, level: int = 4) -> dict:
    """Ind(W ⊗ V|h) ≅ Ind(W) ⊗ V through c^a ⊗ w ↦ c^a · ((1 ⊗ w) ⊗ v).

    Checks the map commutes with every basis element of g on all vectors
    below ``level`` and is unitriangular with respect to the level filtration,
    hence invertible with an inverse of the same shape.
    """
    W = W if isinstance(W, Functional) else Functional(h, tuple(Fraction(x) for x in W))
    V = V if isinstance(V, Functional) else Functional(g, tuple(Fraction(x) for x in V))
    Vh = V.restrict(h)
    A = InducedModule(g, h, Functional(h, tuple(a + b for a, b in zip(W.coords, Vh.coords))), level=level)
    B = TensorModule(InducedModule(g, h, Functional(h, W.coords), level=level), MatrixRep.from_functional(g, V))
    U = A.U
    comp = [U.from_vec(c) for c in A.complement]
    start = {(((0,) * A.m, 0), 0): Fraction(1)}

    def phi_key(key):
        a, _ = key
        u = U.one()
        for c, e in zip(comp, a):
            for _ in range(e):
                u = u * c
        return B.act(u, start)

    def phi(v):
        out: Vec = {}
        for k, c in v.items():
            add_into(out, phi_key(k), c)
        return out

    keys = A.probes(1)
    bad_comm = bad_tri = 0
    for k in keys:
        img = phi_key(k)
        lev = sum(k[0])
        if img.get((k, 0)) != 1 or any(sum(x[0][0]) >= lev for x in img if x != (k, 0)):
            bad_tri += 1
        for i in range(g.dim):
            if phi(A.act_gen(i, k)) != B.act_gen_vec(i, img):
                bad_comm += 1
    return {"intertwines": bad_comm == 0, "unitriangular": bad_tri == 0, "vectors": len(keys),
            "truncation": {"L": level}, "certified": bad_comm == 0 and bad_tri == 0}
