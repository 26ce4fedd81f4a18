"""Root systems of type A1/A2, Verma modules and minimal primitive ideals.

Weights are written in fundamental-weight coordinates.  We follow the
shifted convention in which M(λ) has highest weight λ - δ, δ the half-sum
of the positive roots (= sum of fundamental weights).  With it the
Casimir scalar on M(λ) is Weyl-invariant in λ for the plain linear action,
and tensoring top vectors gives g_λ g_μ = g_{λ+μ-δ}.

Casimir normalization: the dual basis of the trace form of the defining
matrix realization, so Ω = ef + fe + ½h² for sl2 and c(λ) = (λ² - 1)/2.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

import sympy

from . import catalog
from .enveloping import TruncatedIdeal, UElement, enveloping
from .lie import Functional, LieAlgebra, LieError, Subspace
from .linalg import Echelon, Vec, add_into, mat_mul
from .representations import (InducedModule, LevelExceeded, MatrixRep, TensorModule, certification_bound,
                              kernel_truncated)


class UnsupportedType(LieError):
    pass


class NotDominantIntegral(LieError):
    pass


Weight = tuple  # of Fraction, fundamental-weight coordinates


def _mat_apply(m, v):
    return tuple(sum((m[i][j] * v[j] for j in range(len(v))), Fraction(0)) for i in range(len(m)))


@dataclass(frozen=True)
class RootSystem:
    type: str
    cartan: tuple
    positive_roots: tuple     # simple-root coordinates
    weyl: tuple               # matrices acting on fundamental-weight coordinates
    algebra_name: str
    e_labels: tuple
    h_labels: tuple
    f_labels: tuple           # one per positive root, same order
    longest: tuple
    raising_labels: tuple     # all positive root vectors

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def delta(self) -> Weight:
        return tuple(Fraction(1) for _ in range(self.rank))

    @property
    def fundamental_weights(self) -> list[Weight]:
        return [tuple(Fraction(int(i == j)) for j in range(self.rank)) for i in range(self.rank)]

    @property
    def algebra(self) -> LieAlgebra:
        return catalog.get(self.algebra_name)

    def root_to_weight(self, root) -> Weight:
        """Simple-root coordinates to fundamental-weight coordinates."""
        return tuple(sum((Fraction(root[i]) * self.cartan[i][j] for i in range(self.rank)), Fraction(0))
                     for j in range(self.rank))

    def act(self, w, lam) -> Weight:
        return _mat_apply(w, tuple(Fraction(x) for x in lam))

    def orbit(self, lam) -> list[Weight]:
        seen = []
        for w in self.weyl:
            x = self.act(w, lam)
            if x not in seen:
                seen.append(x)
        return seen

    def weyl_dimension(self, mu) -> int:
        """Dimension of the simple module of highest weight ``mu`` (dominant integral)."""
        rho = self.delta
        num, den = Fraction(1), Fraction(1)
        for r in self.positive_roots:
            # <mu + rho, r^vee> / <rho, r^vee>; simply laced, coroot = root
            num *= sum((Fraction(r[i]) * (Fraction(mu[i]) + rho[i]) for i in range(self.rank)), Fraction(0))
            den *= sum((Fraction(r[i]) * rho[i] for i in range(self.rank)), Fraction(0))
        q = num / den
        return int(q)


def _reflection(cartan, i):
    r = len(cartan)
    return tuple(tuple(Fraction(int(j == k)) - (cartan[i][j] if k == i else 0) for k in range(r))
                 for j in range(r))


def _close(gens):
    r = len(gens[0])
    ident = tuple(tuple(Fraction(int(i == j)) for j in range(r)) for i in range(r))
    group = [ident]
    frontier = [ident]
    length = {ident: 0}
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                ws = tuple(tuple(x) for x in mat_mul([list(x) for x in s], [list(x) for x in w]))
                if ws not in length:
                    length[ws] = length[w] + 1
                    group.append(ws)
                    nxt.append(ws)
        frontier = nxt
    return group, length


def root_system(kind: str) -> RootSystem:
    kind = kind.strip().upper()
    if kind == "A1":
        cartan = ((2,),)
        roots = ((1,),)
        labels = ("sl2", ("e",), ("h",), ("f",), ("e",))
    elif kind == "A2":
        cartan = ((2, -1), (-1, 2))
        roots = ((1, 0), (0, 1), (1, 1))
        labels = ("sl3", ("e1", "e2"), ("h1", "h2"), ("f1", "f2", "f3"), ("e1", "e2", "e3"))
    else:
        raise UnsupportedType(f"root system {kind!r} not supported (A1, A2 only)")
    cartan = tuple(tuple(Fraction(x) for x in row) for row in cartan)
    group, length = _close([_reflection(cartan, i) for i in range(len(cartan))])
    longest = max(group, key=lambda w: length[w])
    return RootSystem(kind, cartan, roots, tuple(group), labels[0], labels[1], labels[2], labels[3], longest,
                      labels[4])


def _weight(lam, rank) -> Weight:
    if isinstance(lam, (int, Fraction, str)):
        lam = (lam,)
    w = tuple(Fraction(x) for x in lam)
    if len(w) != rank:
        raise LieError(f"weight needs {rank} coordinates, got {len(w)}")
    return w


class VermaModule(InducedModule):
    """M(λ): induced from the Borel subalgebra, highest weight λ - δ."""

    def __init__(self, rs: RootSystem, lam, level: int):
        g = rs.algebra
        lam = _weight(lam, rs.rank)
        b = g.span_labels(*rs.raising_labels, *rs.h_labels)
        # echelon basis of the Borel is e's then h's, in basis order
        vals = {l: Fraction(0) for l in rs.raising_labels}
        for l, x, dl in zip(rs.h_labels, lam, rs.delta):
            vals[l] = x - dl
        coords = []
        for v in b.basis:
            (i, _), = v.items()
            coords.append(vals[g.labels[i]])
        comp = [{g.index(l): Fraction(1)} for l in rs.f_labels]
        super().__init__(g, b, Functional(b, tuple(coords)), level=level, complement=comp,
                         name=f"M({', '.join(str(x) for x in lam)})")
        self.rs = rs
        self.lam = lam

    def weight_of(self, key) -> Weight:
        a, _ = key
        top = tuple(x - d for x, d in zip(self.lam, self.rs.delta))
        out = list(top)
        for k, e in enumerate(a):
            rw = self.rs.root_to_weight(self.rs.positive_roots[k])
            for j in range(self.rs.rank):
                out[j] -= e * rw[j]
        return tuple(out)

    def height_of(self, key) -> int:
        a, _ = key
        return sum(e * sum(self.rs.positive_roots[k]) for k, e in enumerate(a))

    @property
    def top(self) -> Vec:
        return {((0,) * self.m, 0): Fraction(1)}


_VERMA: dict = {}


def verma(rs: RootSystem, lam, L: int) -> VermaModule:
    if L < 0:
        raise LieError("level must be non-negative")
    key = (rs.type, _weight(lam, rs.rank), L)
    if key not in _VERMA:
        _VERMA[key] = VermaModule(rs, lam, L)
    return _VERMA[key]


def casimir(rs: RootSystem) -> UElement:
    """Casimir from the trace-form dual basis of the matrix realization."""
    g = rs.algebra
    mats = g._cache["matrices"]
    n = g.dim
    gram = [[sum((mat_mul(mats[i], mats[j])[k][k] for k in range(len(mats[0]))), Fraction(0))
             for j in range(n)] for i in range(n)]
    inv = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in gram]).inv()
    U = enveloping(g)
    out = U.element()
    for i in range(n):
        for j in range(n):
            c = inv[i, j]
            if c != 0:
                out = out + U.normalize([i, j], Fraction(int(c.p), int(c.q)))
    return out


def central_character_hc(rs: RootSystem, lam) -> Fraction:
    """Casimir scalar on M(λ), computed on the highest-weight vector."""
    M = verma(rs, lam, 2)
    out = M.act(casimir(rs), M.top)
    key = next(iter(M.top))
    if set(out) - {key}:
        raise LieError("Casimir does not act by a scalar on the top vector")
    return out.get(key, Fraction(0))


def casimir_formula(lam) -> Fraction:
    """Closed form for A1: (λ² - 1)/2."""
    x = Fraction(lam if not isinstance(lam, tuple) else lam[0])
    return (x * x - 1) / 2


@dataclass
class HWWitness:
    lam: Weight
    mu: Weight
    weight: Weight
    target: Weight       # λ + μ - δ
    killed_by: tuple     # e labels verified to kill the vector

    def relation(self):
        """(c, a, b) meaning g_c = g_a g_b."""
        return (self.target, self.lam, self.mu)


def tensor_hw_vector(rs: RootSystem, lam, mu, L: int = 1) -> HWWitness:
    """v_λ ⊗ v_μ is a highest-weight vector of weight λ + μ - 2δ."""
    if L < 1:
        raise LieError("level must be at least 1")
    lam, mu = _weight(lam, rs.rank), _weight(mu, rs.rank)
    A, B = verma(rs, lam, L), verma(rs, mu, L)
    T = TensorModule(A, B)
    key = (next(iter(A.top)), next(iter(B.top)))
    v = {key: Fraction(1)}
    g = rs.algebra
    killed = []
    for l in rs.e_labels:
        if T.act_gen_vec(g.index(l), v):
            raise LieError(f"{l} does not kill the tensor top vector")
        killed.append(l)
    weight = []
    for l in rs.h_labels:
        out = T.act_gen_vec(g.index(l), v)
        if set(out) - {key}:
            raise LieError("tensor top vector is not a weight vector")
        weight.append(out.get(key, Fraction(0)))
    weight = tuple(weight)
    expect = tuple(a + b - 2 * d for a, b, d in zip(lam, mu, rs.delta))
    if weight != expect:
        raise LieError(f"top weight {weight} != {expect}")
    target = tuple(a + b - d for a, b, d in zip(lam, mu, rs.delta))
    return HWWitness(lam, mu, weight, target, tuple(killed))


def minimal_primitive_truncated(rs: RootSystem, lam, d: int, L: int | None = None,
                                strict: bool = True) -> TruncatedIdeal:
    """J_λ ∩ U_{<=d}: the kernel of the Verma module M(λ)."""
    L = certification_bound(rs.algebra, d) if L is None else L
    M = verma(rs, lam, L)
    K = kernel_truncated(M, d, strict=strict)
    K.label = f"J({', '.join(str(x) for x in M.lam)})"
    return K


def casimir_slice(rs: RootSystem, lam, d: int) -> TruncatedIdeal:
    """Span of (Ω - c(λ))·m for PBW monomials m with deg m + 2 <= d."""
    U = enveloping(rs.algebra)
    om = casimir(rs) - central_character_hc(rs, lam)
    elems = [om * U.monomial(m) for m in U.filtration_basis(max(d - 2, 0))] if d >= 2 else []
    return TruncatedIdeal.from_elements(U, d, elems)


def simple_quotient(rs: RootSystem, lam) -> MatrixRep:
    """Finite-dimensional simple quotient of M(λ), for λ - δ dominant integral."""
    lam = _weight(lam, rs.rank)
    mu = tuple(x - d for x, d in zip(lam, rs.delta))
    if any(x.denominator != 1 or x < 0 for x in mu):
        raise NotDominantIntegral(f"λ - δ = {tuple(str(x) for x in mu)} is not dominant integral")
    lowest = rs.act(rs.longest, mu)
    diff = [a - b for a, b in zip(mu, lowest)]
    # convert weight difference to simple-root coordinates to get its height
    C = sympy.Matrix([[int(x) for x in row] for row in rs.cartan])
    roots = C.T.solve(sympy.Matrix([int(x) for x in diff]))
    H = int(sum(roots))
    # f's can jump by the height of the highest root
    top = H + max(sum(r) for r in rs.positive_roots)
    M = verma(rs, lam, top)
    g = rs.algebra
    keys = [k for k in M.probes(0) if M.height_of(k) <= top]
    # singular vectors f_i^{mu_i + 1} v and the submodule they generate
    seeds = []
    for i, l in enumerate(rs.f_labels[:rs.rank]):
        v = M.top
        for _ in range(int(mu[i]) + 1):
            v = M.act_gen_vec(g.index(l), v)
        seeds.append(v)
    fidx = [g.index(l) for l in rs.f_labels]
    N = Echelon(key=lambda k: (M.height_of(k), k))
    frontier = [s for s in seeds if _height(M, s) <= top]
    for s in frontier:
        N.add(s)
    while frontier:
        nxt = []
        for v in frontier:
            hv = _height(M, v)
            for i, r in zip(fidx, rs.positive_roots):
                if hv + sum(r) > top:
                    continue
                w = M.act_gen_vec(i, v)
                if w and _height(M, w) <= top and N.add(w):
                    nxt.append(w)
        frontier = nxt
    basis = [k for k in keys if k not in N.pivots and M.height_of(k) <= H]
    extra = [k for k in keys if k not in N.pivots and M.height_of(k) > H]
    if extra:
        raise LieError("quotient does not terminate at the lowest weight")
    pos = {k: j for j, k in enumerate(basis)}
    n = len(basis)
    images = []
    for i in range(g.dim):
        m = [[Fraction(0)] * n for _ in range(n)]
        for j, k in enumerate(basis):
            w = N.reduce(M.act_gen(i, k))
            for kk, c in w.items():
                if kk not in pos:
                    raise LieError(f"action leaves the quotient basis at {kk} from {k} by {g.labels[i]}")
                m[pos[kk]][j] = c
        images.append(m)
    rep = MatrixRep(g, images, check=True, name=f"L({', '.join(str(x) for x in lam)})")
    if rep.n != rs.weyl_dimension(mu):
        raise LieError(f"quotient has dimension {rep.n}, Weyl formula gives {rs.weyl_dimension(mu)}")
    return rep


def _height(M: VermaModule, v: Vec) -> int:
    return max(M.height_of(k) for k in v)


def grid(rs: RootSystem, lo, hi, step=1) -> list[Weight]:
    """All weights with coordinates in lo, lo+step, ..., hi."""
    step = Fraction(step)
    vals = []
    x = Fraction(lo)
    while x <= hi:
        vals.append(x)
        x += step
    return [tuple(p) for p in product(vals, repeat=rs.rank)]
