"""Weak containment is preserved by sums, tensors, restriction and induction.

Each check draws a pair π ⪯ ρ (the premise is verified, never assumed),
applies one operation to both sides and re-verifies the containment at the
same truncation degree.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .lie import LieAlgebra, LieError, Subspace, subalgebra
from .linalg import nullspace, rank
from .orbit import _embed_subalgebra, character_functional, ideal_flag, random_functional, vergne_polarization
from .representations import (InducedModule, MatrixRep, Module, certification_bound, direct_sum_matrix,
                               ideal_kills, kernel_truncated, restrict, tensor)

ITEMS = ("sum", "tensor", "restrict", "induce", "twisted")


@dataclass
class PermanenceReport:
    item: str
    instance: dict
    premise: bool
    holds: bool
    certified: bool
    d: int
    L: object = None
    witness: str | None = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {"item": self.item, "instance": self.instance, "premise": self.premise, "holds": self.holds,
               "certified": self.certified, "truncation": {"d": self.d, "L": self.L}}
        if self.witness is not None:
            out["witness"] = self.witness
        out.update(self.extra)
        return out


def contains(pi: Module, rho: Module, d: int, L=None):
    """(holds, certified, witness text, level) for π ⪯ ρ at degree d."""
    K = kernel_truncated(rho, d, L)
    ok, cert, w, _ = ideal_kills(K, pi)
    return ok, cert and K.certified, (w.text() if w is not None else None), K.probe_level


def rep_pool(g: LieAlgebra, rng: random.Random) -> list[MatrixRep]:
    pool = [MatrixRep.trivial(g),
            MatrixRep.from_functional(g, character_functional(g, rng), name="χ1"),
            MatrixRep.from_functional(g, character_functional(g, rng), name="χ2")]
    if g.dim <= 5:
        pool.append(MatrixRep.adjoint(g))
    return pool


def random_pair(g: LieAlgebra, rng: random.Random, d: int, tries: int = 20):
    """A pair π ⪯ ρ of finite-dimensional representations with the containment verified."""
    pool = rep_pool(g, rng)
    for _ in range(tries):
        X, Y = rng.choice(pool), rng.choice(pool)
        shape = rng.randrange(3)
        if shape == 0:
            pi, rho = X, direct_sum_matrix([X, Y])
        elif shape == 1:
            pi, rho = X, tensor(X, direct_sum_matrix([pool[0], Y]))
        else:
            pi, rho = pool[0], X
        ok, cert, _, _ = contains(pi, rho, d)
        if ok and cert:
            return pi, rho
    raise LieError(f"no verified pair found on {g.name}")


def inclusions(g: LieAlgebra, rng: random.Random | None = None) -> list[Subspace]:
    """Nonzero proper subalgebras of codimension at most 2 from the catalog constructions."""
    cands = list(ideal_flag(g))
    if g.is_solvable and rng is not None:
        cands.append(vergne_polarization(g, random_functional(g, rng)).h)
    out = []
    for h in cands:
        if 0 < h.dim < g.dim and g.dim - h.dim <= 2 and h.is_subalgebra() and h not in out:
            out.append(h)
    return out


def check_sum(g, rng, d=2) -> PermanenceReport:
    pi, rho = random_pair(g, rng, d)
    sigma = rng.choice(rep_pool(g, rng))
    ok, cert, w, L = contains(direct_sum_matrix([pi, sigma]), direct_sum_matrix([rho, sigma]), d)
    inst = {"algebra": g.name, "pi": pi.describe(), "rho": rho.describe(), "sigma": sigma.describe()}
    return PermanenceReport("sum", inst, True, ok, cert, d, L, w)


def check_tensor(g, rng, d=2) -> PermanenceReport:
    pi, rho = random_pair(g, rng, d)
    sigma = rng.choice(rep_pool(g, rng))
    ok, cert, w, L = contains(tensor(pi, sigma), tensor(rho, sigma), d)
    inst = {"algebra": g.name, "pi": pi.describe(), "rho": rho.describe(), "sigma": sigma.describe()}
    return PermanenceReport("tensor", inst, True, ok, cert, d, L, w)


def restriction_slice_matches(rho: MatrixRep, h: Subspace, d: int) -> bool:
    """ker(ρ|h) ∩ U(h)_{≤d} equals ker ρ ∩ U(h)_{≤d} read inside U(g)."""
    K = kernel_truncated(rho, d)
    hs, rh = restrict(rho, h)
    Kh = kernel_truncated(rh, d)
    Us, images = _embed_subalgebra(K.U, h.basis, hs, d)
    combos = nullspace([K.reduce(K.U.coords(u, d)) for u in images])
    if len(combos) != len(Kh.basis):
        return False
    return all(Kh.contains(Us.from_coords(c, d)) for c in combos) and rank(combos) == len(combos)


def check_restrict(g, rng, d=2) -> PermanenceReport:
    pi, rho = random_pair(g, rng, d)
    h = rng.choice(inclusions(g, rng))
    hs, ph = restrict(pi, h)
    _, rh = restrict(rho, h, hs)
    ok, cert, w, L = contains(ph, rh, d)
    same = restriction_slice_matches(rho, h, d)
    inst = {"algebra": g.name, "subalgebra": h.labels(), "pi": pi.describe(), "rho": rho.describe()}
    return PermanenceReport("restrict", inst, True, ok and same, cert, d, L, w,
                            {"slice_matches": same})


def _check_induce(g, rng, d, twist) -> PermanenceReport:
    h = rng.choice(inclusions(g, rng))
    hs = subalgebra(g, h)
    pi_h, rho_h = random_pair(hs, rng, d)
    L = certification_bound(g, d)
    Ipi = InducedModule(g, h, pi_h, twist=twist, level=L)
    Irho = InducedModule(g, h, rho_h, twist=twist, level=L)
    ok, cert, w, lev = contains(Ipi, Irho, d, L)
    inst = {"algebra": g.name, "subalgebra": h.labels(), "pi": pi_h.describe(), "rho": rho_h.describe()}
    return PermanenceReport("twisted" if twist else "induce", inst, True, ok, cert, d, lev, w)


def check_induce(g, rng, d=2) -> PermanenceReport:
    return _check_induce(g, rng, d, False)


def check_twisted(g, rng, d=2) -> PermanenceReport:
    return _check_induce(g, rng, d, True)


_CHECKS = {"sum": check_sum, "tensor": check_tensor, "restrict": check_restrict,
           "induce": check_induce, "twisted": check_twisted}


def permanence_suite(g: LieAlgebra, item: str, instances: int = 10, d: int = 2, seed: int = 0):
    if item not in _CHECKS:
        raise LieError(f"unknown permanence item {item!r}; expected one of {', '.join(ITEMS)}")
    rng = random.Random(seed)
    return [_CHECKS[item](g, rng, d) for _ in range(instances)]
