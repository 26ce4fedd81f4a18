"""Hopf-algebra axioms of U(g) checked on explicit elements.

Tensors in U⊗U (and U⊗U⊗U) are dicts from tuples of PBW monomials to
coefficients.  Every check returns the defect, so an empty dict or a zero
element means the axiom holds on that input.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .enveloping import Enveloping, UElement, enveloping
from .lie import LieAlgebra
from .linalg import add_into


def random_element(U: Enveloping, rng: random.Random, max_degree: int = 3, terms: int = 4) -> UElement:
    """Sparse element with small rational coefficients, built from words (so not already in normal form)."""
    n = U.g.dim
    out = U.element()
    for _ in range(rng.randint(1, terms)):
        word = [rng.randrange(n) for _ in range(rng.randint(0, max_degree))]
        c = Fraction(rng.randint(-4, 4) or 1, rng.randint(1, 3))
        out = out + U.normalize(word, c)
    return out


def _mul_legs(U: Enveloping, a: tuple, b: tuple) -> dict:
    """(a1⊗a2⊗…)(b1⊗b2⊗…) for monomial tensors."""
    partial = {(): Fraction(1)}
    for x, y in zip(a, b):
        prod = U.mono_times_mono(x, y)
        nxt: dict = {}
        for key, c in partial.items():
            for m, k in prod.items():
                add_into(nxt, {key + (m,): c * k})
        partial = nxt
    return partial


def tensor_mul(U: Enveloping, s: dict, t: dict) -> dict:
    out: dict = {}
    for a, c in s.items():
        for b, k in t.items():
            add_into(out, _mul_legs(U, a, b), c * k)
    return out


def _sub(a: dict, b: dict) -> dict:
    out = dict(a)
    add_into(out, b, -1)
    return out


def coproduct_by_words(U: Enveloping, u: UElement) -> dict:
    """Δ computed as a product of Δ(x) = x⊗1 + 1⊗x over each PBW word.

    Independent of the closed binomial formula used by ``Enveloping.coproduct``.
    """
    one = U.unit_mono
    out: dict = {}
    for m, c in u.terms.items():
        acc = {(one, one): Fraction(1)}
        for i, e in enumerate(m):
            gm = tuple(int(j == i) for j in range(U.g.dim))
            dx = {(gm, one): Fraction(1), (one, gm): Fraction(1)}
            for _ in range(e):
                acc = tensor_mul(U, acc, dx)
        add_into(out, acc, c)
    return out


def multiplicativity_defect(U, u, v) -> dict:
    return _sub(U.coproduct(u * v), tensor_mul(U, U.coproduct(u), U.coproduct(v)))


def associativity_defect(U, u, v, w) -> UElement:
    return (u * v) * w - u * (v * w)


def coassociativity_defect(U, u) -> dict:
    left: dict = {}
    right: dict = {}
    for (a, b), c in U.coproduct(u).items():
        for (a1, a2), k in U.coproduct(U.monomial(a)).items():
            add_into(left, {(a1, a2, b): c * k})
        for (b1, b2), k in U.coproduct(U.monomial(b)).items():
            add_into(right, {(a, b1, b2): c * k})
    return _sub(left, right)


def counit_defect(U, u) -> tuple[UElement, UElement]:
    """(ε⊗id)Δu - u and (id⊗ε)Δu - u."""
    one = U.unit_mono
    left, right = U.element(), U.element()
    for (a, b), c in U.coproduct(u).items():
        if a == one:
            left = left + U.monomial(b, c)
        if b == one:
            right = right + U.monomial(a, c)
    return left - u, right - u


def antipode_defect(U, u) -> tuple[UElement, UElement]:
    """m(S⊗id)Δu - ε(u)1 and m(id⊗S)Δu - ε(u)1."""
    left, right = U.element(), U.element()
    for (a, b), c in U.coproduct(u).items():
        left = left + c * (U.antipode(U.monomial(a)) * U.monomial(b))
        right = right + c * (U.monomial(a) * U.antipode(U.monomial(b)))
    eps = U.scalar(U.counit(u))
    return left - eps, right - eps


def cocommutativity_defect(U, u) -> dict:
    D = U.coproduct(u)
    return _sub(D, {(b, a): c for (a, b), c in D.items()})


def s2_defect(U, u) -> UElement:
    return U.antipode(U.antipode(u)) - u


def pbw_count(n: int, d: int) -> int:
    """Number of PBW monomials of degree <= d in n variables."""
    return comb(n + d, d)


@dataclass
class HopfReport:
    algebra: str
    samples: int
    failures: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())

    def to_dict(self) -> dict:
        return {"algebra": self.algebra, "samples": self.samples, "failures": dict(sorted(self.failures.items())),
                "holds": self.ok, "certified": True}


def hopf_suite(g: LieAlgebra, samples: int = 200, seed: int = 0, max_degree: int = 3) -> HopfReport:
    U = enveloping(g)
    rng = random.Random(seed)
    fails = {k: 0 for k in ("associativity", "multiplicativity", "coproduct_words", "coassociativity",
                            "counit", "antipode", "cocommutativity", "antipode_squared")}
    for _ in range(samples):
        u, v, w = (random_element(U, rng, max_degree) for _ in range(3))
        fails["associativity"] += bool(associativity_defect(U, u, v, w))
        fails["multiplicativity"] += bool(multiplicativity_defect(U, u, v))
        fails["coproduct_words"] += bool(_sub(U.coproduct(u), coproduct_by_words(U, u)))
        fails["coassociativity"] += bool(coassociativity_defect(U, u))
        fails["counit"] += any(counit_defect(U, u))
        fails["antipode"] += any(antipode_defect(U, u))
        fails["cocommutativity"] += bool(cocommutativity_defect(U, u))
        fails["antipode_squared"] += bool(s2_defect(U, u))
    return HopfReport(g.name, samples, fails)
