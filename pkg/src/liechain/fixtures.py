"""Named chain-presentation fixtures.

Every relation in a fixture is backed by a check that ran when the fixture
was built (a tensor/antipode inclusion of Dixmier ideals, a highest-weight
vector in a tensor of Verma modules, or an equality of truncated minimal
primitive ideals); the log records each one.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import catalog
from .chain import (AbelianGroup, ChainPresentation, Inverse, Product, Unit, abelian_invariants,
                    build, can_check, class_is_trivial, merge_by_inclusion, merge_classes,
                    weyl_coinvariants)
from .highest_weight import grid, minimal_primitive_truncated, root_system, tensor_hw_vector
from .lie import Functional, LieError
from .orbit import check_antipode, check_shift, check_tensnil, dixmier_ideal
from .representations import ShiftModule, kernel_truncated, shift_simplicity_probe


class UnknownFixture(LieError):
    pass


@dataclass
class FixtureResult:
    name: str
    presentation: ChainPresentation
    merged: ChainPresentation
    merges: list
    log: list = field(default_factory=list)
    expected: str | None = None
    obstruction: dict | None = None

    @property
    def group(self) -> AbelianGroup:
        return abelian_invariants(self.merged)

    def can(self):
        return can_check(self.merged)

    def all_verified(self) -> bool:
        return all(e.get("holds", True) and e.get("certified", True) for e in self.log)

    def report(self) -> dict:
        can = self.can()
        out = {
            "fixture": self.name,
            "group": str(self.group),
            "generators": len(self.presentation.generators),
            "relations": len(self.presentation.relations),
            "merges": [list(m) for m in self.merges],
            "classes": len(self.merged.generators),
            "can": can.to_dict(),
            "checks": len(self.log),
            "certified": all(e.get("certified", True) for e in self.log),
            "verified": self.all_verified(),
        }
        if self.expected is not None:
            out["expected"] = self.expected
            out["matches_expected"] = str(self.group) == self.expected
        if self.obstruction is not None:
            out["obstruction"] = self.obstruction
        return out


def _wkey(lam) -> str:
    return "(" + ",".join(str(x) for x in lam) + ")"


# -- nilpotent: Heisenberg ------------------------------------------------------

H3_SAMPLES = (1, -1, 2, -2, 3)


def h3_tensnil(d: int = 2, samples=H3_SAMPLES) -> FixtureResult:
    g = catalog.get("heisenberg3")
    iz = g.index("z")

    def f(c):
        return Functional(g, tuple(Fraction(c) if i == iz else Fraction(0) for i in range(g.dim)))

    handles = {}
    gens = []
    for c in samples:
        I = dixmier_ideal(g, f(c), 1)
        handles[c] = I.ideal.key()
        gens.append((handles[c], (c,)))
    rels, log = [], []
    cs = sorted(samples)
    for i, a in enumerate(cs):
        for b in cs[i:]:
            if a + b in handles:
                rep = check_tensnil(g, f(a), f(b), d, raise_on_failure=False)
                log.append(rep.to_dict())
                if rep.holds:
                    rels.append(Product(handles[a + b], handles[a], handles[b]))
    for c in cs:
        if c > 0 and -c in handles:
            rep = check_antipode(g, f(c), d, raise_on_failure=False)
            log.append(rep.to_dict())
            if rep.holds:
                rels.append(Inverse(handles[c], handles[-c]))
    p = build(gens, rels)
    return FixtureResult("h3-tensnil", p, p, [], log, expected="Z")


# -- the 2-dimensional non-abelian algebra ----------------------------------------

def aff1_faithful(d: int = 2, N: int = 8) -> FixtureResult:
    g = catalog.get("aff1")
    S = ShiftModule(g, N)
    K0 = kernel_truncated(S, d, strict=True)
    log = [{"check": "shift module kernel", "holds": K0.dim == 0, "certified": K0.certified,
            "truncation": {"d": d, "L": N}}]
    log.append({"check": "shift bracket relation", "holds": S.check_bracket(), "certified": True})
    for k in range(1, 5):
        steps = shift_simplicity_probe(S, {j: Fraction(j + 1) for j in range(k + 1)})
        log.append({"check": f"simplicity probe, degree {k}", "holds": steps <= k, "certified": True})
    zero = K0.key()
    handles = {}
    gens = [(zero, ())]

    def fa(a, b=0):
        return Functional(g, (Fraction(a), Fraction(b)))

    for b in (1, -1, 2):
        I = dixmier_ideal(g, fa(0, b), d)
        log.append({"check": f"I(b*={b}) is the faithful handle", "holds": I.ideal.key() == zero,
                    "certified": I.ideal.certified})
    alphas = (0, 1, -1, 2)
    for a in alphas:
        I = dixmier_ideal(g, fa(a), d)
        handles[a] = I.ideal.key()
        gens.append((handles[a], ()))
    rels = [Unit(handles[0])]
    for i, a in enumerate(alphas):
        for b in alphas[i:]:
            if a + b in handles:
                rep = check_tensnil(g, fa(a), fa(b), d, raise_on_failure=False)
                log.append(rep.to_dict())
                if rep.holds:
                    rels.append(Product(handles[a + b], handles[a], handles[b]))
        rep = check_shift(g, fa(0, 1), fa(a), d, raise_on_failure=False)
        log.append(rep.to_dict())
        if rep.holds:
            rels.append(Product(zero, zero, handles[a]))
    p = build(gens, rels)
    # {0} is contained in every ideal; it is exact (certified), so each inclusion holds
    merges = [(zero, handles[a]) for a in alphas]
    return FixtureResult("aff1-faithful", p, merge_by_inclusion(p, merges), merges, log,
                         expected="trivial group")


# -- semisimple: δ-shifted weight grids ------------------------------------------------

def _delta_grid(kind: str, weights, name: str, expected: str | None, d: int = 2,
                level: int | None = None) -> FixtureResult:
    rs = root_system(kind)
    weights = list(dict.fromkeys(tuple(Fraction(x) for x in w) for w in weights))
    ids = {w: _wkey(w) for w in weights}
    present = set(weights)
    rels, log = [], []
    for i, lam in enumerate(weights):
        for mu in weights[i:]:
            target = tuple(a + b - 1 for a, b in zip(lam, mu))
            if target in present:
                wit = tensor_hw_vector(rs, lam, mu)
                log.append({"check": "tensor top vector", "lambda": ids[lam], "mu": ids[mu],
                            "weight": _wkey(wit.weight), "holds": True, "certified": True})
                rels.append(Product(ids[target], ids[lam], ids[mu]))
    merges = []
    done = set()
    for lam in weights:
        for w in rs.weyl:
            other = rs.act(w, lam)
            if other == lam or other not in present or {(other, lam), (lam, other)} & done:
                continue
            done.add((lam, other))
            entry = {"check": "Weyl identification", "lambda": ids[lam], "w_lambda": ids[other]}
            A, B = (_certified_minimal(rs, x, d, level) for x in (lam, other))
            entry.update(holds=A == B, certified=A.certified and B.certified,
                         truncation={"d": d, "L": [A.probe_level, B.probe_level]})
            log.append(entry)
            if entry["holds"]:
                merges.append((ids[lam], ids[other]))
    p = build([(ids[w], ()) for w in weights], rels)
    res = FixtureResult(name, p, merge_by_inclusion(p, merges), merges, log, expected=expected)
    res.obstruction = _lattice_obstruction(rs, weights, res, ids)
    return res


_MINIMAL: dict = {}


def _certified_minimal(rs, lam, d, level):
    """Try a cheap probe level first, then the default bound."""
    key = (rs.type, lam, d, level)
    if key not in _MINIMAL:
        K = minimal_primitive_truncated(rs, lam, d, level, strict=False)
        if not K.certified and level is not None:
            K = minimal_primitive_truncated(rs, lam, d, None, strict=False)
        _MINIMAL[key] = K
    return _MINIMAL[key]


def _lattice_obstruction(rs, weights, res: FixtureResult, ids) -> dict | None:
    """Homomorphism a_λ ↦ class of λ - δ in the weight lattice mod the root lattice.

    Defined only when all weights are integral.  If it respects every relation
    and is nonzero on some generator, the presented group is nontrivial.
    """
    if any(x.denominator != 1 for w in weights for x in w):
        return None
    # P/Q: A1 -> Z/2 via λ; A2 -> Z/3 via λ1 + 2λ2
    if rs.type == "A1":
        mod, coeff = 2, (1,)
    else:
        mod, coeff = 3, (1, 2)

    def phi(w):
        return int(sum(c * (x - 1) for c, x in zip(coeff, w))) % mod

    merged = res.merged
    rep = merge_classes(res.presentation.generators, res.merges)
    values = {}
    for w in weights:
        values.setdefault(rep[ids[w]], set()).add(phi(w))
    consistent = all(len(v) == 1 for v in values.values())
    vals = {k: next(iter(v)) for k, v in values.items() if len(v) == 1}
    respects = consistent
    if consistent:
        for rel in merged.relations:
            if isinstance(rel, Product):
                respects &= (vals[rel.a] - vals[rel.b] - vals[rel.c]) % mod == 0
            elif isinstance(rel, Unit):
                respects &= vals[rel.a] % mod == 0
            else:
                respects &= (vals[rel.a] + vals[rel.b]) % mod == 0
    nonzero = any(v for v in vals.values())
    return {"target": f"Z/{mod}", "map": "class of (λ - δ) modulo the root lattice",
            "respects_relations": respects, "nonzero": nonzero,
            "proves_nontrivial": respects and nonzero}


A1_GRID = [(k,) for k in range(-2, 4)]


def a1_delta_grid() -> FixtureResult:
    return _delta_grid("A1", A1_GRID, "a1-delta-grid", expected="trivial group")


def a2_delta_grid() -> FixtureResult:
    ws = [(a, b) for a in range(-1, 3) for b in range(-1, 3)]
    return _delta_grid("A2", ws, "a2-delta-grid", expected="trivial group", level=4)


def a1_half_grid() -> FixtureResult:
    rs = root_system("A1")
    return _delta_grid("A1", grid(rs, -2, 3, Fraction(1, 2)), "a1-half-grid", expected=None)


def a2_third_grid() -> FixtureResult:
    rs = root_system("A2")
    ws = grid(rs, Fraction(-1, 3), Fraction(5, 3), Fraction(1, 3))
    return _delta_grid("A2", ws, "a2-third-grid", expected=None, level=4)


def a1_compact_contrast() -> FixtureResult:
    """Plain additivity a_λ a_μ = a_{λ+μ} on lattice weights, plus λ ~ -λ."""
    ws = [(k,) for k in range(-3, 4)]
    ids = {w: _wkey(w) for w in ws}
    rels = [Product(ids[(a[0] + b[0],)], ids[a], ids[b])
            for i, a in enumerate(ws) for b in ws[i:] if (a[0] + b[0],) in ids]
    p = build([(ids[w], ()) for w in ws], rels)
    merges = [(ids[w], ids[(-w[0],)]) for w in ws if w[0] > 0]
    return FixtureResult("a1-compact-contrast", p, merge_by_inclusion(p, merges), merges, [],
                         expected="Z/2")


def refinement_kills(coarse: FixtureResult, fine: FixtureResult) -> dict:
    """For each coarse generator that also lives in the fine grid, is its class trivial there?"""
    rep = merge_classes(fine.presentation.generators, fine.merges)
    return {gid: class_is_trivial(fine.merged, rep[gid])
            for gid in coarse.presentation.generators if gid in rep}


FIXTURES: dict[str, tuple[Callable[[], FixtureResult], str]] = {
    "h3-tensnil": (h3_tensnil, "Heisenberg h3, f(z) in {±1, ±2, 3}: tensor and antipode relations"),
    "aff1-faithful": (aff1_faithful, "aff1 with the faithful simple shift module; presentation collapses"),
    "a1-delta-grid": (a1_delta_grid, "sl2 lattice weights -2..3: δ-shift relations and Weyl identifications"),
    "a2-delta-grid": (a2_delta_grid, "sl3 lattice weights {-1..2}^2: δ-shift relations and Weyl identifications"),
    "a1-half-grid": (a1_half_grid, "sl2 weights -2..3 in steps of 1/2 (rational refinement of a1-delta-grid)"),
    "a2-third-grid": (a2_third_grid, "sl3 weights in (1/3)Z^2, box [-1/3, 5/3]^2 (rational refinement)"),
    "a1-compact-contrast": (a1_compact_contrast, "sl2 lattice with plain additivity and λ ~ -λ: Z/2"),
}


def get(name: str) -> FixtureResult:
    if name not in FIXTURES:
        raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(sorted(FIXTURES))}")
    return FIXTURES[name][0]()


def names() -> list[str]:
    return sorted(FIXTURES)
