"""Chain presentations and their abelianization.

A presentation has one generator per ideal handle and relations

* ``Product(a, b, c)``: g_a = g_b g_c
* ``Unit(a)``: g_a = 1
* ``Inverse(a, b)``: g_b = g_a^{-1}

Only the abelianization is computed (integer Smith normal form of the
relation matrix); that is the invariant every check in this package is
stated for.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from .lie import LieError
from .linalg import parse_rational, rank


class UnknownGenerator(LieError):
    pass


class RelationNotRespected(LieError):
    def __init__(self, msg, relation=None, defect=None):
        super().__init__(msg)
        self.relation = relation
        self.defect = defect


@dataclass(frozen=True)
class Product:
    a: str
    b: str
    c: str

    def args(self):
        return (self.a, self.b, self.c)

    def __str__(self):
        return f"g[{self.a}] = g[{self.b}]·g[{self.c}]"


@dataclass(frozen=True)
class Unit:
    a: str

    def args(self):
        return (self.a,)

    def __str__(self):
        return f"g[{self.a}] = 1"


@dataclass(frozen=True)
class Inverse:
    a: str
    b: str

    def args(self):
        return (self.a, self.b)

    def __str__(self):
        return f"g[{self.b}] = g[{self.a}]^-1"


RELATION_TYPES = {"product": Product, "unit": Unit, "inverse": Inverse}
_TYPE_NAMES = {Product: "product", Unit: "unit", Inverse: "inverse"}


class ChainPresentation:
    def __init__(self):
        self.generators: dict[str, tuple | None] = {}
        self.relations: list = []

    def add_generator(self, gid: str, character=None) -> str:
        ch = None if character is None else tuple(Fraction(c) for c in character)
        if gid in self.generators:
            old = self.generators[gid]
            if ch is not None and old is not None and old != ch:
                raise LieError(f"generator {gid} declared with two characters")
            if old is None:
                self.generators[gid] = ch
        else:
            self.generators[gid] = ch
        return gid

    def add(self, rel) -> None:
        for x in rel.args():
            if x not in self.generators:
                raise UnknownGenerator(f"relation {rel} uses undeclared generator {x!r}")
        self.relations.append(rel)

    def ids(self) -> list[str]:
        return list(self.generators)

    def matrix(self) -> list[list[int]]:
        ids = self.ids()
        pos = {g: i for i, g in enumerate(ids)}
        rows = []
        for rel in self.relations:
            r = [0] * len(ids)
            for x, c in _row_terms(rel):
                r[pos[x]] += c
            rows.append(r)
        return rows

    def copy(self) -> "ChainPresentation":
        p = ChainPresentation()
        p.generators = dict(self.generators)
        p.relations = list(self.relations)
        return p

    def to_dict(self) -> dict:
        return {
            "generators": [{"id": g, "character": [str(c) for c in (ch or ())]}
                           for g, ch in self.generators.items()],
            "relations": [{"type": _TYPE_NAMES[type(r)], "args": list(r.args())} for r in self.relations],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    def __repr__(self):
        return f"<ChainPresentation: {len(self.generators)} generators, {len(self.relations)} relations>"


def _row_terms(rel):
    if isinstance(rel, Product):
        return [(rel.a, 1), (rel.b, -1), (rel.c, -1)]
    if isinstance(rel, Unit):
        return [(rel.a, 1)]
    return [(rel.a, 1), (rel.b, 1)]


def from_dict(data: dict) -> ChainPresentation:
    p = ChainPresentation()
    for g in data.get("generators", []):
        ch = g.get("character")
        p.add_generator(str(g["id"]), None if ch is None else [parse_rational(c) for c in ch])
    for r in data.get("relations", []):
        kind = r.get("type")
        if kind not in RELATION_TYPES:
            raise LieError(f"unknown relation type {kind!r}")
        p.add(RELATION_TYPES[kind](*[str(a) for a in r["args"]]))
    return p


def from_json(text: str) -> ChainPresentation:
    return from_dict(json.loads(text))


def build(generators: Iterable, relations: Iterable) -> ChainPresentation:
    """Presentation from ``(id, character)`` pairs and relation objects or tuples.

    Tuples are ``("product", a, b, c)``, ``("unit", a)``, ``("inverse", a, b)``.
    """
    p = ChainPresentation()
    for g in generators:
        if isinstance(g, str):
            p.add_generator(g)
        else:
            p.add_generator(g[0], g[1] if len(g) > 1 else None)
    for r in relations:
        if isinstance(r, tuple):
            kind, *args = r
            if kind not in RELATION_TYPES:
                raise LieError(f"unknown relation type {kind!r}")
            r = RELATION_TYPES[kind](*args)
        p.add(r)
    return p


def merge_classes(ids: Iterable[str], pairs: Iterable[tuple[str, str]]) -> dict[str, str]:
    """Union-find over ``ids``; each id maps to the smallest id of its class."""
    parent = {g: g for g in ids}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        for x in (a, b):
            if x not in parent:
                raise UnknownGenerator(f"inclusion uses undeclared generator {x!r}")
        ra, rb = find(a), find(b)
        if ra != rb:
            lo, hi = sorted((ra, rb))
            parent[hi] = lo
    return {g: find(g) for g in parent}


def merge_by_inclusion(p: ChainPresentation, pairs: Iterable[tuple[str, str]]) -> ChainPresentation:
    """Identify generators along verified inclusions J ⊆ J'.

    Classes are represented by their smallest id in sorted order, so the
    result does not depend on the order of ``pairs``.
    """
    rep = merge_classes(p.generators, pairs)
    out = ChainPresentation()
    for g in p.generators:
        r = rep[g]
        if r not in out.generators:
            out.add_generator(r, p.generators[r])
        elif out.generators[r] is None and p.generators[g] is not None:
            out.generators[r] = p.generators[g]
    for rel in p.relations:
        out.add(type(rel)(*[rep[x] for x in rel.args()]))
    return out


@dataclass(frozen=True)
class AbelianGroup:
    rank: int
    torsion: tuple = ()
    field: str = "Z"

    def __post_init__(self):
        t = tuple(int(x) for x in self.torsion)
        if any(x < 2 for x in t) or any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise LieError(f"torsion factors {t} do not form a divisibility chain")
        object.__setattr__(self, "torsion", t)

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    @property
    def order(self):
        if self.rank:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def __str__(self):
        if self.is_trivial:
            return "trivial group"
        parts = []
        if self.rank:
            parts.append(self.field if self.rank == 1 else f"{self.field}^{self.rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " ⊕ ".join(parts)


def snf_invariants(rows: Sequence[Sequence[int]], ncols: int) -> AbelianGroup:
    """Cokernel of Z^{rows} → Z^{ncols} given by the row vectors."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return AbelianGroup(ncols)
    factors = [abs(int(x)) for x in invariant_factors(Matrix(rows), domain=ZZ)]
    nonzero = [x for x in factors if x]
    return AbelianGroup(ncols - len(nonzero), tuple(sorted(x for x in nonzero if x > 1)))


def abelian_invariants(p: ChainPresentation) -> AbelianGroup:
    return snf_invariants(p.matrix(), len(p.generators))


def class_is_trivial(p: ChainPresentation, gid: str) -> bool:
    """Whether g[gid] = 1 in the abelianization (f.g. abelian groups are Hopfian)."""
    q = p.copy()
    q.add(Unit(gid))
    return abelian_invariants(q) == abelian_invariants(p)


def weyl_coinvariants(rs, lattice: bool = True) -> AbelianGroup:
    """Weight lattice (or weight space) modulo the span of all wλ - λ."""
    r = rs.rank
    rows = []
    for w in rs.weyl:
        for col in range(r):
            rows.append([int(w[i][col] - (1 if i == col else 0)) for i in range(r)])
    if lattice:
        return snf_invariants(rows, r)
    q = rank([{i: Fraction(x) for i, x in enumerate(row) if x} for row in rows])
    return AbelianGroup(r - q, (), field="Q")


@dataclass
class CanReport:
    holds: bool
    abelianization: AbelianGroup
    image_rank: int
    relations_checked: int
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"holds": self.holds, "abelianization": str(self.abelianization),
                "image": str(AbelianGroup(self.image_rank)), "relations_checked": self.relations_checked,
                "certified": True, "notes": self.notes}


def character_defect(p: ChainPresentation, rel) -> tuple:
    k = _char_len(p)
    out = [Fraction(0)] * k
    for x, c in _row_terms(rel):
        for i, v in enumerate(p.generators[x]):
            out[i] += c * v
    return tuple(out)


def _char_len(p):
    lens = {len(ch) for ch in p.generators.values() if ch is not None}
    if len(lens) > 1:
        raise LieError("characters of different lengths")
    return lens.pop() if lens else 0


def can_check(p: ChainPresentation, characters: dict | None = None) -> CanReport:
    """Check the map g ↦ character is well defined and an isomorphism onto its image."""
    if characters:
        p = p.copy()
        for g, ch in characters.items():
            if g not in p.generators:
                raise UnknownGenerator(f"character for undeclared generator {g!r}")
            p.generators[g] = tuple(Fraction(c) for c in ch)
    missing = [g for g, ch in p.generators.items() if ch is None]
    if missing:
        raise LieError(f"generators without characters: {missing}")
    for rel in p.relations:
        d = character_defect(p, rel)
        if any(d):
            raise RelationNotRespected(f"{rel} violated: defect {[str(x) for x in d]}", rel, d)
    group = abelian_invariants(p)
    chars = [{i: v for i, v in enumerate(ch) if v} for ch in p.generators.values()]
    image_rank = rank(chars)
    holds = not group.torsion and group.rank == image_rank
    notes = []
    if group.torsion:
        notes.append(f"torsion {group.torsion} maps to zero in the torsion-free character group")
    if group.rank != image_rank:
        notes.append(f"free rank {group.rank} != image rank {image_rank}")
    return CanReport(holds, group, image_rank, len(p.relations), notes)
