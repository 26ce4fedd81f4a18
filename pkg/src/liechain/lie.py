"""Finite-dimensional Lie algebras over the rationals, given by structure constants."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import Echelon, Vec, add_into, format_rational, nullspace, parse_rational, scale


class LieError(ValueError):
    """Invalid Lie-algebra input or a violated structural precondition."""


class AntisymmetryViolation(LieError):
    def __init__(self, i, j):
        super().__init__(f"bracket table is not antisymmetric at ({i}, {j})")
        self.i, self.j = i, j


class JacobiViolation(LieError):
    def __init__(self, i, j, k, defect):
        super().__init__(f"Jacobi identity fails on ({i}, {j}, {k}); defect {defect}")
        self.i, self.j, self.k, self.defect = i, j, k, defect


class NotSolvable(LieError):
    pass


class NotAnIdeal(LieError):
    pass


class NotASubalgebra(LieError):
    pass


class LieAlgebra:
    """Lie algebra with basis ``labels`` and brackets ``[b_i, b_j] = c[i][j]``.

    Brackets are stored for i < j only; use :meth:`validate` (or the module
    level :func:`validate`) to build one from an arbitrary table.  Instances
    are treated as immutable; a few derived objects are cached on them.
    """

    def __init__(self, name: str, labels: Sequence[str], brackets: dict):
        self.name = name
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self._c = {}
        for (i, j), v in brackets.items():
            v = {k: Fraction(x) for k, x in v.items() if x}
            if not v:
                continue
            if i < j:
                self._c[(i, j)] = v
            elif i > j:
                self._c[(j, i)] = scale(v, -1)
        self._cache = {}

    def __repr__(self):
        return f"LieAlgebra({self.name!r}, dim={self.dim})"

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise LieError(f"unknown basis label {label!r} in {self.name}") from None

    def c(self, i: int, j: int) -> Vec:
        if i < j:
            return self._c.get((i, j), {})
        if i > j:
            v = self._c.get((j, i))
            return scale(v, -1) if v else {}
        return {}

    def bracket(self, x: Vec, y: Vec) -> Vec:
        out: Vec = {}
        for i, a in x.items():
            for j, b in y.items():
                if i != j:
                    add_into(out, self.c(i, j), a * b)
        return out

    def basis_vector(self, i: int) -> Vec:
        return {i: Fraction(1)}

    def ad_matrix(self, x: Vec):
        """Matrix of ad x in the standard basis (column j = [x, b_j])."""
        n = self.dim
        m = [[Fraction(0)] * n for _ in range(n)]
        for j in range(n):
            for k, v in self.bracket(x, {j: Fraction(1)}).items():
                m[k][j] = v
        return m

    def vec(self, coords) -> Vec:
        return {i: Fraction(c) for i, c in enumerate(coords) if c}

    def whole(self) -> "Subspace":
        return Subspace(self, [self.basis_vector(i) for i in range(self.dim)])

    def zero(self) -> "Subspace":
        return Subspace(self, [])

    def span(self, vectors) -> "Subspace":
        return Subspace(self, vectors)

    def span_labels(self, *labels) -> "Subspace":
        return Subspace(self, [self.basis_vector(self.index(l)) for l in labels])

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        brackets = []
        for (i, j) in sorted(self._c):
            v = self._c[(i, j)]
            brackets.append({
                "i": self.labels[i],
                "j": self.labels[j],
                "value": {self.labels[k]: format_rational(v[k]) for k in sorted(v)},
            })
        return {"name": self.name, "basis": list(self.labels), "brackets": brackets}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def format_vec(self, v: Vec) -> str:
        if not v:
            return "0"
        parts = []
        for k in sorted(v):
            c = v[k]
            if c == 1:
                parts.append(self.labels[k])
            elif c == -1:
                parts.append("-" + self.labels[k])
            else:
                parts.append(f"{format_rational(c)}*{self.labels[k]}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- structural queries (cached) ----------------------------------------

    def center(self) -> "Subspace":
        if "center" not in self._cache:
            self._cache["center"] = center(self)
        return self._cache["center"]

    def derived_series(self):
        if "derived" not in self._cache:
            self._cache["derived"] = series(self, "derived")
        return self._cache["derived"]

    def lower_central_series(self):
        if "lower_central" not in self._cache:
            self._cache["lower_central"] = series(self, "lower_central")
        return self._cache["lower_central"]

    @property
    def is_solvable(self) -> bool:
        return self.derived_series()[-1].dim == 0

    @property
    def is_nilpotent(self) -> bool:
        return self.lower_central_series()[-1].dim == 0


@dataclass(frozen=True, eq=False)
class Subspace:
    """Subspace of a Lie algebra, stored in reduced row echelon form."""

    parent: LieAlgebra
    basis: tuple

    def __init__(self, parent: LieAlgebra, vectors=()):
        e = Echelon()
        for v in vectors:
            e.add(v)
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "basis", tuple(e.rows()))
        object.__setattr__(self, "_ech", e)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Vec) -> bool:
        return self._ech.contains(v)

    def reduce(self, v: Vec) -> Vec:
        return self._ech.reduce(v)

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.parent is other.parent and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def key(self) -> str:
        return "; ".join(self.parent.format_vec(v) for v in self.basis)

    def __repr__(self):
        return "span{" + ", ".join(self.parent.format_vec(v) for v in self.basis) + "}"

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.parent, self.basis + other.basis)

    def bracket_with(self, other: "Subspace") -> "Subspace":
        g = self.parent
        return Subspace(g, [g.bracket(x, y) for x in self.basis for y in other.basis])

    def is_subalgebra(self) -> bool:
        return self.bracket_with(self) <= self

    def is_ideal(self) -> bool:
        return self.bracket_with(self.parent.whole()) <= self

    def coordinates(self, v: Vec) -> list:
        """Coordinates of ``v`` with respect to ``basis`` (``v`` must lie in the span)."""
        coords = []
        r = dict(v)
        for b in self.basis:
            p = min(b)
            c = r.get(p, Fraction(0))
            coords.append(c)
            if c:
                add_into(r, b, -c)
        if r:
            raise LieError(f"vector {self.parent.format_vec(v)} is not in {self!r}")
        return coords

    def complement(self) -> list[int]:
        """Indices of standard basis vectors completing ``basis`` to a basis."""
        return [i for i in range(self.parent.dim) if i not in self._ech.pivots]

    def labels(self) -> list[str]:
        out = []
        for v in self.basis:
            if len(v) == 1 and next(iter(v.values())) == 1:
                out.append(self.parent.labels[next(iter(v))])
            else:
                out.append("(" + self.parent.format_vec(v) + ")")
        return out


@dataclass(frozen=True)
class Functional:
    """Linear functional; ``coords`` are relative to ``domain``'s basis."""

    domain: object
    coords: tuple

    def __post_init__(self):
        n = self.domain.dim
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))
        if len(self.coords) != n:
            raise LieError(f"functional needs {n} coordinates, got {len(self.coords)}")

    def __call__(self, v: Vec) -> Fraction:
        if isinstance(self.domain, LieAlgebra):
            return sum((self.coords[i] * c for i, c in v.items()), Fraction(0))
        cs = self.domain.coordinates(v)
        return sum((a * b for a, b in zip(self.coords, cs)), Fraction(0))

    def __add__(self, other: "Functional") -> "Functional":
        return Functional(self.domain, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Functional":
        return Functional(self.domain, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c) -> "Functional":
        return Functional(self.domain, tuple(c * a for a in self.coords))

    def restrict(self, sub: Subspace) -> "Functional":
        return Functional(sub, tuple(self(v) for v in sub.basis))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def format(self) -> list[str]:
        return [format_rational(c) for c in self.coords]


# -- validation and I/O -------------------------------------------------------

def validate(table: dict, labels: Sequence[str], name: str = "g") -> LieAlgebra:
    """Build a Lie algebra from a raw table ``{(i, j): vec}``.

    Pairs may be given in either order; a pair listed in both orders must be
    antisymmetric.  Unlisted pairs are zero.
    """
    n = len(labels)
    if len(set(labels)) != n:
        raise LieError("basis labels must be distinct")
    full: dict = {}
    for (i, j), v in table.items():
        if not (0 <= i < n and 0 <= j < n):
            raise LieError(f"bracket index out of range: ({i}, {j})")
        v = {k: Fraction(x) for k, x in v.items() if x}
        if any(not 0 <= k < n for k in v):
            raise LieError(f"bracket value of ({i}, {j}) leaves the basis")
        if i == j and v:
            raise AntisymmetryViolation(labels[i], labels[j])
        full[(i, j)] = v
    for (i, j), v in full.items():
        if (j, i) in full and full[(j, i)] != scale(v, -1):
            raise AntisymmetryViolation(labels[i], labels[j])
    g = LieAlgebra(name, labels, {k: v for k, v in full.items() if k[0] != k[1]})
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                d: Vec = {}
                bi, bj, bk = ({i: 1}, {j: 1}, {k: 1})
                add_into(d, g.bracket(bi, g.c(j, k)))
                add_into(d, g.bracket(bj, g.c(k, i)))
                add_into(d, g.bracket(bk, g.c(i, j)))
                if d:
                    raise JacobiViolation(labels[i], labels[j], labels[k], g.format_vec(d))
    return g


def from_dict(data: dict) -> LieAlgebra:
    try:
        labels = [str(b) for b in data["basis"]]
        name = str(data.get("name", "g"))
        idx = {l: i for i, l in enumerate(labels)}
        table = {}
        for entry in data.get("brackets", []):
            i, j = idx[entry["i"]], idx[entry["j"]]
            if (i, j) in table:
                raise LieError(f"bracket [{entry['i']}, {entry['j']}] listed twice")
            table[(i, j)] = {idx[k]: parse_rational(v) for k, v in entry["value"].items()}
    except KeyError as exc:
        raise LieError(f"malformed structure-constant file: missing {exc}") from None
    return validate(table, labels, name)


def from_json(text: str) -> LieAlgebra:
    return from_dict(json.loads(text))


def from_brackets(name: str, labels: Sequence[str], rules: dict) -> LieAlgebra:
    """Convenience constructor: ``rules = {("x", "y"): {"z": 1}}``."""
    idx = {l: i for i, l in enumerate(labels)}
    table = {(idx[a], idx[b]): {idx[k]: Fraction(v) for k, v in val.items()}
             for (a, b), val in rules.items()}
    return validate(table, labels, name)


# -- structure --------------------------------------------------------------

def center(g: LieAlgebra) -> Subspace:
    # x is central iff [x, b_i] = 0 for all i: stack the maps x -> [x, b_i]
    cols = []
    for j in range(g.dim):
        col: Vec = {}
        for i in range(g.dim):
            for k, v in g.c(j, i).items():
                col[(i, k)] = v
        cols.append(col)
    return Subspace(g, nullspace(cols))


def series(g: LieAlgebra, kind: str = "derived") -> list[Subspace]:
    """Derived or lower central series, ending at its first repeated term."""
    if kind not in ("derived", "lower_central"):
        raise LieError(f"unknown series kind {kind!r}")
    whole = g.whole()
    terms = [whole]
    while True:
        last = terms[-1]
        nxt = last.bracket_with(last if kind == "derived" else whole)
        if nxt.dim == last.dim:
            return terms
        terms.append(nxt)
        if nxt.dim == 0:
            return terms


def is_solvable(g: LieAlgebra) -> bool:
    return g.is_solvable


def is_nilpotent(g: LieAlgebra) -> bool:
    return g.is_nilpotent


def killing_form(g: LieAlgebra):
    ads = [g.ad_matrix({i: Fraction(1)}) for i in range(g.dim)]
    n = g.dim
    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            t = sum((ads[i][a][b] * ads[j][b][a] for a in range(n) for b in range(n)), Fraction(0))
            out[i][j] = out[j][i] = t
    return out


def nilradical(g: LieAlgebra) -> Subspace:
    """Largest nilpotent ideal of a solvable ``g``: the ad-nilpotent elements.

    For solvable g with rational (hence real) roots the Killing form is a sum
    of squares of the roots, so its radical is exactly the common kernel of
    the roots.  The candidate is re-verified to be a nilpotent ideal.
    """
    if not g.is_solvable:
        raise NotSolvable(f"{g.name} is not solvable")
    if "nilradical" in g._cache:
        return g._cache["nilradical"]
    k = killing_form(g)
    cols = [{i: k[i][j] for i in range(g.dim) if k[i][j]} for j in range(g.dim)]
    n = Subspace(g, nullspace(cols))
    if not n.is_ideal() or not _span_is_nilpotent(n):
        raise LieError(f"{g.name}: roots are not all rational; nilradical not computed")
    if not g.derived_series()[min(1, len(g.derived_series()) - 1)] <= n:
        raise LieError(f"{g.name}: derived algebra not inside the computed nilradical")
    g._cache["nilradical"] = n
    return n


def _span_is_nilpotent(s: Subspace) -> bool:
    term = s
    for _ in range(s.dim + 1):
        if term.dim == 0:
            return True
        term = term.bracket_with(s)
    return term.dim == 0


def subalgebra(g: LieAlgebra, h: Subspace, name: str | None = None, labels=None) -> LieAlgebra:
    """The Lie algebra ``h`` with structure constants in its echelon basis."""
    if not h.is_subalgebra():
        raise NotASubalgebra(f"{h!r} is not closed under the bracket")
    labels = list(labels) if labels is not None else h.labels()
    table = {}
    for i, x in enumerate(h.basis):
        for j in range(i + 1, len(h.basis)):
            coords = h.coordinates(g.bracket(x, h.basis[j]))
            table[(i, j)] = {k: c for k, c in enumerate(coords) if c}
    return LieAlgebra(name or f"{g.name}|{','.join(labels)}", labels, table)


def change_basis(g: LieAlgebra, vectors: Sequence[Vec], labels=None, name=None) -> LieAlgebra:
    """Same Lie algebra written in the basis ``vectors`` (must be a basis of g)."""
    s = Subspace(g, vectors)
    if s.dim != g.dim or len(vectors) != g.dim:
        raise LieError("change_basis needs a basis of the whole algebra")
    inv = _coords_solver(vectors)
    labels = list(labels) if labels is not None else [g.format_vec(v) for v in vectors]
    table = {}
    for i, x in enumerate(vectors):
        for j in range(i + 1, len(vectors)):
            table[(i, j)] = inv(g.bracket(x, vectors[j]))
    return LieAlgebra(name or g.name, labels, table)


def _coords_solver(vectors: Sequence[Vec]):
    e = Echelon(track=True)
    for v in vectors:
        if e.add(v) is not None:
            raise LieError("vectors are linearly dependent")

    def solve(v: Vec) -> Vec:
        combo: Vec = {}
        r = e.reduce(v, combo)
        if r:
            raise LieError("vector outside the span")
        return scale(combo, -1)

    return solve


def quotient(g: LieAlgebra, k: Subspace, name: str | None = None):
    """Quotient g/k on the complement basis; returns (algebra, projection)."""
    if not k.is_ideal():
        raise NotAnIdeal(f"{k!r} is not an ideal of {g.name}")
    comp = k.complement()
    pos = {i: p for p, i in enumerate(comp)}

    def project(v: Vec) -> Vec:
        r = k.reduce(v)
        return {pos[i]: c for i, c in r.items()}

    table = {}
    for a, i in enumerate(comp):
        for b in range(a + 1, len(comp)):
            table[(a, b)] = project(g.c(i, comp[b]))
    q = LieAlgebra(name or f"{g.name}/k", [g.labels[i] for i in comp], table)
    return q, project


def direct_sum(g: LieAlgebra, h: LieAlgebra, name: str | None = None):
    """g ⊕ h with block structure constants, plus the diagonal map (when g is h)."""
    n = g.dim
    labels = [f"{l}_1" for l in g.labels] + [f"{l}_2" for l in h.labels]
    table = {}
    for (i, j), v in g._c.items():
        table[(i, j)] = dict(v)
    for (i, j), v in h._c.items():
        table[(n + i, n + j)] = {n + k: c for k, c in v.items()}
    s = LieAlgebra(name or f"{g.name}+{h.name}", labels, table)
    diag = None
    if g.dim == h.dim:
        diag = [[Fraction(int(r == c or r == c + n)) for c in range(n)] for r in range(2 * n)]
    return s, diag


def theta(g: LieAlgebra, h: Subspace) -> Functional:
    """x ↦ ½ · trace of ad x on g/h, as a functional on the subalgebra h."""
    if not h.is_subalgebra():
        raise NotASubalgebra(f"{h!r} is not a subalgebra")
    vals = []
    comp = h.complement()
    for x in h.basis:
        tr = Fraction(0)
        for i in comp:
            tr += h.reduce(g.bracket(x, {i: Fraction(1)})).get(i, 0)
        vals.append(tr / 2)
    return Functional(h, tuple(vals))
