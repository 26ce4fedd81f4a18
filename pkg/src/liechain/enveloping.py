"""PBW normal-form arithmetic in U(g) and its Hopf structure.

A PBW monomial is a tuple of exponents over the ordered basis of g; an
element of U(g) is a finitely supported map from monomials to rationals.
Normal order is non-decreasing basis index, and products are straightened
with ``b_j b_i = b_i b_j + [b_j, b_i]`` for ``j > i``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .lie import LieAlgebra, LieError
from .linalg import Echelon, Vec, add_into, format_rational, nullspace, parse_rational, scale

Mono = tuple


class DegreeTooSmall(LieError):
    pass


def degree(m: Mono) -> int:
    return sum(m)


def _first(m: Mono) -> int:
    for j, e in enumerate(m):
        if e:
            return j
    return len(m)


def _bump(m: Mono, i: int, by: int = 1) -> Mono:
    return m[:i] + (m[i] + by,) + m[i + 1:]


class Enveloping:
    """The enveloping algebra U(g) with memoized straightening."""

    def __init__(self, g: LieAlgebra):
        self.g = g
        self.n = g.dim
        self.unit_mono = (0,) * self.n
        self._gen_cache: dict = {}
        self._mul_cache: dict = {}
        self._anti_cache: dict = {}
        self._basis_cache: dict = {}

    def __repr__(self):
        return f"U({self.g.name})"

    # -- construction ---------------------------------------------------------

    def element(self, terms=None) -> "UElement":
        return UElement(self, terms or {})

    def one(self) -> "UElement":
        return UElement(self, {self.unit_mono: Fraction(1)})

    def scalar(self, c) -> "UElement":
        return UElement(self, {self.unit_mono: Fraction(c)} if c else {})

    def gen(self, i) -> "UElement":
        if isinstance(i, str):
            i = self.g.index(i)
        return UElement(self, {_bump(self.unit_mono, i): Fraction(1)})

    def from_vec(self, v: Vec) -> "UElement":
        return UElement(self, {_bump(self.unit_mono, i): Fraction(c) for i, c in v.items() if c})

    def monomial(self, m: Mono, c=1) -> "UElement":
        return UElement(self, {tuple(m): Fraction(c)})

    # -- straightening --------------------------------------------------------

    def gen_times_mono(self, i: int, m: Mono) -> dict:
        """Normal form of b_i · m."""
        key = (i, m)
        hit = self._gen_cache.get(key)
        if hit is not None:
            return hit
        j = _first(m)
        if i <= j:
            out = {_bump(m, i): Fraction(1)}
        else:
            rest = _bump(m, j, -1)
            out: dict = {}
            # b_i b_j rest = b_j (b_i rest) + [b_i, b_j] rest
            for m2, c2 in self.gen_times_mono(i, rest).items():
                add_into(out, self.gen_times_mono(j, m2), c2)
            for k, ck in self.g.c(i, j).items():
                add_into(out, self.gen_times_mono(k, rest), ck)
        self._gen_cache[key] = out
        return out

    def gen_times(self, i: int, terms: dict) -> dict:
        out: dict = {}
        for m, c in terms.items():
            add_into(out, self.gen_times_mono(i, m), c)
        return out

    def mono_times_mono(self, a: Mono, b: Mono) -> dict:
        key = (a, b)
        hit = self._mul_cache.get(key)
        if hit is not None:
            return hit
        j = _first(a)
        if j == self.n:
            out = {b: Fraction(1)}
        elif _last(a) <= _first(b):
            out = {tuple(x + y for x, y in zip(a, b)): Fraction(1)}
        else:
            out = self.gen_times(j, self.mono_times_mono(_bump(a, j, -1), b))
        self._mul_cache[key] = out
        return out

    def multiply(self, u: "UElement", v: "UElement") -> "UElement":
        out: dict = {}
        for a, ca in u.terms.items():
            for b, cb in v.terms.items():
                add_into(out, self.mono_times_mono(a, b), ca * cb)
        return UElement(self, out)

    def normalize(self, word: Sequence, coefficient=1) -> "UElement":
        """Normal form of ``coefficient · b_{w0} b_{w1} ...``."""
        terms = {self.unit_mono: Fraction(coefficient)} if coefficient else {}
        for i in reversed(list(word)):
            if isinstance(i, str):
                i = self.g.index(i)
            terms = self.gen_times(i, terms)
        return UElement(self, terms)

    # -- Hopf structure -------------------------------------------------------

    def antipode_mono(self, m: Mono) -> dict:
        hit = self._anti_cache.get(m)
        if hit is None:
            word = [i for i, e in enumerate(m) for _ in range(e)]
            sign = -1 if len(word) % 2 else 1
            hit = self.normalize(list(reversed(word)), sign).terms
            self._anti_cache[m] = hit
        return hit

    def antipode(self, u: "UElement") -> "UElement":
        out: dict = {}
        for m, c in u.terms.items():
            add_into(out, self.antipode_mono(m), c)
        return UElement(self, out)

    def coproduct(self, u: "UElement") -> dict:
        """Δ(u) as ``{(m1, m2): coeff}``; both legs already in normal order."""
        out: dict = {}
        for m, c in u.terms.items():
            for (m1, m2), k in coproduct_mono(m).items():
                add_into(out, {(m1, m2): k}, c)
        return out

    def counit(self, u: "UElement") -> Fraction:
        return u.terms.get(self.unit_mono, Fraction(0))

    # -- filtration -----------------------------------------------------------

    def filtration_basis(self, d: int) -> list:
        """PBW monomials of degree <= d in graded-lex order."""
        if d < 0:
            raise LieError("filtration degree must be >= 0")
        hit = self._basis_cache.get(d)
        if hit is None:
            monos = [m for k in range(d + 1) for m in _monos_of_degree(self.n, k)]
            hit = (monos, {m: i for i, m in enumerate(monos)})
            self._basis_cache[d] = hit
        return hit[0]

    def index_of(self, d: int) -> dict:
        self.filtration_basis(d)
        return self._basis_cache[d][1]

    def coords(self, u: "UElement", d: int) -> Vec:
        idx = self.index_of(d)
        try:
            return {idx[m]: c for m, c in u.terms.items()}
        except KeyError:
            raise DegreeTooSmall(f"element of degree {u.degree()} exceeds {d}") from None

    def from_coords(self, v: Vec, d: int) -> "UElement":
        monos = self.filtration_basis(d)
        return UElement(self, {monos[i]: Fraction(c) for i, c in v.items() if c})

    # -- text form --------------------------------------------------------------

    def format_mono(self, m: Mono) -> str:
        parts = []
        for i, e in enumerate(m):
            if e == 1:
                parts.append(self.g.labels[i])
            elif e > 1:
                parts.append(f"{self.g.labels[i]}^{e}")
        return "*".join(parts) if parts else "1"

    def parse(self, text: str) -> "UElement":
        """Inverse of :meth:`UElement.text`; also reads the display form ``x*y - 2*z + 1/2``."""
        text = text.strip()
        if text == "0":
            return self.element()
        out = self.element()
        text = re.sub(r"\s+-\s+", " + -", text)
        for term in text.split(" + "):
            term = term.strip()
            coeff = Fraction(1)
            if term.startswith("-") and not re.match(r"-\d", term):
                coeff, term = Fraction(-1), term[1:].strip()
            word = []
            for factor in (f.strip() for f in term.split("*")):
                if not factor:
                    continue
                if re.fullmatch(r"-?\d+(/\d+)?", factor):
                    coeff *= parse_rational(factor)
                    continue
                m = re.fullmatch(r"([^\^\s]+)(?:\^(\d+))?", factor)
                if not m:
                    raise LieError(f"cannot parse factor {factor!r}")
                if m.group(1) == "1" and not m.group(2):
                    continue
                word += [self.g.index(m.group(1))] * int(m.group(2) or 1)
            out = out + self.normalize(word, coeff)
        return out


def _last(m: Mono) -> int:
    for j in range(len(m) - 1, -1, -1):
        if m[j]:
            return j
    return -1


def _monos_of_degree(n: int, k: int) -> list:
    """Exponent vectors of total degree k, lexicographically descending."""
    if n == 0:
        return [()] if k == 0 else []
    out = []
    for e in range(k, -1, -1):
        for rest in _monos_of_degree(n - 1, k - e):
            out.append((e,) + rest)
    return out


_coprod_cache: dict = {}


def coproduct_mono(m: Mono) -> dict:
    hit = _coprod_cache.get(m)
    if hit is None:
        hit = {}
        ranges = [range(e + 1) for e in m]

        def rec(i, left, coeff):
            if i == len(m):
                right = tuple(e - k for e, k in zip(m, left))
                hit[(tuple(left), right)] = Fraction(coeff)
                return
            for k in ranges[i]:
                rec(i + 1, left + [k], coeff * comb(m[i], k))

        rec(0, [], 1)
        _coprod_cache[m] = hit
    return hit


def enveloping(g: LieAlgebra) -> Enveloping:
    u = g._cache.get("U")
    if u is None:
        u = g._cache["U"] = Enveloping(g)
    return u


class UElement:
    """Element of U(g) in PBW normal form."""

    __slots__ = ("U", "terms")

    def __init__(self, U: Enveloping, terms: dict):
        self.U = U
        self.terms = {tuple(m): Fraction(c) for m, c in terms.items() if c}

    def _coerce(self, other):
        if isinstance(other, UElement):
            return other
        if isinstance(other, (int, Fraction)):
            return self.U.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return UElement(self.U, add_into(dict(self.terms), other.terms))

    __radd__ = __add__

    def __neg__(self):
        return UElement(self.U, scale(self.terms, -1))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return UElement(self.U, add_into(dict(self.terms), other.terms, -1))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UElement(self.U, scale(self.terms, Fraction(other)))
        if isinstance(other, UElement):
            return self.U.multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UElement(self.U, scale(self.terms, Fraction(other)))
        return NotImplemented

    def __pow__(self, k: int):
        out = self.U.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        return max((degree(m) for m in self.terms), default=-1)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (degree(t[0]), tuple(-e for e in t[0])))

    def leading(self):
        return self.sorted_terms()[-1] if self.terms else None

    def text(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{format_rational(c)} * {self.U.format_mono(m)}"
                          for m, c in self.sorted_terms())

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in reversed(self.sorted_terms()):
            mono = self.U.format_mono(m)
            if mono == "1":
                parts.append(format_rational(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{format_rational(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def antipode(self) -> "UElement":
        return self.U.antipode(self)

    def counit(self) -> Fraction:
        return self.U.counit(self)

    def coproduct(self) -> dict:
        return self.U.coproduct(self)


def filtration_basis(g: LieAlgebra, d: int) -> list:
    return enveloping(g).filtration_basis(d)


def commutator(u: UElement, v: UElement) -> UElement:
    return u * v - v * u


# -- truncated ideals -----------------------------------------------------------

class TruncatedIdeal:
    """A subspace of U_{<=d} standing for (ideal ∩ U_{<=d}).

    The basis is in reduced echelon form with pivots on the graded-lex
    largest monomial, each basis element monic there.  ``certified`` says
    whether the subspace is known to equal the true slice of the ideal;
    uncertified kernels coming from probing are supersets of it.
    """

    def __init__(self, U: Enveloping, d: int, vectors: Iterable[Vec], certified: bool = True,
                 probe_level=None, label: str = ""):
        self.U = U
        self.degree = d
        self.certified = certified
        self.probe_level = probe_level
        self.label = label
        self._ech = Echelon(key=lambda i: -i)
        for v in vectors:
            self._ech.add(v)
        self.vectors = tuple(self._ech.rows())
        self.basis = tuple(U.from_coords(v, d) for v in self.vectors)

    @classmethod
    def from_elements(cls, U: Enveloping, d: int, elements, **kw) -> "TruncatedIdeal":
        return cls(U, d, [U.coords(u, d) for u in elements], **kw)

    @classmethod
    def zero(cls, U: Enveloping, d: int) -> "TruncatedIdeal":
        return cls(U, d, [])

    @classmethod
    def whole(cls, U: Enveloping, d: int) -> "TruncatedIdeal":
        return cls(U, d, [{i: Fraction(1)} for i in range(len(U.filtration_basis(d)))])

    @classmethod
    def augmentation(cls, U: Enveloping, d: int) -> "TruncatedIdeal":
        return cls(U, d, [{i: Fraction(1)} for i in range(1, len(U.filtration_basis(d)))])

    @property
    def g(self):
        return self.U.g

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def contains(self, u) -> bool:
        v = u if isinstance(u, dict) else self.U.coords(u, self.degree)
        return self._ech.contains(v)

    def reduce(self, v: Vec) -> Vec:
        return self._ech.reduce(v)

    def __le__(self, other: "TruncatedIdeal") -> bool:
        self._check_same(other)
        return all(other.contains(v) for v in self.vectors)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedIdeal):
            return NotImplemented
        return self.U is other.U and self.degree == other.degree and self.vectors == other.vectors

    def __hash__(self):
        return hash((self.degree, self.key()))

    def _check_same(self, other):
        if self.U is not other.U or self.degree != other.degree:
            raise LieError("truncated ideals live in different U_{<=d}")

    def first_missing(self, other: "TruncatedIdeal"):
        """An element of ``self`` not in ``other``, or None."""
        self._check_same(other)
        for v, u in zip(self.vectors, self.basis):
            if not other.contains(v):
                return u
        return None

    def intersection(self, other: "TruncatedIdeal") -> "TruncatedIdeal":
        from .linalg import intersect
        self._check_same(other)
        return TruncatedIdeal(self.U, self.degree, intersect(self.vectors, other.vectors),
                              certified=self.certified and other.certified)

    def restrict(self, d: int) -> "TruncatedIdeal":
        """Slice at a lower degree (exact: pivots sit on the top monomial)."""
        if d > self.degree:
            raise DegreeTooSmall(f"ideal known only up to degree {self.degree}")
        n = len(self.U.filtration_basis(d))
        keep = [v for v in self.vectors if max(v) < n]
        return TruncatedIdeal(self.U, d, keep, certified=self.certified,
                              probe_level=self.probe_level, label=self.label)

    def antipode(self) -> "TruncatedIdeal":
        return TruncatedIdeal.from_elements(self.U, self.degree, [u.antipode() for u in self.basis],
                                            certified=self.certified, probe_level=self.probe_level)

    def is_ad_stable(self) -> bool:
        """Whether [b_i, u] stays inside for every generator b_i and basis element u."""
        return self.ad_defect() is None

    def ad_defect(self):
        gens = [self.U.gen(i) for i in range(self.U.n)]
        for u in self.basis:
            for b in gens:
                w = commutator(b, u)
                if not self.contains(w):
                    return (b, u, w)
        return None

    def texts(self) -> list[str]:
        return [u.text() for u in self.basis]

    def key(self) -> str:
        return " | ".join(repr(u) for u in self.basis) or "0"

    def __repr__(self):
        tag = "" if self.certified else ", uncertified"
        return f"<ideal ∩ U_≤{self.degree}: span{{{', '.join(repr(u) for u in self.basis)}}}{tag}>"

    def report(self) -> dict:
        return {"degree": self.degree, "level": self.probe_level, "certified": self.certified,
                "basis": self.texts()}


def _quotient_map(ideal: TruncatedIdeal):
    """Linear map U_{<=d} -> U_{<=d}/ideal on non-pivot coordinates."""
    def q(v: Vec) -> Vec:
        return ideal.reduce(v)
    return q


def wedge_truncated(V: TruncatedIdeal, W: TruncatedIdeal, d: int) -> TruncatedIdeal:
    """Slice at degree d of ker(U -> U⊗U -> U/V ⊗ U/W)."""
    if V.U is not W.U:
        raise LieError("wedge of ideals from different enveloping algebras")
    if d > V.degree or d > W.degree:
        raise DegreeTooSmall(f"wedge at degree {d} needs both ideals known to degree >= {d}")
    U = V.U
    Vd, Wd = V.restrict(d), W.restrict(d)
    idx = U.index_of(d)
    qv, qw = _quotient_map(Vd), _quotient_map(Wd)
    cache_v: dict = {}
    cache_w: dict = {}
    cols = []
    for m in U.filtration_basis(d):
        col: Vec = {}
        for (m1, m2), c in coproduct_mono(m).items():
            a = cache_v.get(m1)
            if a is None:
                a = cache_v[m1] = qv({idx[m1]: Fraction(1)})
            b = cache_w.get(m2)
            if b is None:
                b = cache_w[m2] = qw({idx[m2]: Fraction(1)})
            for i, x in a.items():
                for j, y in b.items():
                    add_into(col, {(i, j): x * y}, c)
        cols.append(col)
    return TruncatedIdeal(U, d, nullspace(cols), certified=V.certified and W.certified)
