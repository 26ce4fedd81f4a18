"""Exact sparse linear algebra over the rationals.

Vectors are ``dict`` objects mapping a column key to a nonzero ``Fraction``.
Column keys are arbitrary hashables; the pivot priority of a column is given
by an optional ``key`` function (smaller = chosen first as pivot).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Sequence

Vec = dict

__all__ = [
    "Echelon",
    "Vec",
    "add_into",
    "scale",
    "nullspace",
    "rank",
    "intersect",
    "parse_rational",
    "format_rational",
    "mat_mul",
    "mat_vec",
    "identity",
    "mat_add",
    "mat_scale",
    "transpose",
    "kron",
    "is_zero_matrix",
]


def parse_rational(text) -> Fraction:
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"rationals must be given as strings, got {text!r}")
    return Fraction(text.strip())


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


def add_into(target: Vec, other: Vec, factor=1) -> Vec:
    """target += factor * other, in place, dropping zeros."""
    if not factor:
        return target
    for k, v in other.items():
        s = target.get(k, 0) + factor * v
        if s:
            target[k] = s
        else:
            target.pop(k, None)
    return target


def scale(v: Vec, factor) -> Vec:
    if not factor:
        return {}
    return {k: factor * c for k, c in v.items()}


class Echelon:
    """Incrementally maintained reduced row echelon form.

    Every stored row has a pivot column with entry 1, and no other stored
    row has a nonzero entry in that column.  ``track=True`` records, for
    every stored row, the combination of inserted vectors that produced it;
    vectors reducing to zero are then reported as dependencies.
    """

    def __init__(self, key: Callable[[Hashable], object] | None = None, track: bool = False):
        self._key = key
        self.pivots: dict = {}
        self.track = track
        self._combo: dict = {}
        self._count = 0

    def _choose_pivot(self, v: Vec):
        if self._key is None:
            try:
                return min(v)
            except TypeError:
                return min(v, key=repr)
        return min(v, key=self._key)

    def reduce(self, v: Vec, combo: Vec | None = None) -> Vec:
        r = dict(v)
        for col in [c for c in r if c in self.pivots]:
            c = r.get(col)
            if c:
                add_into(r, self.pivots[col], -c)
                if combo is not None:
                    add_into(combo, self._combo[col], -c)
        return r

    def add(self, v: Vec):
        """Insert ``v``; return the dependency combination if it reduces to zero.

        Without tracking, returns True when ``v`` enlarged the span.
        """
        idx = self._count
        self._count += 1
        combo = {idx: Fraction(1)} if self.track else None
        r = self.reduce(v, combo)
        if not r:
            return combo if self.track else False
        p = self._choose_pivot(r)
        inv = 1 / Fraction(r[p])
        r = scale(r, inv)
        if combo is not None:
            combo = scale(combo, inv)
        for col, row in self.pivots.items():
            c = row.get(p)
            if c:
                add_into(row, r, -c)
                if self.track:
                    add_into(self._combo[col], combo, -c)
        self.pivots[p] = r
        if self.track:
            self._combo[p] = combo
            return None
        return True

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    def __len__(self):
        return len(self.pivots)

    def rows(self) -> list[Vec]:
        cols = sorted(self.pivots, key=self._key) if self._key else sorted(self.pivots)
        return [dict(self.pivots[c]) for c in cols]

    def copy(self) -> "Echelon":
        e = Echelon(self._key)
        e.pivots = {c: dict(r) for c, r in self.pivots.items()}
        return e


def rank(vectors: Iterable[Vec]) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return len(e)


def nullspace(columns: Sequence[Vec]) -> list[Vec]:
    """Basis of {c : sum_j c_j columns[j] = 0}, as vectors indexed by j."""
    e = Echelon(track=True)
    out = []
    for col in columns:
        dep = e.add(col)
        if dep is not None:
            out.append(dep)
    return out


def intersect(a: Sequence[Vec], b: Sequence[Vec]) -> list[Vec]:
    """Spanning set of span(a) ∩ span(b)."""
    cols = list(a) + [scale(v, -1) for v in b]
    out = []
    for dep in nullspace(cols):
        w: Vec = {}
        for j, c in dep.items():
            if j < len(a):
                add_into(w, a[j], c)
        if w:
            out.append(w)
    return out


# -- small dense matrices (lists of lists of Fraction) ----------------------

def identity(n: int):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    if not a:
        return []
    m = len(b[0]) if b else 0
    out = []
    for row in a:
        r = [Fraction(0)] * m
        for k, x in enumerate(row):
            if x:
                bk = b[k]
                for j in range(m):
                    if bk[j]:
                        r[j] += x * bk[j]
        out.append(r)
    return out


def mat_vec(a, v):
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def transpose(a):
    return [list(r) for r in zip(*a)] if a else []


def kron(a, b):
    n, m = len(a), len(b)
    out = [[Fraction(0)] * (n * m) for _ in range(n * m)]
    for i in range(n):
        for j in range(n):
            x = a[i][j]
            if not x:
                continue
            for k in range(m):
                for l in range(m):
                    if b[k][l]:
                        out[i * m + k][j * m + l] = x * b[k][l]
    return out


def is_zero_matrix(a) -> bool:
    return all(not x for row in a for x in row)
