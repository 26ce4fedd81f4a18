"""Built-in Lie algebras.

Every algebra here has rational structure constants and, where solvable,
rational roots, so nothing downstream needs an algebraic number field.
The simple algebras are built from matrix units so that their Chevalley
bases and trace forms come out exactly.
"""
from __future__ import annotations

import json
import os
from fractions import Fraction
from pathlib import Path

from .lie import LieAlgebra, LieError, from_brackets, from_dict, validate
from .linalg import Echelon, mat_mul

CATALOG_ENV = "LIECHAIN_CATALOG"


def abelian(n: int) -> LieAlgebra:
    if n < 1:
        raise LieError("abelian(n) needs n >= 1")
    labels = ["t"] if n == 1 else [f"t{i + 1}" for i in range(n)]
    return validate({}, labels, f"abelian({n})")


def heisenberg3() -> LieAlgebra:
    return from_brackets("heisenberg3", ["x", "y", "z"], {("x", "y"): {"z": 1}})


def heisenberg5() -> LieAlgebra:
    return from_brackets("heisenberg5", ["x1", "x2", "y1", "y2", "z"],
                         {("x1", "y1"): {"z": 1}, ("x2", "y2"): {"z": 1}})


def aff1() -> LieAlgebra:
    """Non-abelian 2-dimensional algebra [a, b] = b."""
    return from_brackets("aff1", ["a", "b"], {("a", "b"): {"b": 1}})


def oscillator() -> LieAlgebra:
    """Split oscillator algebra: h3 = <e, f, z> extended by a grading element h."""
    return from_brackets("oscillator", ["h", "e", "f", "z"], {
        ("h", "e"): {"e": 1},
        ("h", "f"): {"f": -1},
        ("e", "f"): {"z": 1},
    })


def _unit(n, i, j):
    m = [[Fraction(0)] * n for _ in range(n)]
    m[i][j] = Fraction(1)
    return m


def _diff(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def from_matrices(name: str, labels, mats) -> LieAlgebra:
    """Linear Lie algebra spanned by the (independent) matrices ``mats``."""
    n = len(mats[0])
    flat = [[m[i][j] for i in range(n) for j in range(n)] for m in mats]

    e = Echelon(track=True)
    for row in flat:
        if e.add({k: v for k, v in enumerate(row) if v}) is not None:
            raise LieError("matrices are linearly dependent")

    def coords(m):
        target = [m[i][j] for i in range(n) for j in range(n)]
        combo = {}
        r = e.reduce({k: v for k, v in enumerate(target) if v}, combo)
        if r:
            raise LieError("bracket leaves the matrix span")
        return {k: -v for k, v in combo.items()}

    table = {}
    for i, a in enumerate(mats):
        for j in range(i + 1, len(mats)):
            b = mats[j]
            table[(i, j)] = coords(_diff(mat_mul(a, b), mat_mul(b, a)))
    g = validate(table, labels, name)
    g._cache["matrices"] = [[list(r) for r in m] for m in mats]
    return g


def sl2() -> LieAlgebra:
    """sl2 with PBW order e < h < f."""
    e, f = _unit(2, 0, 1), _unit(2, 1, 0)
    h = _diff(_unit(2, 0, 0), _unit(2, 1, 1))
    return from_matrices("sl2", ["e", "h", "f"], [e, h, f])


def sl3() -> LieAlgebra:
    """sl3 in a Chevalley basis, ordered e1 e2 e3 h1 h2 f1 f2 f3."""
    E = lambda i, j: _unit(3, i, j)
    h1 = _diff(E(0, 0), E(1, 1))
    h2 = _diff(E(1, 1), E(2, 2))
    mats = [E(0, 1), E(1, 2), E(0, 2), h1, h2, E(1, 0), E(2, 1), E(2, 0)]
    return from_matrices("sl3", ["e1", "e2", "e3", "h1", "h2", "f1", "f2", "f3"], mats)


BUILTIN = {
    "heisenberg3": (heisenberg3, "3-dim Heisenberg algebra [x,y]=z; nilpotent, center <z>"),
    "heisenberg5": (heisenberg5, "5-dim Heisenberg algebra; nilpotent, center <z>"),
    "aff1": (aff1, "non-abelian 2-dim algebra [a,b]=b; faithful simple shift module"),
    "oscillator": (oscillator, "split oscillator algebra; solvable, not nilpotent, center <z>"),
    "sl2": (sl2, "sl2 Chevalley basis e<h<f; semisimple, type A1"),
    "sl3": (sl3, "sl3 Chevalley basis; semisimple, type A2"),
}


_instances: dict = {}


def names() -> list[str]:
    return ["abelian(n)"] + sorted(BUILTIN)


def describe() -> list[tuple[str, str]]:
    rows = [("abelian(n)", "n-dim abelian algebra; center = everything")]
    rows += [(k, BUILTIN[k][1]) for k in sorted(BUILTIN)]
    return rows


def get(name: str) -> LieAlgebra:
    """Look up a catalog algebra by name, e.g. ``heisenberg3`` or ``abelian(2)``.

    Names not built in are searched as ``<name>.json`` in the directory named
    by the ``LIECHAIN_CATALOG`` environment variable.
    """
    name = name.strip()
    if name.startswith("abelian(") and name.endswith(")"):
        try:
            return abelian(int(name[len("abelian("):-1]))
        except ValueError:
            raise LieError(f"bad abelian size in {name!r}") from None
    if name in BUILTIN:
        if name not in _instances:
            _instances[name] = BUILTIN[name][0]()
        return _instances[name]
    extra = os.environ.get(CATALOG_ENV)
    if extra:
        path = Path(extra) / f"{name}.json"
        if path.is_file():
            return from_dict(json.loads(path.read_text()))
    raise LieError(f"unknown algebra {name!r}")
