import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from liechain import catalog
from liechain.lie import (AntisymmetryViolation, JacobiViolation, NotAnIdeal, NotASubalgebra, NotSolvable,
                          Subspace, direct_sum, from_brackets, from_json, nilradical, quotient, series, theta)
from liechain.orbit import ideal_flag

from conftest import CATALOG, SOLVABLE


def test_validate_heisenberg_and_sl2():
    g = from_brackets("h3", ["x", "y", "z"], {("x", "y"): {"z": 1}})
    assert g.dim == 3
    s = from_brackets("sl2", ["e", "h", "f"], {("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}, ("e", "f"): {"h": 1}})
    assert s.dim == 3


def test_antisymmetry_violation():
    with pytest.raises(AntisymmetryViolation):
        from_brackets("bad", ["x", "y", "z"], {("x", "y"): {"z": 1}, ("y", "x"): {"z": 1}})


def test_jacobi_violation_carries_defect():
    # [x,y]=x, [y,z]=y, [z,x]=0 has Jacobi defect on (x,y,z)
    with pytest.raises(JacobiViolation) as e:
        from_brackets("bad", ["x", "y", "z"], {("x", "y"): {"x": 1}, ("y", "z"): {"y": 1}})
    assert e.value.args


@pytest.mark.parametrize("name,center", [("heisenberg3", ["z"]), ("sl2", []), ("abelian(2)", ["t1", "t2"])])
def test_center(name, center):
    g = catalog.get(name)
    z = g.center()
    if name == "abelian(2)":
        assert z == g.whole()
    else:
        assert z.labels() == center


def test_series_examples(h3, aff1, sl2):
    lc = series(h3, "lower_central")
    assert [s.dim for s in lc] == [3, 1, 0]
    assert repr(lc[1]) == "span{z}"
    assert h3.is_nilpotent
    d = series(aff1, "derived")
    assert [s.dim for s in d] == [2, 1, 0]
    assert aff1.is_solvable and not aff1.is_nilpotent
    assert [s.dim for s in series(sl2, "derived")] == [3]
    assert not sl2.is_solvable


def test_nilradical_examples(h3, aff1, sl2):
    assert nilradical(h3) == h3.whole()
    assert repr(nilradical(aff1)) == "span{b}"
    with pytest.raises(NotSolvable):
        nilradical(sl2)


def test_nilradical_of_sum_is_componentwise():
    s, _ = direct_sum(catalog.get("abelian(1)"), catalog.get("aff1"))
    n = nilradical(s)
    assert sorted(n.labels()) == sorted([s.labels[0], "b_2"])


def test_quotient_and_sum(h3, aff1):
    q, _ = quotient(h3, h3.span_labels("z"))
    assert q.dim == 2 and q.center().dim == 2
    with pytest.raises(NotAnIdeal):
        quotient(h3, h3.span_labels("x"))
    s, diag = direct_sum(aff1, aff1)
    assert s.dim == 4
    assert s.bracket({0: 1}, {3: 1}) == {} and s.bracket({2: 1}, {3: 1}) == {3: Fraction(1)}
    assert len(diag) == 4 and diag[0][0] == diag[2][0] == 1


def test_theta_examples(aff1, h3):
    assert theta(aff1, aff1.span_labels("b")).coords == (0,)
    assert theta(aff1, aff1.span_labels("a")).coords == (Fraction(1, 2),)
    with pytest.raises(NotASubalgebra):
        theta(h3, h3.span_labels("x", "y"))


@pytest.mark.parametrize("name", ["heisenberg3", "heisenberg5"])
def test_theta_vanishes_on_nilpotent(name):
    g = catalog.get(name)
    for h in ideal_flag(g) + [g.span_labels(g.labels[0], g.labels[-1])]:
        if h.is_subalgebra():
            assert not any(theta(g, h).coords)


@pytest.mark.parametrize("name", SOLVABLE)
def test_center_inside_nilradical(name):
    g = catalog.get(name)
    n = nilradical(g)
    assert g.center() <= n <= g.whole()
    assert g.derived_series()[1] <= n
    assert n.is_ideal()


def _ideals(g):
    out = [g.center()] + g.derived_series() + g.lower_central_series() + ideal_flag(g)
    if g.is_solvable:
        out.append(nilradical(g))
    return [k for k in out if k.is_ideal()]


def test_quotient_commutes_with_series():
    rng = random.Random(11)
    pool = [(n, k) for n in SOLVABLE for k in _ideals(catalog.get(n))]
    for name, k in rng.sample(pool, 20):
        g = k.parent
        q, proj = quotient(g, k)
        img = [Subspace(q, [proj(v) for v in s.basis]) for s in g.derived_series()]
        mine = q.derived_series()
        # the image series stabilises where the quotient's does
        for i, s in enumerate(mine):
            assert s == img[min(i, len(img) - 1)]
        assert img[len(mine) - 1:] and all(s == mine[-1] for s in img[len(mine) - 1:])


@pytest.mark.parametrize("name", CATALOG)
def test_json_roundtrip(name):
    g = catalog.get(name)
    text = g.to_json()
    assert from_json(text).to_json() == text


@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3), st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_bracket_antisymmetric_on_sl2(a, b):
    g = catalog.get("sl2")
    x = {i: Fraction(c) for i, c in enumerate(a) if c}
    y = {i: Fraction(c) for i, c in enumerate(b) if c}
    xy, yx = g.bracket(x, y), g.bracket(y, x)
    assert xy == {k: -v for k, v in yx.items()}
