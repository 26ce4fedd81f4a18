from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from liechain.highest_weight import (NotDominantIntegral, UnsupportedType, casimir, casimir_formula, casimir_slice,
                                     central_character_hc, grid, minimal_primitive_truncated, root_system,
                                     simple_quotient, tensor_hw_vector, verma)
from liechain.representations import kernel_truncated

A1 = root_system("A1")
A2 = root_system("A2")


def test_root_system_data():
    assert len(A1.positive_roots) == 1 and A1.delta == (1,) and len(A1.weyl) == 2
    assert len(A2.positive_roots) == 3 and A2.delta == (1, 1) and len(A2.weyl) == 6
    for rs in (A1, A2):
        assert rs.act(rs.longest, rs.delta) == tuple(-x for x in rs.delta)
    with pytest.raises(UnsupportedType):
        root_system("B2")


def test_weyl_group_closed():
    for rs in (A1, A2):
        mats = {tuple(map(tuple, w)) for w in rs.weyl}
        for a in rs.weyl:
            for b in rs.weyl:
                prod = tuple(tuple(sum(a[i][k] * b[k][j] for k in range(rs.rank)) for j in range(rs.rank))
                             for i in range(rs.rank))
                assert prod in mats


def test_verma_a1_top_and_straightening():
    M = verma(A1, (1,), 4)
    g = A1.algebra
    U = M.U
    v = M.top
    assert not M.act(U.gen("h"), v)
    assert not M.act(U.gen("e"), v)
    # e f v = [e, f] v = h v = 0 for highest weight 0
    assert not M.act(U.gen("e") * U.gen("f"), v)
    assert g.dim == 3


@pytest.mark.parametrize("lam", [(3,), (Fraction(1, 2),), (-2,)])
def test_verma_weights(lam):
    M = verma(A1, lam, 5)
    for key in M.probes(0):
        assert M.weight_of(key) == (lam[0] - 1 - 2 * key[0][0],)
        wt = lam[0] - 1 - 2 * key[0][0]
        assert M.act_gen(M.g.index("h"), key) == ({key: wt} if wt else {})


def test_verma_a2_top_weight():
    M = verma(A2, (2, 3), 2)
    g = A2.algebra
    for l, w in zip(A2.h_labels, (1, 2)):
        assert M.act_gen(g.index(l), next(iter(M.top))) == {next(iter(M.top)): w}
    for l in A2.raising_labels:
        assert not M.act_gen(g.index(l), next(iter(M.top)))


def test_casimir_normalization():
    assert casimir(A1).text() == casimir(A1).U.parse("1/2*h^2 + 2*e*f - h").text()
    assert central_character_hc(A1, (1,)) == 0
    assert central_character_hc(A1, (3,)) == central_character_hc(A1, (-3,)) == 4


@given(st.fractions(min_value=-6, max_value=6, max_denominator=6))
def test_casimir_matches_closed_form(x):
    assert central_character_hc(A1, (x,)) == casimir_formula(x)


def test_casimir_separates_orbits_a1():
    pts = [Fraction(k, 2) for k in range(-8, 9)]
    for a in pts:
        for b in pts:
            same = central_character_hc(A1, (a,)) == central_character_hc(A1, (b,))
            assert same == (a == b or a == -b)


def test_casimir_weyl_invariant_a2():
    for lam in grid(A2, Fraction(-1), Fraction(2), Fraction(1, 2)):
        c = central_character_hc(A2, lam)
        for w in A2.weyl:
            assert central_character_hc(A2, A2.act(w, lam)) == c


def test_tensor_hw_examples():
    w = tensor_hw_vector(A1, (1,), (1,))
    assert w.weight == (0,) and w.relation() == ((1,), (1,), (1,))
    w = tensor_hw_vector(A1, (2,), (3,))
    assert w.weight == (3,) and w.target == (4,)
    w = tensor_hw_vector(A2, (1, 1), (1, 1))
    assert w.weight == (0, 0) and set(w.killed_by) >= {"e1", "e2"}


def test_tensor_hw_on_grid():
    for lam in grid(A1, -2, 3):
        for mu in grid(A1, -2, 3):
            w = tensor_hw_vector(A1, lam, mu)
            assert w.target == (lam[0] + mu[0] - 1,)


def test_minimal_primitive_examples():
    J1 = minimal_primitive_truncated(A1, (1,), 2)
    assert J1.certified and J1.texts() == ["-2 * h + 4 * e*f + 1 * h^2"]
    assert J1 == casimir_slice(A1, (1,), 2)
    J3, Jm3 = minimal_primitive_truncated(A1, (3,), 2), minimal_primitive_truncated(A1, (-3,), 2)
    assert J3 == Jm3
    assert not J1 <= J3 and not J3 <= J1


@pytest.mark.parametrize("mu,dim", [((0,), 1), ((2,), 3), ((4,), 5)])
def test_simple_quotient_a1(mu, dim):
    rep = simple_quotient(A1, (mu[0] + 1,))
    assert rep.n == dim


A2_DOMINANT = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0), (0, 2), (2, 1), (1, 2), (3, 0), (0, 3)]


@pytest.mark.parametrize("mu", A2_DOMINANT)
def test_simple_quotient_weyl_dimension_a2(mu):
    lam = tuple(x + 1 for x in mu)
    m, n = mu
    assert A2.weyl_dimension(mu) == (m + 1) * (n + 1) * (m + n + 2) // 2
    assert simple_quotient(A2, lam).n == A2.weyl_dimension(mu)


def test_simple_quotient_a2_standard():
    assert simple_quotient(A2, (2, 1)).n == 3


def test_not_dominant():
    with pytest.raises(NotDominantIntegral):
        simple_quotient(A1, (0,))
    with pytest.raises(NotDominantIntegral):
        simple_quotient(A2, (Fraction(3, 2), 1))


@pytest.mark.parametrize("lam", [(1,), (2,), (3,), (4,)])
def test_minimality(lam):
    J = minimal_primitive_truncated(A1, lam, 2)
    assert J <= kernel_truncated(simple_quotient(A1, lam), 2)


def test_minimality_a2():
    J = minimal_primitive_truncated(A2, (2, 1), 2)
    assert J <= kernel_truncated(simple_quotient(A2, (2, 1)), 2)
