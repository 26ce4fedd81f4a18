import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from liechain import catalog
from liechain.enveloping import enveloping
from liechain.highest_weight import root_system, simple_quotient
from liechain.lie import LieError
from liechain.representations import (InducedModule, LevelExceeded, MatrixRep, NotScalarAction, NotSubordinate,
                                      ShiftModule, TensorModule, central_character, certify, direct_sum,
                                      direct_sum_matrix, dual, kernel_truncated, matrix_coefficients_perp,
                                      module_from_json, probe_kernel, push_pull_check, restrict,
                                      shift_simplicity_probe, tensor, twist_element, weakly_contains)


def fr(x):
    return Fraction(x)


# -- finite-dimensional -------------------------------------------------------

def test_dual_of_character_negates(h3):
    lam = MatrixRep.from_functional(h3, [2, -1, 0])
    assert dual(lam).images == MatrixRep.from_functional(h3, [-2, 1, 0]).images


def test_dual_involution_and_adjoint_self_dual(sl2):
    ad = MatrixRep.adjoint(sl2)
    assert dual(dual(ad)).images == ad.images
    assert kernel_truncated(dual(ad), 2) == kernel_truncated(ad, 2)


@pytest.mark.parametrize("name", ["heisenberg3", "sl2", "aff1"])
def test_dual_kernel_is_antipode_image(name):
    g = catalog.get(name)
    for rho in [MatrixRep.adjoint(g), MatrixRep.trivial(g)]:
        assert kernel_truncated(dual(rho), 2) == kernel_truncated(rho, 2).antipode()


def test_tensor_of_characters_adds(h3):
    a = MatrixRep.from_functional(h3, [1, 2, 0])
    b = MatrixRep.from_functional(h3, [3, -1, 0])
    assert tensor(a, b).images == MatrixRep.from_functional(h3, [4, 1, 0]).images


def test_trivial_is_tensor_unit(sl2):
    ad = MatrixRep.adjoint(sl2)
    assert kernel_truncated(tensor(MatrixRep.trivial(sl2), ad), 2) == kernel_truncated(ad, 2)


def test_restrict_reindexes(aff1, h3):
    hs, r = restrict(MatrixRep.from_functional(aff1, [1, 0]), aff1.span_labels("a"))
    assert hs.dim == 1 and r.images == [[[fr(1)]]]
    _, r = restrict(MatrixRep.adjoint(h3), h3.span_labels("z"))
    assert r.images == [[[0] * 3 for _ in range(3)]]


def test_bad_matrix_rep_rejected(h3):
    with pytest.raises(LieError):
        MatrixRep(h3, [[[1]], [[1]], [[1]]])  # [x,y] = z must act as 0 on a line
    with pytest.raises(LieError):
        MatrixRep(h3, [[], [], []])


# -- induced modules ----------------------------------------------------------

def test_induced_h3_straightening(h3):
    h = h3.span_labels("y", "z")
    M = InducedModule(h3, h, [0, 1], level=6)
    U = M.U
    for n in range(5):
        v = {((n,), 0): fr(1)}
        assert M.act(U.gen("z"), v) == v
        # y x^n = x^n y - n x^{n-1} z
        expect = {((n - 1,), 0): fr(-n)} if n else {}
        assert M.act(U.gen("y"), v) == expect


def test_center_induction_scalar(h3):
    M = InducedModule(h3, h3.center(), [5], level=3)
    for key in M.probes(0):
        assert M.act_gen(2, key) == {key: fr(5)}
    assert central_character(M).coords == (5,)


def test_twist_irrelevant_on_nilpotent(h3):
    h = h3.span_labels("y", "z")
    a = kernel_truncated(InducedModule(h3, h, [0, 1], level=8), 2)
    b = kernel_truncated(InducedModule(h3, h, [0, 1], twist=True, level=8), 2)
    assert a == b


def test_twist_shifts_on_aff1(aff1):
    M = InducedModule(aff1, aff1.span_labels("a"), [0], twist=True, level=4)
    assert M.theta == (Fraction(1, 2),)


def test_not_subordinate(aff1):
    with pytest.raises(NotSubordinate):
        InducedModule(aff1, aff1.whole(), [0, 1])


def test_level_exceeded(h3):
    M = InducedModule(h3, h3.span_labels("y", "z"), [0, 1], level=2)
    with pytest.raises(LevelExceeded):
        M.act_gen(0, ((2,), 0))


# -- kernels ------------------------------------------------------------------

def test_character_kernel_degree_one(h3):
    K = kernel_truncated(MatrixRep.from_functional(h3, [2, 3, 0]), 1)
    assert sorted(K.texts()) == sorted(["-2 * 1 + 1 * x", "-3 * 1 + 1 * y", "1 * z"])


def test_h3_induced_kernel(h3):
    M = InducedModule(h3, h3.span_labels("y", "z"), [0, 1], level=6)
    K = kernel_truncated(M, 1)
    assert K.texts() == ["-1 * 1 + 1 * z"] and K.certified


def test_shift_module_faithful(aff1):
    S = ShiftModule(aff1, 8)
    K = kernel_truncated(S, 2)
    assert K.dim == 0 and K.certified


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=5))
def test_shift_simplicity(coeffs):
    S = ShiftModule(catalog.get("aff1"), 8)
    p = {i: Fraction(c) for i, c in enumerate(coeffs) if c}
    if not p:
        return
    assert shift_simplicity_probe(S, p) == max(p)


def test_weak_containment_examples(h3):
    ad = MatrixRep.adjoint(h3)
    assert weakly_contains(ad, ad, 2).holds
    lam = MatrixRep.from_functional(h3, [1, -2, 0])
    assert weakly_contains(MatrixRep.trivial(h3), tensor(lam, dual(lam)), 2).holds
    h = h3.span_labels("y", "z")
    M1 = InducedModule(h3, h, [0, 1], level=6)
    M2 = InducedModule(h3, h, [0, 2], level=6)
    r12, r21 = weakly_contains(M1, M2, 1), weakly_contains(M2, M1, 1)
    assert not r12.holds and not r21.holds
    assert r12.witness.text() == "-2 * 1 + 1 * z"
    assert r21.witness.text() == "-1 * 1 + 1 * z"


def test_central_character_examples(h3, sl2):
    assert central_character(MatrixRep.adjoint(sl2)).coords == ()
    h = h3.span_labels("y", "z")
    M1 = InducedModule(h3, h, [0, 1], level=4)
    M2 = InducedModule(h3, h, [0, 2], level=4)
    with pytest.raises(NotScalarAction):
        central_character(direct_sum([M1, M2]))


def test_direct_sum_kernel_is_intersection(h3, aff1):
    a = MatrixRep.from_functional(h3, [1, 0, 0])
    b = MatrixRep.from_functional(h3, [0, 1, 0])
    K = kernel_truncated(direct_sum_matrix([a, b]), 2)
    assert K == kernel_truncated(a, 2).intersection(kernel_truncated(b, 2))
    S = ShiftModule(aff1, 8)
    assert kernel_truncated(direct_sum([S, MatrixRep.trivial(aff1)]), 2).dim == 0
    with pytest.raises(LieError):
        direct_sum([])


def test_tensor_module_central_character_adds(h3):
    h = h3.span_labels("y", "z")
    T = TensorModule(InducedModule(h3, h, [0, 1], level=4), InducedModule(h3, h, [0, 2], level=4), probe_cap=4)
    assert central_character(T).coords == (3,)


# -- matrix coefficients --------------------------------------------------------

def _reps_sl2(g):
    rs = root_system("A1")
    return [MatrixRep.trivial(g), MatrixRep.standard(g), MatrixRep.adjoint(g), simple_quotient(rs, (4,)),
            tensor(MatrixRep.standard(g), MatrixRep.standard(g))]


def test_mc_perp_character(h3):
    lam = MatrixRep.from_functional(h3, [1, 1, 0])
    assert matrix_coefficients_perp(lam, 2) == kernel_truncated(lam, 2)


@pytest.mark.parametrize("d", [1, 2])
def test_mc_perp_sl2(sl2, d):
    for rho in _reps_sl2(sl2):
        assert matrix_coefficients_perp(rho, d, seed=d) == kernel_truncated(rho, d)


# -- push-pull, twists, JSON ------------------------------------------------------

@pytest.mark.parametrize("name,h,W,V", [
    ("aff1", ["b"], [1], [2, 0]),
    ("oscillator", ["e", "z"], [0, 1], [1, 0, 0, 0]),
    ("oscillator", ["h", "z"], [1, 1], [2, 0, 0, 0]),
    ("heisenberg3", ["y", "z"], [0, 1], [1, 3, 0]),
])
def test_push_pull(name, h, W, V):
    g = catalog.get(name)
    rep = push_pull_check(g, g.span_labels(*h), W, V, level=4)
    assert rep["intertwines"] and rep["unitriangular"]


def test_twist_element_matches_character_tensor(h3):
    U = enveloping(h3)
    rng = random.Random(2)
    lam = [2, -1, 0]
    rho = MatrixRep.adjoint(h3)
    shifted = tensor(rho, MatrixRep.from_functional(h3, lam))
    for _ in range(10):
        word = [rng.randrange(3) for _ in range(3)]
        u = U.normalize(word)
        assert rho.matrix_of(twist_element(u, lam)) == shifted.matrix_of(u)


def test_module_json(h3, aff1):
    m = module_from_json(h3, json.dumps({"kind": "induced", "subalgebra": ["y", "z"], "functional": {"z": "1"},
                                         "level": 6}))
    assert kernel_truncated(m, 1).texts() == ["-1 * 1 + 1 * z"]
    s = module_from_json(aff1, json.dumps({"kind": "shift", "N": 8}))
    assert kernel_truncated(s, 2).dim == 0
    with pytest.raises(LieError):
        module_from_json(h3, json.dumps({"kind": "nope"}))


def test_certify(h3):
    M = InducedModule(h3, h3.span_labels("y", "z"), [0, 1], level=6)
    assert certify(M, kernel_truncated(M, 2))
    # probing only the generator gives its annihilator, a left ideal containing y but not [x, y] = z
    K = probe_kernel(M, 2, probes=[((0,), 0)])
    assert K.contains(M.U.gen("y")) and not certify(M, K)
