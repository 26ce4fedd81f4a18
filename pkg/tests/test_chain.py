import itertools
import random

import pytest
from hypothesis import given, strategies as st

from liechain.chain import (AbelianGroup, Inverse, Product, RelationNotRespected, Unit, UnknownGenerator,
                            abelian_invariants, build, can_check, class_is_trivial, from_json, merge_by_inclusion,
                            snf_invariants, weyl_coinvariants)
from liechain.highest_weight import root_system
from liechain.lie import LieError


def test_free_rank():
    assert str(abelian_invariants(build(["a", "b", "c"], []))) == "Z^3"


def test_unknown_generator():
    with pytest.raises(UnknownGenerator):
        build(["a"], [("product", "a", "a", "b")])


def test_snf_oracle_small():
    # Z^2 / <(2, 4), (6, 8)>: det -8, gcd of entries 2 -> Z/2 ⊕ Z/4
    assert snf_invariants([[2, 4], [6, 8]], 2) == AbelianGroup(0, (2, 4))
    assert str(snf_invariants([[2, 0]], 2)) == "Z ⊕ Z/2"
    with pytest.raises(LieError):
        AbelianGroup(0, (4, 2))


@given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=1, max_size=4))
def test_snf_order_is_gcd_of_minors(rows):
    # for a full-rank square-ish presentation the group order is the gcd of maximal minors
    from math import gcd
    from sympy import Matrix
    G = snf_invariants(rows, 3)
    M = Matrix(rows)
    if M.rank() < 3:
        assert G.rank == 3 - M.rank()
        return
    g = 0
    for idx in itertools.combinations(range(len(rows)), 3):
        g = gcd(g, int(M.extract(list(idx), [0, 1, 2]).det()))
    assert G.rank == 0 and G.order == abs(g)


def test_weyl_coinvariants():
    A1, A2 = root_system("A1"), root_system("A2")
    assert str(weyl_coinvariants(A1)) == "Z/2"
    assert str(weyl_coinvariants(A2)) == "Z/3"
    assert weyl_coinvariants(A1, lattice=False).is_trivial
    assert weyl_coinvariants(A2, lattice=False).is_trivial


def test_unit_and_inverse_rows():
    p = build([("e", (0,)), ("a", (1,)), ("b", (-1,))], [Unit("e"), Inverse("a", "b")])
    assert str(abelian_invariants(p)) == "Z"
    assert p.matrix() == [[1, 0, 0], [0, 1, 1]]


def test_merge_chain_collapses():
    p = build(["J", "J1", "J2", "K"], [])
    q = merge_by_inclusion(p, [("J", "J1"), ("J1", "J2")])
    assert sorted(q.generators) == ["J", "K"]
    assert merge_by_inclusion(p, []).to_json() == p.to_json()


def test_merge_idempotent_and_order_independent():
    rng = random.Random(5)
    ids = [f"g{i}" for i in range(8)]
    rels = [Product(*rng.sample(ids, 3)) for _ in range(6)]
    p = build(ids, rels)
    pairs = [tuple(rng.sample(ids, 2)) for _ in range(4)]
    q = merge_by_inclusion(p, pairs)
    assert merge_by_inclusion(q, [(a, b) for a, b in pairs if a in q.generators and b in q.generators]).to_json() \
        == q.to_json()
    for _ in range(5):
        shuffled = [(b, a) if rng.random() < .5 else (a, b) for a, b in rng.sample(pairs, len(pairs))]
        assert merge_by_inclusion(p, shuffled).to_json() == q.to_json()


def test_faithful_handle_collapses():
    p = build(["0", "J1", "J2"], [Unit("0"), Product("J2", "J1", "J1")])
    q = merge_by_inclusion(p, [("0", "J1"), ("0", "J2")])
    assert abelian_invariants(q).is_trivial


def test_json_roundtrip():
    p = build([("a", (1,)), ("b", (2,)), ("c", (3,))], [Product("c", "a", "b"), Inverse("a", "b")])
    assert from_json(p.to_json()).to_json() == p.to_json()
    with pytest.raises(LieError):
        from_json('{"generators": [{"id": "a"}], "relations": [{"type": "quotient", "args": ["a"]}]}')


def test_swapped_products_do_not_change_snf():
    rng = random.Random(9)
    ids = [f"g{i}" for i in range(6)]
    for _ in range(10):
        rels = [Product(*rng.sample(ids, 3)) for _ in range(4)]
        p = build(ids, rels)
        q = build(ids, rels + [Product(r.a, r.c, r.b) for r in rels])
        assert abelian_invariants(p) == abelian_invariants(q)


def test_can_check_h3_style():
    chars = {f"f{c}": (c,) for c in (1, -1, 2, -2, 3)}
    rels = [Product("f2", "f1", "f1"), Product("f3", "f1", "f2"), Inverse("f1", "f-1"), Inverse("f2", "f-2")]
    rep = can_check(build(list(chars.items()), rels))
    assert rep.holds and str(rep.abelianization) == "Z" and rep.image_rank == 1


def test_can_check_corrupted_relation():
    p = build([("g1", (1,)), ("g3", (3,))], [Product("g3", "g1", "g1")])
    with pytest.raises(RelationNotRespected) as e:
        can_check(p)
    assert [str(x) for x in e.value.defect] == ["1"]
    assert e.value.relation == Product("g3", "g1", "g1")


def test_can_check_detects_torsion_and_rank_gap():
    p = build([("a", (1,)), ("b", (1,))], [])
    rep = can_check(p)
    assert not rep.holds and rep.notes


def test_class_is_trivial():
    p = build(["a", "b"], [Product("a", "b", "b"), Unit("b")])
    assert class_is_trivial(p, "a")
    assert not class_is_trivial(build(["a"], []), "a")
