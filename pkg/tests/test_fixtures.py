import pytest

from liechain import fixtures
from liechain.chain import abelian_invariants, can_check


def test_names():
    assert {"h3-tensnil", "aff1-faithful", "a1-delta-grid", "a2-delta-grid"} <= set(fixtures.names())
    with pytest.raises(fixtures.UnknownFixture):
        fixtures.get("nope")


@pytest.mark.parametrize("name", fixtures.names())
def test_every_relation_was_verified(fixture_results, name):
    res = fixture_results[name]
    assert res.all_verified()
    rep = res.report()
    assert rep["certified"] and rep["verified"]
    assert abelian_invariants(res.merged) == res.group


def test_h3_is_z_and_can_holds(fixture_results):
    res = fixture_results["h3-tensnil"]
    assert str(res.group) == "Z"
    can = res.can()
    assert can.holds and can.image_rank == 1
    assert len(res.presentation.generators) == 5
    # every relation came from a tensnil or antipode check that held
    assert {e["kind"] for e in res.log} == {"tensnil", "antipode"}


def test_h3_generators_keyed_by_ideal(fixture_results):
    res = fixture_results["h3-tensnil"]
    # handles are ideal keys, so rebuilding gives the same presentation
    assert fixtures.h3_tensnil().presentation.to_json() == res.presentation.to_json()


def test_aff1_collapses(fixture_results):
    res = fixture_results["aff1-faithful"]
    assert res.group.is_trivial
    assert len(res.merged.generators) == 1
    checks = [e["check"] for e in res.log if "check" in e]
    assert "shift module kernel" in checks and any(c.startswith("simplicity probe") for c in checks)


@pytest.mark.parametrize("name,mod", [("a1-delta-grid", 2), ("a2-delta-grid", 3)])
def test_lattice_grids_carry_center_obstruction(fixture_results, name, mod):
    res = fixture_results[name]
    assert str(res.group) == f"Z/{mod}"
    ob = res.obstruction
    assert ob["target"] == f"Z/{mod}" and ob["proves_nontrivial"]
    assert res.report()["matches_expected"] is False


def test_a2_grid_size(fixture_results):
    assert len(fixture_results["a2-delta-grid"].presentation.generators) >= 12


def test_weyl_identifications_hold(fixture_results):
    for name in ("a1-delta-grid", "a2-delta-grid"):
        weyl = [e for e in fixture_results[name].log if e["check"] == "Weyl identification"]
        assert weyl and all(e["holds"] and e["certified"] for e in weyl)


@pytest.mark.parametrize("coarse,fine", [("a1-delta-grid", "a1-half-grid"), ("a2-delta-grid", "a2-third-grid")])
def test_refinement_kills_lattice_classes(fixture_results, coarse, fine):
    killed = fixtures.refinement_kills(fixture_results[coarse], fixture_results[fine])
    assert killed and all(killed.values())


def test_compact_contrast(fixture_results):
    res = fixture_results["a1-compact-contrast"]
    assert str(res.group) == "Z/2" and res.report()["matches_expected"]


def test_can_on_characterless_grid_reports_torsion(fixture_results):
    rep = can_check(fixture_results["a1-delta-grid"].merged)
    assert not rep.holds and rep.image_rank == 0
