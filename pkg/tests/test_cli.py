import json

import pytest

from liechain.cli import ExperimentConfig, InvalidInput, main
from liechain import catalog


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_lie_center(capsys):
    code, out, _ = run(capsys, "lie", "center", "--algebra", "heisenberg3")
    assert code == 0 and out.splitlines()[0] == "span{z}"


def test_orbit_check_tensnil(capsys, tmp_path):
    out_file = tmp_path / "r.json"
    code, _, _ = run(capsys, "orbit", "check", "tensnil", "--algebra", "heisenberg3", "--samples", "20",
                     "--deg", "2", "--seed", "7", "--out", str(out_file))
    assert code == 0
    rep = json.loads(out_file.read_text())
    assert rep["holds"] and rep["certified"] and rep["seed"] == 7 and len(rep["instances"]) == 20


def test_chain_solve_lattice_grid_reports_obstruction(capsys):
    # the lattice grid abelianizes to Z/2; the report carries the center-of-SL2 obstruction
    code, out, _ = run(capsys, "chain", "solve", "--fixture", "a1-delta-grid")
    assert code == 1
    assert out.splitlines()[0] == "Z/2"
    rep = json.loads(out[out.index("{"):])
    assert rep["obstruction"]["proves_nontrivial"]


def test_chain_solve_aff1(capsys):
    code, out, _ = run(capsys, "chain", "solve", "--fixture", "aff1-faithful")
    assert code == 0 and out.splitlines()[0] == "trivial group"


def test_chain_solve_file(capsys, tmp_path):
    f = tmp_path / "p.json"
    f.write_text(json.dumps({"generators": [{"id": "a", "character": ["1"]}, {"id": "b", "character": ["1"]},
                                            {"id": "c", "character": ["3"]}],
                             "relations": [{"type": "product", "args": ["c", "a", "b"]}]}))
    code, out, _ = run(capsys, "chain", "solve", "--file", str(f))
    assert code == 1
    rep = json.loads(out[out.index("{"):])
    assert rep["can"]["defect"] == ["1"]


@pytest.mark.parametrize("rational,expect", [(False, "Z/3"), (True, "trivial group")])
def test_coinvariants(capsys, rational, expect):
    argv = ["chain", "coinvariants", "--type", "A2"] + (["--rational"] if rational else [])
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.splitlines()[0] == expect


def test_catalog_listing(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    line = next(l for l in out.splitlines() if l.strip().startswith("aff1 "))
    assert "faithful simple shift module" in line
    assert "a1-delta-grid" in out
    for name in ("heisenberg3", "heisenberg5", "oscillator", "sl2", "sl3", "abelian(n)"):
        assert name in out


@pytest.mark.parametrize("argv", [
    ["chain", "solve", "--fixture", "nope"],
    ["lie", "center"],
    ["lie", "center", "--algebra", "nosuch"],
    ["orbit", "check", "bogus", "--algebra", "heisenberg3"],
    ["orbit", "check", "tensnil", "--algebra", "heisenberg3", "--deg", "0"],
    ["hw", "quotient", "--type", "A1", "--weight", "0"],
    ["lie", "frobnicate"],
])
def test_invalid_input_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_strict_level_guard():
    g = catalog.get("heisenberg3")
    with pytest.raises(InvalidInput):
        ExperimentConfig("heisenberg3", deg=2, level=1, strict=True).validate(g)


@pytest.mark.parametrize("argv", [
    ["orbit", "check", "antipode", "--algebra", "aff1", "--samples", "3", "--seed", "4"],
    ["rep", "permanence", "tensor", "--algebra", "oscillator", "--samples", "3", "--seed", "2"],
    ["orbit", "ideal", "--algebra", "heisenberg3", "--f", "z=1", "--deg", "1"],
    ["hw", "kernel", "--type", "A1", "--weight", "3"],
    ["chain", "solve", "--fixture", "h3-tensnil"],
])
def test_reports_deterministic_and_certified(capsys, tmp_path, argv):
    outs = []
    for i in range(2):
        path = tmp_path / f"{i}.json"
        assert run(capsys, *argv, "--out", str(path))[0] == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    assert "certified" in json.loads(outs[0])


def test_truncation_embedded(capsys, tmp_path):
    path = tmp_path / "r.json"
    run(capsys, "orbit", "ideal", "--algebra", "heisenberg3", "--f", "z=1", "--deg", "1", "--out", str(path))
    rep = json.loads(path.read_text())
    assert rep["ideal"] == ["-1 * 1 + 1 * z"] and rep["truncation"]["d"] == 1 and rep["certified"]
