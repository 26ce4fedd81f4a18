"""Command-line interface.

Exit codes: 0 all checks pass, 1 a mathematical check failed (the report
carries witnesses), 2 invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import catalog, chain, fixtures
from .highest_weight import (central_character_hc, minimal_primitive_truncated, root_system,
                             simple_quotient)
from .lie import LieAlgebra, LieError, from_json, nilradical
from .orbit import KINDS, check_relation, dixmier_ideal, functional, vergne_polarization
from .permanence import ITEMS, permanence_suite
from .representations import certification_bound


@dataclass
class ExperimentConfig:
    algebra: str | None = None
    file: str | None = None
    deg: int = 2
    level: int | None = None
    samples: int = 1
    seed: int = 0
    strict: bool = False
    out: str | None = None
    fixture: str | None = None
    extra: dict = field(default_factory=dict)

    def validate(self, g: LieAlgebra | None = None) -> None:
        if self.deg < 1:
            raise InvalidInput("--deg must be at least 1")
        if self.samples < 1:
            raise InvalidInput("--samples must be at least 1")
        if self.strict and g is not None and self.level is not None:
            bound = certification_bound(g, self.deg)
            if self.level < bound:
                raise InvalidInput(f"--strict needs --level >= {bound} for {g.name} at degree {self.deg}")


class InvalidInput(Exception):
    pass


def _load_algebra(cfg: ExperimentConfig) -> LieAlgebra:
    if cfg.file:
        try:
            return from_json(Path(cfg.file).read_text())
        except OSError as e:
            raise InvalidInput(f"cannot read {cfg.file}: {e}") from None
        except json.JSONDecodeError as e:
            raise InvalidInput(f"{cfg.file} is not valid JSON: {e}") from None
    if not cfg.algebra:
        raise InvalidInput("give --algebra NAME or --file PATH")
    return catalog.get(cfg.algebra)


def _parse_functional(g: LieAlgebra, text: str):
    vals = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        if "=" not in part:
            raise InvalidInput(f"functional entries look like label=value, got {part!r}")
        k, v = part.split("=", 1)
        g.index(k.strip())
        vals[k.strip()] = Fraction(v.strip())
    return functional(g, vals)


def _emit(report: dict, cfg: ExperimentConfig, summary: list[str]) -> None:
    report.setdefault("seed", cfg.seed)
    text = json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False)
    if cfg.out:
        Path(cfg.out).write_text(text + "\n")
    for line in summary:
        print(line)
    if not cfg.out:
        print(text)


# -- verbs -----------------------------------------------------------------------------

def cmd_catalog(args, cfg) -> int:
    print("algebras:")
    for name, desc in catalog.describe():
        print(f"  {name:<20} {desc}")
    print("fixtures:")
    for name in fixtures.names():
        print(f"  {name:<20} {fixtures.FIXTURES[name][1]}")
    return 0


def cmd_lie(args, cfg) -> int:
    g = _load_algebra(cfg)
    if args.action == "validate":
        report = {"algebra": g.name, "dim": g.dim, "valid": True, "certified": True}
        _emit(report, cfg, [f"{g.name}: valid Lie algebra of dimension {g.dim}"])
    elif args.action == "center":
        z = g.center()
        _emit({"algebra": g.name, "center": z.labels(), "dim": z.dim, "certified": True}, cfg, [repr(z)])
    elif args.action == "series":
        s = g.lower_central_series() if args.kind == "lower_central" else g.derived_series()
        report = {"algebra": g.name, "kind": args.kind, "series": [x.labels() for x in s],
                  "solvable": g.is_solvable, "nilpotent": g.is_nilpotent, "certified": True}
        _emit(report, cfg, [" ⊃ ".join(repr(x) for x in s)])
    elif args.action == "nilradical":
        n = nilradical(g)
        _emit({"algebra": g.name, "nilradical": n.labels(), "certified": True}, cfg, [repr(n)])
    elif args.action == "export":
        print(g.to_json())
    return 0


def cmd_orbit(args, cfg) -> int:
    g = _load_algebra(cfg)
    cfg.validate(g)
    if args.action == "check":
        if args.kind not in KINDS:
            raise InvalidInput(f"unknown relation kind {args.kind!r}")
        reps = check_relation(args.kind, g, samples=cfg.samples, d=cfg.deg, L=cfg.level,
                              seed=cfg.seed, raise_on_failure=False)
        ok = all(r.holds for r in reps)
        cert = all(r.certified for r in reps)
        if cfg.strict and not cert:
            ok = False
        report = {"kind": args.kind, "algebra": g.name, "instances": [r.to_dict() for r in reps],
                  "holds": ok, "certified": cert, "truncation": {"d": cfg.deg, "L": reps[0].L}}
        passed = sum(r.holds for r in reps)
        _emit(report, cfg, [f"{args.kind} on {g.name}: {passed}/{len(reps)} instances hold"
                            f" (certified: {cert})"])
        return 0 if ok else 1
    f = _parse_functional(g, args.f or "")
    if args.action == "polarize":
        p = vergne_polarization(g, f)
        report = {"algebra": g.name, "f": f.format(), "polarization": p.h.labels(),
                  "flag": [x.labels() for x in p.flag], "certified": True}
        _emit(report, cfg, [repr(p.h)])
        return 0
    D = dixmier_ideal(g, f, cfg.deg, cfg.level, strict=cfg.strict)
    report = {"algebra": g.name, "f": f.format(), "polarization": D.polarization.h.labels(),
              "ideal": D.ideal.texts(), "certified": D.ideal.certified,
              "truncation": {"d": cfg.deg, "L": D.module.level}}
    _emit(report, cfg, [repr(D.ideal)])
    return 0


def cmd_rep(args, cfg) -> int:
    g = _load_algebra(cfg)
    cfg.validate(g)
    if args.item not in ITEMS:
        raise InvalidInput(f"unknown permanence item {args.item!r}; expected one of {', '.join(ITEMS)}")
    reps = permanence_suite(g, args.item, cfg.samples, cfg.deg, cfg.seed)
    ok = all(r.holds for r in reps)
    cert = all(r.certified for r in reps)
    report = {"item": args.item, "algebra": g.name, "instances": [r.to_dict() for r in reps],
              "holds": ok and (cert or not cfg.strict), "certified": cert,
              "truncation": {"d": cfg.deg, "L": reps[0].L if reps else None}}
    _emit(report, cfg, [f"{args.item} on {g.name}: {sum(r.holds for r in reps)}/{len(reps)} instances hold"
                        f" (certified: {cert})"])
    return 0 if report["holds"] else 1


def cmd_chain(args, cfg) -> int:
    if args.action == "coinvariants":
        rs = root_system(args.type)
        grp = chain.weyl_coinvariants(rs, lattice=not args.rational)
        report = {"type": rs.type, "over": "Q" if args.rational else "weight lattice",
                  "coinvariants": str(grp), "certified": True}
        _emit(report, cfg, [str(grp)])
        return 0
    if cfg.fixture:
        res = fixtures.get(cfg.fixture)
        report = res.report()
        ok = res.all_verified() and report.get("matches_expected", True)
        lines = [str(res.group)]
        if not report.get("matches_expected", True):
            lines.append(f"expected {res.expected}; see 'obstruction' in the report")
        _emit(report, cfg, lines)
        return 0 if ok else 1
    if cfg.file:
        try:
            p = chain.from_json(Path(cfg.file).read_text())
        except OSError as e:
            raise InvalidInput(f"cannot read {cfg.file}: {e}") from None
        except json.JSONDecodeError as e:
            raise InvalidInput(f"{cfg.file} is not valid JSON: {e}") from None
        grp = chain.abelian_invariants(p)
        report = {"group": str(grp), "generators": len(p.generators), "relations": len(p.relations),
                  "certified": True}
        ok = True
        if all(ch is not None for ch in p.generators.values()) and p.generators:
            try:
                can = chain.can_check(p)
                report["can"] = can.to_dict()
                ok = can.holds
            except chain.RelationNotRespected as e:
                report["can"] = {"holds": False, "relation": str(e.relation),
                                 "defect": [str(x) for x in e.defect]}
                ok = False
        _emit(report, cfg, [str(grp)])
        return 0 if ok else 1
    raise InvalidInput("chain solve needs --fixture NAME or --file PATH")


def cmd_hw(args, cfg) -> int:
    rs = root_system(args.type)
    lam = tuple(Fraction(x) for x in args.weight.split(","))
    if args.action == "casimir":
        c = central_character_hc(rs, lam)
        _emit({"type": rs.type, "weight": [str(x) for x in lam], "casimir": str(c), "certified": True},
              cfg, [str(c)])
    elif args.action == "kernel":
        K = minimal_primitive_truncated(rs, lam, cfg.deg, cfg.level, strict=cfg.strict)
        _emit({"type": rs.type, "weight": [str(x) for x in lam], "ideal": K.texts(),
               "certified": K.certified, "truncation": {"d": cfg.deg, "L": K.probe_level}},
              cfg, [repr(K)])
    else:
        rep = simple_quotient(rs, lam)
        _emit({"type": rs.type, "weight": [str(x) for x in lam], "dimension": rep.n,
               "weyl_dimension": rs.weyl_dimension(tuple(x - 1 for x in lam)), "certified": True},
              cfg, [f"dimension {rep.n}"])
    return 0


# -- parser ----------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--algebra", help="catalog name, e.g. heisenberg3 or abelian(2)")
    p.add_argument("--file", help="structure-constant or presentation JSON file")
    p.add_argument("--deg", type=int, default=2, help="truncation degree d")
    p.add_argument("--level", type=int, default=None, help="module truncation level L")
    p.add_argument("--strict", action="store_true", help="require certified kernels")
    p.add_argument("--samples", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--fixture")
    p.add_argument("--out", help="write the JSON report here")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="liechain", description="Chain groups of Lie algebras, computed exactly.")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("catalog", help="list built-in algebras and fixtures")
    _common(p)

    p = sub.add_parser("lie", help="structure queries")
    p.add_argument("action", choices=["validate", "center", "series", "nilradical", "export"])
    p.add_argument("--kind", choices=["derived", "lower_central"], default="derived")
    _common(p)

    p = sub.add_parser("orbit", help="polarizations, Dixmier ideals and relation checks")
    p.add_argument("action", choices=["check", "polarize", "ideal"])
    p.add_argument("kind", nargs="?", default=None, help=f"relation kind: {', '.join(KINDS)}")
    p.add_argument("--f", help="functional, e.g. z=1,y=1/2")
    _common(p)

    p = sub.add_parser("rep", help="permanence of weak containment under module operations")
    p.add_argument("action", choices=["permanence"])
    p.add_argument("item", help=f"one of {', '.join(ITEMS)}")
    _common(p)

    p = sub.add_parser("chain", help="chain presentations")
    p.add_argument("action", choices=["solve", "coinvariants"])
    p.add_argument("--type", default="A1")
    p.add_argument("--rational", action="store_true")
    _common(p)

    p = sub.add_parser("hw", help="highest-weight computations")
    p.add_argument("action", choices=["casimir", "kernel", "quotient"])
    p.add_argument("--type", default="A1")
    p.add_argument("--weight", required=True, help="fundamental-weight coordinates, e.g. 3 or 2,1")
    _common(p)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    cfg = ExperimentConfig(args.algebra, args.file, args.deg, args.level, args.samples, args.seed,
                           args.strict, args.out, args.fixture)
    handlers = {"catalog": cmd_catalog, "lie": cmd_lie, "orbit": cmd_orbit, "rep": cmd_rep, "chain": cmd_chain, "hw": cmd_hw}
    try:
        cfg.validate()
        return handlers[args.verb](args, cfg)
    except (InvalidInput, LieError, ValueError, ZeroDivisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
