#!/usr/bin/env python3
"""Build every chain fixture and print its abelianized group.

    python3 scripts/run_fixtures.py [--out-dir reports/]
"""
import argparse
import json
import time
from pathlib import Path

from liechain import fixtures


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", type=Path)
    ap.add_argument("names", nargs="*", default=None)
    args = ap.parse_args()
    if args.out_dir:
        args.out_dir.mkdir(parents=True, exist_ok=True)
    results = {}
    for name in args.names or fixtures.names():
        t = time.time()
        res = fixtures.get(name)
        rep = res.report()
        results[name] = res
        status = "" if rep.get("matches_expected", True) else f"  (expected {res.expected})"
        print(f"{name:<22} {rep['group']:<16} can={rep['can']['holds']!s:<5} "
              f"verified={rep['verified']!s:<5} {time.time() - t:5.1f}s{status}")
        if args.out_dir:
            (args.out_dir / f"{name}.json").write_text(json.dumps(rep, indent=2, sort_keys=True,
                                                                  ensure_ascii=False) + "\n")
    for coarse, fine in (("a1-delta-grid", "a1-half-grid"), ("a2-delta-grid", "a2-third-grid")):
        if coarse in results and fine in results:
            kills = fixtures.refinement_kills(results[coarse], results[fine])
            print(f"{coarse} generators trivial in {fine}: {sum(kills.values())}/{len(kills)}")


if __name__ == "__main__":
    main()
