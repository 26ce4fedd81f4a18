#!/usr/bin/env python3
"""Run the orbit-method relation checks (tensnil, antipode, ...) on solvable algebras."""
import argparse
import time

from liechain import catalog
from liechain.orbit import KINDS, check_relation


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=10)
    ap.add_argument("--deg", type=int, default=2)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--kinds", nargs="*", default=list(KINDS))
    ap.add_argument("--algebras", nargs="*", default=["heisenberg3", "heisenberg5", "aff1", "oscillator"])
    args = ap.parse_args()
    failed = 0
    for name in args.algebras:
        g = catalog.get(name)
        for kind in args.kinds:
            t = time.time()
            reps = check_relation(kind, g, samples=args.samples, d=args.deg, seed=args.seed,
                                  raise_on_failure=False)
            good = sum(r.holds and r.certified for r in reps)
            failed += len(reps) - good
            print(f"{name:<12} {kind:<10} {good}/{len(reps)} {time.time() - t:5.1f}s")
            for r in reps:
                if not r.holds:
                    print("    witness:", r.witness)
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
