#!/usr/bin/env python3
"""Weak containment under sums, tensors, restriction and (twisted) induction."""
import argparse

from liechain import catalog
from liechain.permanence import ITEMS, permanence_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--instances", type=int, default=10)
    ap.add_argument("--deg", type=int, default=2)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--algebras", nargs="*", default=["heisenberg3", "heisenberg5", "oscillator", "aff1"])
    args = ap.parse_args()
    for name in args.algebras:
        g = catalog.get(name)
        row = []
        for item in ITEMS:
            reps = permanence_suite(g, item, args.instances, args.deg, args.seed)
            row.append(f"{item}={sum(r.holds and r.certified for r in reps)}/{len(reps)}")
        print(f"{name:<12} " + "  ".join(row))


if __name__ == "__main__":
    main()
