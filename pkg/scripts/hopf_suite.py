#!/usr/bin/env python3
"""Random-sample Hopf axiom checks on the built-in algebras."""
import argparse
import time

from liechain import catalog
from liechain.hopf import hopf_suite

DEFAULT = ["abelian(3)", "heisenberg3", "heisenberg5", "aff1", "oscillator", "sl2", "sl3"]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("algebras", nargs="*")
    args = ap.parse_args()
    for name in args.algebras or DEFAULT:
        t = time.time()
        rep = hopf_suite(catalog.get(name), samples=args.samples, seed=args.seed)
        bad = {k: v for k, v in rep.failures.items() if v}
        print(f"{name:<12} {'ok' if rep.ok else 'FAILED'} {bad or ''} {time.time() - t:.1f}s")


if __name__ == "__main__":
    main()
