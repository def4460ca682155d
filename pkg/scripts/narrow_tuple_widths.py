#!/usr/bin/env python3
"""Diameters of admissible k-tuples found by the greedy search, next to the
consecutive-primes baseline."""
import argparse

from polignac.admissibility import narrow_tuple, prime_baseline_tuple


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k-max", type=int, default=60)
    ap.add_argument("--max-diameter", type=int, default=600)
    args = ap.parse_args()

    print(f"{'k':>3} {'baseline':>8} {'found':>6} strategy")
    for k in range(1, args.k_max + 1):
        r = narrow_tuple(k, args.max_diameter)
        found = r.found.diameter if r.ok else "-"
        print(f"{k:>3} {prime_baseline_tuple(k).diameter:>8} {found:>6} {r.strategy}")


if __name__ == "__main__":
    main()
