#!/usr/bin/env python3
"""Longest arithmetic progression among frequently occurring even gaps, for a
range of occurrence thresholds."""
import argparse

from polignac.census import candidate_set, gap_census
from polignac.progressions import longest_ap_in_set


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--x", type=int, default=10**7)
    ap.add_argument("--thresholds", type=int, nargs="+", default=[1, 10, 100, 1000, 10000])
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    census = gap_census(args.x, workers=args.workers)
    for T in args.thresholds:
        S = candidate_set(census, T, even_only=True)
        if not S.gaps:
            print(f"T={T}: empty")
            continue
        run = longest_ap_in_set(list(S.gaps))
        print(f"T={T}: |S|={len(S.gaps)} longest AP start={run.start} step={run.step} length={run.length}")


if __name__ == "__main__":
    main()
