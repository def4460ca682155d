#!/usr/bin/env python3
"""Census at growing bounds: candidate-set size, interval-cover constant and
empirical density of the even gaps.

    python scripts/gap_census_scan.py --max-exp 8 --m-max 100 --workers 4
"""
import argparse
import time

from polignac.census import candidate_set, empirical_density, gap_census, interval_cover_constant


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-exp", type=int, default=7)
    ap.add_argument("--m-max", type=int, default=100)
    ap.add_argument("--min-count", type=int, default=1)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    print(f"{'x':>12} {'primes':>11} {'|S|':>5} {'C_emp':>5} {'worst_m':>7} {'density':>9} {'sec':>6}")
    for e in range(3, args.max_exp + 1):
        t0 = time.perf_counter()
        c = gap_census(10**e, workers=args.workers)
        S = candidate_set(c, args.min_count, even_only=True)
        r = interval_cover_constant(S, args.m_max)
        dens = empirical_density(S, args.m_max)
        worst = "-" if r.worst_m is None else r.worst_m
        print(
            f"{10**e:>12} {c.prime_count:>11} {len(S.gaps):>5} {str(r.C_emp):>5} {worst:>7} "
            f"{str(dens):>9} {time.perf_counter() - t0:>6.2f}"
        )


if __name__ == "__main__":
    main()
