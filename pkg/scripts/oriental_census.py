#!/usr/bin/env python3
"""Census of oriental cell counts and nerve simplex counts.

Usage: python scripts/oriental_census.py [N_MAX] [--cap CAP]
"""

import argparse
import time

from steiner_lab import c_delta, enumerate_cells, nerve


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("n_max", type=int, nargs="?", default=3)
    parser.add_argument("--cap", type=int, default=3)
    args = parser.parse_args()

    for n in range(args.n_max + 1):
        K = c_delta(n)
        started = time.time()
        rows = []
        for i in range(n + 1):
            enum = enumerate_cells(K, i)
            rows.append((i, len(enum.cells), len(enum.nonidentity())))
        print(f"oriental {n}  ({time.time() - started:.2f}s)")
        for i, total, nonid in rows:
            print(f"  dim {i}: {total} cells, {nonid} non-identity")
        started = time.time()
        N = nerve(K, args.cap)
        counts = N.counts()
        print(f"  nerve through cap {args.cap} ({time.time() - started:.2f}s):")
        for dim, total, nondeg in counts:
            print(f"    dim {dim}: {total} simplices, {nondeg} nondegenerate")


if __name__ == "__main__":
    main()
