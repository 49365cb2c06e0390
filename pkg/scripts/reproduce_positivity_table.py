#!/usr/bin/env python3
"""Recompute the Schur-positivity grid for R(n, u) and diff it against
the reference table shipped with the package.

Per-column timings go to stderr so the grid on stdout stays clean:

    python3 scripts/reproduce_positivity_table.py
    python3 scripts/reproduce_positivity_table.py --ns 8,9,45 --u-max 6
"""

import argparse
import sys
import time

from ramschur.foulkes import check_positivity
from ramschur.reference import (
    reference_positivity_table,
    reference_table_ns,
    reference_table_u_max,
)


def main() -> int:
    parser = argparse.ArgumentParser(description="recompute the positivity table")
    parser.add_argument(
        "--ns", default=None, help="comma-separated n values (default: reference columns)"
    )
    parser.add_argument("--u-max", type=int, default=None)
    args = parser.parse_args()

    ns = [int(tok) for tok in args.ns.split(",")] if args.ns else reference_table_ns()
    u_max = args.u_max if args.u_max is not None else reference_table_u_max()
    reference = reference_positivity_table()

    start = time.perf_counter()
    grid = {}
    for n in ns:
        col_start = time.perf_counter()
        for u in range(u_max + 1):
            grid[(n, u)] = check_positivity(n, u).schur_positive
        print(f"n = {n:>3}: {time.perf_counter() - col_start:6.2f}s", file=sys.stderr)
    elapsed = time.perf_counter() - start

    width = max(3, max(len(str(n)) for n in ns) + 1)
    print("u\\n " + "".join(f"{n:>{width}}" for n in ns))
    for u in range(u_max + 1):
        row = "".join(f"{'Y' if grid[(n, u)] else 'N':>{width}}" for n in ns)
        print(f"{u:<4}{row}")
    print(f"\n{len(grid)} cells in {elapsed:.2f}s")

    mismatches = sorted(
        cell for cell, verdict in grid.items() if cell in reference and verdict != reference[cell]
    )
    if mismatches:
        for n, u in mismatches:
            print(f"MISMATCH at n={n}, u={u}")
        return 1
    compared = sum(1 for cell in grid if cell in reference)
    print(f"all {compared} reference cells match")
    return 0


if __name__ == "__main__":
    sys.exit(main())
