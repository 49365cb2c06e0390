#!/usr/bin/env python3
"""Run the named identity suites and print one line per check.

    python3 scripts/verify_identities.py
    python3 scripts/verify_identities.py --suite matrix --max-n 500
"""

import argparse
import sys
import time

from ramschur.verify import SUITE_NAMES, run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description="run identity verification suites")
    parser.add_argument("--suite", choices=SUITE_NAMES, default="all")
    parser.add_argument("--max-n", type=int, default=None, help="override the sweep bounds")
    args = parser.parse_args()

    start = time.perf_counter()
    results = run_suite(args.suite, args.max_n)
    elapsed = time.perf_counter() - start

    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.name}" + (f" ({r.detail})" if r.detail else ""))
    passed = sum(1 for r in results if r.passed)
    print(f"{passed}/{len(results)} checks passed in {elapsed:.2f}s")
    return 0 if passed == len(results) else 1


if __name__ == "__main__":
    sys.exit(main())
