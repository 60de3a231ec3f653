#!/usr/bin/env python3
"""Run the default identity suite and summarize the results.

Equivalent to ``ftok suite`` but also supports dumping the full report list
to a JSON file for later inspection.
"""

import argparse
import json
import sys
import time

from ftok import harness


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--jobs", type=int, default=1, help="worker threads")
    parser.add_argument("--config", help="JSON suite config; default built-in range")
    parser.add_argument("--out", help="write full reports to this JSON file")
    parser.add_argument("--quiet", action="store_true", help="only print the summary")
    args = parser.parse_args()

    specs = harness.load_suite_config(args.config) if args.config else None
    start = time.perf_counter()
    reports = harness.run_suite(specs, jobs=args.jobs)
    elapsed = time.perf_counter() - start

    failed = [r for r in reports if not r.passed]
    if not args.quiet:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status} {r.spec.describe()} ({r.elapsed:.3f}s)")
    for r in failed:
        print(f"FAIL {r.spec.describe()} diff={r.diff}", file=sys.stderr)
    print(f"{len(reports) - len(failed)}/{len(reports)} identities verified in {elapsed:.1f}s")

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump([r.to_json() for r in reports], fh, indent=2)
        print(f"reports written to {args.out}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
