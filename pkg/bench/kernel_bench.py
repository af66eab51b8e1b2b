#!/usr/bin/env python3
"""Benchmark the degree-scan kernels against each other.

Builds the full S_n/A_n degree sets for a few n with the jit kernel and
with the pure-Python fallback, checks they agree, and prints timings.
Run:  python bench/kernel_bench.py [--sizes 30,40,50] [--json out.json]
"""

import argparse
import json
import sys
import time

from chardeg import kernels
from chardeg.degrees import DegreeEngine
from chardeg.groups import alternating
from chardeg.partitions import partition_count

WARMUP_N = 12


def time_build(kernel: str, n: int) -> tuple[float, int]:
    engine = DegreeEngine(kernel=kernel)
    start = time.perf_counter()
    ds = engine.degree_set(alternating(n), with_multiplicity=True)
    return time.perf_counter() - start, len(ds)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="30,40,50",
                        help="comma-separated n values to build")
    parser.add_argument("--json", help="also write results as JSON")
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    names = kernels.available_kernels()
    if "numba" not in names:
        print("numba unavailable; benchmarking the python kernel only", file=sys.stderr)
    for name in names:
        time_build(name, WARMUP_N)  # jit compilation happens here, not in the timings

    results = []
    print(f"{'n':>4} {'partitions':>12} " + " ".join(f"{k:>12}" for k in names))
    for n in sizes:
        row = {"n": n, "partitions": partition_count(n)}
        distinct = set()
        for name in names:
            elapsed, count = time_build(name, n)
            row[name] = round(elapsed, 4)
            distinct.add(count)
        if len(distinct) != 1:
            print(f"kernel disagreement at n={n}: {distinct}", file=sys.stderr)
            return 1
        results.append(row)
        print(f"{n:>4} {row['partitions']:>12} "
              + " ".join(f"{row[k]:>11.3f}s" for k in names))
    if len(names) == 2:
        total_nb = sum(r["numba"] for r in results)
        total_py = sum(r["python"] for r in results)
        print(f"\nspeedup (python / numba): {total_py / total_nb:.2f}x")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"kernels": list(names), "results": results}, fh, indent=2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
