"""Benchmark the two trace kernels of the braid engine.

The hot loop walks every basis tuple of a colored strand space through a
compiled monomial word, accumulating a root-of-unity histogram.  The walk
has a numba-compiled kernel and a pure-numpy fallback; the environment
flag STW_DISABLE_NUMBA selects the fallback at call time.  This script
times the identical workload on both paths and reports the speedup.

Usage: python benchmarks/bench_trace.py [--pairs N] [--repeats R]
"""

import argparse
import os
import random
import time

from stw.braid import HAS_NUMBA, framed_trace_counts, parse_braid
from stw.cocycle import CocycleParams
from stw.double import context_for
from stw.group import GroupSpec

CLASP = "s2^-2 s1 s2^-1 s1"


def workload(params, jobs):
    word = parse_braid(CLASP, 3)
    total = 0
    for a, b in jobs:
        counts = framed_trace_counts(params, word, [a, b, a])
        total += int(counts.sum())
    return total


def timed(params, jobs, repeats):
    best = float("inf")
    checksum = None
    for _ in range(repeats):
        start = time.perf_counter()
        checksum = workload(params, jobs)
        best = min(best, time.perf_counter() - start)
    return best, checksum


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", type=int, default=200,
                        help="number of color pairs to trace (default 200)")
    parser.add_argument("--repeats", type=int, default=3,
                        help="timing repetitions, best-of (default 3)")
    args = parser.parse_args()

    params = CocycleParams(GroupSpec(11, 5, 4), 1)
    ctx = context_for(params)
    # Weight the workload toward the widest strand spaces (11^3 basis
    # tuples per trace) so the walk dominates over compilation overhead.
    labels = [s.label for s in ctx.simples if s.dim == 11]
    rng = random.Random(11)
    jobs = [(rng.choice(labels), rng.choice(labels)) for _ in range(args.pairs)]

    os.environ["STW_DISABLE_NUMBA"] = "1"
    numpy_time, numpy_sum = timed(params, jobs, args.repeats)
    print(f"pure numpy : {numpy_time:8.3f} s  ({args.pairs} clasp traces)")

    if not HAS_NUMBA:
        print("numba      : not installed; single-path run")
        return
    os.environ.pop("STW_DISABLE_NUMBA", None)
    workload(params, jobs[:2])  # trigger JIT compilation outside the timing
    numba_time, numba_sum = timed(params, jobs, args.repeats)
    print(f"numba      : {numba_time:8.3f} s  ({args.pairs} clasp traces)")
    if numba_sum != numpy_sum:
        raise SystemExit("kernel mismatch: the two paths disagree")
    print(f"speedup    : {numpy_time / numba_time:8.2f}x  (identical histograms)")


if __name__ == "__main__":
    main()
