#!/usr/bin/env python3
"""Benchmark the compiled group kernel against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--orbit] [-q Q]

Measures batched multiplication, inversion, conjugation, and (with --orbit)
the whole-group orbit partition.  The orbit sweep on the Python backend takes
a few minutes at q = 3; everything else finishes in seconds.
"""

import argparse
import time

import numpy as np

from d4syl import build_tower
from d4syl.backend import available_backends, make_kernel
from d4syl.group import generators


def random_batch(ctx, count, rng):
    cols = [
        rng.integers(0, ctx.q3, count),
        rng.integers(0, ctx.q, count),
        rng.integers(0, ctx.q3, count),
        rng.integers(0, ctx.q3, count),
        rng.integers(0, ctx.q, count),
        rng.integers(0, ctx.q, count),
    ]
    return np.stack(cols, axis=1).astype(np.intc)


def bench(kernel, name, fn, per_call):
    t0 = time.time()
    fn()
    dt = time.time() - t0
    rate = per_call / dt if dt else float("inf")
    print(f"  {name:<24} {dt:8.3f}s   {rate/1e6:8.2f} M ops/s")
    return dt


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("-q", type=int, default=3)
    parser.add_argument("-n", type=int, default=200_000, help="batch size")
    parser.add_argument("--orbit", action="store_true", help="include the orbit sweep")
    args = parser.parse_args()

    ctx = build_tower(args.q, 1)
    rng = np.random.default_rng(1)
    a = random_batch(ctx, args.n, rng)
    b = random_batch(ctx, args.n, rng)
    gens = np.array([g.coords for g in generators(ctx)], dtype=np.intc)

    results = {}
    for backend in available_backends():
        kern = make_kernel(ctx, backend)
        print(f"backend: {backend}")
        results[backend, "mul"] = bench(kern, f"mul_many({args.n})", lambda: kern.mul_many(a, b), args.n)
        results[backend, "inv"] = bench(kern, f"inv_many({args.n})", lambda: kern.inv_many(a), args.n)
        results[backend, "conj"] = bench(kern, f"conj_many({args.n})", lambda: kern.conj_many(a, b), args.n)
        if args.orbit:
            if args.q**12 > 3**12:
                print("  (orbit sweep skipped: too large)")
            else:
                results[backend, "orbit"] = bench(
                    kern, "orbit_partition", lambda: kern.orbit_partition(gens), args.q**12
                )
    if len(available_backends()) == 2:
        print("speedup (c over python):")
        for op in ("mul", "inv", "conj", "orbit"):
            if ("c", op) in results and ("python", op) in results:
                print(f"  {op:<6} {results['python', op] / results['c', op]:6.1f}x")


if __name__ == "__main__":
    main()
