#!/usr/bin/env python3
"""Benchmark the compiled sampling kernels against the numpy fallback.

Run: python3 benchmarks/bench_kernels.py [--samples N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from wpsn_coverage.coverage import EventField
from wpsn_coverage.deployment import Strategy, place_sources
from wpsn_coverage.kernels import implementations


def time_call(fn, *args, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--samples", type=int, default=10**6)
    args = parser.parse_args()

    field = EventField(400.0, 400.0)
    dep = place_sources(field, 10.0, Strategy.HEX_GRID)
    sx, sy = dep.source_array()
    impls = implementations()

    print(f"field 400x400 m, {len(dep.sources)} hex sources, r = 10 m")
    print(f"{'kernel':>22} {'impl':>10} {'samples':>9} {'time':>9} {'throughput':>14}")

    results = {}
    for name, mod in impls.items():
        t, covered = time_call(
            mod.covered_count, 123, 0, args.samples, field.width, field.height,
            sx, sy, dep.r_rf,
        )
        results[name] = covered
        print(
            f"{'covered_count':>22} {name:>10} {args.samples:>9} {t:>8.3f}s"
            f" {args.samples / t / 1e6:>11.1f} M/s"
        )
    assert len(set(results.values())) == 1, "implementations disagree"

    for name, mod in impls.items():
        t, (xs, _) = time_call(
            mod.points_block, 123, 0, args.samples, field.width, field.height
        )
        print(
            f"{'points_block':>22} {name:>10} {args.samples:>9} {t:>8.3f}s"
            f" {args.samples / t / 1e6:>11.1f} M/s"
        )
        del xs

    for name, mod in impls.items():
        t, u = time_call(mod.uniform_block, 123, 0, args.samples)
        print(
            f"{'uniform_block':>22} {name:>10} {args.samples:>9} {t:>8.3f}s"
            f" {args.samples / t / 1e6:>11.1f} M/s"
        )
        del u

    a = impls["python"].uniform_block(9, 0, 1000)
    for name, mod in impls.items():
        assert np.array_equal(a, mod.uniform_block(9, 0, 1000))
    print("bit-identical across implementations: yes")


if __name__ == "__main__":
    main()
