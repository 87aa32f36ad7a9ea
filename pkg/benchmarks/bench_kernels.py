#!/usr/bin/env python3
"""Benchmark the prime-field span sweep: numba kernels vs numpy fallback.

The sweep behind exact-length enumerates every subspace of GF(p)^n and runs
one span ladder per subspace; this is the only hot loop in the package.
Both backends must return identical results, so the comparison also acts as
a consistency check.

Usage: python3 benchmarks/bench_kernels.py [--heavy]
"""

import argparse
import time

from alglen import examples, kernels
from alglen.field import PrimeField
from alglen.spans import enumerate_subspace_rows


def candidates_for(algebra):
    p = algebra.field.p
    unity = algebra.unity
    rows_list = []
    for rows in enumerate_subspace_rows(p, algebra.dim):
        rows_list.append(rows)
    if unity is None:
        return rows_list
    from alglen.spans import SpanBasis

    kept = []
    for rows in rows_list:
        basis = SpanBasis(algebra.field, algebra.dim)
        for row in rows:
            basis.insert(list(row))
        if basis.contains(unity):
            kept.append(rows)
    return kept


def bench(name, algebra, mode, repeats=3):
    cands = candidates_for(algebra)
    results = {}
    times = {}
    for backend in ("numba", "numpy"):
        try:
            kernels.batch_subspace_lengths(algebra, cands[:8], mode,
                                           backend=backend)  # warm up / jit
        except RuntimeError as exc:
            print(f"  {backend}: unavailable ({exc})")
            continue
        best = float("inf")
        for _ in range(repeats):
            t0 = time.perf_counter()
            out = kernels.batch_subspace_lengths(algebra, cands, mode,
                                                 backend=backend)
            best = min(best, time.perf_counter() - t0)
        results[backend] = out
        times[backend] = best
    if len(results) == 2:
        assert results["numba"] == results["numpy"], "backend results differ"
        speedup = times["numpy"] / times["numba"]
    else:
        speedup = float("nan")
    lengths = next(iter(results.values()))
    best_len = max(l for l, g in lengths if g)
    print(f"{name}: {len(cands)} subspaces, l(A) = {best_len}")
    for backend, t in sorted(times.items()):
        print(f"  {backend:>6}: {t * 1000:9.1f} ms")
    if len(times) == 2:
        print(f"  speedup: {speedup:.1f}x")
    print()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--heavy", action="store_true",
                        help="include the dimension-8 group algebra sweep")
    args = parser.parse_args()

    print(f"default backend: {kernels.backend_name()}\n")
    bench("Z2^2 group algebra over GF(2), cheap recursion",
          examples.make_group_algebra_z2n(2), "mixing")
    bench("5-dim flexible-table algebra over GF(2), closure mode",
          examples.make_a_flex(PrimeField(2)), "general")
    bench("5-dim alternative-table algebra over GF(3), closure mode",
          examples.make_a_alt(PrimeField(3)), "general")
    if args.heavy:
        bench("Z2^3 group algebra over GF(2) (dim 8), cheap recursion",
              examples.make_group_algebra_z2n(3), "mixing")


if __name__ == "__main__":
    main()
