#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the three hot loops on identical inputs and prints a table with the
speedup of the compiled extension. Results double as a sanity check: both
backends must return identical values byte for byte.

Usage: python benchmarks/bench_backends.py [--quick]
"""

import argparse
import time

from numsem._kernels import pure

try:
    from numsem._kernels import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def consecutive_quadruple(m):
    return (m, m + 1, m + 2, m + 3)


def bench_apery(sizes, rows):
    for m in sizes:
        gens = consecutive_quadruple(m)
        t_pure, r_pure = best_of(lambda: pure.apery_levels(gens))
        if _ckernels is not None:
            t_c, r_c = best_of(lambda: _ckernels.apery_levels(list(gens)))
            assert r_c == r_pure, f"backend mismatch at {gens}"
        else:
            t_c = None
        rows.append((f"apery_levels m={m}", t_pure, t_c))


def bench_mask(limits, rows):
    gens = (101, 103, 107, 109)
    for limit in limits:
        t_pure, r_pure = best_of(lambda: pure.representable_mask(gens, limit), repeats=1)
        if _ckernels is not None:
            t_c, r_c = best_of(lambda: _ckernels.representable_mask(list(gens), limit))
            assert r_c == r_pure
        else:
            t_c = None
        rows.append((f"representable_mask limit={limit}", t_pure, t_c))


def bench_numerator(ms, rows):
    for m in ms:
        gens = consecutive_quadruple(m)
        levels = pure.apery_levels(gens)
        length = max(levels) - m + sum(gens) + gens[-1]
        t_pure, r_pure = best_of(
            lambda: pure.numerator_terms(levels, gens, length), repeats=1
        )
        if _ckernels is not None:
            t_c, r_c = best_of(
                lambda: _ckernels.numerator_terms(list(levels), list(gens), length)
            )
            assert r_c == r_pure
        else:
            t_c = None
        rows.append((f"numerator_terms m={m} len={length}", t_pure, t_c))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller inputs")
    args = parser.parse_args()

    if _ckernels is None:
        print("note: compiled kernels not built; timing the pure backend only\n")

    rows = []
    if args.quick:
        bench_apery((5003, 20011), rows)
        bench_mask((200_000,), rows)
        bench_numerator((400,), rows)
    else:
        bench_apery((20011, 100003, 300007), rows)
        bench_mask((500_000, 2_000_000), rows)
        bench_numerator((800, 1500), rows)

    name_width = max(len(name) for name, _, _ in rows)
    print(f"{'kernel':<{name_width}}  {'pure':>10}  {'compiled':>10}  {'speedup':>8}")
    for name, t_pure, t_c in rows:
        if t_c is None:
            print(f"{name:<{name_width}}  {t_pure * 1e3:>8.2f}ms  {'-':>10}  {'-':>8}")
        else:
            print(
                f"{name:<{name_width}}  {t_pure * 1e3:>8.2f}ms  {t_c * 1e3:>8.2f}ms"
                f"  {t_pure / t_c:>7.1f}x"
            )


if __name__ == "__main__":
    main()
