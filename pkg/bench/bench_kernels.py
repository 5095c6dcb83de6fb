"""Benchmark the compiled scan kernels against their numpy fallbacks.

Runs the full-table law scans over a k sweep and the exhaustive ideal
enumeration at two fixed sizes, timing the numba and numpy variants of
the same kernels.  Invoke from the repository root:

    python3 bench/bench_kernels.py
    python3 bench/bench_kernels.py --k-max 64 --repeat 5
"""

import argparse
import time

import numpy as np

from indigo import kernels
from indigo.core import SemiringCtx


def build_tables(k_max: int) -> list:
    return [SemiringCtx(k).tables() for k in range(1, k_max + 1)]


def law_sweep(tables: list, use_jit: bool) -> None:
    for add_t, mul_t in tables:
        if use_jit:
            assert kernels._commut_break_jit(add_t) == -1
            assert kernels._commut_break_jit(mul_t) == -1
            assert kernels._assoc_break_jit(add_t) == -1
            assert kernels._assoc_break_jit(mul_t) == -1
            assert kernels._distrib_break_jit(add_t, mul_t) == -1
            assert kernels._monotone_break_jit(add_t) == -1
            assert kernels._monotone_break_jit(mul_t) == -1
        else:
            assert kernels._commut_break_np(add_t) == -1
            assert kernels._commut_break_np(mul_t) == -1
            assert kernels._assoc_break_np(add_t) == -1
            assert kernels._assoc_break_np(mul_t) == -1
            assert kernels._distrib_break_np(add_t, mul_t) == -1
            assert kernels._monotone_break_np(add_t) == -1
            assert kernels._monotone_break_np(mul_t) == -1


def ideal_enumeration(k: int, use_jit: bool) -> int:
    add_t, mul_t = SemiringCtx(k).tables()
    if use_jit:
        masks = np.asarray(kernels._ideal_masks_jit(add_t, mul_t), dtype=np.int64)
    else:
        masks = kernels._ideal_masks_np(add_t, mul_t)
    return len(masks)


def timed(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--k-max", type=int, default=64, help="upper end of the law sweep")
    parser.add_argument("--repeat", type=int, default=3, help="repetitions; best time wins")
    parser.add_argument("--ideal-k", type=int, nargs="*", default=[14, 16])
    args = parser.parse_args()

    if not kernels.HAS_NUMBA:
        print("numba is not installed; only the numpy fallback can run")

    tables = build_tables(args.k_max)
    tasks = [(f"law scans, k = 1..{args.k_max}", lambda jit: law_sweep(tables, jit))]
    for k in args.ideal_k:
        tasks.append((f"ideal enumeration, k = {k}", lambda jit, k=k: ideal_enumeration(k, jit)))

    if kernels.HAS_NUMBA:
        # compile outside the timed region
        law_sweep(tables[:2], True)
        ideal_enumeration(2, True)

    print(f"{'task':<28} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    for label, fn in tasks:
        numpy_time = timed(lambda: fn(False), args.repeat)
        if kernels.HAS_NUMBA:
            numba_time = timed(lambda: fn(True), args.repeat)
            ratio = numpy_time / numba_time if numba_time > 0 else float("inf")
            print(f"{label:<28} {numba_time:>9.4f}s {numpy_time:>9.4f}s {ratio:>7.1f}x")
        else:
            print(f"{label:<28} {'-':>10} {numpy_time:>9.4f}s {'-':>8}")


if __name__ == "__main__":
    main()
