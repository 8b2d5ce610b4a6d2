"""Time the numba kernels against their numpy fallbacks.

    python benchmarks/bench_kernels.py [--m 4] [--n 5] [--repeat 3]

Warm-up calls absorb JIT compilation, so the numba figures are steady-state.
"""
import argparse
import itertools
import time

import numpy as np

from convexcount import _kernels, lattice


def best_of(repeat, fn, *args):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        times.append(time.perf_counter() - start)
    return min(times), result


def row_batch(m, n, size):
    chunk = list(itertools.islice(lattice._row_candidates(m, n), size))
    lefts = np.array([c[0] for c in chunk], dtype=np.int64)
    rights = np.array([c[1] for c in chunk], dtype=np.int64)
    return lefts, rights


def report(name, t_numba, t_numpy):
    print(f"{name:<44} numba {t_numba * 1e3:9.2f} ms   numpy {t_numpy * 1e3:9.2f} ms   x{t_numpy / t_numba:6.1f}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--m", type=int, default=4)
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not importable; nothing to compare")

    lefts, rights = row_batch(args.m, args.n, 50_000)
    width = args.m + 1
    _kernels.validate_rows_numba(lefts[:10], rights[:10], width)
    t_jit, ok_jit = best_of(args.repeat, _kernels.validate_rows_numba, lefts, rights, width)
    t_np, ok_np = best_of(args.repeat, _kernels.validate_rows_numpy, lefts, rights, width)
    assert np.array_equal(ok_jit, ok_np)
    report(f"validate_rows ({len(lefts)} candidates)", t_jit, t_np)

    # Two 6x6 paths sharing their whole box.
    a = lattice._masks((0, 0), (6, 6), (0, 0, 6, 6))
    b = lattice._masks((1, 0), (6, 5), (0, 0, 6, 6))
    _kernels.count_disjoint_numba(a[:4], b[:4])
    t_jit, c_jit = best_of(args.repeat, _kernels.count_disjoint_numba, a, b)
    t_np, c_np = best_of(args.repeat, _kernels.count_disjoint_numpy, a, b)
    assert c_jit == c_np
    report(f"count_disjoint ({len(a)} x {len(b)})", t_jit, t_np)

    t_jit, n_jit = best_of(1, lattice.count_convex_bruteforce, args.m, args.n, _kernels.validate_rows_numba)
    t_np, n_np = best_of(1, lattice.count_convex_bruteforce, args.m, args.n, _kernels.validate_rows_numpy)
    assert n_jit == n_np
    report(f"count_convex_bruteforce({args.m}, {args.n}) = {n_jit}", t_jit, t_np)


if __name__ == "__main__":
    main()
