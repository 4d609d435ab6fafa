"""Benchmark the bit-packed Z/2 kernels: numba @njit vs the pure-numpy fallback.

Builds a Rips filtration of a random cloud, packs its boundary matrix, and
times column reduction plus a GF(2) rank on both backends. Run with
SNAPHOM_FORCE_NUMPY=1 to confirm the package works end to end without numba.

Usage: python benchmarks/bench_reduction.py [--n 120] [--repeats 3]
"""

import argparse
import time

import numpy as np

from snaphom import _kernels
from snaphom.geometry import PointCloud
from snaphom.simplicial import build_rips_filtration


def packed_boundary(n_points: int, seed: int = 0) -> np.ndarray:
    rng = np.random.default_rng(seed)
    cloud = PointCloud(rng.uniform(0, 4, size=(n_points, 2)))
    f = build_rips_filtration(cloud, 2, 0.9)
    index = {s: i for i, (s, _) in enumerate(f.entries)}
    cols = []
    for s, _ in f.entries:
        if len(s) == 1:
            cols.append(())
        else:
            cols.append(tuple(index[s[:i] + s[i + 1:]] for i in range(len(s))))
    print(f"filtration: {len(f)} simplices from {n_points} points")
    return _kernels.pack_rows(cols, len(f))


def time_fn(fn, packed, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        work = packed.copy()
        t0 = time.perf_counter()
        result = fn(work)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=120, help="number of points")
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    packed = packed_boundary(args.n)

    t_np, low_np = time_fn(_kernels.reduce_packed_numpy, packed, args.repeats)
    print(f"reduce  numpy : {t_np:8.3f}s")
    if _kernels.HAVE_NUMBA:
        # warm up the JIT before timing
        _kernels.reduce_packed_numba(packed[:64].copy())
        t_nb, low_nb = time_fn(_kernels.reduce_packed_numba, packed, args.repeats)
        agree = np.array_equal(low_np, low_nb)
        print(f"reduce  numba : {t_nb:8.3f}s  (speedup {t_np / t_nb:5.1f}x, "
              f"results {'agree' if agree else 'DISAGREE'})")
    else:
        print("reduce  numba : unavailable (SNAPHOM_FORCE_NUMPY set or numba missing)")

    t_np, rank_np = time_fn(_kernels.rank_packed_numpy, packed, args.repeats)
    print(f"rank    numpy : {t_np:8.3f}s  (rank {rank_np})")
    if _kernels.HAVE_NUMBA:
        t_nb, rank_nb = time_fn(_kernels.rank_packed_numba, packed, args.repeats)
        print(f"rank    numba : {t_nb:8.3f}s  (speedup {t_np / t_nb:5.1f}x, "
              f"rank {rank_nb})")


if __name__ == "__main__":
    main()
