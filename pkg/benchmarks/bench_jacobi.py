"""Compare the numba and numpy Jacobi kernels.

    python benchmarks/bench_jacobi.py [--sizes 4 8 16 32] [--repeat 20]

Inputs are seeded random symmetric integer matrices with entries in [-3, 3].
"""

import argparse
import time

import numpy as np

from ohyper import _kernels
from ohyper.algebra import MAX_SWEEPS, SOLVER_TOL


def corpus(n, count, seed):
    rng = np.random.default_rng([seed, n])
    out = []
    for _ in range(count):
        M = rng.integers(-3, 4, size=(n, n))
        out.append(np.triu(M) + np.triu(M, 1).T)
    return out


def timed(kernel, mats, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for M in mats:
            kernel(M, SOLVER_TOL, MAX_SWEEPS)
        best = min(best, time.perf_counter() - start)
    return best / len(mats)


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[3, 6, 10, 16, 32, 64])
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    if _kernels._jacobi_loops_jit is None:
        raise SystemExit("numba is not installed; nothing to compare")
    _kernels.jacobi_numba(np.eye(2), SOLVER_TOL, MAX_SWEEPS)  # compile or load cache

    print(f"{'n':>4} {'numba us':>12} {'numpy us':>12} {'speedup':>8} {'max |diff|':>11}")
    for n in args.sizes:
        mats = corpus(n, args.count, args.seed)
        diff = max(
            float(np.max(np.abs(np.sort(_kernels.jacobi_numba(M, SOLVER_TOL, MAX_SWEEPS)[0])
                                - np.sort(_kernels.jacobi_numpy(M, SOLVER_TOL, MAX_SWEEPS)[0]))))
            for M in mats
        )
        t_jit = timed(_kernels.jacobi_numba, mats, args.repeat)
        t_np = timed(_kernels.jacobi_numpy, mats, args.repeat)
        print(f"{n:>4} {t_jit * 1e6:>12.1f} {t_np * 1e6:>12.1f} {t_np / t_jit:>8.1f} {diff:>11.1e}")


if __name__ == "__main__":
    main()
