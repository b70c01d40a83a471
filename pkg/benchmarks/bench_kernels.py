"""Time the numba kernels against the numpy fallback on representative workloads.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both paths run in the same process (switched with ``use_numba``); the numba
path is warmed up first so compilation time is excluded.  Results are
checked for equality before timings are reported.
"""

import argparse
import time

import numpy as np

from pvhskit import _accel
from pvhskit.repchar import clear_caches, decompose, symmetric_power, weight_system
from pvhskit.rootsys import build_root_system


def freudenthal_e7():
    return weight_system(build_root_system("E7", 7), (0, 0, 0, 0, 0, 1, 0))


def freudenthal_e6_adjoint_square():
    return weight_system(build_root_system("E6", 6), (0, 2, 0, 0, 0, 0))


def plethysm_e6():
    ws = weight_system(build_root_system("E6", 6), (1, 0, 0, 0, 0, 0)).twist(2)
    return decompose(symmetric_power(ws, 4))


def convolve_random():
    rng = np.random.default_rng(0)
    ka = np.sort(rng.choice(200_000, 3_000, replace=False)).astype(np.int64)
    kb = np.sort(rng.choice(200_000, 3_000, replace=False)).astype(np.int64)
    ma = rng.integers(1, 5, ka.shape[0]).astype(np.int64)
    mb = rng.integers(1, 5, kb.shape[0]).astype(np.int64)
    keys, mults = _accel.convolve_keys(ka, ma, kb, mb)
    return keys.tolist(), mults.tolist()


WORKLOADS = {
    "freudenthal E7 (0,0,0,0,0,1,0)": freudenthal_e7,
    "freudenthal E6 (0,2,0,0,0,0)": freudenthal_e6_adjoint_square,
    "S^4 of the E6 27, decomposed": plethysm_e6,
    "convolve 3000 x 3000 keys": convolve_random,
}


def timed(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        clear_caches()
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if not _accel.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    previous = _accel.use_numba(True)
    for fn in WORKLOADS.values():  # compile
        clear_caches()
        fn()

    print(f"{'workload':<34} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    try:
        for name, fn in WORKLOADS.items():
            _accel.use_numba(True)
            fast, a = timed(fn, args.repeat)
            _accel.use_numba(False)
            slow, b = timed(fn, args.repeat)
            if a != b:
                raise SystemExit(f"{name}: numba and numpy paths disagree")
            print(f"{name:<34} {fast * 1e3:>8.1f}ms {slow * 1e3:>8.1f}ms {slow / fast:>7.1f}x")
    finally:
        _accel.use_numba(previous)
        clear_caches()


if __name__ == "__main__":
    main()
