"""Compare the compiled kernels with the numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Both paths are called directly, so one process measures both.  The first
compiled call is reported on its own; it includes compilation unless numba's
on-disk cache is warm.
"""

import argparse
import time

import numpy as np

from translatio import _kernels, build_root_system
from translatio import repweights as rw


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def orbit_case(label):
    R = build_root_system(label)
    start = np.ones(R.rank, dtype=np.int64)
    bound = int(max(R.pairing(R.rho(), a) for a in R.positive_roots))
    args = (start, R._cartan_np, bound, R.group_order())
    return f"orbit of rho, {label} ({R.group_order()} points)", args, _kernels.orbit_nb, _kernels.orbit_np


def freudenthal_case(label, lam):
    R = build_root_system(label)
    dom, depth = rw.dominant_weights(R, lam)
    bound = int(max(R.pairing(lam, a) for a in R.positive_roots))
    keys = _kernels.keys_np(dom, bound)
    order = np.argsort(keys, kind="mergesort")
    args = (dom, depth, keys[order], order.astype(np.int64), np.array(lam, dtype=np.int64),
            np.ones(R.rank, dtype=np.int64),
            np.array([a.weight for a in R.positive_roots], dtype=np.int64),
            np.array([a.root_coords for a in R.positive_roots], dtype=np.int64),
            np.array(R.symmetrizer, dtype=np.int64), R._cartan_np, bound)
    name = f"Freudenthal, {label} {tuple(lam)} ({len(dom)} dominant weights)"
    return name, args, _kernels.freudenthal_nb, _kernels.freudenthal_np


def dominant_case(label, n):
    R = build_root_system(label)
    rng = np.random.default_rng(0)
    vecs = rng.integers(-8, 9, size=(n, R.rank)).astype(np.int64)
    return (f"to_dominant, {label} ({n} vectors)", (vecs, R._cartan_np),
            _kernels.to_dominant_nb, _kernels.to_dominant_np)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    cases = [
        orbit_case("F4"), orbit_case("E6"),
        freudenthal_case("G2", [8, 6]), freudenthal_case("B3", [4, 3, 4]),
        freudenthal_case("A4", [3, 2, 2, 3]),
        dominant_case("F4", 20000),
    ]
    print(f"{'case':<52} {'first':>9} {'numba':>9} {'numpy':>9} {'speedup':>8}")
    for name, call_args, nb, npf in cases:
        t0 = time.perf_counter()
        nb(*call_args)
        compile_time = time.perf_counter() - t0
        t_nb, out_nb = best_of(lambda: nb(*call_args), args.repeat)
        t_np, out_np = best_of(lambda: npf(*call_args), args.repeat)
        same = all(np.array_equal(a, b) for a, b in zip(
            out_nb if isinstance(out_nb, tuple) else (out_nb,),
            out_np if isinstance(out_np, tuple) else (out_np,)))
        flag = "" if same else "  MISMATCH"
        print(f"{name:<52} {compile_time:>8.3f}s {t_nb:>8.4f}s {t_np:>8.4f}s "
              f"{t_np / t_nb:>7.1f}x{flag}")


if __name__ == "__main__":
    main()
