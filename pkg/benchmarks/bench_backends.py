#!/usr/bin/env python3
"""Compare the numba kernels against the pure-numpy fallbacks.

Runs the two hot loops (transfer iteration, walk stepping) on growing
problem sizes and prints best-of-N wall times plus the speedup.

    python benchmarks/bench_backends.py [--repeat 5]
"""

import argparse
import time

import numpy as np

from hadwalk import InitialVector, build_transfer, hadamard
from hadwalk._kernels import evolve_once_numpy, transfer_sequence_numpy

try:
    from hadwalk._kernels import _numba_kernels

    transfer_sequence_nb, evolve_once_nb = _numba_kernels()
    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False
    print("numba unavailable: timing the numpy path only")


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_transfer(repeat):
    # bounded angle so amplitudes stay O(1) at any window size
    pair = build_transfer(hadamard(), np.exp(1j * np.pi / 6))
    phi = InitialVector(1, 0).as_array()
    print(f"{'transfer iteration':<24}{'sites':>10}{'numpy':>12}"
          f"{'numba':>12}{'speedup':>9}")
    for half in (10_000, 100_000, 1_000_000):
        t_np = best_of(lambda: transfer_sequence_numpy(
            pair.t_plus, pair.t_minus, phi, half, half), repeat)
        if HAS_NUMBA:
            transfer_sequence_nb(pair.t_plus, pair.t_minus, phi, 4, 4)  # warm JIT
            t_nb = best_of(lambda: transfer_sequence_nb(
                pair.t_plus, pair.t_minus, phi, half, half), repeat)
            print(f"{'':<24}{2 * half + 1:>10}{t_np:>12.4f}{t_nb:>12.4f}"
                  f"{t_np / t_nb:>8.1f}x")
        else:
            print(f"{'':<24}{2 * half + 1:>10}{t_np:>12.4f}{'-':>12}{'-':>9}")


def bench_evolution(repeat):
    coin = hadamard()
    c = (coin.c11, coin.c12, coin.c21, coin.c22)
    rng = np.random.default_rng(0)
    print(f"{'walk stepping':<24}{'sites':>10}{'numpy':>12}"
          f"{'numba':>12}{'speedup':>9}")
    for n in (10_001, 100_001, 1_000_001):
        values = rng.normal(size=(n, 2)) + 1j * rng.normal(size=(n, 2))

        def run_np():
            v = values
            for _ in range(20):
                v = evolve_once_numpy(*c, v)

        t_np = best_of(run_np, repeat)
        if HAS_NUMBA:
            evolve_once_nb(*c, values[:8])  # warm JIT

            def run_nb():
                v = values
                for _ in range(20):
                    v = evolve_once_nb(*c, v)

            t_nb = best_of(run_nb, repeat)
            print(f"{'':<24}{n:>10}{t_np:>12.4f}{t_nb:>12.4f}"
                  f"{t_np / t_nb:>8.1f}x")
        else:
            print(f"{'':<24}{n:>10}{t_np:>12.4f}{'-':>12}{'-':>9}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    bench_transfer(args.repeat)
    print()
    bench_evolution(args.repeat)


if __name__ == "__main__":
    main()
