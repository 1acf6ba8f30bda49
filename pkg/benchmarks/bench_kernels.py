"""Time the word-enumeration kernel with both backends.

    python3 benchmarks/bench_kernels.py [--length 9] [--repeat 3]

Each backend evaluates all 6**length words once to warm up (numba compiles
on first call), then the best of ``--repeat`` timed runs is reported.
"""
import argparse
import time

import numpy as np

from braidbelts import _kernels


def best_time(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--length", type=int, default=9)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    n = 6**args.length
    results = {}
    for name in _kernels.available_backends():
        def run():
            return _kernels.evaluate_index_range(args.length, 0, n, name)

        secs = best_time(run, args.repeat)
        results[name] = (secs, run())
        print(f"{name:>6}: {n:,} words of length {args.length} in {secs:.3f}s ({n / secs / 1e6:.1f} M words/s)")

    if len(results) == 2:
        (a, ra), (b, rb) = results["numba"], results["numpy"]
        assert np.array_equal(ra, rb), "backends disagree"
        print(f"speedup numba/numpy: {b / a:.1f}x")


if __name__ == "__main__":
    main()
