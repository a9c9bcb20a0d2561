"""Compare the compiled and pure-Python traversal kernels.

Usage: python benchmarks/compare_backends.py [--max 11] [--repeats 5]

For each symmetric instance (n, n) and each kernel, reports the best CPU
time over the repeats for three entry points: the full event visitor, the
bare count traversal, and value collection into an array.
"""
import argparse
import time

from shufflebits import _backend
from shufflebits.bench import time_enumeration
from shufflebits.core import ShuffleSpec, count_permutations, permutation_values


def best_cpu(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.process_time()
        fn()
        best = min(best, time.process_time() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--min", type=int, default=5)
    parser.add_argument("--max", type=int, default=11)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    names = _backend.available()
    print(f"kernels: {', '.join(names)} (default {_backend.ACTIVE})")
    header = f"{'n':>3} {'mode':>8} " + " ".join(f"{name:>12}" for name in names)
    if len(names) == 2:
        header += f" {'speedup':>8}"
    print(header)
    for n in range(args.min, args.max + 1):
        spec = ShuffleSpec(n, n)
        modes = {
            "visitor": lambda name: best_cpu(lambda: time_enumeration(spec, name), args.repeats),
            "count": lambda name: best_cpu(lambda: count_permutations(spec, name), args.repeats),
            "collect": lambda name: best_cpu(lambda: permutation_values(spec, name), args.repeats),
        }
        for mode, measure in modes.items():
            times = [measure(name) for name in names]
            row = f"{n:>3} {mode:>8} " + " ".join(f"{t:>11.6f}s" for t in times)
            if len(times) == 2 and times[0] > 0:
                row += f" {times[1] / times[0]:>7.1f}x"
            print(row)


if __name__ == "__main__":
    main()
