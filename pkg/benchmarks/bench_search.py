"""Compare the compiled and pure-Python permutation search kernels.

Usage: python3 benchmarks/bench_search.py [--repeat N]

Runs the same workloads on both backends, checks that they agree on
realizability, and prints wall-clock times.
"""
import argparse
import time

from k3fib import permsearch
from k3fib.covers import enumerate_branch_data, realizable
from k3fib.tables import SUPPORTED_N

# three-point instances in degree 7 and 8; the unrealizable ones force a full search
HARD = [
    ([(2, 2, 2, 1), (2, 2, 2, 1), (4, 3)], 7),
    ([(3, 3, 1), (3, 3, 1), (4, 2, 1)], 7),
    ([(2, 2, 2, 2), (2, 2, 2, 2), (5, 3)], 8),
    ([(4, 4), (4, 4), (3, 3, 1, 1)], 8),
    ([(2, 2, 2, 2), (4, 4), (4, 4)], 8),
    ([(3, 3, 2), (3, 3, 2), (4, 2, 1, 1)], 8),
    ([(2, 2, 2, 2), (3, 3, 1, 1), (5, 1, 1, 1)], 8),
]


def _enumeration_workload():
    data = []
    for n in SUPPORTED_N:
        data += enumerate_branch_data(n, 7)
    return data


def run(backend: str, data) -> tuple:
    t0 = time.perf_counter()
    answers = [realizable(b, backend=backend) is not None for b in data]
    answers += [permsearch.realizable_cycle_types(t, d, backend=backend) is not None
                for t, d in HARD]
    return time.perf_counter() - t0, answers


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if permsearch._search_ext is None:
        print("compiled kernel not built; only the Python backend is available")
        backends = ["python"]
    else:
        backends = ["cython", "python"]

    permsearch.conjugacy_class((8,))  # warm the class tables
    data = _enumeration_workload()
    print(f"workload: {len(data)} branch data (d <= 7) + {len(HARD)} three-point instances")
    results = {}
    for be in backends:
        best = None
        for _ in range(args.repeat):
            elapsed, answers = run(be, data)
            best = elapsed if best is None else min(best, elapsed)
        results[be] = (best, answers)
        print(f"{be:>7}: {best:.3f} s (best of {args.repeat})")
    if len(results) == 2:
        agree = results["cython"][1] == results["python"][1]
        print(f"backends agree: {agree}")
        print(f"speedup: {results['python'][0] / results['cython'][0]:.1f}x")


if __name__ == "__main__":
    main()
