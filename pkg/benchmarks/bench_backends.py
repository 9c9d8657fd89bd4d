"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_backends.py --sizes 1e4 2e4 4e4

Times the solver and the decomposition separately on the same random
graphs for every available backend and prints the speed-up.
"""

import argparse
import time

from bdm import kernels
from bdm.bench import random_sparse_graph, time_decompose
from bdm.matching import max_b_matching


def _size(text):
    return int(float(text))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=_size, nargs="+", default=[10_000, 20_000, 40_000])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    backends = kernels.available_backends()
    if "compiled" not in backends:
        print("compiled extension not built; only the python backend is available")
    print(f"{'edges':>8} {'backend':>9} {'solve_s':>9} {'decompose_s':>12}")
    previous = kernels.BACKEND
    try:
        for m in args.sizes:
            rows = {}
            for name in backends:
                kernels.use_backend(name)
                g = random_sparse_graph(m, args.seed)
                t0 = time.perf_counter()
                max_b_matching(g)
                solve = time.perf_counter() - t0
                dec = time_decompose(m, args.seed, args.repeat).decompose_seconds
                rows[name] = (solve, dec)
                print(f"{m:>8} {name:>9} {solve:>9.4f} {dec:>12.4f}")
            if len(rows) == 2:
                (ps, pd), (cs, cd) = rows["python"], rows["compiled"]
                print(f"{'':>8} {'speed-up':>9} {ps / cs:>8.1f}x {pd / cd:>11.1f}x")
    finally:
        kernels.use_backend(previous)


if __name__ == "__main__":
    main()
