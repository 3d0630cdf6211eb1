"""Time the compiled and pure-Python search kernels on the same instances.

    python3 benchmarks/bench_kernel.py [--area 38] [--limit 6] [--repeat 3]

For each lattice of the chosen area the minimum code is searched with an
upper bound of ``ceil(4/19 * area) + 1`` codewords, so both kernels do the
full proof of optimality.
"""

import argparse
import time
from math import ceil

from hexid.search import BACKEND, constraint_masks, enumerate_lattices, solve


def bench(masks, n, upper, backend, repeat):
    best = None
    for _ in range(repeat):
        t = time.perf_counter()
        sol, nodes, done = solve(masks, n, upper, 10**9, backend=backend)
        dt = time.perf_counter() - t
        best = dt if best is None else min(best, dt)
    return best, nodes, bin(sol).count("1") if sol is not None else None


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--area", type=int, default=38)
    ap.add_argument("--limit", type=int, default=6, help="lattices to time")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if BACKEND != "cython":
        raise SystemExit("compiled kernel not built; run pip install -e . first")
    lats = [L for L in enumerate_lattices(args.area) if L.area == args.area][: args.limit]
    upper = ceil(4 * args.area / 19) + 1
    print(f"{'lattice':<22}{'k':>4}{'nodes':>10}{'cython s':>11}{'python s':>11}{'speedup':>9}")
    tc = tp = 0.0
    for L in lats:
        masks = constraint_masks(L, 2)
        c, nodes, k = bench(masks, L.area, upper, "cython", args.repeat)
        p, nodes_p, k_p = bench(masks, L.area, upper, "python", args.repeat)
        assert (k, nodes) == (k_p, nodes_p), "kernels disagree"
        tc += c
        tp += p
        print(f"{str((L.a, L.b, L.d)):<22}{str(k):>4}{nodes:>10}{c:>11.4f}{p:>11.4f}{p / c:>8.1f}x")
    print(f"{'total':<36}{tc:>11.4f}{tp:>11.4f}{tp / tc:>8.1f}x")


if __name__ == "__main__":
    main()
