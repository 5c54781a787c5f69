"""Time the numba kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both backends are imported side by side, so the environment flag is not
needed here.  Each row reports the best of N runs after one warm-up call,
which keeps JIT compilation out of the numbers.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from ectdom import families as fam
from ectdom import kernels
from ectdom.graph import adjacency_bits, permutation_table


def best_of(fn, repeat: int) -> float:
    fn()
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def cases():
    scan_graphs = [("K6", fam.complete(6)), ("W8", fam.wheel(8)), ("two_cliques(4,4,2)", fam.two_cliques(4, 4, 2))]
    search_graphs = [("K8", fam.complete(8)), ("two_cliques(5,5,2)", fam.two_cliques(5, 5, 2))]
    for name, g in scan_graphs:
        yield f"subset_tables {name} m={g.m}", lambda b, g=g: b.subset_tables(g.n, g.eu, g.ev, g.nbr)
        cut = kernels.numpy_backend.subset_tables(g.n, g.eu, g.ev, g.nbr)[1]
        yield f"ec_tables {name} m={g.m}", lambda b, g=g, cut=cut: b.ec_tables(g.nbr, cut, False)
    for name, g in search_graphs:
        k = 6 if g.m > 25 else 5
        yield f"first_subset {name} k={k}", lambda b, g=g, k=k: b.first_subset(
            g.n, g.eu, g.ev, g.nbr, k, True, 0, 0)
    graphs6 = list(fam.all_connected_graphs(6))
    x = np.stack([adjacency_bits(g) for g in graphs6])
    table = permutation_table(6)
    yield f"canon_min_batch {len(graphs6)} graphs n=6", lambda b: b.canon_min_batch(x, table)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")
    print(f"{'kernel':<44} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8}")
    for label, fn in cases():
        slow = best_of(lambda: fn(kernels.numpy_backend), args.repeat)
        fast = best_of(lambda: fn(kernels.numba_backend), args.repeat)
        print(f"{label:<44} {slow * 1e3:>10.2f} {fast * 1e3:>10.2f} {slow / fast:>7.1f}x")


if __name__ == "__main__":
    main()
