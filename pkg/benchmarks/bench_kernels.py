"""Time the numba kernels against their numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--n 6] [--repeat 3]

The first numba call includes JIT compilation (or loading the on-disk cache),
so it is reported separately from the steady-state timings.
"""

import argparse
import time

import numpy as np

from bei_lab import _kernels
from bei_lab.corpus import labeled_masks


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=6, help="vertex count for the edge-mask kernels")
    ap.add_argument("--table-n", type=int, default=16, help="vertex count for the component table")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is unavailable or disabled; nothing to compare")

    n = args.n
    masks = np.arange(1 << (n * (n - 1) // 2), dtype=np.int64)
    block = labeled_masks(n, "block")
    tn = args.table_n
    path_adj = np.array([(1 << (i - 1) if i else 0) | (1 << (i + 1) if i < tn - 1 else 0) for i in range(tn)],
                        dtype=np.int64)
    table = _kernels.component_count_table(path_adj, tn, "numpy")

    cases = [
        (f"component_count_table (path, n={tn})", lambda b: _kernels.component_count_table(path_adj, tn, b)),
        (f"cutset_flags (n={tn})", lambda b: _kernels.cutset_flags(table, tn, b)),
        (f"block_graph_flags ({masks.size} masks, n={n})", lambda b: _kernels.block_graph_flags(masks, n, b)),
        (f"connected_flags ({masks.size} masks, n={n})", lambda b: _kernels.connected_flags(masks, n, b)),
        (f"canonical_masks ({block.size} block graphs, n={n})", lambda b: _kernels.canonical_masks(block, n, b)),
    ]
    print(f"{'kernel':<46} {'first numba':>12} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    for name, run in cases:
        t0 = time.perf_counter()
        run("numba")
        first = time.perf_counter() - t0
        t_nb, out_nb = best_of(lambda: run("numba"), args.repeat)
        t_np, out_np = best_of(lambda: run("numpy"), args.repeat)
        if not np.array_equal(out_nb, out_np):
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:<46} {first:>11.3f}s {t_nb:>9.4f}s {t_np:>9.4f}s {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
