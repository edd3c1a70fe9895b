#!/usr/bin/env python3
"""Compare the compiled and the vectorized kernel backends.

Runs each workload under force="numba" and force="numpy" on identical
inputs, checks the outputs agree, and prints a timing table.  Pass
--quick to shrink the sweep windows for a fast smoke run.

Usage:  python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import time

import numpy as np

from soltes import _kernels
from soltes.families import theorem_order_n
from soltes.formats import parse_graph6
from soltes.screen import appendix_fixtures
from soltes.search import _candidate_edges


def timed(fn, repeat=3):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def workloads(quick: bool):
    em5 = np.array(_candidate_edges(5), np.int64)
    window = 1 << (18 if quick else 22)
    yield ("sweep_soltes order 5, %.1e subsets" % window, lambda f: sorted(
        _kernels.sweep_soltes(5, em5, 0, window, force=f)))

    em4 = np.array(_candidate_edges(4, [2]), np.int64)
    yield ("sweep_bounds on all graphs of order 4", lambda f:
           _kernels.sweep_bounds(4, em4, 0, 1 << len(em4), 6, 10, force=f))

    rng = np.random.default_rng(7)
    k = 2_000 if quick else 20_000
    masks = rng.integers(1, 1 << 7, size=(k, 6), dtype=np.int64)
    masks |= masks >> 1  # densify so most candidates are connected
    ns = np.full(k, 7, np.int64)
    yield (f"check_soltes_batch, {k} candidates", lambda f:
           _kernels.check_soltes_batch(ns, masks, force=f).tolist())

    big = parse_graph6(appendix_fixtures()[3])  # order 112
    yield ("all_sources_stats, order-112 census graph", lambda f:
           tuple(a.tolist() for a in _kernels.all_sources_stats(big, force=f)))

    h = theorem_order_n(20)
    yield ("bfs_distances x n, order-20 instance", lambda f:
           [_kernels.bfs_distances(h, v, force=f).tolist()
            for v in range(h.n)])


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()

    if not _kernels.NUMBA_ENABLED:
        print("compiled backend disabled (SOLTES_NUMBA=0); nothing to compare")
        return

    print(f"{'workload':<48} {'numba':>9} {'numpy':>9} {'speedup':>8}")
    for name, fn in workloads(args.quick):
        fn("numba")  # warm the jit cache before timing
        t_nb, out_nb = timed(lambda: fn("numba"))
        t_np, out_np = timed(lambda: fn("numpy"))
        assert out_nb == out_np, f"backend disagreement in {name!r}"
        print(f"{name:<48} {t_nb:>8.3f}s {t_np:>8.3f}s {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
