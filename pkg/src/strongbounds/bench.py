"""Benchmark the numba kernel lane against the pure-numpy lane.

Run as:  python -m strongbounds.bench [--n 400 800] [--p 0.02] [--seed 1]

Times the two hot kernels (all-pairs directed distances, boundary-membership
scan) on generated strong digraphs. The numba lane is timed after a warmup
call so JIT compilation is not charged to the measurement; the reported
compile time is shown separately once.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from . import _kernels
from .boundary import _neighbor_csr
from .generator import GeneratorConfig, generate_strong_digraph


def _time(fn, *args, repeat: int = 3) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, nargs="+", default=[200, 400, 800])
    parser.add_argument("--p", type=float, default=0.02)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args(argv)

    if _kernels.NUMBA_ENABLED:
        t0 = time.perf_counter()
        _kernels.warmup()
        print(f"numba lane available; warmup/compile took {time.perf_counter() - t0:.2f}s")
    else:
        print("numba lane unavailable or disabled; timing the numpy lane only")

    header = f"{'n':>6} {'arcs':>8} {'kernel':>22} {'numpy lane':>12} {'numba lane':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for n in args.n:
        d = generate_strong_digraph(GeneratorConfig(n=n, p=args.p, seed=args.seed)).digraph
        rows = []
        t_np = _time(_kernels.all_pairs_floyd_numpy, d.out_indptr, d.out_indices, d.n)
        if _kernels.NUMBA_ENABLED:
            t_nb = _time(_kernels.all_pairs_bfs_numba, d.out_indptr, d.out_indices, d.n)
        else:
            t_nb = None
        rows.append(("all-pairs distances", t_np, t_nb))

        dist = _kernels.all_pairs_directed_dist(d.out_indptr, d.out_indices, d.n)
        md = np.maximum(dist, dist.T)
        indptr, indices = _neighbor_csr(d, "open")
        t_np = _time(_kernels.boundary_mask_numpy, md, indptr, indices)
        if _kernels.NUMBA_ENABLED:
            t_nb = _time(_kernels.boundary_mask_numba, md, indptr, indices)
        else:
            t_nb = None
        rows.append(("boundary scan", t_np, t_nb))

        for name, t_np, t_nb in rows:
            if t_nb is None:
                print(f"{n:>6} {d.arc_count:>8} {name:>22} {t_np * 1e3:>10.2f}ms {'-':>12} {'-':>8}")
            else:
                print(
                    f"{n:>6} {d.arc_count:>8} {name:>22} {t_np * 1e3:>10.2f}ms "
                    f"{t_nb * 1e3:>10.2f}ms {t_np / t_nb:>7.1f}x"
                )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
