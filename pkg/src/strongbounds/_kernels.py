"""Hot numeric kernels with two selectable lanes.

The default lane JIT-compiles the inner loops with numba (cached between runs).
Setting ``STRONGBOUNDS_NO_NUMBA=1`` (or ``NUMBA_DISABLE_JIT=1``) selects a pure
numpy lane instead. Both lanes are importable directly so tests and the
benchmark can compare them regardless of the active selection.

Lane differences: the numba lane runs one BFS per source (O(n·(n+m))); the
numpy lane runs a vectorized Floyd-Warshall (O(n³)) because a per-source BFS
cannot be expressed in numpy without per-level Python overhead that collapses
on high-diameter graphs.
"""

from __future__ import annotations

import os

import numpy as np


def _env_flag(name: str) -> bool:
    return os.environ.get(name, "") not in ("", "0")


NUMBA_ENABLED = False
if not (_env_flag("STRONGBOUNDS_NO_NUMBA") or _env_flag("NUMBA_DISABLE_JIT")):
    try:
        from numba import njit

        NUMBA_ENABLED = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        NUMBA_ENABLED = False

ACTIVE_LANE = "numba" if NUMBA_ENABLED else "numpy"


# ----------------------------------------------------------------------------
# all-pairs directed hop counts; -1 marks unreachable
# ----------------------------------------------------------------------------

def _all_pairs_bfs_py(indptr, indices, n):
    dist = np.full((n, n), -1, dtype=np.int32)
    queue = np.empty(n, dtype=np.int32)
    for s in range(n):
        drow = dist[s]
        drow[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = drow[u]
            for k in range(indptr[u], indptr[u + 1]):
                w = indices[k]
                if drow[w] == -1:
                    drow[w] = du + 1
                    queue[tail] = w
                    tail += 1
    return dist


def all_pairs_floyd_numpy(indptr: np.ndarray, indices: np.ndarray, n: int) -> np.ndarray:
    """Vectorized Floyd-Warshall over the arc set encoded as CSR."""
    big = np.int32(n + 1)  # strictly larger than any real hop count
    dist = np.full((n, n), big, dtype=np.int32)
    np.fill_diagonal(dist, 0)
    if indices.size:
        tails = np.repeat(np.arange(n, dtype=np.int32), np.diff(indptr))
        dist[tails, indices] = 1
    for k in range(n):
        np.minimum(dist, dist[:, k, None] + dist[None, k, :], out=dist)
    dist[dist >= big] = -1
    return dist


# ----------------------------------------------------------------------------
# boundary-vertex membership scan
#
# v is a boundary vertex iff some witness u has md(u, w) <= md(u, v) for every
# w in the neighbor list of v (CSR rows supplied by the caller; open or closed
# neighborhoods are the caller's choice). Empty neighbor rows are vacuously
# boundary.
# ----------------------------------------------------------------------------

def _boundary_mask_py(md, nbr_indptr, nbr_indices):
    n = md.shape[0]
    out = np.zeros(n, dtype=np.bool_)
    for v in range(n):
        lo = nbr_indptr[v]
        hi = nbr_indptr[v + 1]
        for u in range(n):
            ok = True
            for k in range(lo, hi):
                if md[u, nbr_indices[k]] > md[u, v]:
                    ok = False
                    break
            if ok:
                out[v] = True
                break
    return out


def boundary_mask_numpy(md: np.ndarray, nbr_indptr: np.ndarray, nbr_indices: np.ndarray) -> np.ndarray:
    n = md.shape[0]
    out = np.zeros(n, dtype=bool)
    for v in range(n):
        nbrs = nbr_indices[nbr_indptr[v]:nbr_indptr[v + 1]]
        if nbrs.size == 0:
            out[v] = True
            continue
        worst = md[:, nbrs].max(axis=1)
        out[v] = bool((worst <= md[:, v]).any())
    return out


if NUMBA_ENABLED:
    all_pairs_bfs_numba = njit(cache=True)(_all_pairs_bfs_py)
    boundary_mask_numba = njit(cache=True)(_boundary_mask_py)
else:
    all_pairs_bfs_numba = None
    boundary_mask_numba = None


def all_pairs_directed_dist(indptr: np.ndarray, indices: np.ndarray, n: int) -> np.ndarray:
    """Directed hop-count table on the active lane; -1 where unreachable."""
    if NUMBA_ENABLED:
        return all_pairs_bfs_numba(indptr, indices, n)
    return all_pairs_floyd_numpy(indptr, indices, n)


def boundary_mask(md: np.ndarray, nbr_indptr: np.ndarray, nbr_indices: np.ndarray) -> np.ndarray:
    """Boundary-membership mask on the active lane."""
    if NUMBA_ENABLED:
        return boundary_mask_numba(md, nbr_indptr, nbr_indices)
    return boundary_mask_numpy(md, nbr_indptr, nbr_indices)


def warmup() -> None:
    """Trigger JIT compilation on a 2-vertex digraph so later calls are hot."""
    indptr = np.array([0, 1, 2], dtype=np.int32)
    indices = np.array([1, 0], dtype=np.int32)
    d = all_pairs_directed_dist(indptr, indices, 2)
    boundary_mask(np.maximum(d, d.T), indptr, indices)
