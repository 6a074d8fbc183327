"""Definition-level boundary, contour, eccentricity, and periphery sets.

All four extractions run from a precomputed MetricProfile; nothing here
recomputes distances. The neighborhood argument selects open N(v) (default) or
closed N[v]; the two give identical boundary and contour sets, which the test
suite asserts rather than assumes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .digraph import Digraph
from .metric import MetricProfile

NEIGHBORHOODS = ("open", "closed")


@dataclass(frozen=True)
class BoundaryProfile:
    """The four boundary-type vertex sets of one strong digraph."""

    boundary: frozenset[int]
    contour: frozenset[int]
    eccentricity_set: frozenset[int]
    periphery: frozenset[int]


def _check_neighborhood(neighborhood: str) -> None:
    if neighborhood not in NEIGHBORHOODS:
        raise ValueError(f"neighborhood must be one of {NEIGHBORHOODS}, got {neighborhood!r}")


def _neighbor_csr(d: Digraph, neighborhood: str) -> tuple[np.ndarray, np.ndarray]:
    """CSR neighbor rows, with v prepended to its own row for the closed form."""
    if neighborhood == "open":
        return d.und_indptr, d.und_indices
    counts = np.diff(d.und_indptr) + 1
    indptr = np.zeros(d.n + 1, dtype=np.int32)
    np.cumsum(counts, out=indptr[1:])
    indices = np.empty(indptr[-1], dtype=np.int32)
    for v in range(d.n):
        indices[indptr[v]] = v
        indices[indptr[v] + 1:indptr[v + 1]] = d.und_indices[d.und_indptr[v]:d.und_indptr[v + 1]]
    return indptr, indices


def is_boundary_vertex_of(p: MetricProfile, d: Digraph, v: int, u: int) -> bool:
    """True iff no neighbor of v lies md-farther from u than v does."""
    d._check_vertex(v)
    d._check_vertex(u)
    nbrs = d.und_indices[d.und_indptr[v]:d.und_indptr[v + 1]]
    if nbrs.size == 0:
        return True
    return bool((p.md[u, nbrs] <= p.md[u, v]).all())


def boundary_set(p: MetricProfile, d: Digraph, neighborhood: str = "open") -> frozenset[int]:
    """Vertices v admitting a witness u with md(u,w) <= md(u,v) for all w in N(v).

    The witness ranges over all of V including v itself, which only matters
    for the single-vertex digraph (empty neighbor list, vacuously boundary).
    """
    _check_neighborhood(neighborhood)
    indptr, indices = _neighbor_csr(d, neighborhood)
    mask = _kernels.boundary_mask(p.md, indptr, indices)
    return frozenset(np.flatnonzero(mask).tolist())


def eccentric_set(p: MetricProfile) -> frozenset[int]:
    """Vertices realizing some vertex's eccentricity: exists u, md(u,v) = ecc(u)."""
    mask = (p.md == p.ecc[:, None]).any(axis=0)
    return frozenset(np.flatnonzero(mask).tolist())


def periphery_set(p: MetricProfile) -> frozenset[int]:
    """Vertices whose eccentricity equals the diameter."""
    return frozenset(np.flatnonzero(p.ecc == p.diameter).tolist())


def contour_set(p: MetricProfile, d: Digraph, neighborhood: str = "open") -> frozenset[int]:
    """Vertices whose eccentricity no neighbor exceeds."""
    _check_neighborhood(neighborhood)
    indptr, indices = _neighbor_csr(d, neighborhood)
    counts = np.diff(indptr)
    worst = np.full(d.n, -1, dtype=np.int64)
    nonempty = counts > 0
    if nonempty.any():
        segment_max = np.maximum.reduceat(p.ecc[indices], indptr[:-1][nonempty])
        worst[nonempty] = segment_max
    return frozenset(np.flatnonzero(worst <= p.ecc).tolist())


def boundary_profile(p: MetricProfile, d: Digraph, neighborhood: str = "open") -> BoundaryProfile:
    """All four sets bundled."""
    return BoundaryProfile(
        boundary=boundary_set(p, d, neighborhood),
        contour=contour_set(p, d, neighborhood),
        eccentricity_set=eccentric_set(p),
        periphery=periphery_set(p),
    )
