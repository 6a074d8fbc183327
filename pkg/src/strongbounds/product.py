"""Strong products of digraphs and factor-side formulas for their sets.

Two independent routes exist on purpose. `strong_product` materializes the
product digraph (budget-guarded) so the definition-level machinery in
`metric`/`boundary` can run on it directly. The `*_via_factors` operations
never build the product: they evaluate closed-form factor characterizations of
the four sets on factor profiles alone, in O(n1·n2). The verification harness
compares the two routes; they are NOT equivalent on all inputs (see
`verify.run_verification` and the test suite for the known divergences of the
boundary and contour characterizations).

Pair (i, r) is encoded as i*n2 + r, which is exactly C-order raveling of an
(n1, n2) grid; the formula code exploits that by building boolean grids and
reading off flat indices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .boundary import BoundaryProfile, boundary_profile
from .digraph import Digraph, from_arcs
from .errors import SizeOverflow, VertexOutOfRange
from .metric import MetricProfile, metric_profile

DEFAULT_VERTEX_BUDGET = 10_000


@dataclass(frozen=True)
class ProductLabel:
    """Bijection between product vertex ids and factor index pairs."""

    n1: int
    n2: int

    def encode(self, i: int, r: int) -> int:
        if not (0 <= i < self.n1 and 0 <= r < self.n2):
            raise VertexOutOfRange(f"pair ({i},{r}) not in {self.n1}x{self.n2}")
        return i * self.n2 + r

    def decode(self, x: int) -> tuple[int, int]:
        if not 0 <= x < self.n1 * self.n2:
            raise VertexOutOfRange(f"product vertex {x} not in 0..{self.n1 * self.n2 - 1}")
        return divmod(x, self.n2)


@dataclass(frozen=True)
class FactorPair:
    """Both factors with their metric and boundary profiles precomputed."""

    d1: Digraph
    d2: Digraph
    p1: MetricProfile
    p2: MetricProfile
    b1: BoundaryProfile
    b2: BoundaryProfile

    @classmethod
    def from_digraphs(cls, d1: Digraph, d2: Digraph, neighborhood: str = "open") -> "FactorPair":
        """Profile both factors; raises NotStrong if either is not strong."""
        p1 = metric_profile(d1)
        p2 = metric_profile(d2)
        return cls(
            d1=d1,
            d2=d2,
            p1=p1,
            p2=p2,
            b1=boundary_profile(p1, d1, neighborhood),
            b2=boundary_profile(p2, d2, neighborhood),
        )

    @property
    def label(self) -> ProductLabel:
        return ProductLabel(self.d1.n, self.d2.n)


def product_vertex_count(d1: Digraph, d2: Digraph) -> int:
    return d1.n * d2.n


def product_arc_count(d1: Digraph, d2: Digraph) -> int:
    """Arc count of the product from factor counts alone.

    The three arc rules generate disjoint families: same-column steps,
    same-row steps, and simultaneous steps.
    """
    m1, m2 = d1.arc_count, d2.arc_count
    return m1 * d2.n + d1.n * m2 + m1 * m2


def strong_product(
    d1: Digraph, d2: Digraph, budget: int = DEFAULT_VERTEX_BUDGET
) -> tuple[Digraph, ProductLabel]:
    """Materialize the product digraph under encode.

    ((i,r),(j,s)) is an arc iff (i,j) is an arc with r=s, or i=j with (r,s) an
    arc, or both coordinates step along arcs simultaneously. Strongness is not
    required for construction.
    """
    n = product_vertex_count(d1, d2)
    if n > budget:
        raise SizeOverflow(
            f"product on {d1.n}*{d2.n}={n} vertices exceeds the budget of {budget}"
        )
    n2 = d2.n
    arcs: list[tuple[int, int]] = []
    for (i, j) in d1.arcs:
        base_i, base_j = i * n2, j * n2
        for r in range(n2):
            arcs.append((base_i + r, base_j + r))
        for (r, s) in d2.arcs:
            arcs.append((base_i + r, base_j + s))
    for (r, s) in d2.arcs:
        for i in range(d1.n):
            base = i * n2
            arcs.append((base + r, base + s))
    return from_arcs(n, arcs), ProductLabel(d1.n, d2.n)


def product_distance(f: FactorPair, a: tuple[int, int], b: tuple[int, int]) -> int:
    """md between product vertices (i,r) and (j,s): max of the factor mds."""
    i, r = a
    j, s = b
    lbl = f.label
    lbl.encode(i, r)
    lbl.encode(j, s)
    return int(max(f.p1.md[i, j], f.p2.md[r, s]))


def product_eccentricities(f: FactorPair) -> np.ndarray:
    """Product eccentricity vector in encoded order: max of factor eccs."""
    return np.maximum.outer(f.p1.ecc, f.p2.ecc).ravel().astype(np.int32)


@dataclass(frozen=True)
class ProductMetricSummary:
    """Product-scale metric facts computable without any product-sized table."""

    n: int
    ecc: np.ndarray
    radius: int
    diameter: int


def product_metric_summary(f: FactorPair) -> ProductMetricSummary:
    return ProductMetricSummary(
        n=f.d1.n * f.d2.n,
        ecc=product_eccentricities(f),
        radius=max(f.p1.radius, f.p2.radius),
        diameter=max(f.p1.diameter, f.p2.diameter),
    )


def product_metric_profile(f: FactorPair, budget: int = DEFAULT_VERTEX_BUDGET) -> MetricProfile:
    """Full product profile assembled from factor profiles, no product BFS.

    Materializes the (n1·n2)² md table, so it honors the same vertex budget as
    construction; beyond it use `product_metric_summary`.
    """
    n = f.d1.n * f.d2.n
    if n > budget:
        raise SizeOverflow(
            f"product md table on {n} vertices exceeds the budget of {budget}"
        )
    n1, n2 = f.d1.n, f.d2.n
    md = np.maximum(
        np.repeat(np.repeat(f.p1.md, n2, axis=0), n2, axis=1),
        np.tile(f.p2.md, (n1, n1)),
    ).astype(np.int32)
    summary = product_metric_summary(f)
    return MetricProfile(md=md, ecc=summary.ecc, radius=summary.radius, diameter=summary.diameter)


# ----------------------------------------------------------------------------
# factor formulas for the four sets
#
# Each builds an (n1, n2) boolean grid whose raveled true positions are the
# encoded members. Grids keep the evaluations O(n1*n2) and product-free.
# ----------------------------------------------------------------------------

def _member_mask(members: frozenset[int], n: int) -> np.ndarray:
    mask = np.zeros(n, dtype=bool)
    if members:
        mask[sorted(members)] = True
    return mask


def _grid_to_set(grid: np.ndarray) -> frozenset[int]:
    return frozenset(np.flatnonzero(grid.ravel()).tolist())


def _worst_neighbor_md(d: Digraph, p: MetricProfile) -> np.ndarray:
    """worst[v] = max md(v, w) over w in N(v); 0 for an empty neighborhood."""
    counts = np.diff(d.und_indptr)
    worst = np.zeros(d.n, dtype=np.int64)
    nonempty = counts > 0
    if nonempty.any():
        rows = np.repeat(np.arange(d.n), counts)
        flat = p.md[rows, d.und_indices]
        worst[nonempty] = np.maximum.reduceat(flat, d.und_indptr[:-1][nonempty])
    return worst


def product_boundary_via_factors(f: FactorPair) -> frozenset[int]:
    """Boundary of the product by the factor characterization A1 ∪ A2 ∪ A3.

    The first part pairs boundary vertices of both factors. The second takes
    (i, r) with i in the first boundary, r outside the second, and every
    neighbor of r within md-distance ecc1(i) of r; the third is the mirror
    image. The characterization is implemented exactly in that stated form: it
    disagrees with the definition-level boundary of the constructed product on
    some inputs (it can miss true boundary vertices), which the verification
    harness surfaces.
    """
    n1, n2 = f.d1.n, f.d2.n
    bd1 = _member_mask(f.b1.boundary, n1)
    bd2 = _member_mask(f.b2.boundary, n2)
    worst1 = _worst_neighbor_md(f.d1, f.p1)
    worst2 = _worst_neighbor_md(f.d2, f.p2)
    a1 = bd1[:, None] & bd2[None, :]
    a2 = bd1[:, None] & ~bd2[None, :] & (worst2[None, :] <= f.p1.ecc[:, None])
    a3 = ~bd1[:, None] & bd2[None, :] & (worst1[:, None] <= f.p2.ecc[None, :])
    return _grid_to_set(a1 | a2 | a3)


def product_periphery_via_factors(f: FactorPair) -> frozenset[int]:
    """Periphery of the product from factor peripheries, split on diameters."""
    n1, n2 = f.d1.n, f.d2.n
    pe1 = _member_mask(f.b1.periphery, n1)
    pe2 = _member_mask(f.b2.periphery, n2)
    if f.p1.diameter < f.p2.diameter:
        grid = np.broadcast_to(pe2[None, :], (n1, n2))
    elif f.p1.diameter > f.p2.diameter:
        grid = np.broadcast_to(pe1[:, None], (n1, n2))
    else:
        grid = pe1[:, None] | pe2[None, :]
    return _grid_to_set(grid)


def _eccentric_rows_at_least(p: MetricProfile, threshold: int) -> np.ndarray:
    """Union of per-vertex eccentric-vertex sets over vertices with ecc >= threshold."""
    rows = p.ecc >= threshold
    if not rows.any():
        return np.zeros(p.n, dtype=bool)
    return (p.md[rows] == p.ecc[rows, None]).any(axis=0)


def product_eccentric_via_factors(f: FactorPair) -> frozenset[int]:
    """Eccentricity set of the product from factor data, split on radii.

    Equal radii: eccentric vertices of either factor paired with everything.
    Smaller first radius: the first-factor side shrinks to eccentric vertices
    of vertices whose eccentricity reaches the second radius. The opposite
    ordering is handled by commutativity (swap and mirror).
    """
    n1, n2 = f.d1.n, f.d2.n
    ec1 = _member_mask(f.b1.eccentricity_set, n1)
    ec2 = _member_mask(f.b2.eccentricity_set, n2)
    if f.p1.radius == f.p2.radius:
        grid = ec1[:, None] | ec2[None, :]
    elif f.p1.radius < f.p2.radius:
        a = _eccentric_rows_at_least(f.p1, f.p2.radius)
        grid = a[:, None] | ec2[None, :]
    else:
        b = _eccentric_rows_at_least(f.p2, f.p1.radius)
        grid = ec1[:, None] | b[None, :]
    return _grid_to_set(grid)


def product_contour_via_factors(f: FactorPair) -> frozenset[int]:
    """Contour of the product by the three-case factor formula.

    Implemented exactly in its stated form; like the boundary characterization
    it can disagree with the definition-level contour of the constructed
    product (eccentricity may jump by more than one across a one-way arc),
    which the verification harness surfaces.
    """
    n1, n2 = f.d1.n, f.d2.n
    ct1 = _member_mask(f.b1.contour, n1)
    ct2 = _member_mask(f.b2.contour, n2)
    e1, e2 = f.p1.ecc[:, None], f.p2.ecc[None, :]
    grid = (ct1[:, None] & (e2 < e1)) | (ct2[None, :] & (e1 < e2)) | (ct1[:, None] & ct2[None, :])
    return _grid_to_set(grid)


def product_boundary_profile_via_factors(f: FactorPair) -> BoundaryProfile:
    """All four factor-formula sets bundled."""
    return BoundaryProfile(
        boundary=product_boundary_via_factors(f),
        contour=product_contour_via_factors(f),
        eccentricity_set=product_eccentric_via_factors(f),
        periphery=product_periphery_via_factors(f),
    )


@dataclass(frozen=True)
class UndirectedFormulaReport:
    """Contrast of the undirected-style boundary identity with the factor formula.

    candidate is (∂1 × V2) ∪ (V1 × ∂2), the identity valid for undirected
    graphs; factor_boundary is the directed factor characterization
    (A1 ∪ A2 ∪ A3). difference is their symmetric difference, empty exactly
    when the undirected identity and the directed characterization agree.
    """

    candidate: frozenset[int]
    factor_boundary: frozenset[int]
    difference: frozenset[int]


def undirected_formula_counterexample(f: FactorPair) -> UndirectedFormulaReport:
    """Where the undirected-style boundary identity diverges from the factor formula."""
    n1, n2 = f.d1.n, f.d2.n
    bd1 = _member_mask(f.b1.boundary, n1)
    bd2 = _member_mask(f.b2.boundary, n2)
    candidate = _grid_to_set(bd1[:, None] | bd2[None, :])
    factor = product_boundary_via_factors(f)
    return UndirectedFormulaReport(
        candidate=candidate,
        factor_boundary=factor,
        difference=candidate ^ factor,
    )


def swap_product_set(members: frozenset[int], n1: int, n2: int) -> frozenset[int]:
    """Map encoded members of an n1 x n2 product onto the n2 x n1 product."""
    return frozenset((x % n2) * n1 + x // n2 for x in members)
