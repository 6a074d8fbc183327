"""Randomized verification: factor formulas and metric laws vs brute force.

Each trial draws two random strong digraphs, builds their product, and checks
every property below on both routes. Violations are minimized by greedy arc
deletion (keeping both factors strong and the violation alive) and reported
with both factor edge lists, so a failing run hands back a small reproducible
counterexample.

A faithful implementation of the boundary and contour factor
characterizations DOES get falsified here on some corpora: the harness is the
instrument that shows it, not a bug in itself. Periphery, eccentricity-set,
and all metric identities are expected to pass always.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .boundary import boundary_profile, boundary_set, contour_set
from .digraph import Digraph, from_arcs, is_strong
from .errors import InvalidConfig
from .generator import GeneratorConfig, generate_strong_digraph
from .metric import metric_profile
from .product import (
    FactorPair,
    product_boundary_via_factors,
    product_contour_via_factors,
    product_eccentric_via_factors,
    product_metric_profile,
    product_periphery_via_factors,
    strong_product,
)
from .io_formats import serialize_edge_list

PROPERTIES = (
    "metric-axioms",
    "product-metric-identities",
    "boundary-formula-vs-direct",
    "periphery-formula-vs-direct",
    "eccentric-formula-vs-direct",
    "contour-formula-vs-direct",
    "inclusion-chains",
    "open-closed-equivalence",
)


@dataclass(frozen=True)
class PropertyViolation:
    prop: str
    trial: int
    detail: str
    d1_edge_list: str
    d2_edge_list: str


@dataclass
class VerificationSummary:
    trials: int
    passed: dict[str, int] = field(default_factory=dict)
    failed: dict[str, int] = field(default_factory=dict)
    violations: list[PropertyViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        out = []
        for prop in PROPERTIES:
            p, f = self.passed.get(prop, 0), self.failed.get(prop, 0)
            status = "ok" if f == 0 else "FAIL"
            out.append(f"{prop:32s} {p:4d}/{p + f:<4d} {status}")
        return out


def _check_metric_axioms(d: Digraph) -> str | None:
    md = metric_profile(d).md
    if not np.array_equal(md, md.T):
        return "md not symmetric"
    if (np.diag(md) != 0).any():
        return "md diagonal not zero"
    if d.n > 1 and (md[~np.eye(d.n, dtype=bool)] < 1).any():
        return "md zero off the diagonal"
    # triangle inequality over all ordered triples
    if (md[:, None, :] > md[:, :, None] + md[None, :, :]).any():
        return "md triangle inequality violated"
    return None


def _check_trial(d1: Digraph, d2: Digraph, prop: str) -> str | None:
    """None when the property holds for this factor pair, else a description."""
    if prop == "metric-axioms":
        for tag, d in (("D1", d1), ("D2", d2)):
            msg = _check_metric_axioms(d)
            if msg:
                return f"{tag}: {msg}"
        return None

    pair = FactorPair.from_digraphs(d1, d2)
    prod, _ = strong_product(d1, d2)
    prod_profile = metric_profile(prod)

    if prop == "product-metric-identities":
        from_factors = product_metric_profile(pair)
        if not np.array_equal(from_factors.md, prod_profile.md):
            return "product md table differs from max of factor mds"
        if not np.array_equal(from_factors.ecc, prod_profile.ecc):
            return "product eccentricities differ from max of factor eccs"
        if from_factors.radius != prod_profile.radius:
            return "product radius differs from max of factor radii"
        if from_factors.diameter != prod_profile.diameter:
            return "product diameter differs from max of factor diameters"
        if not is_strong(prod):
            return "product of strong factors not strong"
        return None

    direct = boundary_profile(prod_profile, prod)
    if prop == "boundary-formula-vs-direct":
        formula = product_boundary_via_factors(pair)
        if formula != direct.boundary:
            return f"symmetric difference {sorted(formula ^ direct.boundary)}"
        return None
    if prop == "periphery-formula-vs-direct":
        formula = product_periphery_via_factors(pair)
        if formula != direct.periphery:
            return f"symmetric difference {sorted(formula ^ direct.periphery)}"
        return None
    if prop == "eccentric-formula-vs-direct":
        formula = product_eccentric_via_factors(pair)
        if formula != direct.eccentricity_set:
            return f"symmetric difference {sorted(formula ^ direct.eccentricity_set)}"
        return None
    if prop == "contour-formula-vs-direct":
        formula = product_contour_via_factors(pair)
        if formula != direct.contour:
            return f"symmetric difference {sorted(formula ^ direct.contour)}"
        return None

    if prop == "inclusion-chains":
        for tag, bp in (("D1", pair.b1), ("D2", pair.b2), ("product", direct)):
            if not bp.periphery <= (bp.contour & bp.eccentricity_set):
                return f"{tag}: periphery not within contour ∩ eccentricity set"
            if not (bp.eccentricity_set | bp.contour) <= bp.boundary:
                return f"{tag}: eccentricity set ∪ contour not within boundary"
        return None

    if prop == "open-closed-equivalence":
        for tag, d, p in (("D1", d1, pair.p1), ("D2", d2, pair.p2), ("product", prod, prod_profile)):
            if boundary_set(p, d, "open") != boundary_set(p, d, "closed"):
                return f"{tag}: boundary differs between open and closed neighborhoods"
            if contour_set(p, d, "open") != contour_set(p, d, "closed"):
                return f"{tag}: contour differs between open and closed neighborhoods"
        return None

    raise ValueError(f"unknown property {prop!r}")


def _minimize(d1: Digraph, d2: Digraph, prop: str) -> tuple[Digraph, Digraph]:
    """Greedy arc deletion keeping both factors strong and the violation alive."""
    def shrink(da: Digraph, db: Digraph, first: bool) -> tuple[Digraph, Digraph]:
        changed = True
        while changed:
            changed = False
            for arc in sorted(da.arcs):
                trimmed = from_arcs(da.n, sorted(da.arcs - {arc}))
                if not is_strong(trimmed):
                    continue
                cand = (trimmed, db) if first else (db, trimmed)
                if _check_trial(cand[0], cand[1], prop) is not None:
                    da = trimmed
                    changed = True
        return (da, db) if first else (db, da)

    d1, d2 = shrink(d1, d2, True)
    d2, d1 = shrink(d2, d1, False)
    return d1, d2


def run_verification(
    trials: int,
    n_max: int = 7,
    p_values: tuple[float, ...] = (0.2, 0.4, 0.7),
    seed: int = 0,
    properties: tuple[str, ...] = PROPERTIES,
    minimize: bool = True,
    max_violations: int = 10,
) -> VerificationSummary:
    """Run all property suites over a deterministic random corpus."""
    if trials < 1:
        raise InvalidConfig(f"trials must be >= 1, got {trials}")
    if n_max < 2:
        raise InvalidConfig(f"n_max must be >= 2, got {n_max}")
    unknown = set(properties) - set(PROPERTIES)
    if unknown:
        raise InvalidConfig(f"unknown properties: {sorted(unknown)}")

    master = np.random.default_rng(seed)
    summary = VerificationSummary(trials=trials)
    for t in range(trials):
        n1 = int(master.integers(2, n_max + 1))
        n2 = int(master.integers(2, n_max + 1))
        p = p_values[t % len(p_values)]
        s1 = int(master.integers(0, 2**63 - 1))
        s2 = int(master.integers(0, 2**63 - 1))
        d1 = generate_strong_digraph(GeneratorConfig(n=n1, p=p, seed=s1)).digraph
        d2 = generate_strong_digraph(GeneratorConfig(n=n2, p=p, seed=s2)).digraph
        for prop in properties:
            msg = _check_trial(d1, d2, prop)
            if msg is None:
                summary.passed[prop] = summary.passed.get(prop, 0) + 1
                continue
            summary.failed[prop] = summary.failed.get(prop, 0) + 1
            if len(summary.violations) < max_violations:
                m1, m2 = _minimize(d1, d2, prop) if minimize else (d1, d2)
                final_msg = _check_trial(m1, m2, prop) or msg
                summary.violations.append(
                    PropertyViolation(
                        prop=prop,
                        trial=t,
                        detail=final_msg,
                        d1_edge_list=serialize_edge_list(m1),
                        d2_edge_list=serialize_edge_list(m2),
                    )
                )
    return summary
