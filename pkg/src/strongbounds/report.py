"""Analysis reports: deterministic machine-readable JSON, optional pretty text.

Set members are emitted sorted and dict key order is fixed by construction,
so identical inputs produce byte-identical reports.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .boundary import BoundaryProfile, boundary_profile
from .digraph import Digraph
from .io_formats import EdgeListDocument
from .metric import metric_profile
from .product import (
    DEFAULT_VERTEX_BUDGET,
    FactorPair,
    product_arc_count,
    product_boundary_profile_via_factors,
    product_metric_summary,
    strong_product,
)

FORMAT_VERSION = 1


def _set_list(members: frozenset[int]) -> list[int]:
    return sorted(members)


def _sets_dict(bp: BoundaryProfile) -> dict:
    return {
        "boundary": _set_list(bp.boundary),
        "contour": _set_list(bp.contour),
        "eccentricity": _set_list(bp.eccentricity_set),
        "periphery": _set_list(bp.periphery),
    }


@dataclass(frozen=True)
class AnalysisReport:
    """Single digraph or product analysis, rendered to JSON or a text table."""

    payload: dict

    def to_json(self) -> str:
        return json.dumps(self.payload, indent=2) + "\n"

    def to_text(self) -> str:
        return render_pretty(self.payload)


def analyze_digraph(
    doc: EdgeListDocument, path: str = "<memory>", neighborhood: str = "open"
) -> AnalysisReport:
    """Full metric and boundary-type analysis of one strong digraph."""
    d = doc.digraph
    profile = metric_profile(d)
    sets = boundary_profile(profile, d, neighborhood)
    payload = {
        "kind": "digraph-analysis",
        "format_version": FORMAT_VERSION,
        "input": {
            "path": path,
            "n": d.n,
            "arc_count": d.arc_count,
            "strong": True,
            "labels": {str(v): doc.labels[v] for v in sorted(doc.labels)},
        },
        "neighborhood": neighborhood,
        "metric": {
            "eccentricity": profile.ecc.tolist(),
            "radius": profile.radius,
            "diameter": profile.diameter,
        },
        "sets": _sets_dict(sets),
    }
    return AnalysisReport(payload)


def analyze_product(
    doc1: EdgeListDocument,
    doc2: EdgeListDocument,
    mode: str = "formula",
    budget: int | None = None,
    neighborhood: str = "open",
    paths: tuple[str, str] = ("<memory>", "<memory>"),
) -> AnalysisReport:
    """Product analysis in formula, oracle, or both mode.

    Formula mode never builds the product; oracle mode builds it and runs the
    definition-level machinery; both mode runs the two and reports their
    per-set symmetric differences.
    """
    if mode not in ("formula", "oracle", "both"):
        raise ValueError(f"mode must be formula|oracle|both, got {mode!r}")
    budget = DEFAULT_VERTEX_BUDGET if budget is None else budget
    d1, d2 = doc1.digraph, doc2.digraph
    pair = FactorPair.from_digraphs(d1, d2, neighborhood)
    summary = product_metric_summary(pair)

    def factor_entry(path: str, doc: EdgeListDocument, profile) -> dict:
        return {
            "path": path,
            "n": doc.digraph.n,
            "arc_count": doc.digraph.arc_count,
            "strong": True,
            "radius": profile.radius,
            "diameter": profile.diameter,
            "labels": {str(v): doc.labels[v] for v in sorted(doc.labels)},
        }

    payload: dict = {
        "kind": "product-analysis",
        "format_version": FORMAT_VERSION,
        "mode": mode,
        "neighborhood": neighborhood,
        "factors": [
            factor_entry(paths[0], doc1, pair.p1),
            factor_entry(paths[1], doc2, pair.p2),
        ],
        "product": {
            "n": summary.n,
            "arc_count": product_arc_count(d1, d2),
            "strong": True,
            "radius": summary.radius,
            "diameter": summary.diameter,
            "eccentricity": summary.ecc.tolist(),
        },
    }

    formula_sets = None
    oracle_sets = None
    if mode in ("formula", "both"):
        formula_sets = product_boundary_profile_via_factors(pair)
        payload["formula_sets"] = _sets_dict(formula_sets)
    if mode in ("oracle", "both"):
        prod, _ = strong_product(d1, d2, budget=budget)
        prod_profile = metric_profile(prod)
        oracle_sets = boundary_profile(prod_profile, prod, neighborhood)
        payload["oracle_sets"] = _sets_dict(oracle_sets)
    if mode == "both":
        payload["differences"] = {
            "boundary": _set_list(formula_sets.boundary ^ oracle_sets.boundary),
            "contour": _set_list(formula_sets.contour ^ oracle_sets.contour),
            "eccentricity": _set_list(formula_sets.eccentricity_set ^ oracle_sets.eccentricity_set),
            "periphery": _set_list(formula_sets.periphery ^ oracle_sets.periphery),
        }
    payload["set_provenance"] = {
        "formula_sets": "factor formulas (no product built)" if formula_sets else None,
        "oracle_sets": "definition-level on the constructed product" if oracle_sets else None,
    }
    return AnalysisReport(payload)


def _format_set(ids: list[int], labels: dict[str, str], n2: int | None) -> str:
    def show(v: int) -> str:
        if n2 is not None:
            return f"({v // n2},{v % n2})"
        return labels.get(str(v), str(v))

    return "{" + ", ".join(show(v) for v in ids) + "}"


def render_pretty(payload: dict) -> str:
    """Human-oriented table view of a report payload."""
    lines: list[str] = []
    if payload["kind"] == "digraph-analysis":
        inp = payload["input"]
        labels = inp.get("labels", {})
        lines.append(f"digraph: {inp['path']}  n={inp['n']}  arcs={inp['arc_count']}  strong=yes")
        m = payload["metric"]
        lines.append(f"radius={m['radius']}  diameter={m['diameter']}")
        ecc = ", ".join(
            f"{labels.get(str(v), str(v))}:{e}" for v, e in enumerate(m["eccentricity"])
        )
        lines.append(f"eccentricity: {ecc}")
        lines.append(f"neighborhood: {payload['neighborhood']}")
        for name, ids in payload["sets"].items():
            lines.append(f"{name:>13}: {_format_set(ids, labels, None)}")
    else:
        f1, f2 = payload["factors"]
        lines.append(
            f"product of {f1['path']} (n={f1['n']}) and {f2['path']} (n={f2['n']})"
            f"  mode={payload['mode']}"
        )
        prod = payload["product"]
        n2 = f2["n"]
        lines.append(
            f"product: n={prod['n']}  arcs={prod['arc_count']}"
            f"  radius={prod['radius']}  diameter={prod['diameter']}"
        )
        for key in ("formula_sets", "oracle_sets", "differences"):
            if key in payload:
                lines.append(f"[{key}]")
                for name, ids in payload[key].items():
                    lines.append(f"{name:>13}: {_format_set(ids, {}, n2)}")
    return "\n".join(lines) + "\n"
