"""Edge-list files and DOT export.

Edge-list format (ASCII, LF, trailing newline optional):

    # comment
    n 5
    name 0 v1
    0 2
    1 0

The header line ``n <count>`` must precede arcs and names. Arc lines are
``<tail> <head>``; optional ``name <id> <label>`` lines attach display labels
used only in reports and exports. Serialization sorts everything, so parse and
serialize round-trip byte-identically.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .boundary import BoundaryProfile
from .digraph import Digraph, from_arcs
from .errors import LoopArc, ParallelArc, ParseError, UnknownSetName, VertexOutOfRange

SET_NAMES = ("boundary", "contour", "eccentricity", "periphery")


@dataclass(frozen=True)
class EdgeListDocument:
    digraph: Digraph
    labels: dict[int, str] = field(default_factory=dict)

    def label(self, v: int) -> str:
        return self.labels.get(v, str(v))


def parse_edge_list(text: str) -> EdgeListDocument:
    """Parse an edge-list document; errors carry the offending line number."""
    n: int | None = None
    arcs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    labels: dict[int, str] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "n" or len(parts) != 2:
                raise ParseError(lineno, f"expected header 'n <count>', got {raw.strip()!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(lineno, f"vertex count is not an integer: {parts[1]!r}") from None
            if n < 1:
                raise ParseError(lineno, f"vertex count must be >= 1, got {n}")
            continue
        if parts[0] == "name":
            if len(parts) != 3:
                raise ParseError(lineno, f"expected 'name <id> <label>', got {raw.strip()!r}")
            try:
                v = int(parts[1])
            except ValueError:
                raise ParseError(lineno, f"name id is not an integer: {parts[1]!r}") from None
            if not 0 <= v < n:
                raise VertexOutOfRange(f"line {lineno}: name id {v} not in 0..{n - 1}")
            labels[v] = parts[2]
            continue
        if len(parts) != 2:
            raise ParseError(lineno, f"expected '<tail> <head>', got {raw.strip()!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"arc endpoints are not integers: {raw.strip()!r}") from None
        if not (0 <= a < n and 0 <= b < n):
            raise VertexOutOfRange(f"line {lineno}: arc ({a},{b}) outside 0..{n - 1}")
        if a == b:
            raise LoopArc(f"line {lineno}: loop arc ({a},{a}) not allowed")
        if (a, b) in seen:
            raise ParallelArc(f"line {lineno}: duplicate arc ({a},{b})")
        seen.add((a, b))
        arcs.append((a, b))

    if n is None:
        raise ParseError(1, "missing header line 'n <count>'")
    return EdgeListDocument(digraph=from_arcs(n, arcs), labels=labels)


def serialize_edge_list(
    d: Digraph,
    labels: dict[int, str] | None = None,
    comments: tuple[str, ...] = (),
) -> str:
    """Deterministic edge-list text: comments, header, sorted names, sorted arcs."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"n {d.n}")
    for v in sorted(labels or {}):
        lines.append(f"name {v} {labels[v]}")
    for a, b in sorted(d.arcs):
        lines.append(f"{a} {b}")
    return "\n".join(lines) + "\n"


def resolve_set_name(profile: BoundaryProfile, name: str) -> frozenset[int]:
    """Map a set name to its members; UnknownSetName otherwise."""
    table = {
        "boundary": profile.boundary,
        "contour": profile.contour,
        "eccentricity": profile.eccentricity_set,
        "periphery": profile.periphery,
    }
    if name not in table:
        raise UnknownSetName(f"unknown set {name!r}; expected one of {SET_NAMES}")
    return table[name]


def export_dot(
    d: Digraph,
    labels: dict[int, str] | None = None,
    highlight: frozenset[int] | None = None,
    highlight_name: str | None = None,
    graph_name: str = "D",
) -> str:
    """DOT text with one edge statement per arc; highlighted vertices filled."""
    labels = labels or {}

    def node_id(v: int) -> str:
        return '"%s"' % labels.get(v, str(v))

    lines = [f"digraph {graph_name} {{"]
    if highlight_name:
        lines.append(f'  // filled nodes: {highlight_name}')
    lines.append("  node [shape=circle];")
    for v in range(d.n):
        attrs = " [style=filled, fillcolor=lightblue]" if highlight and v in highlight else ""
        lines.append(f"  {node_id(v)}{attrs};")
    for a, b in sorted(d.arcs):
        lines.append(f"  {node_id(a)} -> {node_id(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
